#pragma once

#include "chowkit/configurations.hpp"
#include "chowkit/errors.hpp"
#include "chowkit/grassmann.hpp"
#include "chowkit/hypersimplex.hpp"
#include "chowkit/json_io.hpp"
#include "chowkit/lattice.hpp"
#include "chowkit/linprog.hpp"
#include "chowkit/matrix.hpp"
#include "chowkit/polynomial.hpp"
#include "chowkit/polytope.hpp"
#include "chowkit/rational.hpp"
#include "chowkit/schubert.hpp"
#include "chowkit/secondary.hpp"
#include "chowkit/subsets.hpp"
#include "chowkit/trees.hpp"
#include "chowkit/veronese.hpp"
