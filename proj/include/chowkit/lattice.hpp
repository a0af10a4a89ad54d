#pragma once

#include <vector>

#include "chowkit/errors.hpp"
#include "chowkit/matrix.hpp"
#include "chowkit/rational.hpp"

namespace chowkit {

using IntVector = std::vector<Integer>;
using IntRows = std::vector<IntVector>;

// Basis of {x in Z^m : W x = 0} for an integer matrix W. Column-style
// unimodular reduction; the output lattice is saturated by construction.
inline IntRows integer_kernel(const IntRows& w, std::size_t m) {
    IntRows a = w;
    IntRows u(m, IntVector(m, 0));
    for (std::size_t j = 0; j < m; ++j) u[j][j] = 1;
    // columns of the pair (a, u) are transformed together; store
    // column-major for convenience
    const std::size_t r = a.size();
    auto col_op = [&](std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t i = 0; i < r; ++i) a[i][dst] -= q * a[i][src];
        for (std::size_t i = 0; i < m; ++i) u[i][dst] -= q * u[i][src];
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        for (std::size_t i = 0; i < r; ++i) std::swap(a[i][x], a[i][y]);
        for (std::size_t i = 0; i < m; ++i) std::swap(u[i][x], u[i][y]);
    };

    std::size_t pos = 0;
    for (std::size_t i = 0; i < r && pos < m; ++i) {
        while (true) {
            // smallest nonzero |entry| in row i among columns >= pos
            std::size_t best = m;
            for (std::size_t j = pos; j < m; ++j) {
                if (a[i][j] == 0) continue;
                if (best == m || boost::multiprecision::abs(a[i][j]) <
                                     boost::multiprecision::abs(a[i][best]))
                    best = j;
            }
            if (best == m) break; // row already zero on the tail
            bool reduced_all = true;
            for (std::size_t j = pos; j < m; ++j) {
                if (j == best || a[i][j] == 0) continue;
                Integer q = a[i][j] / a[i][best]; // truncated division
                if (q != 0) col_op(j, best, q);
                if (a[i][j] != 0) reduced_all = false;
            }
            if (reduced_all) {
                col_swap(pos, best);
                ++pos;
                break;
            }
        }
    }
    IntRows kernel;
    for (std::size_t j = pos; j < m; ++j) {
        IntVector v(m);
        for (std::size_t i = 0; i < m; ++i) v[i] = u[i][j];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

// Integer coordinates of a point configuration with respect to a basis of
// the saturated difference lattice Z^m  span_Q(differences). In these
// coordinates the induced lattice is exactly Z^dim, so normalized simplex
// volumes are plain determinants.
struct LatticeChart {
    int dim = 0;
    IntRows coords; // one row per input point
};

inline LatticeChart lattice_chart(const IntRows& points) {
    LatticeChart out;
    if (points.empty()) return out;
    const std::size_t m = points[0].size();
    const std::size_t n = points.size();
    for (const auto& p : points)
        if (p.size() != m) throw SizeMismatch("ragged point list");

    Matrix diffs(n - 1, m);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            diffs(i - 1, j) = Rational(points[i][j] - points[0][j]);

    if (n == 1 || rank(diffs) == 0) {
        out.dim = 0;
        out.coords.assign(n, IntVector{});
        return out;
    }

    // primitive integer basis of the orthogonal complement of the span
    Matrix k = kernel_basis(diffs);
    IntRows w;
    for (std::size_t i = 0; i < k.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m; ++j)
            l = boost::multiprecision::lcm(l, denominator(k(i, j)));
        IntVector row(m);
        Integer g = 0;
        for (std::size_t j = 0; j < m; ++j) {
            row[j] = numerator(k(i, j) * l);
            g = boost::multiprecision::gcd(g, row[j]);
        }
        if (g > 1)
            for (auto& x : row) x /= g;
        w.push_back(std::move(row));
    }

    IntRows basis =
        w.empty() ? [&] {
            IntRows full;
            for (std::size_t j = 0; j < m; ++j) {
                IntVector e(m, 0);
                e[j] = 1;
                full.push_back(std::move(e));
            }
            return full;
        }()
                  : integer_kernel(w, m);

    out.dim = static_cast<int>(basis.size());

    // coords solve  coords * basis = point - point0 ; integrality holds
    // because the basis spans the saturation.
    Matrix bt(m, basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < m; ++j) bt(j, i) = Rational(basis[i][j]);

    for (std::size_t p = 0; p < n; ++p) {
        std::vector<Rational> rhs(m);
        for (std::size_t j = 0; j < m; ++j) rhs[j] = Rational(points[p][j] - points[0][j]);
        auto sol = solve(bt, rhs);
        if (!sol) throw BadParams("point outside the difference span");
        IntVector c(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (denominator((*sol)[i]) != 1)
                throw BadParams("non-integral lattice coordinate");
            c[i] = numerator((*sol)[i]);
        }
        out.coords.push_back(std::move(c));
    }
    return out;
}

} // namespace chowkit
