#pragma once

#include <array>
#include <string_view>

namespace chowkit::cli {

// One subcommand per library operation. The table is the single source of
// truth: the CLI builds its dispatch from it and the registry test checks
// the bijection.
struct RegistryEntry {
    std::string_view op;         // module.operation
    std::string_view subcommand; // space-separated path under `chow`
};

inline constexpr std::array<RegistryEntry, 54> kRegistry{{
    {"exactcore.rank", "exact rank"},
    {"exactcore.kernel_basis", "exact kernel"},
    {"exactcore.minor", "exact minor"},
    {"exactcore.poly_det", "exact polydet"},

    {"grassmann.plucker", "grassmann plucker"},
    {"grassmann.is_generic", "grassmann generic"},
    {"grassmann.matroid_bases", "grassmann matroid"},
    {"grassmann.intersect_coord_hyperplane", "grassmann intersect"},
    {"grassmann.project_away", "grassmann project"},
    {"grassmann.gm_configuration", "grassmann config"},

    {"hypersimplex.hypersimplex_vertices", "hypersimplex vertices"},
    {"hypersimplex.facet", "hypersimplex facet"},
    {"hypersimplex.is_matroid_polytope", "hypersimplex is-matroid"},
    {"hypersimplex.matroid_polytope_of", "hypersimplex of-subspace"},
    {"hypersimplex.normalized_volume", "hypersimplex volume"},
    {"hypersimplex.is_matroid_decomposition", "hypersimplex validate-decomposition"},
    {"hypersimplex.restrict_to_facet", "hypersimplex restrict"},

    {"trees.vertex_relation", "trees relation"},
    {"trees.tree_to_decomposition", "trees to-decomposition"},
    {"trees.decomposition_to_tree", "trees from-decomposition"},
    {"trees.enumerate_trees", "trees enumerate"},
    {"trees.stability", "trees stratum"},
    {"trees.forget_point", "trees forget"},

    {"secondary.char_function", "secondary charfn"},
    {"secondary.enumerate_triangulations", "secondary triangulations"},
    {"secondary.secondary_vertices", "secondary vertices"},
    {"secondary.prism_triangulations", "secondary prism"},
    {"secondary.permutohedron_vertices", "secondary permutohedron"},

    {"configurations.is_general_position", "config general"},
    {"configurations.cross_ratio", "config cross-ratio"},
    {"configurations.associate", "config associate"},
    {"configurations.is_circuit", "config circuit"},
    {"configurations.six_point_normal_form", "config normal-form6"},
    {"configurations.conic_criterion", "config conic-test"},

    {"veronese.log_gauss", "veronese gauss"},
    {"veronese.plucker_polys", "veronese pluckerpolys"},
    {"veronese.marked_point", "veronese marked"},
    {"veronese.steiner_matrix", "veronese steiner"},
    {"veronese.sweep", "veronese sweep-test"},
    {"veronese.tangent_system_rank", "veronese tangent-rank"},
    {"veronese.tetrahedral_ratio", "veronese tetra"},

    {"schubert.conjugate", "schubert conjugate"},
    {"schubert.heights", "schubert heights"},
    {"schubert.schur_dim", "schubert dim"},
    {"schubert.kostka", "schubert kostka"},
    {"schubert.littlewood_richardson", "schubert lr"},
    {"schubert.direct_sum_pushforward", "schubert pushforward"},
    {"schubert.weight_of_subset", "schubert weight-of"},
    {"schubert.component_class", "schubert component-class"},
    {"schubert.veronese_class", "schubert veronese-class"},
    {"schubert.klyachko_contour_class", "schubert contour-class"},
    {"schubert.lie_complex_class", "schubert lie-class"},
    {"schubert.crosscheck", "schubert crosscheck"},

    {"cli.selftest", "selftest"},
}};

} // namespace chowkit::cli
