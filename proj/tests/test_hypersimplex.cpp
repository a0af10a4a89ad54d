#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chowkit/chowkit.hpp"
#include "oracles.hpp"

using namespace chowkit;
using hypersimplex::MatroidDecomposition;
using hypersimplex::MatroidPolytope;

namespace {

MatroidPolytope poly(int k, int n, const std::vector<Subset>& verts) {
    MatroidPolytope p;
    p.k = k;
    p.n = n;
    p.vertices.insert(verts.begin(), verts.end());
    return p;
}

MatroidPolytope full(int k, int n) {
    MatroidPolytope p;
    p.k = k;
    p.n = n;
    for (const auto& s : hypersimplex::hypersimplex_vertices(k, n)) p.vertices.insert(s);
    return p;
}

} // namespace

TEST_CASE("hypersimplex vertices", "[hypersimplex]") {
    CHECK(hypersimplex::hypersimplex_vertices(1, 3) ==
          std::vector<Subset>{{1}, {2}, {3}});
    CHECK(hypersimplex::hypersimplex_vertices(2, 4).size() == 6);
    CHECK(hypersimplex::hypersimplex_vertices(3, 4).size() == 4);
    CHECK_THROWS_AS(hypersimplex::hypersimplex_vertices(4, 4), BadParams);
}

TEST_CASE("facets and their hypersimplex relabelings", "[hypersimplex]") {
    auto gp = hypersimplex::facet(2, 4, 1, '+');
    CHECK(gp.k == 1);
    CHECK(gp.n == 3);
    CHECK(gp.vertices == std::set<Subset>{{1}, {2}, {3}});

    auto gm = hypersimplex::facet(2, 4, 1, '-');
    CHECK(gm.k == 2);
    CHECK(gm.n == 3);
    CHECK(gm.vertices == std::set<Subset>{{1, 2}, {1, 3}, {2, 3}});

    // 2n facets in total, of the right isomorphism types
    for (int n = 4; n <= 8; ++n) {
        for (int k = 2; k <= n - 2; ++k) {
            int count = 0;
            for (int i = 1; i <= n; ++i) {
                auto plus = hypersimplex::facet(k, n, i, '+');
                CHECK(plus.vertices.size() == static_cast<std::size_t>(binomial(n - 1, k - 1)));
                auto minus = hypersimplex::facet(k, n, i, '-');
                CHECK(minus.vertices.size() == static_cast<std::size_t>(binomial(n - 1, k)));
                count += 2;
            }
            CHECK(count == 2 * n);
        }
    }
}

TEST_CASE("matroid polytope predicate", "[hypersimplex]") {
    CHECK(hypersimplex::is_matroid_polytope(full(2, 4)));
    CHECK_FALSE(hypersimplex::is_matroid_polytope(poly(2, 4, {{1, 2}, {3, 4}})));
    // two-class relation {1,2} | {3,4}: vertices are the cross pairs
    auto square = poly(2, 4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(hypersimplex::is_matroid_polytope(square));
    CHECK(hypersimplex::polytope_dimension(square) == 2);
}

TEST_CASE("matroid polytopes of subspaces", "[hypersimplex]") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 60; ++t) {
        auto s = oracles::rnd_subspace(rng, 2, 5);
        CHECK(hypersimplex::is_matroid_polytope(hypersimplex::matroid_polytope_of(s)));
    }
}

TEST_CASE("normalized volume", "[hypersimplex]") {
    CHECK(hypersimplex::normalized_volume(full(1, 4)) == 1);
    CHECK(hypersimplex::normalized_volume(full(2, 4)) == 4);
    CHECK_THROWS_AS(hypersimplex::normalized_volume(poly(2, 4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}})),
                    NotFullDimensional);
}

TEST_CASE("hypersimplex volumes match the Eulerian numbers", "[hypersimplex]") {
    for (int n = 3; n <= 7; ++n)
        for (int k = 1; k <= n - 1; ++k)
            CHECK(hypersimplex::hypersimplex_volume(k, n) == oracles::eulerian(n - 1, k - 1));
}

TEST_CASE("decomposition validation", "[hypersimplex]") {
    MatroidDecomposition trivial;
    trivial.k = 2;
    trivial.n = 4;
    trivial.pieces.push_back(full(2, 4));
    CHECK(hypersimplex::is_matroid_decomposition(trivial));

    MatroidDecomposition pyramids;
    pyramids.k = 2;
    pyramids.n = 4;
    pyramids.pieces.push_back(poly(2, 4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}));
    pyramids.pieces.push_back(poly(2, 4, {{3, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}));
    CHECK(hypersimplex::is_matroid_decomposition(pyramids));
    for (const auto& piece : pyramids.pieces)
        CHECK(hypersimplex::normalized_volume(piece) == 2);

    // two overlapping pyramids sharing only an edge: volume identity fails
    MatroidDecomposition overlap;
    overlap.k = 2;
    overlap.n = 4;
    overlap.pieces.push_back(poly(2, 4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}));
    overlap.pieces.push_back(poly(2, 4, {{3, 4}, {1, 3}, {1, 4}, {2, 3}, {1, 2}}));
    CHECK_FALSE(hypersimplex::is_matroid_decomposition(overlap));

    // pyramids over two different squares: the volumes add up to 4 but the
    // interiors overlap, so only the common-face separation can reject it
    MatroidDecomposition skew;
    skew.k = 2;
    skew.n = 4;
    skew.pieces.push_back(poly(2, 4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}));
    skew.pieces.push_back(poly(2, 4, {{1, 3}, {1, 2}, {1, 4}, {2, 3}, {3, 4}}));
    for (const auto& piece : skew.pieces) {
        CHECK(hypersimplex::is_matroid_polytope(piece));
        CHECK(hypersimplex::normalized_volume(piece) == 2);
    }
    CHECK_FALSE(hypersimplex::is_matroid_decomposition(skew));
}

TEST_CASE("a split of Delta(3,6) is a valid k=3 decomposition", "[hypersimplex]") {
    // cut along x1+x2+x3 = 2: one side makes {1,2,3} a dependent triple,
    // the other makes {4,5,6} a parallel class
    MatroidDecomposition d;
    d.k = 3;
    d.n = 6;
    MatroidPolytope pa, pb;
    pa.k = pb.k = 3;
    pa.n = pb.n = 6;
    for (const auto& I : k_subsets(6, 3)) {
        int inter = 0;
        for (int x : I)
            if (x <= 3) ++inter;
        if (inter <= 2) pa.vertices.insert(I);
        if (inter >= 2) pb.vertices.insert(I);
    }
    CHECK(hypersimplex::is_matroid_polytope(pa));
    CHECK(hypersimplex::is_matroid_polytope(pb));
    CHECK(hypersimplex::normalized_volume(pa) == 60);
    CHECK(hypersimplex::normalized_volume(pb) == 6);
    CHECK(hypersimplex::hypersimplex_volume(3, 6) == 66);
    d.pieces = {pa, pb};
    CHECK(hypersimplex::is_matroid_decomposition(d));
}

TEST_CASE("restriction to facets", "[hypersimplex]") {
    MatroidDecomposition trivial;
    trivial.k = 2;
    trivial.n = 5;
    trivial.pieces.push_back(full(2, 5));
    auto plus = hypersimplex::restrict_to_facet(trivial, 1, '+');
    CHECK(plus.k == 1);
    CHECK(plus.n == 4);
    CHECK(plus.pieces.size() == 1);
    CHECK(hypersimplex::is_matroid_decomposition(plus));

    // octahedron split restricted to Gamma_1^+ is the trivial Delta(1,3)
    MatroidDecomposition pyramids;
    pyramids.k = 2;
    pyramids.n = 4;
    pyramids.pieces.push_back(poly(2, 4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}));
    pyramids.pieces.push_back(poly(2, 4, {{3, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}));
    auto r = hypersimplex::restrict_to_facet(pyramids, 1, '+');
    CHECK(r.pieces.size() == 1);
    CHECK(r.pieces[0].vertices == std::set<Subset>{{1}, {2}, {3}});
}

TEST_CASE("restrictions of tree decompositions stay valid", "[hypersimplex]") {
    std::mt19937_64 rng(32);
    // pool of trees with 4..7 leaves
    std::vector<trees::LabeledTree> pool;
    for (int n = 4; n <= 7; ++n) {
        auto all = trees::enumerate_trees(n);
        pool.insert(pool.end(), all.begin(), all.end());
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    int done = 0;
    while (done < 100) {
        const auto& t = pool[pick(rng)];
        auto d = trees::tree_to_decomposition(t);
        std::uniform_int_distribution<int> leaf(1, t.n);
        const int i = leaf(rng);
        const char sgn = (rng() % 2 == 0) ? '+' : '-';
        if (sgn == '+' && t.n - 1 < 3) continue;
        auto r = hypersimplex::restrict_to_facet(d, i, sgn);
        CHECK(hypersimplex::is_matroid_decomposition(r));
        ++done;
    }
}

TEST_CASE("volume additivity over accepted decompositions", "[hypersimplex]") {
    for (const auto& t : trees::enumerate_trees(6)) {
        auto d = trees::tree_to_decomposition(t);
        Integer total = 0;
        for (const auto& piece : d.pieces) total += hypersimplex::normalized_volume(piece);
        CHECK(total == hypersimplex::hypersimplex_volume(2, 6));
    }
}

TEST_CASE("n=6 tree decompositions pass full validation (sample)", "[hypersimplex]") {
    auto all = trees::enumerate_trees(6);
    std::mt19937_64 rng(33);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int t = 0; t < 20; ++t)
        CHECK(hypersimplex::is_matroid_decomposition(trees::tree_to_decomposition(all[pick(rng)])));
}
