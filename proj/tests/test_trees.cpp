#include <catch2/catch_amalgamated.hpp>

#include "chowkit/chowkit.hpp"
#include "chowkit/selftest.hpp"
#include "oracles.hpp"

using namespace chowkit;
using trees::LabeledTree;

namespace {

// caterpillar 1,2 | 3 | 4,5: internal path v1 - v2 - v3
LabeledTree caterpillar5() {
    LabeledTree t;
    t.n = 5;
    t.internals = 3;
    t.edges = {{1, 6}, {2, 6}, {3, 7}, {6, 7}, {7, 8}, {4, 8}, {5, 8}};
    return t;
}

LabeledTree split4() {
    // internal edge separating {1,2} | {3,4}
    LabeledTree t;
    t.n = 4;
    t.internals = 2;
    t.edges = {{1, 5}, {2, 5}, {5, 6}, {3, 6}, {4, 6}};
    return t;
}

} // namespace

TEST_CASE("vertex relations", "[trees]") {
    auto star = trees::star_tree(5);
    auto blocks = trees::vertex_relation(star, 6);
    CHECK(blocks.size() == 5);

    auto s4 = split4();
    CHECK(trees::vertex_relation(s4, 5) ==
          std::vector<std::vector<int>>{{1}, {2}, {3, 4}});

    CHECK(trees::vertex_relation(caterpillar5(), 7) ==
          std::vector<std::vector<int>>{{1, 2}, {3}, {4, 5}});

    CHECK_THROWS_AS(trees::vertex_relation(star, 1), NotInternal);
}

TEST_CASE("tree to decomposition", "[trees]") {
    auto star = trees::star_tree(5);
    auto d = trees::tree_to_decomposition(star);
    REQUIRE(d.pieces.size() == 1);
    CHECK(d.pieces[0].vertices.size() == 10);

    auto s4 = split4();
    auto d4 = trees::tree_to_decomposition(s4);
    REQUIRE(d4.pieces.size() == 2);
    std::set<Subset> a{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}};
    std::set<Subset> b{{3, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}};
    CHECK(((d4.pieces[0].vertices == a && d4.pieces[1].vertices == b) ||
           (d4.pieces[0].vertices == b && d4.pieces[1].vertices == a)));
    CHECK(hypersimplex::is_matroid_decomposition(d4));
}

TEST_CASE("n=4 census: star plus three splits", "[trees]") {
    auto all = trees::enumerate_trees(4);
    REQUIRE(all.size() == 4);
    std::set<std::vector<std::set<Subset>>> keys;
    for (const auto& t : all) keys.insert(trees::decomposition_key(trees::tree_to_decomposition(t)));
    CHECK(keys.size() == 4);
}

TEST_CASE("enumeration counts", "[trees]") {
    CHECK(trees::enumerate_trees(3).size() == 1);
    CHECK(trees::enumerate_trees(4).size() == 4);
    CHECK(trees::enumerate_trees(5).size() == 26);
    CHECK(trees::enumerate_trees(6).size() == 236);
    // trivalent trees at n=5: (2n-5)!! = 15
    int trivalent = 0;
    for (const auto& t : trees::enumerate_trees(5))
        if (trees::stratum_dimension(t) == 0) ++trivalent;
    CHECK(trivalent == 15);
    CHECK_THROWS_AS(trees::enumerate_trees(2), BadParams);
}

TEST_CASE("decomposition piece count equals internal vertex count", "[trees]") {
    for (int n = 4; n <= 6; ++n)
        for (const auto& t : trees::enumerate_trees(n))
            CHECK(trees::tree_to_decomposition(t).pieces.size() ==
                  static_cast<std::size_t>(t.internals));
}

TEST_CASE("roundtrip through decompositions", "[trees]") {
    auto star = trees::star_tree(5);
    CHECK(trees::isomorphic(trees::decomposition_to_tree(trees::tree_to_decomposition(star)), star));

    for (int n = 4; n <= 6; ++n)
        for (const auto& t : trees::enumerate_trees(n)) {
            auto back = trees::decomposition_to_tree(trees::tree_to_decomposition(t));
            CHECK(trees::isomorphic(t, back));
        }
}

TEST_CASE("decomposition_to_tree rejects non-decompositions", "[trees]") {
    hypersimplex::MatroidDecomposition bad;
    bad.k = 2;
    bad.n = 4;
    hypersimplex::MatroidPolytope p;
    p.k = 2;
    p.n = 4;
    p.vertices = {{1, 3}, {1, 4}, {2, 3}, {2, 4}}; // two-class square, not full-dim
    bad.pieces.push_back(p);
    CHECK_THROWS_AS(trees::decomposition_to_tree(bad), NotADecomposition);

    hypersimplex::MatroidDecomposition wrongk;
    wrongk.k = 3;
    wrongk.n = 6;
    wrongk.pieces.push_back(p);
    CHECK_THROWS_AS(trees::decomposition_to_tree(wrongk), NotADecomposition);
}

TEST_CASE("stability and stratum dimension", "[trees]") {
    auto star = trees::star_tree(6);
    CHECK(trees::is_stable_tree(star));
    CHECK(trees::stratum_dimension(star) == 3);

    for (const auto& t : trees::enumerate_trees(5)) {
        CHECK(trees::is_stable_tree(t));
        if (t.internals == 2) CHECK(trees::stratum_dimension(t) == 1);
    }
}

TEST_CASE("forget point", "[trees]") {
    auto star = trees::star_tree(5);
    CHECK(trees::isomorphic(trees::forget_point(star, 3), trees::star_tree(4)));

    // forgetting 1 from the {1,2}|{3,4} tree suppresses a vertex
    auto s4 = split4();
    auto f = trees::forget_point(s4, 1);
    CHECK(trees::isomorphic(f, trees::star_tree(3)));

    // caterpillar {1,2}|3|{4,5}, forget 3 -> {1,2}|{3,4} shape on 4 leaves
    auto cat = caterpillar5();
    auto g = trees::forget_point(cat, 3);
    CHECK(g.n == 4);
    CHECK(g.internals == 2);
    CHECK(trees::isomorphic(g, split4()));

    CHECK_THROWS_AS(trees::forget_point(trees::star_tree(3), 1), TooFewLeaves);
}

TEST_CASE("restriction compatibility with forgetting", "[trees]") {
    for (int n = 4; n <= 6; ++n)
        for (const auto& t : trees::enumerate_trees(n))
            for (int i = 1; i <= n; ++i) {
                auto lhs = hypersimplex::restrict_to_facet(trees::tree_to_decomposition(t), i, '-');
                auto rhs = trees::tree_to_decomposition(trees::forget_point(t, i));
                CHECK(trees::decomposition_key(lhs) == trees::decomposition_key(rhs));
            }
}

TEST_CASE("enumeration matches the split-family census", "[trees]") {
    for (int n = 3; n <= 6; ++n)
        CHECK(static_cast<long>(trees::enumerate_trees(n).size()) ==
              chowkit::selftest::detail::count_trees_by_splits(n));
}
