#include <catch2/catch_amalgamated.hpp>

#include "chowkit/chowkit.hpp"
#include "oracles.hpp"

using namespace chowkit;
using secondary::PointConfig;
using secondary::Triangulation;

namespace {

PointConfig octahedron() {
    IntRows pts;
    for (const auto& s : k_subsets(4, 2)) pts.push_back(hypersimplex::indicator(s, 4));
    return PointConfig(pts);
}

PointConfig unit_square() {
    return PointConfig({{Integer(0), Integer(0)},
                        {Integer(1), Integer(0)},
                        {Integer(1), Integer(1)},
                        {Integer(0), Integer(1)}});
}

PointConfig simplex(int d) {
    IntRows pts;
    for (int i = 0; i <= d; ++i) {
        IntVector v(d, 0);
        if (i > 0) v[i - 1] = 1;
        pts.push_back(std::move(v));
    }
    return PointConfig(pts);
}

} // namespace

TEST_CASE("characteristic functions", "[secondary]") {
    auto s = simplex(3);
    Triangulation t;
    t.simplices = {{0, 1, 2, 3}};
    auto phi = secondary::char_function(t, s);
    CHECK(phi.values == std::vector<Integer>{1, 1, 1, 1});

    auto sq = unit_square();
    Triangulation diag;
    diag.simplices = {{0, 1, 2}, {0, 2, 3}};
    auto phi2 = secondary::char_function(diag, sq);
    CHECK(phi2.values == std::vector<Integer>{2, 1, 2, 1});

    Triangulation bad;
    bad.simplices = {{0, 1, 2}};
    CHECK_THROWS_AS(secondary::char_function(bad, sq), InvalidTriangulation);
}

TEST_CASE("characteristic function sum rule", "[secondary]") {
    auto oct = octahedron();
    const Integer vol = secondary::hull_volume(oct);
    for (const auto& t : secondary::enumerate_triangulations(oct)) {
        auto phi = secondary::char_function(t, oct);
        Integer sum = 0;
        for (const auto& v : phi.values) sum += v;
        CHECK(sum == Integer(oct.dim() + 1) * vol);
    }
}

TEST_CASE("triangulation enumeration", "[secondary]") {
    CHECK(secondary::enumerate_triangulations(simplex(3)).size() == 1);
    CHECK(secondary::enumerate_triangulations(unit_square()).size() == 2);
    CHECK(secondary::enumerate_triangulations(octahedron()).size() == 3);
    CHECK(secondary::enumerate_triangulations(secondary::prism_config(2)).size() == 6);

    IntRows big;
    for (int i = 0; i < 13; ++i) big.push_back({Integer(i), Integer(i) * i});
    CHECK_THROWS_AS(secondary::enumerate_triangulations(PointConfig(big)), TooLarge);
}

TEST_CASE("every enumerated triangulation covers the hull exactly", "[secondary]") {
    auto oct = octahedron();
    const Integer vol = secondary::hull_volume(oct);
    for (const auto& t : secondary::enumerate_triangulations(oct)) {
        Integer sum = 0;
        for (const auto& s : t.simplices) sum += simplex_volume(oct.chart.coords, s);
        CHECK(sum == vol);
        CHECK(secondary::is_triangulation(t, oct));
    }
}

TEST_CASE("secondary polytope vertices", "[secondary]") {
    CHECK(secondary::secondary_vertices(simplex(2)).size() == 1);
    auto verts = secondary::secondary_vertices(octahedron());
    REQUIRE(verts.size() == 3);
    // they span a 2-dimensional affine space
    Matrix diff(2, 6);
    for (int r = 0; r < 2; ++r)
        for (int j = 0; j < 6; ++j) diff(r, j) = Rational(verts[r + 1].values[j] - verts[0].values[j]);
    CHECK(rank(diff) == 2);
}

TEST_CASE("octahedron triangulations refine two pyramid splits each", "[secondary]") {
    auto oct = octahedron();
    const auto subsets = k_subsets(4, 2); // vertex i of the config is subsets[i]
    // the three two-pyramid decompositions, as triples of vertex sets
    std::vector<std::vector<std::set<std::size_t>>> decs;
    for (const auto& t : trees::enumerate_trees(4)) {
        auto d = trees::tree_to_decomposition(t);
        if (d.pieces.size() != 2) continue;
        std::vector<std::set<std::size_t>> piece_idx;
        for (const auto& piece : d.pieces) {
            std::set<std::size_t> idx;
            for (std::size_t i = 0; i < subsets.size(); ++i)
                if (piece.vertices.count(subsets[i])) idx.insert(i);
            piece_idx.push_back(std::move(idx));
        }
        decs.push_back(std::move(piece_idx));
    }
    REQUIRE(decs.size() == 3);

    auto refines = [](const Triangulation& t, const std::vector<std::set<std::size_t>>& dec) {
        for (const auto& s : t.simplices) {
            bool inside = false;
            for (const auto& piece : dec) {
                bool sub = true;
                for (auto v : s)
                    if (!piece.count(v)) sub = false;
                if (sub) inside = true;
            }
            if (!inside) return false;
        }
        return true;
    };

    std::vector<int> per_dec(3, 0);
    for (const auto& t : secondary::enumerate_triangulations(oct)) {
        int count = 0;
        for (std::size_t d = 0; d < decs.size(); ++d) {
            if (refines(t, decs[d])) {
                ++count;
                ++per_dec[d];
            }
        }
        CHECK(count == 2); // each triangulation refines exactly two pyramid splits
    }
    for (int c : per_dec) CHECK(c == 2); // and each split is refined by exactly two
}

TEST_CASE("prism triangulations", "[secondary]") {
    auto t1 = secondary::prism_standard_triangulation(1);
    CHECK(t1.simplices.size() == 2);
    auto t2 = secondary::prism_standard_triangulation(2);
    CHECK(t2.simplices.size() == 3);

    for (int k = 1; k <= 3; ++k) {
        auto cfg = secondary::prism_config(k);
        // distinct permutations give distinct triangulations, (k+1)! in all
        std::set<std::vector<std::vector<std::size_t>>> distinct;
        std::vector<int> w(k + 1);
        std::iota(w.begin(), w.end(), 0);
        do {
            auto t = secondary::prism_triangulation_of_permutation(k, w);
            CHECK(secondary::is_triangulation(t, cfg));
            for (const auto& s : t.simplices)
                CHECK(simplex_volume(cfg.chart.coords, s) == 1); // staircase simplices are unimodular
            distinct.insert(t.simplices);
        } while (std::next_permutation(w.begin(), w.end()));
        CHECK(Integer(distinct.size()) == factorial(k + 1));
    }

    CHECK_THROWS_AS(secondary::prism_triangulation_of_permutation(2, {0, 0, 1}), BadParams);
}

TEST_CASE("prism characteristic functions and the permutohedron", "[secondary]") {
    for (int k = 1; k <= 3; ++k) {
        auto cfg = secondary::prism_config(k);
        auto phi = secondary::char_function(secondary::prism_standard_triangulation(k), cfg);
        for (int j = 0; j <= k; ++j) {
            CHECK(phi.values[secondary::prism_index(k, 1, j)] == j + 1);
            CHECK(phi.values[secondary::prism_index(k, 0, j)] == k + 1 - j);
        }
        CHECK(secondary::permutohedron_vertices(k).size() ==
              static_cast<std::size_t>(factorial(k + 1)));
    }
    CHECK(secondary::permutohedron_vertices(1) ==
          std::vector<IntVector>({{Integer(1), Integer(2)}, {Integer(2), Integer(1)}}));
}

TEST_CASE("prism triangulations are regular by the lifting oracle", "[secondary]") {
    for (int k = 1; k <= 2; ++k) {
        auto cfg = secondary::prism_config(k);
        for (const auto& t : secondary::enumerate_triangulations(cfg))
            CHECK(secondary::is_regular_triangulation(t, cfg));
    }
    auto oct = octahedron();
    for (const auto& t : secondary::enumerate_triangulations(oct))
        CHECK(secondary::is_regular_triangulation(t, oct));
}

TEST_CASE("the 3-cube has 74 triangulations, all regular", "[secondary]") {
    IntRows cube;
    for (int m = 0; m < 8; ++m)
        cube.push_back({Integer(m & 1), Integer((m >> 1) & 1), Integer((m >> 2) & 1)});
    secondary::PointConfig c3(cube);
    auto tris = secondary::enumerate_triangulations(c3);
    CHECK(tris.size() == 74);
    for (const auto& t : tris) CHECK(secondary::is_regular_triangulation(t, c3));
}

TEST_CASE("configs validate their input", "[secondary]") {
    CHECK_THROWS_AS(PointConfig(IntRows{{Integer(0)}, {Integer(0)}}), BadParams);
    // interior point: not all points are hull vertices
    PointConfig with_center({{Integer(0), Integer(0)},
                             {Integer(2), Integer(0)},
                             {Integer(0), Integer(2)},
                             {Integer(2), Integer(2)},
                             {Integer(1), Integer(1)}});
    CHECK_FALSE(secondary::all_points_extreme(with_center));
    CHECK_THROWS_AS(secondary::enumerate_triangulations(with_center), BadParams);
}
