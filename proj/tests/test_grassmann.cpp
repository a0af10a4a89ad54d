#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chowkit/chowkit.hpp"
#include "oracles.hpp"

using namespace chowkit;
using grassmann::Subspace;

namespace {

Subspace sub(int k, int n, const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
    return Subspace(k, n, Matrix::from_rows(r));
}

} // namespace

TEST_CASE("plucker coordinates", "[grassmann]") {
    auto s = sub(2, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    auto p = grassmann::plucker(s);
    CHECK(p.at({1, 2}) == 1);
    CHECK(p.at({1, 3}) == 0);
    CHECK(p.at({3, 4}) == 0);

    auto t = sub(2, 4, {{1, 0, 1, 1}, {0, 1, 1, 2}});
    auto q = grassmann::plucker(t);
    CHECK(q.at({1, 2}) == 1);
    CHECK(q.at({1, 3}) == 1);
    CHECK(q.at({1, 4}) == 2);
    CHECK(q.at({2, 3}) == -1);
    CHECK(q.at({2, 4}) == -1);
    CHECK(q.at({3, 4}) == 1);
    CHECK(q.at({1, 2}) * q.at({3, 4}) - q.at({1, 3}) * q.at({2, 4}) +
              q.at({1, 4}) * q.at({2, 3}) ==
          0);
}

TEST_CASE("row-equivalent matrices give proportional plucker vectors", "[grassmann]") {
    std::mt19937_64 rng(21);
    auto s = oracles::rnd_subspace(rng, 2, 5);
    Matrix g = oracles::rnd_matrix(rng, 2, 2);
    while (det(g) == 0) g = oracles::rnd_matrix(rng, 2, 2);
    Subspace t(2, 5, g * s.matrix);
    auto p = grassmann::plucker(s);
    auto q = grassmann::plucker(t);
    const Rational scale = det(g);
    for (const auto& [idx, v] : p.coords) CHECK(q.at(idx) == scale * v);
    CHECK(s.same_subspace(t));
}

TEST_CASE("plucker relations hold for random subspaces", "[grassmann]") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 100; ++t) {
        auto s = oracles::rnd_subspace(rng, 2, 5 + t % 2);
        CHECK(grassmann::satisfies_plucker_relations_k2(grassmann::plucker(s)));
    }
}

TEST_CASE("genericity", "[grassmann]") {
    CHECK_FALSE(grassmann::is_generic(sub(2, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}})));
    CHECK(grassmann::is_generic(sub(2, 4, {{1, 0, 1, 1}, {0, 1, 1, 2}})));
    CHECK(grassmann::is_generic(sub(1, 4, {{1, 1, 1, 1}})));
}

TEST_CASE("matroid bases", "[grassmann]") {
    auto generic = sub(2, 4, {{1, 0, 1, 1}, {0, 1, 1, 2}});
    CHECK(grassmann::matroid_bases(generic).size() == 6);

    auto coord = sub(2, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    CHECK(grassmann::matroid_bases(coord) == std::set<Subset>{{1, 2}});

    auto partial = sub(2, 4, {{1, 0, 1, 0}, {0, 1, 0, 1}});
    CHECK(grassmann::matroid_bases(partial) ==
          std::set<Subset>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});
}

TEST_CASE("matroid bases satisfy the exchange axiom", "[grassmann]") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        auto s = oracles::rnd_subspace(rng, 2 + t % 2, 5);
        CHECK(hypersimplex::exchange_axiom(grassmann::matroid_bases(s)));
    }
}

TEST_CASE("intersection map", "[grassmann]") {
    // k=1 always drops dimension
    CHECK_THROWS_AS(grassmann::intersect_coord_hyperplane(sub(1, 2, {{1, 1}}), 1), DimensionDrop);

    // span(e1+e2, e3+e4), i=1 -> image of e3+e4 in C^3
    auto s = sub(2, 4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    auto cut = grassmann::intersect_coord_hyperplane(s, 1);
    CHECK(cut.k == 1);
    CHECK(cut.n == 3);
    CHECK(cut.same_subspace(sub(1, 3, {{0, 1, 1}})));
}

TEST_CASE("projection map", "[grassmann]") {
    CHECK_THROWS_AS(grassmann::project_away(sub(2, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}}), 1),
                    DimensionDrop);
    auto p = grassmann::project_away(sub(1, 3, {{1, 2, 3}}), 2);
    CHECK(p.same_subspace(sub(1, 2, {{1, 3}})));
}

TEST_CASE("intersection and projection match matroid minors", "[grassmann]") {
    std::mt19937_64 rng(24);
    for (int t = 0; t < 25; ++t) {
        auto s = oracles::rnd_generic_subspace(rng, 2, 5);
        const auto bases = grassmann::matroid_bases(s);
        for (int i = 1; i <= 5; ++i) {
            auto cut = grassmann::intersect_coord_hyperplane(s, i);
            CHECK(grassmann::matroid_bases(cut) == oracles::matroid_contraction(bases, i));
            auto proj = grassmann::project_away(s, i);
            CHECK(grassmann::matroid_bases(proj) == oracles::matroid_deletion(bases, i));
        }
    }
}

TEST_CASE("column configuration of a subspace", "[grassmann]") {
    auto s = sub(2, 4, {{1, 0, 1, 1}, {0, 1, 1, 2}});
    auto c = grassmann::gm_configuration(s);
    CHECK(c.k == 2);
    CHECK(c.n == 4);
    CHECK(c.matrix(0, 2) == 1);
    CHECK(c.matrix(1, 3) == 2);
    CHECK_THROWS_AS(grassmann::gm_configuration(sub(2, 4, {{1, 0, 1, 0}, {0, 0, 1, 0}})),
                    ZeroColumn);
}

TEST_CASE("torus and GL actions preserve the configuration class", "[grassmann]") {
    std::mt19937_64 rng(25);
    auto s = oracles::rnd_generic_subspace(rng, 2, 5);
    auto c = grassmann::gm_configuration(s);

    Matrix scaled = s.matrix;
    for (int j = 0; j < 5; ++j) {
        const Rational t = oracles::rnd_rational(rng, 1, 9);
        for (int i = 0; i < 2; ++i) scaled(i, j) *= t;
    }
    auto c2 = grassmann::gm_configuration(Subspace(2, 5, scaled));
    CHECK(configurations::projectively_equivalent(c, c2));

    Matrix g = oracles::rnd_matrix(rng, 2, 2);
    while (det(g) == 0) g = oracles::rnd_matrix(rng, 2, 2);
    auto c3 = grassmann::gm_configuration(Subspace(2, 5, g * s.matrix));
    CHECK(configurations::projectively_equivalent(c, c3));

    // a genuinely different orbit
    auto other = oracles::rnd_generic_subspace(rng, 2, 5);
    if (!configurations::projectively_equivalent(c, grassmann::gm_configuration(other)))
        SUCCEED();
}

TEST_CASE("gm configuration matroid equals subspace matroid", "[grassmann]") {
    std::mt19937_64 rng(26);
    for (int t = 0; t < 100; ++t) {
        auto s = oracles::rnd_subspace(rng, 2, 5);
        auto c = [&]() -> std::optional<configurations::Configuration> {
            try {
                return grassmann::gm_configuration(s);
            } catch (const ZeroColumn&) {
                return std::nullopt;
            }
        }();
        if (!c) continue;
        Subspace back(c->k, c->n, c->matrix);
        CHECK(grassmann::matroid_bases(back) == grassmann::matroid_bases(s));
    }
}
