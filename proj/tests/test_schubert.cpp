#include <catch2/catch_amalgamated.hpp>

#include "chowkit/chowkit.hpp"
#include "oracles.hpp"

using namespace chowkit;
using schubert::SchubertClass;
using schubert::YoungDiagram;
using schubert::Weight;

TEST_CASE("conjugation", "[schubert]") {
    CHECK(schubert::conjugate({4}) == YoungDiagram{1, 1, 1, 1});
    CHECK(schubert::conjugate({2, 2}) == YoungDiagram{2, 2});
    CHECK(schubert::conjugate({3, 1}) == YoungDiagram{2, 1, 1});
    CHECK(schubert::conjugate({}) == YoungDiagram{});
    for (const auto& d : schubert::diagrams_in_rectangle(4, 4, 6))
        CHECK(schubert::conjugate(schubert::conjugate(d)) == d);
}

TEST_CASE("heights", "[schubert]") {
    const int p = 3, q = 7;
    CHECK(schubert::heights({}, p, q) == std::vector<int>{0, 0, 0, 0, 1, 2, 3});
    CHECK(schubert::heights({4, 4, 4}, p, q) == std::vector<int>{1, 2, 3, 3, 3, 3, 3});
    for (int cells = 0; cells <= 6; ++cells)
        for (const auto& d : schubert::diagrams_in_rectangle(p, q - p, cells)) {
            auto ht = schubert::heights(d, p, q);
            CHECK(ht.back() == p);
            CHECK(std::is_sorted(ht.begin(), ht.end()));
            int vertical = ht[0];
            for (std::size_t i = 1; i < ht.size(); ++i) vertical += ht[i] - ht[i - 1] == 1;
            CHECK(vertical == p);
        }
    CHECK_THROWS_AS(schubert::heights({5}, 3, 7), DoesNotFit);
}

TEST_CASE("schur dimensions", "[schubert]") {
    CHECK(schubert::schur_dim({1, 1}, 3) == 3);     // wedge^2 C^3
    CHECK(schubert::schur_dim({2}, 3) == 6);        // S^2 C^3
    CHECK(schubert::schur_dim({2, 2}, 3) == 6);
    CHECK(schubert::schur_dim({2, 1, 1}, 2) == 0);  // too many rows
    CHECK(schubert::schur_dim({}, 5) == 1);
}

TEST_CASE("schur dimension agrees with the weight-sum oracle", "[schubert]") {
    for (int cells = 1; cells <= 6; ++cells)
        for (const auto& d : schubert::diagrams_in_rectangle(6, 6, cells))
            for (int m = 1; m <= 5; ++m)
                CHECK(schubert::schur_dim(d, m) == oracles::schur_dim_by_weights(d, m));
}

TEST_CASE("kostka numbers", "[schubert]") {
    CHECK(schubert::kostka({3}, {3}) == 1);
    CHECK(schubert::kostka({1, 1, 1}, {2, 1}) == 2);
    CHECK(schubert::kostka({2, 1}, {2, 1}) == 1);
    CHECK(schubert::kostka({0, 3}, {2, 1}) == 0);
    CHECK_THROWS_AS(schubert::kostka({1, 1}, {2, 1}), SizeMismatch);
}

TEST_CASE("kostka symmetry under weight permutations", "[schubert]") {
    const YoungDiagram alpha{3, 2, 1};
    std::vector<int> lambda{2, 2, 1, 1, 0};
    std::sort(lambda.begin(), lambda.end());
    const Integer reference = schubert::kostka(lambda, alpha);
    do {
        CHECK(schubert::kostka(lambda, alpha) == reference);
    } while (std::next_permutation(lambda.begin(), lambda.end()));
}

TEST_CASE("littlewood-richardson numbers", "[schubert]") {
    CHECK(schubert::littlewood_richardson({}, {2, 1}, {2, 1}) == 1);
    CHECK(schubert::littlewood_richardson({1}, {1, 1}, {2, 1}) == 1);
    CHECK(schubert::littlewood_richardson({1}, {2}, {2, 1}) == 1);
    CHECK(schubert::littlewood_richardson({1}, {2}, {3}) == 1);
    CHECK(schubert::littlewood_richardson({2, 1}, {2, 1}, {3, 2, 1}) == 2);
    CHECK_THROWS_AS(schubert::littlewood_richardson({1}, {1}, {3}), SizeMismatch);
}

TEST_CASE("LR symmetry and tensor dimension identity", "[schubert]") {
    const std::vector<YoungDiagram> shapes{{1}, {2}, {1, 1}, {2, 1}, {2, 2}, {3, 1}};
    for (const auto& alpha : shapes)
        for (const auto& beta : shapes) {
            const int cells = schubert::weight_of(alpha) + schubert::weight_of(beta);
            Integer lhs3 = 0, lhs4 = 0;
            for (const auto& gamma : schubert::diagrams_in_rectangle(cells, cells, cells)) {
                const Integer c = schubert::littlewood_richardson(alpha, beta, gamma);
                CHECK(c == schubert::littlewood_richardson(beta, alpha, gamma));
                lhs3 += c * schubert::schur_dim(gamma, 3);
                lhs4 += c * schubert::schur_dim(gamma, 4);
            }
            CHECK(lhs3 == schubert::schur_dim(alpha, 3) * schubert::schur_dim(beta, 3));
            CHECK(lhs4 == schubert::schur_dim(alpha, 4) * schubert::schur_dim(beta, 4));
        }
}

TEST_CASE("direct sum pushforward", "[schubert]") {
    auto cls = schubert::direct_sum_pushforward({1}, 1, 2, {1, 1}, 2, 3);
    CHECK(cls.p == 3);
    CHECK(cls.q == 5);
    CHECK(cls.coeffs.at({2, 1}) == 1);
    CHECK(cls.coeffs.at({1, 1, 1}) == 1);
    // the honest direct sum drops nothing: the expansion fits the target
    auto square = schubert::direct_sum_pushforward({1}, 1, 2, {1}, 1, 2);
    CHECK(square.coeffs.count({1, 1}) == 1);
    CHECK(square.coeffs.count({2}) == 1);
    CHECK(square.dropped_terms == 0);
    // truncation to a fixed Grassmannian is counted on insertion
    SchubertClass tight;
    tight.p = 2;
    tight.q = 3;
    tight.add({2}, 1); // too wide for the 2x1 rectangle
    tight.add({1}, 5);
    CHECK(tight.dropped_terms == 1);
    CHECK(tight.coeffs.size() == 1);
}

TEST_CASE("weight labels of index subsets", "[schubert]") {
    // consecutive block 1..k-1
    CHECK(schubert::weight_of_subset({1, 2}, 6) == Weight{2, 0, 0});
    CHECK(schubert::weight_of_subset({}, 5) == Weight{0, 0, 0, 0});
    CHECK(schubert::weight_of_subset({2, 4}, 7) == Weight{0, 1, 1, 0});
    CHECK_THROWS_AS(schubert::weight_of_subset({5}, 6), BadIndices);

    // bijection onto W(n-k, k-1)
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}, {4, 8}}) {
        std::set<Weight> images;
        for (const auto& idx : k_subsets(n - 2, k - 1))
            images.insert(schubert::weight_of_subset(idx, n));
        CHECK(Integer(images.size()) == binomial(n - 2, k - 1));
        for (const auto& w : images) {
            int total = 0;
            for (int v : w) total += v;
            CHECK(static_cast<int>(w.size()) == n - k);
            CHECK(total == k - 1);
        }
    }
}

TEST_CASE("component classes", "[schubert]") {
    // k=2: single Schubert line with multiplicity one
    for (int n = 4; n <= 7; ++n)
        for (const auto& idx : k_subsets(n - 2, 1)) {
            auto cls = schubert::component_class(schubert::weight_of_subset(idx, n), 2, n);
            REQUIRE(cls.coeffs.size() == 1);
            CHECK(cls.coeffs.begin()->first == YoungDiagram{1});
            CHECK(cls.coeffs.begin()->second == 1);
        }

    auto cls = schubert::component_class({2, 0, 0}, 3, 6);
    REQUIRE(cls.coeffs.size() == 1);
    CHECK(cls.coeffs.at({1, 1}) == 1);
    CHECK_THROWS_AS(schubert::component_class({2, 0}, 3, 6), BadWeight);
}

TEST_CASE("component classes match exterior power pushforwards", "[schubert]") {
    for (auto [k, n] : std::vector<std::pair<int, int>>{{3, 6}, {3, 7}}) {
        for (const auto& idx : k_subsets(n - 2, k - 1)) {
            auto lambda = schubert::weight_of_subset(idx, n);
            // product of projective-space fundamental classes sigma_{1^{lambda_j}}
            SchubertClass acc;
            acc.p = 0;
            acc.q = 0;
            acc.add({}, 1);
            for (int lj : lambda) {
                SchubertClass factor;
                factor.p = lj;
                factor.q = lj + 1;
                YoungDiagram column(lj, 1);
                factor.add(column, 1);
                acc = schubert::direct_sum_pushforward(acc, factor);
            }
            CHECK(acc == schubert::component_class(lambda, k, n));
        }
    }
}

TEST_CASE("veronese classes", "[schubert]") {
    // k=2: degree n-2 Veronese curve
    for (int n = 4; n <= 9; ++n) {
        auto cls = schubert::veronese_class(2, n);
        REQUIRE(cls.coeffs.size() == 1);
        CHECK(cls.coeffs.at({1}) == n - 2);
    }
    auto cls36 = schubert::veronese_class(3, 6);
    CHECK(cls36.coeffs.at({2}) == 3);
    CHECK(cls36.coeffs.at({1, 1}) == 6);
    CHECK_THROWS_AS(schubert::veronese_class(1, 4), BadParams);
}

TEST_CASE("kostka column sums give schur dimensions", "[schubert]") {
    for (auto [k, n] : std::vector<std::pair<int, int>>{{3, 6}, {4, 8}}) {
        for (const auto& alpha : schubert::diagrams_in_rectangle(k - 1, n - k, k - 1)) {
            Integer sum = 0;
            for (const auto& idx : k_subsets(n - 2, k - 1))
                sum += schubert::kostka(schubert::weight_of_subset(idx, n),
                                        schubert::conjugate(alpha));
            CHECK(sum == schubert::schur_dim(schubert::conjugate(alpha), n - k));
        }
    }
}

TEST_CASE("lie complex classes", "[schubert]") {
    auto cls = schubert::lie_complex_class(2, 4);
    REQUIRE(cls.coeffs.size() == 1);
    CHECK(cls.coeffs.at({2, 1}) == 2);

    for (int n = 5; n <= 10; ++n) {
        auto c = schubert::lie_complex_class(2, n);
        for (int j = 1; 2 * j <= n - 1; ++j) {
            if (n - 2 * j <= 0) continue;
            CHECK(c.coeffs.at({n - 1 - j, j}) == n - 2 * j);
        }
    }
}

TEST_CASE("contour and veronese classes agree", "[schubert]") {
    for (int k = 2; k <= 4; ++k)
        for (int n = k + 2; n <= 9; ++n)
            CHECK(schubert::veronese_class(k, n) == schubert::klyachko_contour_class(k, n));
}
