#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chowkit/chowkit.hpp"

namespace chowkit::selftest {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    std::string detail; // first failing check, empty when passed
};

namespace detail {

class Checker {
public:
    void require(bool ok, const std::string& what) {
        if (!ok && detail_.empty()) detail_ = what;
        passed_ = passed_ && ok;
    }
    bool passed() const { return passed_; }
    const std::string& detail() const { return detail_; }

private:
    bool passed_ = true;
    std::string detail_;
};

inline Rational rnd_rational(std::mt19937_64& rng, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> num(lo, hi);
    return Rational(num(rng));
}

inline Matrix rnd_matrix(std::mt19937_64& rng, int rows, int cols, int lo = -9, int hi = 9) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rnd_rational(rng, lo, hi);
    return m;
}

inline configurations::Configuration rnd_generic_configuration(std::mt19937_64& rng, int k, int n) {
    while (true) {
        Matrix m = rnd_matrix(rng, k, n);
        try {
            configurations::Configuration c(k, n, m);
            if (configurations::is_general_position(c)) return c;
        } catch (const Error&) {
        }
    }
}

// arrangement with the first k forms equal to the coordinates, remaining
// forms random, all in general position
inline veronese::HyperplaneArrangement rnd_normalized_arrangement(std::mt19937_64& rng, int k,
                                                                  int n) {
    while (true) {
        Matrix a(n, k);
        for (int i = 0; i < k; ++i) a(i, i) = 1;
        for (int i = k; i < n; ++i)
            for (int j = 0; j < k; ++j) a(i, j) = Rational(std::uniform_int_distribution<int>(1, 9)(rng));
        veronese::HyperplaneArrangement arr(k, n, a);
        if (arr.general_position()) return arr;
    }
}

inline std::vector<Rational> rnd_offplane_point(std::mt19937_64& rng,
                                                const veronese::HyperplaneArrangement& arr) {
    while (true) {
        std::vector<Rational> z(arr.k);
        for (int j = 0; j < arr.k; ++j) z[j] = rnd_rational(rng, 1, 9);
        bool ok = true;
        for (int i = 0; i < arr.n; ++i)
            if (arr.form_at(i, z) == 0) ok = false;
        if (ok) return z;
    }
}

// Independent tree census: trees with n labeled endpoints correspond to
// families of pairwise compatible nontrivial splits of {1..n}.
inline long count_trees_by_splits(int n) {
    std::vector<std::vector<int>> splits; // each split is the side containing 1? no: store smaller side mask
    std::vector<unsigned> masks;
    for (unsigned m = 1; m < (1u << n); ++m) {
        if (!(m & 1u)) continue; // canonical side contains element 1
        const int size = __builtin_popcount(m);
        if (size < 2 || n - size < 2) continue;
        masks.push_back(m);
    }
    const unsigned full = (1u << n) - 1;
    // splits are compatible iff one of the four side intersections is empty
    auto compatible = [&](unsigned a, unsigned b) {
        const unsigned ca = full & ~a, cb = full & ~b;
        return (a & b) == 0 || (a & cb) == 0 || (ca & b) == 0 || (ca & cb) == 0;
    };
    long count = 0;
    std::vector<unsigned> chosen;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        ++count; // every compatible family (including empty) is one tree
        for (std::size_t i = start; i < masks.size(); ++i) {
            bool ok = true;
            for (unsigned c : chosen)
                if (!compatible(c, masks[i])) ok = false;
            if (!ok) continue;
            chosen.push_back(masks[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

inline bool proportional_vectors(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) return false;
    Rational r;
    bool set = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0 && b[i] == 0) continue;
        if (a[i] == 0 || b[i] == 0) return false;
        const Rational q = a[i] / b[i];
        if (!set) {
            r = q;
            set = true;
        } else if (q != r) {
            return false;
        }
    }
    return set;
}

} // namespace detail

using Runner = std::function<void(detail::Checker&)>;

inline CriterionResult run_criterion(int number, const std::string& name, const Runner& body) {
    CriterionResult res;
    res.number = number;
    res.name = name;
    detail::Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    res.passed = c.passed();
    res.detail = c.detail();
    return res;
}

// ---- criterion bodies -------------------------------------------------------

inline void criterion_tree_census(detail::Checker& c) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::pair<int, long>> census{{3, 1}, {4, 4}, {5, 26}};
    for (auto [n, expected] : census) {
        auto ts = trees::enumerate_trees(n);
        c.require(static_cast<long>(ts.size()) == expected,
                  "tree count at n=" + std::to_string(n));
        c.require(detail::count_trees_by_splits(n) == expected,
                  "split-family oracle at n=" + std::to_string(n));
        for (const auto& t : ts) {
            auto d = trees::tree_to_decomposition(t);
            c.require(hypersimplex::is_matroid_decomposition(d),
                      "census decomposition validity at n=" + std::to_string(n));
        }
    }
    for (int n = 3; n <= 7; ++n) {
        for (const auto& t : trees::enumerate_trees(n)) {
            auto d = trees::tree_to_decomposition(t);
            auto back = trees::decomposition_to_tree(d);
            c.require(trees::isomorphic(t, back), "roundtrip identity at n=" + std::to_string(n));
        }
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.require(elapsed < 60.0, "runtime under 60 s");
}

inline void criterion_octahedron(detail::Checker& c) {
    IntRows pts;
    for (const auto& s : k_subsets(4, 2)) pts.push_back(hypersimplex::indicator(s, 4));
    secondary::PointConfig oct(pts);
    auto tris = secondary::enumerate_triangulations(oct);
    c.require(tris.size() == 3, "octahedron has 3 triangulations");
    auto verts = secondary::secondary_vertices(oct);
    c.require(verts.size() == 3, "secondary polytope has 3 vertices");
    // affine span of the characteristic functions is 2-dimensional
    if (verts.size() == 3) {
        Matrix diff(2, 6);
        for (int r = 0; r < 2; ++r)
            for (int j = 0; j < 6; ++j)
                diff(r, j) = Rational(verts[r + 1].values[j] - verts[0].values[j]);
        c.require(rank(diff) == 2, "secondary vertices span a 2-dimensional affine space");
    }
    c.require(hypersimplex::hypersimplex_volume(2, 4) == 4, "normalized volume 4");
    // a two-pyramid split: pieces of any nontrivial n=4 tree
    for (const auto& t : trees::enumerate_trees(4)) {
        auto d = trees::tree_to_decomposition(t);
        if (d.pieces.size() != 2) continue;
        for (const auto& piece : d.pieces)
            c.require(hypersimplex::normalized_volume(piece) == 2, "pyramid piece volume 2");
    }
}

inline void criterion_prisms(detail::Checker& c) {
    for (int k = 1; k <= 3; ++k) {
        auto cfg = secondary::prism_config(k);
        auto tris = secondary::enumerate_triangulations(cfg);
        Integer expected = factorial(k + 1);
        c.require(Integer(tris.size()) == expected,
                  "prism k=" + std::to_string(k) + " has (k+1)! triangulations");
        std::set<secondary::CharFunction> phis;
        for (const auto& t : tris) phis.insert(secondary::char_function(t, cfg));
        c.require(Integer(phis.size()) == expected, "characteristic functions distinct");
        auto verts = secondary::secondary_vertices(cfg);
        c.require(verts.size() == phis.size(), "every characteristic function is a hull vertex");
        // row (1,.) of the vertices = all permutations of (1..k+1)
        std::set<IntVector> rows;
        for (const auto& phi : phis) {
            IntVector row(k + 1);
            for (int b = 0; b <= k; ++b) row[b] = phi.values[secondary::prism_index(k, 1, b)];
            rows.insert(std::move(row));
        }
        std::set<IntVector> perms;
        for (const auto& v : secondary::permutohedron_vertices(k)) perms.insert(v);
        c.require(rows == perms, "top-row projection is the permutohedron vertex set");
    }
}

inline void criterion_schubert_crosscheck(detail::Checker& c) {
    for (int k = 2; k <= 4; ++k)
        for (int n = k + 2; n <= 9; ++n)
            c.require(schubert::veronese_class(k, n) == schubert::klyachko_contour_class(k, n),
                      "classes differ at (k,n)=(" + std::to_string(k) + "," + std::to_string(n) + ")");
}

inline void criterion_enumerative_counts(detail::Checker& c) {
    {
        auto cls = schubert::lie_complex_class(2, 4);
        schubert::SchubertClass expect;
        expect.p = 2;
        expect.q = 4;
        expect.add({2, 1}, 2);
        c.require(cls == expect, "lie class (2,4) = 2 sigma_{2,1}");
    }
    for (int n = 4; n <= 10; ++n) {
        auto cls = schubert::lie_complex_class(2, n);
        schubert::SchubertClass expect;
        expect.p = 2;
        expect.q = n;
        for (int j = 1; 2 * j <= n - 1; ++j)
            if (n - 2 * j > 0) expect.add({n - 1 - j, j}, n - 2 * j);
        c.require(cls == expect, "lie class pattern at n=" + std::to_string(n));
    }
    for (int d = 5; d <= 12; ++d) {
        c.require(schubert::schur_dim({1, 1}, d - 1) == Integer((d - 1) * (d - 2) / 2),
                  "nodes of a plane rational curve");
        c.require(schubert::schur_dim({2, 2}, d - 3) ==
                      Integer(d - 2) * Integer((d - 3) * (d - 3)) * Integer(d - 4) / 12,
                  "quadrisecant count");
    }
    for (int n = 5; n <= 12; ++n)
        c.require(schubert::schur_dim({1, 1, 1}, n - 2) ==
                      Integer(n - 2) * Integer(n - 3) * Integer(n - 4) / 6,
                  "trisecant count");
}

inline void criterion_component_sum(detail::Checker& c) {
    for (auto [k, n] : std::vector<std::pair<int, int>>{{3, 6}, {3, 7}, {4, 8}}) {
        schubert::SchubertClass total;
        total.p = k - 1;
        total.q = n - 1;
        for (const auto& idx : k_subsets(n - 2, k - 1)) {
            auto lambda = schubert::weight_of_subset(idx, n);
            auto cls = schubert::component_class(lambda, k, n);
            for (const auto& [d, coeff] : cls.coeffs) total.add(d, coeff);
        }
        c.require(total == schubert::veronese_class(k, n),
                  "component sum at (k,n)=(" + std::to_string(k) + "," + std::to_string(n) + ")");
    }
}

inline void criterion_association(detail::Checker& c) {
    std::mt19937_64 rng(0xA550C1A7E);
    const std::vector<std::pair<int, int>> shapes{{2, 5}, {2, 6}, {3, 6}, {3, 7}};
    for (int trial = 0; trial < 50; ++trial) {
        auto [k, n] = shapes[trial % shapes.size()];
        auto cfg = detail::rnd_generic_configuration(rng, k, n);
        auto assoc = configurations::associate(cfg);
        auto back = configurations::associate(assoc);
        c.require(configurations::projectively_equivalent(cfg, back), "involution up to equivalence");

        // complementary-minor duality p_I(c) = sign(I, Ibar) * s * p_Ibar(assoc)
        grassmann::Subspace sc(k, n, cfg.matrix);
        grassmann::Subspace sa(n - k, n, assoc.matrix);
        auto pc = grassmann::plucker(sc);
        auto pa = grassmann::plucker(sa);
        Rational scale;
        bool set = false, dual_ok = true;
        for (const auto& [I, v] : pc.coords) {
            const Rational w = pa.at(complement(I, n)) * shuffle_sign(I, n);
            if (v == 0 && w == 0) continue;
            if ((v == 0) != (w == 0)) {
                dual_ok = false;
                break;
            }
            const Rational r = v / w;
            if (!set) {
                scale = r;
                set = true;
            } else if (r != scale) {
                dual_ok = false;
                break;
            }
        }
        c.require(dual_ok && set, "complementary-minor duality");

        // the tensor relation sum lambda_i x_i (x) y_i = 0 with all lambda_i nonzero
        Matrix sys(k * (n - k), n);
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < n - k; ++b)
                    sys(a * (n - k) + b, j) = cfg.matrix(a, j) * assoc.matrix(b, j);
        Matrix kern = kernel_basis(sys);
        c.require(kern.rows() == 1, "tensor relation unique up to scale");
        if (kern.rows() == 1) {
            bool all_nonzero = true;
            for (int j = 0; j < n; ++j)
                if (kern(0, j) == 0) all_nonzero = false;
            c.require(all_nonzero, "tensor relation has all coefficients nonzero");
        }
    }
}

inline void criterion_conic(detail::Checker& c) {
    std::mt19937_64 rng(0xC0111C);
    auto check_case = [&](const configurations::Configuration& cfg, bool expect_conic,
                          const std::string& tag) {
        const bool on = configurations::lies_on_conic(cfg);
        auto nf = configurations::six_point_normal_form(cfg);
        const Rational p = configurations::psi(nf.a, nf.b, nf.c, nf.d);
        const std::size_t r = veronese::tangent_system_rank(nf.a, nf.b, nf.c, nf.d);
        c.require(on == expect_conic, tag + ": conic membership");
        c.require((p == 0) == expect_conic, tag + ": psi vanishing");
        c.require((r <= 3) == expect_conic, tag + ": tangent system rank");
    };
    std::uniform_int_distribution<int> pick(-30, 30);
    for (int trial = 0; trial < 10; ++trial) {
        // six distinct parameters on the conic xz = y^2
        std::set<int> ts;
        while (ts.size() < 6) ts.insert(pick(rng));
        Matrix m(3, 6);
        int j = 0;
        for (int t : ts) {
            m(0, j) = Rational(t) * t;
            m(1, j) = t;
            m(2, j) = 1;
            ++j;
        }
        check_case(configurations::Configuration(3, 6, m), true, "conic sample");
    }
    for (int trial = 0; trial < 10; ++trial) {
        while (true) {
            auto cfg = detail::rnd_generic_configuration(rng, 3, 6);
            if (configurations::lies_on_conic(cfg)) continue;
            check_case(cfg, false, "generic sample");
            break;
        }
    }
    // every 4x4 minor of the tangent system on nonzero columns is +-Psi
    auto sym = veronese::tangent_system_symbolic();
    auto psi_poly = [] {
        auto v = [](int i) { return MultiPoly::variable(4, i); };
        return v(0) * v(3) - v(1) * v(2) + v(0) * v(1) * v(2) + v(1) * v(2) * v(3) -
               v(0) * v(2) * v(3) - v(0) * v(1) * v(3);
    }();
    for (const auto& cols : k_subsets(5, 4)) {
        std::vector<std::vector<MultiPoly>> sub(4, std::vector<MultiPoly>(4));
        for (int r = 0; r < 4; ++r)
            for (int t = 0; t < 4; ++t) sub[r][t] = sym[r][cols[t]]; // columns 2..6, 0-based 1..5
        MultiPoly d = poly_det(sub);
        c.require(d == psi_poly || d == -psi_poly, "4x4 minor equals +-Psi");
    }
}

inline void criterion_gauss_suite(detail::Checker& c) {
    std::mt19937_64 rng(0x6A055);
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}, {3, 7}}) {
        auto arr = detail::rnd_normalized_arrangement(rng, k, n);
        auto polys = veronese::plucker_polys(arr);

        for (int pt = 0; pt < 5; ++pt) {
            auto z = detail::rnd_offplane_point(rng, arr);
            auto g = veronese::log_gauss(arr, z);
            // (a) Euler identity
            std::vector<Rational> zn(n, Rational(0));
            for (int i = 0; i < n; ++i) {
                Rational s = 0;
                for (int j = 0; j < k; ++j) s += z[j] * g.matrix(j, i);
                zn[i] = s;
            }
            bool euler = true;
            for (int i = 0; i < n; ++i)
                if (zn[i] != 1) euler = false;
            c.require(euler, "Euler identity z.N(z) = (1..1)");

            // (b) symbolic coordinates proportional to numeric minors
            grassmann::Subspace gs(k, n, g.matrix);
            auto minors = grassmann::plucker(gs);
            std::vector<Rational> sym, num;
            for (const auto& [I, poly] : polys) {
                sym.push_back(poly.eval(z));
                num.push_back(minors.at(I));
            }
            c.require(detail::proportional_vectors(sym, num), "P_I match numeric Gauss minors");

            // (e) membership of Gauss-image points in the sweep
            std::vector<Rational> t(n, Rational(0));
            for (int r = 0; r < k; ++r) {
                const Rational coeff = detail::rnd_rational(rng, 1, 5);
                for (int i = 0; i < n; ++i) t[i] += coeff * g.matrix(r, i);
            }
            c.require(veronese::on_sweep(arr, t), "points of Gauss images lie on the sweep");
        }

        // (c) span rank of the coefficient matrix of {P_I}
        {
            std::map<std::vector<int>, std::size_t> monomials;
            for (const auto& [I, poly] : polys)
                for (const auto& [e, coeff] : poly.terms())
                    monomials.emplace(e, monomials.size());
            Matrix coeffs(polys.size(), monomials.size());
            std::size_t row = 0;
            for (const auto& [I, poly] : polys) {
                for (const auto& [e, coeff] : poly.terms()) coeffs(row, monomials[e]) = coeff;
                ++row;
            }
            c.require(rank(coeffs) == static_cast<std::size_t>(binomial(n - 1, k - 1)),
                      "span rank C(n-1,k-1)");
        }

        // (d) marked points via symbolic evaluation
        for (const auto& idx : k_subsets(n, k - 1)) {
            auto zstar = veronese::stratum_point(arr, idx);
            auto marked = veronese::marked_point(arr, idx);
            grassmann::Subspace ms(k, n, marked.matrix);
            auto expected = grassmann::plucker(ms);
            std::vector<Rational> sym, ref;
            bool vanishing_ok = true;
            for (const auto& [I, poly] : polys) {
                const Rational v = poly.eval(zstar);
                bool subset_in = true;
                for (int x : idx)
                    if (!contains(I, x)) subset_in = false;
                if (!subset_in && v != 0) vanishing_ok = false;
                sym.push_back(v);
                ref.push_back(expected.at(I));
            }
            c.require(vanishing_ok, "vanishing pattern at marked point");
            c.require(detail::proportional_vectors(sym, ref), "marked point is the coordinate subspace");
        }

        // (e) rank 1 at the basis points
        for (int i = 0; i < n; ++i) {
            std::vector<Rational> e(n, Rational(0));
            e[i] = 1;
            c.require(rank(veronese::sweep_matrix(arr, e)) == 1,
                      "sweep matrix has rank 1 at basis points");
        }
    }
}

inline void criterion_tetrahedral(detail::Checker& c) {
    std::mt19937_64 rng(0x7E7A);
    for (int trial = 0; trial < 10; ++trial) {
        grassmann::Subspace line = [&] {
            while (true) {
                Matrix m = detail::rnd_matrix(rng, 2, 4);
                try {
                    grassmann::Subspace s(2, 4, m);
                    if (grassmann::is_generic(s)) return s;
                } catch (const Error&) {
                }
            }
        }();
        const Rational lambda = veronese::tetrahedral_ratio(line);
        for (int tr = 0; tr < 10; ++tr) {
            Matrix scaled = line.matrix;
            for (int j = 0; j < 4; ++j) {
                const Rational t = detail::rnd_rational(rng, 1, 9);
                for (int i = 0; i < 2; ++i) scaled(i, j) *= t;
            }
            c.require(veronese::tetrahedral_ratio(grassmann::Subspace(2, 4, scaled)) == lambda,
                      "tetrahedral ratio constant on torus translates");
        }
    }
    for (int n = 4; n <= 6; ++n) {
        for (const auto& t : trees::enumerate_trees(n)) {
            auto d = trees::tree_to_decomposition(t);
            for (int i = 1; i <= n; ++i) {
                auto restricted = hypersimplex::restrict_to_facet(d, i, '-');
                auto forgotten = trees::tree_to_decomposition(trees::forget_point(t, i));
                c.require(trees::decomposition_key(restricted) == trees::decomposition_key(forgotten),
                          "restriction matches forgetting at n=" + std::to_string(n));
            }
        }
    }
}

inline std::vector<CriterionResult> run_all() {
    std::vector<CriterionResult> out;
    out.push_back(run_criterion(1, "tree/decomposition census and roundtrip", criterion_tree_census));
    out.push_back(run_criterion(2, "octahedron suite", criterion_octahedron));
    out.push_back(run_criterion(3, "prism/permutohedron", criterion_prisms));
    out.push_back(run_criterion(4, "Schubert flagship cross-check", criterion_schubert_crosscheck));
    out.push_back(run_criterion(5, "classical enumerative counts", criterion_enumerative_counts));
    out.push_back(run_criterion(6, "component-sum identity", criterion_component_sum));
    out.push_back(run_criterion(7, "association", criterion_association));
    out.push_back(run_criterion(8, "conic criterion", criterion_conic));
    out.push_back(run_criterion(9, "Veronese/Gauss suite", criterion_gauss_suite));
    out.push_back(run_criterion(10, "tetrahedral complexes and restriction", criterion_tetrahedral));
    return out;
}

inline std::string format_table(const std::vector<CriterionResult>& results) {
    std::ostringstream out;
    for (const auto& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.number << ": " << r.name << "  ("
            << r.seconds << " s)";
        if (!r.passed && !r.detail.empty()) out << "  -- " << r.detail;
        out << "\n";
    }
    return out.str();
}

} // namespace chowkit::selftest
