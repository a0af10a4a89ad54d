#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "chowkit/polytope.hpp"

namespace chowkit::secondary {

// A finite configuration of distinct lattice points, all of which are
// vertices of their convex hull (the only case used here). Geometry runs
// in chart coordinates where the induced lattice is Z^dim.
struct PointConfig {
    IntRows points;
    LatticeChart chart;

    PointConfig() = default;
    explicit PointConfig(IntRows pts) : points(std::move(pts)) {
        if (points.empty()) throw BadParams("empty point configuration");
        std::set<IntVector> dedup(points.begin(), points.end());
        if (dedup.size() != points.size()) throw BadParams("points must be distinct");
        chart = lattice_chart(points);
    }

    int dim() const { return chart.dim; }
    std::size_t size() const { return points.size(); }
};

struct Triangulation {
    std::vector<std::vector<std::size_t>> simplices; // point indices, sorted
};

struct CharFunction {
    std::vector<Integer> values; // one per configuration point
    bool operator==(const CharFunction& o) const { return values == o.values; }
    bool operator<(const CharFunction& o) const { return values < o.values; }
};

inline Integer hull_volume(const PointConfig& a) {
    return placing_volume(a.chart.coords, a.dim());
}

inline bool all_points_extreme(const PointConfig& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!is_hull_vertex(a.chart.coords, i)) return false;
    return true;
}

inline bool is_triangulation(const Triangulation& t, const PointConfig& a) {
    const int d = a.dim();
    Integer total = 0;
    for (const auto& s : t.simplices) {
        if (static_cast<int>(s.size()) != d + 1) return false;
        for (auto idx : s)
            if (idx >= a.size()) return false;
        const Integer v = simplex_volume(a.chart.coords, s);
        if (v == 0) return false;
        total += v;
    }
    if (total != hull_volume(a)) return false;
    auto rows_of = [&](const std::vector<std::size_t>& s) {
        IntRows rows;
        for (auto idx : s) rows.push_back(a.chart.coords[idx]);
        return rows;
    };
    for (std::size_t x = 0; x < t.simplices.size(); ++x)
        for (std::size_t y = x + 1; y < t.simplices.size(); ++y) {
            if (t.simplices[x] == t.simplices[y]) return false;
            if (!common_face(rows_of(t.simplices[x]), rows_of(t.simplices[y]))) return false;
        }
    return true;
}

// phi_T(point) = total normalized volume of the simplices of T incident to
// the point.
inline CharFunction char_function(const Triangulation& t, const PointConfig& a) {
    if (!is_triangulation(t, a)) throw InvalidTriangulation();
    CharFunction phi;
    phi.values.assign(a.size(), Integer(0));
    for (const auto& s : t.simplices) {
        const Integer v = simplex_volume(a.chart.coords, s);
        for (auto idx : s) phi.values[idx] += v;
    }
    return phi;
}

// Exhaustive enumeration of the triangulations of (conv A, A) by anchored
// exact placement: the lexicographically smallest simplex is chosen first,
// afterwards the smallest open facet is extended in all compatible ways.
inline std::vector<Triangulation> enumerate_triangulations(const PointConfig& a) {
    if (a.size() > 12) throw TooLarge("triangulation enumeration limited to 12 points");
    if (!all_points_extreme(a)) throw BadParams("points must be vertices of their hull");
    const int d = a.dim();
    const std::size_t n = a.size();
    const Integer target = hull_volume(a);

    // candidate maximal simplices with their volumes
    std::vector<std::vector<std::size_t>> cand;
    std::vector<Integer> cand_vol;
    {
        std::vector<std::size_t> pick;
        auto rec = [&](auto&& self, std::size_t start) -> void {
            if (static_cast<int>(pick.size()) == d + 1) {
                const Integer v = simplex_volume(a.chart.coords, pick);
                if (v > 0) {
                    cand.push_back(pick);
                    cand_vol.push_back(v);
                }
                return;
            }
            for (std::size_t i = start; i < n; ++i) {
                pick.push_back(i);
                self(self, i + 1);
                pick.pop_back();
            }
        };
        rec(rec, 0);
    }

    auto rows_of = [&](const std::vector<std::size_t>& s) {
        IntRows rows;
        for (auto idx : s) rows.push_back(a.chart.coords[idx]);
        return rows;
    };
    // pairwise proper-intersection cache
    std::map<std::pair<std::size_t, std::size_t>, bool> compat_cache;
    auto compatible = [&](std::size_t x, std::size_t y) {
        const auto key = std::minmax(x, y);
        auto it = compat_cache.find(key);
        if (it != compat_cache.end()) return it->second;
        const bool ok = common_face(rows_of(cand[x]), rows_of(cand[y]));
        compat_cache.emplace(key, ok);
        return ok;
    };

    std::vector<Triangulation> found;
    std::vector<std::size_t> chosen;

    auto open_facets = [&]() {
        // facet -> owners among chosen simplices
        std::map<std::vector<std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>> cnt;
        for (auto ci : chosen) {
            const auto& verts = cand[ci];
            for (std::size_t skip = 0; skip < verts.size(); ++skip) {
                std::vector<std::size_t> f;
                for (std::size_t i = 0; i < verts.size(); ++i)
                    if (i != skip) f.push_back(verts[i]);
                cnt[f].emplace_back(ci, verts[skip]);
            }
        }
        std::vector<std::pair<std::vector<std::size_t>, std::size_t>> open;
        for (const auto& [f, owners] : cnt) {
            if (owners.size() != 1) continue;
            // on the hull boundary? then nothing to extend
            bool boundary = true;
            for (std::size_t p = 0; p < n && boundary; ++p)
                if (orientation_sign(a.chart.coords, f, p) == -orientation_sign(a.chart.coords, f, owners[0].second) &&
                    orientation_sign(a.chart.coords, f, p) != 0)
                    boundary = false;
            if (!boundary) open.emplace_back(f, owners[0].second);
        }
        return open;
    };

    auto rec = [&](auto&& self, std::size_t lex_min, Integer vol) -> void {
        if (vol > target) return;
        auto open = open_facets();
        if (open.empty()) {
            if (vol == target) {
                Triangulation t;
                for (auto ci : chosen) t.simplices.push_back(cand[ci]);
                std::sort(t.simplices.begin(), t.simplices.end());
                found.push_back(std::move(t));
            }
            return;
        }
        const auto& [facet, opposite] = open.front();
        for (std::size_t ci = lex_min + 1; ci < cand.size(); ++ci) {
            const auto& verts = cand[ci];
            if (!std::includes(verts.begin(), verts.end(), facet.begin(), facet.end())) continue;
            std::size_t apex = 0;
            for (auto vtx : verts)
                if (!std::binary_search(facet.begin(), facet.end(), vtx)) apex = vtx;
            if (orientation_sign(a.chart.coords, facet, apex) !=
                -orientation_sign(a.chart.coords, facet, opposite))
                continue; // wrong side
            bool ok = true;
            for (auto prev : chosen)
                if (!compatible(prev, ci)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(ci);
            self(self, lex_min, vol + cand_vol[ci]);
            chosen.pop_back();
        }
    };

    for (std::size_t first = 0; first < cand.size(); ++first) {
        chosen.assign(1, first);
        rec(rec, first, cand_vol[first]);
    }
    std::sort(found.begin(), found.end(),
              [](const Triangulation& x, const Triangulation& y) { return x.simplices < y.simplices; });
    return found;
}

// Vertices of the secondary polytope: characteristic functions that are
// extreme among all of them (these are exactly the regular triangulations).
inline std::vector<CharFunction> secondary_vertices(const PointConfig& a) {
    auto tris = enumerate_triangulations(a);
    std::set<CharFunction> phis;
    for (const auto& t : tris) phis.insert(char_function(t, a));
    IntRows rows;
    for (const auto& phi : phis) rows.push_back(phi.values);
    std::vector<CharFunction> out;
    std::size_t idx = 0;
    for (const auto& phi : phis) {
        if (is_hull_vertex(rows, idx)) out.push_back(phi);
        ++idx;
    }
    return out;
}

// Direct lifting characterization of regularity, kept as an independent
// oracle: a lift of the points exists whose lower hull projects to T.
inline bool is_regular_triangulation(const Triangulation& t, const PointConfig& a) {
    if (!is_triangulation(t, a)) throw InvalidTriangulation();
    const std::size_t n = a.size();
    std::vector<Constraint> cons;
    for (const auto& s : t.simplices) {
        // affine extension of the lift over s must lie strictly below the
        // lift at every point not in s
        std::vector<std::size_t> rows(s.begin(), s.end());
        for (std::size_t p = 0; p < n; ++p) {
            if (std::binary_search(s.begin(), s.end(), p)) continue;
            // barycentric coordinates of p wrt simplex s in chart coords
            const int d = a.dim();
            Matrix m(d + 1, s.size());
            std::vector<Rational> rhs(d + 1);
            for (std::size_t c = 0; c < s.size(); ++c) {
                for (int r = 0; r < d; ++r) m(r, c) = Rational(a.chart.coords[s[c]][r]);
                m(d, c) = 1;
            }
            for (int r = 0; r < d; ++r) rhs[r] = Rational(a.chart.coords[p][r]);
            rhs[d] = 1;
            auto bary = solve(m, rhs);
            if (!bary) return false;
            std::vector<Rational> coeff(n, Rational(0));
            for (std::size_t c = 0; c < s.size(); ++c) coeff[s[c]] = (*bary)[c];
            coeff[p] -= 1;
            // sum bary_c * w(s_c) - w(p) <= -1
            cons.push_back(make_constraint(std::move(coeff), Rel::LessEq, -1));
        }
    }
    return find_feasible(n, cons).has_value();
}

// ---- prisms Delta^1 x Delta^k and the permutohedron ----------------------

// Vertices (a, b), 0 <= a <= 1, 0 <= b <= k, embedded as (a, e_b); the point
// list is ordered (0,0),...,(0,k),(1,0),...,(1,k).
inline PointConfig prism_config(int k) {
    if (k < 1) throw BadParams("need k >= 1");
    IntRows pts;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= k; ++b) {
            IntVector v(k + 2, 0);
            v[0] = a;
            v[1 + b] = 1;
            pts.push_back(std::move(v));
        }
    return PointConfig(std::move(pts));
}

inline std::size_t prism_index(int k, int a, int b) {
    return static_cast<std::size_t>(a * (k + 1) + b);
}

// Staircase triangulation: simplex i is the hull of (0,j), j <= i and
// (1,j), j >= i. A permutation of {0..k} acts on the labels of the second
// factor.
inline Triangulation prism_triangulation_of_permutation(int k, const std::vector<int>& w) {
    if (static_cast<int>(w.size()) != k + 1) throw BadParams("permutation size must be k+1");
    std::vector<int> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i <= k; ++i)
        if (sorted[i] != i) throw BadParams("not a permutation of 0..k");
    Triangulation t;
    for (int i = 0; i <= k; ++i) {
        std::vector<std::size_t> s;
        for (int j = 0; j <= i; ++j) s.push_back(prism_index(k, 0, w[j]));
        for (int j = i; j <= k; ++j) s.push_back(prism_index(k, 1, w[j]));
        std::sort(s.begin(), s.end());
        t.simplices.push_back(std::move(s));
    }
    std::sort(t.simplices.begin(), t.simplices.end());
    return t;
}

inline Triangulation prism_standard_triangulation(int k) {
    std::vector<int> id(k + 1);
    std::iota(id.begin(), id.end(), 0);
    return prism_triangulation_of_permutation(k, id);
}

// S_{k+1}-orbit of (1, 2, ..., k+1).
inline std::vector<IntVector> permutohedron_vertices(int k) {
    if (k < 1) throw BadParams("need k >= 1");
    IntVector v(k + 1);
    std::iota(v.begin(), v.end(), Integer(1));
    std::vector<IntVector> out;
    std::vector<Integer> perm(v.begin(), v.end());
    std::sort(perm.begin(), perm.end());
    do {
        out.emplace_back(perm.begin(), perm.end());
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace chowkit::secondary
