#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "chowkit/grassmann.hpp"
#include "chowkit/polytope.hpp"
#include "chowkit/subsets.hpp"

namespace chowkit::hypersimplex {

// Vertices e_I of Delta(k,n) are identified with their k-subsets I.

struct MatroidPolytope {
    int k = 0;
    int n = 0;
    std::set<Subset> vertices;

    bool operator==(const MatroidPolytope& o) const {
        return k == o.k && n == o.n && vertices == o.vertices;
    }
    bool operator<(const MatroidPolytope& o) const {
        return std::tie(k, n, vertices) < std::tie(o.k, o.n, o.vertices);
    }
};

struct MatroidDecomposition {
    int k = 0;
    int n = 0;
    std::vector<MatroidPolytope> pieces;
};

inline std::vector<Subset> hypersimplex_vertices(int k, int n) {
    if (k < 1 || k > n - 1) throw BadParams("need 1 <= k <= n-1");
    return k_subsets(n, k);
}

inline IntVector indicator(const Subset& s, int n) {
    IntVector v(n, 0);
    for (int i : s) v[i - 1] = 1;
    return v;
}

inline IntRows indicator_rows(const std::set<Subset>& vertices, int n) {
    IntRows rows;
    rows.reserve(vertices.size());
    for (const auto& s : vertices) rows.push_back(indicator(s, n));
    return rows;
}

// Relabeling {1..n} minus {i} -> {1..n-1}, closing the gap.
inline Subset drop_and_relabel(const Subset& s, int i) {
    Subset out;
    for (int x : s) {
        if (x == i) continue;
        out.push_back(x < i ? x : x - 1);
    }
    return out;
}

// The facet Gamma_i^+ (sign +) or Gamma_i^- (sign -) of Delta(k,n),
// returned already relabeled to the smaller hypersimplex it is isomorphic
// to: Delta(k-1,n-1) resp. Delta(k,n-1).
inline MatroidPolytope facet(int k, int n, int i, char sgn) {
    if (i < 1 || i > n) throw BadParams("facet index out of range");
    if (sgn != '+' && sgn != '-') throw BadParams("facet sign must be + or -");
    if (sgn == '+' && k < 2) throw BadParams("Gamma+ needs k > 1");
    if (sgn == '-' && k > n - 2) throw BadParams("Gamma- needs k <= n-2");
    MatroidPolytope p;
    p.n = n - 1;
    p.k = (sgn == '+') ? k - 1 : k;
    for (const auto& s : hypersimplex_vertices(k, n)) {
        const bool has = contains(s, i);
        if ((sgn == '+') == has) p.vertices.insert(drop_and_relabel(s, i));
    }
    return p;
}

// Basis-exchange axiom on a family of k-subsets.
inline bool exchange_axiom(const std::set<Subset>& vertices) {
    if (vertices.empty()) return false;
    const std::size_t k = vertices.begin()->size();
    for (const auto& s : vertices)
        if (s.size() != k) return false;
    for (const auto& a : vertices) {
        for (const auto& b : vertices) {
            for (int x : a) {
                if (contains(b, x)) continue;
                bool found = false;
                for (int y : b) {
                    if (contains(a, y)) continue;
                    Subset c;
                    std::remove_copy(a.begin(), a.end(), std::back_inserter(c), x);
                    c.push_back(y);
                    std::sort(c.begin(), c.end());
                    if (vertices.count(c)) {
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
        }
    }
    return true;
}

// Geometric characterization: all hull edges parallel to some e_i - e_j.
// Quadratic in the vertex count with one exact LP per pair, so reserved
// for small vertex sets.
inline bool edges_are_root_directions(const std::set<Subset>& vertices, int n) {
    IntRows pts = indicator_rows(vertices, n);
    for (std::size_t a = 0; a < pts.size(); ++a) {
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            if (!is_hull_edge(pts, a, b)) continue;
            int plus = 0, minus = 0;
            for (int j = 0; j < n; ++j) {
                const Integer d = pts[a][j] - pts[b][j];
                if (d == 1) ++plus;
                else if (d == -1) ++minus;
                else if (d != 0) return false;
            }
            if (plus != 1 || minus != 1) return false;
        }
    }
    return true;
}

inline bool is_matroid_polytope(const MatroidPolytope& p) {
    if (p.vertices.empty()) return false;
    for (const auto& s : p.vertices) {
        if (static_cast<int>(s.size()) != p.k) return false;
        if (s.front() < 1 || s.back() > p.n) return false;
    }
    const bool exchange = exchange_axiom(p.vertices);
    if (p.vertices.size() <= 12) {
        // the two characterizations agree; cross-check on small inputs
        return exchange && edges_are_root_directions(p.vertices, p.n);
    }
    return exchange;
}

inline MatroidPolytope matroid_polytope_of(const grassmann::Subspace& s) {
    MatroidPolytope p;
    p.k = s.k;
    p.n = s.n;
    p.vertices = grassmann::matroid_bases(s);
    return p;
}

inline int polytope_dimension(const MatroidPolytope& p) {
    IntRows pts = indicator_rows(p.vertices, p.n);
    return lattice_chart(pts).dim;
}

inline Integer normalized_volume(const MatroidPolytope& p) {
    IntRows pts = indicator_rows(p.vertices, p.n);
    LatticeChart chart = lattice_chart(pts);
    if (chart.dim != p.n - 1)
        throw NotFullDimensional("polytope is not full-dimensional in the hypersimplex");
    return placing_volume(chart.coords, chart.dim);
}

inline Integer hypersimplex_volume(int k, int n) {
    MatroidPolytope full;
    full.k = k;
    full.n = n;
    for (const auto& s : hypersimplex_vertices(k, n)) full.vertices.insert(s);
    return normalized_volume(full);
}

inline bool is_matroid_decomposition(const MatroidDecomposition& d) {
    if (d.pieces.empty()) return false;
    Integer total = 0;
    for (const auto& p : d.pieces) {
        if (p.k != d.k || p.n != d.n) return false;
        if (!is_matroid_polytope(p)) return false;
        IntRows pts = indicator_rows(p.vertices, p.n);
        LatticeChart chart = lattice_chart(pts);
        if (chart.dim != d.n - 1) return false;
        total += placing_volume(chart.coords, chart.dim);
    }
    if (total != hypersimplex_volume(d.k, d.n)) return false;
    for (std::size_t a = 0; a < d.pieces.size(); ++a) {
        for (std::size_t b = a + 1; b < d.pieces.size(); ++b) {
            if (d.pieces[a].vertices == d.pieces[b].vertices) return false;
            if (!common_face(indicator_rows(d.pieces[a].vertices, d.n),
                             indicator_rows(d.pieces[b].vertices, d.n)))
                return false;
        }
    }
    return true;
}

// Restriction of a decomposition to the facet Gamma_i^sign, relabeled to
// the smaller hypersimplex; pieces whose intersection with the facet is
// not full-dimensional there are dropped.
inline MatroidDecomposition restrict_to_facet(const MatroidDecomposition& d, int i, char sgn) {
    if (i < 1 || i > d.n) throw BadParams("facet index out of range");
    MatroidDecomposition out;
    out.n = d.n - 1;
    out.k = (sgn == '+') ? d.k - 1 : d.k;
    if (out.k < 1 || out.k > out.n - 1) throw BadParams("facet is not a hypersimplex");
    std::set<std::set<Subset>> seen;
    for (const auto& p : d.pieces) {
        MatroidPolytope q;
        q.k = out.k;
        q.n = out.n;
        for (const auto& s : p.vertices) {
            const bool has = contains(s, i);
            if ((sgn == '+') == has) q.vertices.insert(drop_and_relabel(s, i));
        }
        if (q.vertices.empty()) continue;
        if (polytope_dimension(q) != out.n - 1) continue;
        if (seen.insert(q.vertices).second) out.pieces.push_back(std::move(q));
    }
    return out;
}

} // namespace chowkit::hypersimplex
