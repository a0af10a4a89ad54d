#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "chowkit/lattice.hpp"
#include "chowkit/linprog.hpp"
#include "chowkit/matrix.hpp"

namespace chowkit {

// Geometric predicates on finite integer point sets. Volumes are lattice
// normalized: callers pass chart coordinates from lattice_chart, where the
// induced lattice is Z^dim and a unimodular simplex has volume 1.

inline int orientation_sign(const IntRows& coords,
                            const std::vector<std::size_t>& base,
                            std::size_t apex) {
    const std::size_t d = base.size();
    Matrix m(d, d);
    for (std::size_t i = 1; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            m(i - 1, j) = Rational(coords[base[i]][j] - coords[base[0]][j]);
    for (std::size_t j = 0; j < d; ++j)
        m(d - 1, j) = Rational(coords[apex][j] - coords[base[0]][j]);
    return sign(det(m));
}

inline Integer simplex_volume(const IntRows& coords,
                              const std::vector<std::size_t>& verts) {
    const std::size_t d = verts.size() - 1;
    Matrix m(d, d);
    for (std::size_t i = 1; i <= d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            m(i - 1, j) = Rational(coords[verts[i]][j] - coords[verts[0]][j]);
    Rational v = abs(det(m));
    return numerator(v); // chart determinants are integers
}

// Lattice volume of the convex hull by incremental placing: points are
// inserted one at a time, coning over the facets visible from the new
// point. Points interior to the running hull contribute nothing.
inline Integer placing_volume(const IntRows& coords, int dim) {
    const std::size_t n = coords.size();
    if (dim <= 0) return n == 0 ? 0 : 1;
    const std::size_t d = static_cast<std::size_t>(dim);

    // greedy affine basis for the seed simplex
    std::vector<std::size_t> seed{0};
    std::vector<bool> used(n, false);
    used[0] = true;
    for (std::size_t i = 1; i < n && seed.size() < d + 1; ++i) {
        std::vector<std::size_t> trial = seed;
        trial.push_back(i);
        Matrix m(trial.size() - 1, d);
        for (std::size_t r = 1; r < trial.size(); ++r)
            for (std::size_t c = 0; c < d; ++c)
                m(r - 1, c) = Rational(coords[trial[r]][c] - coords[trial[0]][c]);
        if (rank(m) == trial.size() - 1) {
            seed.push_back(i);
            used[i] = true;
        }
    }
    if (seed.size() != d + 1) throw NotFullDimensional("point set spans less than the stated dimension");

    std::vector<std::vector<std::size_t>> simplices{seed};

    auto boundary_facets = [&]() {
        // facet -> (owner simplex, opposite vertex); shared facets drop out
        std::map<std::vector<std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>> count;
        for (std::size_t s = 0; s < simplices.size(); ++s) {
            const auto& verts = simplices[s];
            for (std::size_t skip = 0; skip < verts.size(); ++skip) {
                std::vector<std::size_t> f;
                for (std::size_t i = 0; i < verts.size(); ++i)
                    if (i != skip) f.push_back(verts[i]);
                count[f].emplace_back(s, verts[skip]);
            }
        }
        std::vector<std::pair<std::vector<std::size_t>, std::size_t>> out;
        for (const auto& [f, owners] : count)
            if (owners.size() == 1) out.emplace_back(f, owners[0].second);
        return out;
    };

    for (std::size_t p = 0; p < n; ++p) {
        if (used[p]) continue;
        auto facets = boundary_facets();
        for (const auto& [f, opposite] : facets) {
            const int sp = orientation_sign(coords, f, p);
            if (sp == 0) continue;
            const int sw = orientation_sign(coords, f, opposite);
            if (sp == -sw) {
                auto simplex = f;
                simplex.push_back(p);
                simplices.push_back(std::move(simplex));
            }
        }
    }

    Integer vol = 0;
    for (const auto& s : simplices) vol += simplex_volume(coords, s);
    return vol;
}

namespace detail {

inline std::vector<Rational> point_row(const IntVector& p) {
    std::vector<Rational> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = Rational(p[i]);
    return out;
}

} // namespace detail

// Is conv(P) cap conv(Q) a common face of both? Decided exactly: we search
// for an affine functional vanishing on the shared vertices, strictly
// negative on the rest of P and strictly positive on the rest of Q.
inline bool common_face(const IntRows& p, const IntRows& q) {
    if (p.empty() || q.empty()) return true;
    const std::size_t m = p[0].size();
    std::set<IntVector> qset(q.begin(), q.end());
    std::set<IntVector> pset(p.begin(), p.end());

    std::vector<Constraint> cons;
    auto add = [&](const IntVector& v, Rel rel, const Rational& rhs) {
        std::vector<Rational> a = detail::point_row(v);
        a.push_back(1); // constant term
        cons.push_back(make_constraint(std::move(a), rel, rhs));
    };
    for (const auto& v : pset) {
        if (qset.count(v)) add(v, Rel::Eq, 0);
        else add(v, Rel::LessEq, -1);
    }
    for (const auto& v : qset) {
        if (!pset.count(v)) add(v, Rel::GreaterEq, 1);
    }
    return find_feasible(m + 1, cons).has_value();
}

inline bool is_hull_vertex(const IntRows& pts, std::size_t idx) {
    const std::size_t m = pts[0].size();
    std::vector<Constraint> cons;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i == idx || pts[i] == pts[idx]) continue;
        // h(p_idx) - h(p_i) >= 1
        std::vector<Rational> a(m + 1, Rational(0));
        for (std::size_t j = 0; j < m; ++j) a[j] = Rational(pts[idx][j] - pts[i][j]);
        cons.push_back(make_constraint(std::move(a), Rel::GreaterEq, 1));
    }
    return find_feasible(m + 1, cons).has_value();
}

inline bool is_hull_edge(const IntRows& pts, std::size_t i, std::size_t j) {
    const std::size_t m = pts[0].size();
    std::vector<Constraint> cons;
    auto add = [&](std::size_t idx, Rel rel, const Rational& rhs) {
        std::vector<Rational> a = detail::point_row(pts[idx]);
        a.push_back(1);
        cons.push_back(make_constraint(std::move(a), rel, rhs));
    };
    add(i, Rel::Eq, 0);
    add(j, Rel::Eq, 0);
    for (std::size_t t = 0; t < pts.size(); ++t) {
        if (t == i || t == j) continue;
        add(t, Rel::LessEq, -1);
    }
    return find_feasible(m + 1, cons).has_value();
}

} // namespace chowkit
