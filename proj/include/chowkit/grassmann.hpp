#pragma once

#include <map>
#include <set>
#include <vector>

#include "chowkit/errors.hpp"
#include "chowkit/matrix.hpp"
#include "chowkit/subsets.hpp"

namespace chowkit::grassmann {

// A point of G(k,n) carried as the row space of a k x n matrix of full rank.
struct Subspace {
    int k = 0;
    int n = 0;
    Matrix matrix; // k x n, rank k

    Subspace() = default;
    Subspace(int k_, int n_, Matrix m) : k(k_), n(n_), matrix(std::move(m)) {
        if (k < 1 || k >= n) throw BadParams("need 1 <= k < n");
        if (matrix.rows() != static_cast<std::size_t>(k) ||
            matrix.cols() != static_cast<std::size_t>(n))
            throw BadParams("matrix shape does not match (k,n)");
        if (rank(matrix) != static_cast<std::size_t>(k))
            throw BadParams("matrix rows are dependent");
    }

    // Canonical representative: reduced row echelon form. Equality of
    // subspaces, not of matrices.
    Matrix canonical() const { return rref(matrix); }
    bool same_subspace(const Subspace& o) const {
        return k == o.k && n == o.n && canonical() == o.canonical();
    }
};

struct PluckerVector {
    int k = 0;
    int n = 0;
    std::map<Subset, Rational> coords; // keyed by k-subsets of {1..n}, lex order

    const Rational& at(const Subset& s) const {
        auto it = coords.find(s);
        if (it == coords.end()) throw BadIndices("not a k-subset key");
        return it->second;
    }
};

inline PluckerVector plucker(const Subspace& s) {
    PluckerVector p;
    p.k = s.k;
    p.n = s.n;
    std::vector<std::size_t> all_rows(s.k);
    for (int i = 0; i < s.k; ++i) all_rows[i] = i;
    for (const auto& subset : k_subsets(s.n, s.k)) {
        std::vector<std::size_t> cols(subset.size());
        for (std::size_t i = 0; i < subset.size(); ++i) cols[i] = subset[i] - 1;
        p.coords[subset] = minor_det(s.matrix, all_rows, cols);
    }
    return p;
}

// The 3-term quadratic relations; only k=2 is checked explicitly, higher k
// vectors are produced from matrices and satisfy them by construction.
inline bool satisfies_plucker_relations_k2(const PluckerVector& p) {
    if (p.k != 2) return true;
    for (const auto& q : k_subsets(p.n, 4)) {
        const int i = q[0], j = q[1], l = q[2], m = q[3];
        const Rational lhs = p.at({i, j}) * p.at({l, m}) - p.at({i, l}) * p.at({j, m}) +
                             p.at({i, m}) * p.at({j, l});
        if (lhs != 0) return false;
    }
    return true;
}

inline bool is_generic(const Subspace& s) {
    const PluckerVector p = plucker(s);
    for (const auto& [subset, value] : p.coords)
        if (value == 0) return false;
    return true;
}

inline std::set<Subset> matroid_bases(const Subspace& s) {
    std::set<Subset> bases;
    for (const auto& [subset, value] : plucker(s).coords)
        if (value != 0) bases.insert(subset);
    return bases;
}

// Intersection map: L -> J_i^{-1}(L), a point of G(k-1, n-1). Fails with
// DimensionDrop when the intersection with {x_i = 0} has the wrong
// dimension (the map does not extend there).
inline Subspace intersect_coord_hyperplane(const Subspace& s, int i) {
    if (i < 1 || i > s.n) throw IndexOutOfRange("coordinate index");
    // rows of the kernel of the i-th coordinate functional on the row space
    Matrix coord(1, s.k);
    for (int r = 0; r < s.k; ++r) coord(0, r) = s.matrix(r, i - 1);
    Matrix combos = kernel_basis(coord); // combinations with zero i-th coord
    if (combos.rows() != static_cast<std::size_t>(s.k - 1) || s.k == 1)
        throw DimensionDrop("intersection dimension is not k-1");
    Matrix cut = combos * s.matrix;
    return Subspace(s.k - 1, s.n - 1, cut.delete_col(i - 1));
}

// Projection map: delete the i-th coordinate. DimensionDrop when the rank
// falls.
inline Subspace project_away(const Subspace& s, int i) {
    if (i < 1 || i > s.n) throw IndexOutOfRange("coordinate index");
    Matrix m = s.matrix.delete_col(i - 1);
    if (rank(m) != static_cast<std::size_t>(s.k))
        throw DimensionDrop("projection drops the rank");
    return Subspace(s.k, s.n - 1, std::move(m));
}

} // namespace chowkit::grassmann
