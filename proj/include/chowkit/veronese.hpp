#pragma once

#include <map>
#include <vector>

#include "chowkit/configurations.hpp"
#include "chowkit/grassmann.hpp"
#include "chowkit/matrix.hpp"
#include "chowkit/polynomial.hpp"
#include "chowkit/subsets.hpp"

namespace chowkit::veronese {

// n linear forms f_i = sum_j a_ij z_j on C^k, in general position: the
// hyperplane arrangement whose logarithmic forms cut out the special
// Veronese variety.
struct HyperplaneArrangement {
    int k = 0;
    int n = 0;
    Matrix coeffs; // n x k, row i = coefficients of f_i

    HyperplaneArrangement() = default;
    HyperplaneArrangement(int k_, int n_, Matrix a) : k(k_), n(n_), coeffs(std::move(a)) {
        if (k < 1 || n < k) throw BadParams("need 1 <= k <= n");
        if (coeffs.rows() != static_cast<std::size_t>(n) ||
            coeffs.cols() != static_cast<std::size_t>(k))
            throw BadParams("coefficient matrix must be n x k");
    }

    bool general_position() const {
        configurations::Configuration c(k, n, coeffs.transpose());
        return configurations::is_general_position(c);
    }

    Rational form_at(int i, const std::vector<Rational>& z) const {
        Rational v = 0;
        for (int j = 0; j < k; ++j) v += coeffs(i, j) * z[j];
        return v;
    }
};

// A point of G(k-1, h), h = C^n / C(1,..,1), carried as a k x n matrix
// whose row space contains (1,...,1).
struct QuotientSubspace {
    int k = 0;
    int n = 0;
    Matrix matrix;

    QuotientSubspace() = default;
    QuotientSubspace(int k_, int n_, Matrix m) : k(k_), n(n_), matrix(std::move(m)) {
        if (matrix.rows() != static_cast<std::size_t>(k) ||
            matrix.cols() != static_cast<std::size_t>(n))
            throw BadParams("matrix shape does not match (k,n)");
        if (rank(matrix) != static_cast<std::size_t>(k)) throw BadParams("rows are dependent");
        if (!contains_all_ones()) throw BadParams("(1,...,1) must lie in the row space");
    }

    bool contains_all_ones() const {
        Matrix ext(k + 1, n);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) ext(i, j) = matrix(i, j);
        for (int j = 0; j < n; ++j) ext(k, j) = 1;
        return rank(ext) == static_cast<std::size_t>(k);
    }

    Matrix canonical() const { return rref(matrix); }
    bool same_subspace(const QuotientSubspace& o) const {
        return k == o.k && n == o.n && canonical() == o.canonical();
    }
};

// Logarithmic Gauss map at z: row space of N(z) with N(j,i) = a_ij / f_i(z).
// The Euler identity z . N(z) = (1,...,1) puts the all-ones vector in the
// row space.
inline QuotientSubspace log_gauss(const HyperplaneArrangement& arr,
                                  const std::vector<Rational>& z) {
    if (static_cast<int>(z.size()) != arr.k) throw SizeMismatch("point has wrong dimension");
    Matrix m(arr.k, arr.n);
    for (int i = 0; i < arr.n; ++i) {
        const Rational fi = arr.form_at(i, z);
        if (fi == 0) throw OnArrangement("point lies on hyperplane " + std::to_string(i + 1));
        for (int j = 0; j < arr.k; ++j) m(j, i) = arr.coeffs(i, j) / fi;
    }
    return QuotientSubspace(arr.k, arr.n, std::move(m));
}

// Symbolic Plucker coordinates of the Gauss image:
// P_I(z) = det(a_I) * prod_{i not in I} f_i(z), homogeneous of degree n-k.
inline std::map<Subset, MultiPoly> plucker_polys(const HyperplaneArrangement& arr) {
    std::map<Subset, MultiPoly> out;
    std::vector<MultiPoly> forms;
    for (int i = 0; i < arr.n; ++i) {
        std::vector<Rational> c(arr.k);
        for (int j = 0; j < arr.k; ++j) c[j] = arr.coeffs(i, j);
        forms.push_back(MultiPoly::linear_form(c));
    }
    std::vector<std::size_t> allcols(arr.k);
    for (int j = 0; j < arr.k; ++j) allcols[j] = j;
    for (const auto& I : k_subsets(arr.n, arr.k)) {
        std::vector<std::size_t> rows(I.size());
        for (std::size_t t = 0; t < I.size(); ++t) rows[t] = I[t] - 1;
        MultiPoly p = MultiPoly::constant(arr.k, minor_det(arr.coeffs, rows, allcols));
        for (int i = 1; i <= arr.n; ++i)
            if (!contains(I, i)) p = p * forms[i - 1];
        out.emplace(I, std::move(p));
    }
    return out;
}

// The limit of the Gauss map at the stratum M_{i_1} cap ... cap M_{i_{k-1}}:
// the coordinate subspace spanned by (1,...,1) and the e_{i_nu}.
inline QuotientSubspace marked_point(const HyperplaneArrangement& arr,
                                     const Subset& indices) {
    if (static_cast<int>(indices.size()) != arr.k - 1) throw BadIndices("need k-1 distinct indices");
    for (int i : indices)
        if (i < 1 || i > arr.n) throw BadIndices("index out of range");
    Matrix m(arr.k, arr.n);
    for (int j = 0; j < arr.n; ++j) m(0, j) = 1;
    for (std::size_t t = 0; t < indices.size(); ++t) m(t + 1, indices[t] - 1) = 1;
    return QuotientSubspace(arr.k, arr.n, std::move(m));
}

// The intersection point of the k-1 hyperplanes, as a point of P^{k-1}.
inline std::vector<Rational> stratum_point(const HyperplaneArrangement& arr,
                                           const Subset& indices) {
    if (static_cast<int>(indices.size()) != arr.k - 1) throw BadIndices("need k-1 indices");
    Matrix sys(arr.k - 1, arr.k);
    for (std::size_t t = 0; t < indices.size(); ++t)
        for (int j = 0; j < arr.k; ++j) sys(t, j) = arr.coeffs(indices[t] - 1, j);
    Matrix kern = kernel_basis(sys);
    if (kern.rows() != 1) throw NotGeneric("hyperplanes do not meet in a single point");
    return kern.row(0);
}

// Chart shape used by the Steiner matrix: forms 1..k-1 are the coordinates
// z_1..z_{k-1} and form n is the infinite hyperplane z_k, up to scale.
inline void require_chart_form(const HyperplaneArrangement& arr) {
    auto is_coord = [&](int row, int var) {
        if (arr.coeffs(row, var) == 0) return false;
        for (int j = 0; j < arr.k; ++j)
            if (j != var && arr.coeffs(row, j) != 0) return false;
        return true;
    };
    for (int i = 0; i < arr.k - 1; ++i)
        if (!is_coord(i, i)) throw ChartMismatch("form " + std::to_string(i + 1) + " must be z_" + std::to_string(i + 1));
    if (!is_coord(arr.n - 1, arr.k - 1)) throw ChartMismatch("last form must be the infinite hyperplane z_k");
}

// (n-k) x (n-1) matrix of linear forms whose kernel at z is the Gauss image
// in the chart y_i = t_i - t_n: row for hyperplane j has -a_{j,nu} z_nu in
// the first k-1 columns and F_j(z) in column j.
inline std::vector<std::vector<MultiPoly>> steiner_matrix(const HyperplaneArrangement& arr) {
    require_chart_form(arr);
    if (arr.n < arr.k + 1) throw BadParams("need n >= k+1");
    const int k = arr.k, n = arr.n;
    std::vector<std::vector<MultiPoly>> m(n - k, std::vector<MultiPoly>(n - 1, MultiPoly(k)));
    for (int j = k; j <= n - 1; ++j) { // hyperplane index, 1-based row j
        const int r = j - k;
        for (int nu = 1; nu <= k - 1; ++nu)
            m[r][nu - 1] = MultiPoly::variable(k, nu - 1, -arr.coeffs(j - 1, nu - 1));
        std::vector<Rational> c(k);
        for (int t = 0; t < k; ++t) c[t] = arr.coeffs(j - 1, t);
        m[r][j - 1] = MultiPoly::linear_form(c);
    }
    return m;
}

inline Matrix steiner_matrix_at(const HyperplaneArrangement& arr, const std::vector<Rational>& z) {
    auto sym = steiner_matrix(arr);
    Matrix out(sym.size(), sym.empty() ? 0 : sym[0].size());
    for (std::size_t i = 0; i < sym.size(); ++i)
        for (std::size_t j = 0; j < sym[i].size(); ++j) out(i, j) = sym[i][j].eval(z);
    return out;
}

inline void require_normalized(const HyperplaneArrangement& arr) {
    auto is_coord = [&](int row, int var) {
        if (arr.coeffs(row, var) == 0) return false;
        for (int j = 0; j < arr.k; ++j)
            if (j != var && arr.coeffs(row, j) != 0) return false;
        return true;
    };
    for (int i = 0; i < arr.k; ++i)
        if (!is_coord(i, i)) throw NotNormalized("form " + std::to_string(i + 1) + " must be z_" + std::to_string(i + 1));
}

// The sweep in determinantal form: entries a_{ji} (t_j - t_i), rows
// i = 1..k, columns j = k+1..n. Rank < k exactly on the union of the
// Gauss images.
inline Matrix sweep_matrix(const HyperplaneArrangement& arr, const std::vector<Rational>& t) {
    require_normalized(arr);
    if (arr.k > arr.n - arr.k) throw BadParams("sweep form needs k <= n-k");
    if (static_cast<int>(t.size()) != arr.n) throw SizeMismatch("t must have n coordinates");
    Matrix m(arr.k, arr.n - arr.k);
    for (int i = 1; i <= arr.k; ++i)
        for (int j = arr.k + 1; j <= arr.n; ++j)
            m(i - 1, j - arr.k - 1) = arr.coeffs(j - 1, i - 1) * (t[j - 1] - t[i - 1]);
    return m;
}

inline bool on_sweep(const HyperplaneArrangement& arr, const std::vector<Rational>& t) {
    return rank(sweep_matrix(arr, t)) < static_cast<std::size_t>(arr.k);
}

// Coefficient matrix of the system t2-t4 = a(t2-t5) = b(t2-t6),
// t3-t4 = c(t3-t5) = d(t3-t6) on (t1..t6).
inline Matrix tangent_system(const Rational& a, const Rational& b, const Rational& c,
                             const Rational& d) {
    Matrix m(4, 6);
    m(0, 1) = 1 - a; m(0, 3) = -1; m(0, 4) = a;
    m(1, 1) = 1 - b; m(1, 3) = -1; m(1, 5) = b;
    m(2, 2) = 1 - c; m(2, 3) = -1; m(2, 4) = c;
    m(3, 2) = 1 - d; m(3, 3) = -1; m(3, 5) = d;
    return m;
}

inline std::size_t tangent_system_rank(const Rational& a, const Rational& b, const Rational& c,
                                       const Rational& d) {
    return rank(tangent_system(a, b, c, d));
}

// Symbolic version in the variables (a,b,c,d), for the minor identities.
inline std::vector<std::vector<MultiPoly>> tangent_system_symbolic() {
    auto var = [](int i) { return MultiPoly::variable(4, i); };
    auto cst = [](int v) { return MultiPoly::constant(4, v); };
    std::vector<std::vector<MultiPoly>> m(4, std::vector<MultiPoly>(6, MultiPoly(4)));
    m[0][1] = cst(1) - var(0); m[0][3] = cst(-1); m[0][4] = var(0);
    m[1][1] = cst(1) - var(1); m[1][3] = cst(-1); m[1][5] = var(1);
    m[2][2] = cst(1) - var(2); m[2][3] = cst(-1); m[2][4] = var(2);
    m[3][2] = cst(1) - var(3); m[3][3] = cst(-1); m[3][5] = var(3);
    return m;
}

// lambda with p_12 p_34 + lambda p_13 p_24 = 0: the parameter of the
// tetrahedral complex through a generic line in P^3.
inline Rational tetrahedral_ratio(const grassmann::Subspace& s) {
    if (s.k != 2 || s.n != 4) throw BadParams("tetrahedral complexes live in G(2,4)");
    if (!grassmann::is_generic(s)) throw NotGeneric();
    auto p = grassmann::plucker(s);
    return -(p.at({1, 2}) * p.at({3, 4})) / (p.at({1, 3}) * p.at({2, 4}));
}

} // namespace chowkit::veronese
