#pragma once

#include <array>
#include <map>
#include <set>
#include <vector>

#include "chowkit/grassmann.hpp"
#include "chowkit/matrix.hpp"
#include "chowkit/subsets.hpp"

namespace chowkit::configurations {

// An ordered configuration of n points in P^{k-1}, columns of a k x n
// matrix of homogeneous coordinates.
struct Configuration {
    int k = 0;
    int n = 0;
    Matrix matrix; // k x n, no zero column

    Configuration() = default;
    Configuration(int k_, int n_, Matrix m) : k(k_), n(n_), matrix(std::move(m)) {
        if (k < 1 || n < 1) throw BadParams("need k, n >= 1");
        if (matrix.rows() != static_cast<std::size_t>(k) ||
            matrix.cols() != static_cast<std::size_t>(n))
            throw BadParams("matrix shape does not match (k,n)");
        for (int j = 0; j < n; ++j) {
            bool zero = true;
            for (int i = 0; i < k; ++i)
                if (matrix(i, j) != 0) zero = false;
            if (zero) throw ZeroColumn("column " + std::to_string(j + 1) + " is zero");
        }
    }
};

// Every j <= k of the points span a subspace of projective dimension j-1.
inline bool is_general_position(const Configuration& c) {
    for (int j = 1; j <= std::min(c.k, c.n); ++j) {
        for (const auto& cols : k_subsets(c.n, j)) {
            std::vector<std::size_t> cidx(cols.size());
            for (std::size_t i = 0; i < cols.size(); ++i) cidx[i] = cols[i] - 1;
            std::vector<std::size_t> ridx(c.k);
            for (int i = 0; i < c.k; ++i) ridx[i] = i;
            if (rank(c.matrix.submatrix(ridx, cidx)) != static_cast<std::size_t>(j)) return false;
        }
    }
    return true;
}

// Points of P^1 as homogeneous pairs; infinity is (1 : 0).
struct ProjPoint1 {
    Rational x, y;
    static ProjPoint1 affine(const Rational& v) { return {v, Rational(1)}; }
    static ProjPoint1 infinity() { return {Rational(1), Rational(0)}; }
    bool is_zero() const { return x == 0 && y == 0; }
};

// r = (x1-x3)(x2-x4) / ((x1-x4)(x2-x3)) in an affine chart, extended
// projectively via 2x2 determinants.
inline Rational cross_ratio(const ProjPoint1& p1, const ProjPoint1& p2, const ProjPoint1& p3,
                            const ProjPoint1& p4) {
    const std::array<ProjPoint1, 4> p{p1, p2, p3, p4};
    for (const auto& q : p)
        if (q.is_zero()) throw BadParams("(0:0) is not a point of P^1");
    auto d = [](const ProjPoint1& a, const ProjPoint1& b) { return a.x * b.y - b.x * a.y; };
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (d(p[i], p[j]) == 0) throw CoincidentPoints();
    return (d(p1, p3) * d(p2, p4)) / (d(p1, p4) * d(p2, p3));
}

// The associated configuration in P^{n-k-1}: a complete system of linear
// relations among the points, its rows assembled so that column i is the
// new point y_i.
inline Configuration associate(const Configuration& c) {
    if (c.n < c.k + 2) throw NotGeneric("association needs n >= k+2");
    if (!is_general_position(c)) throw NotGeneric("configuration is not in general position");
    Matrix rel = kernel_basis(c.matrix); // (n-k) x n
    return Configuration(c.n - c.k, c.n, std::move(rel));
}

inline bool is_circuit(const Matrix& points_as_columns) {
    const std::size_t m = points_as_columns.cols();
    if (m < 2) return false;
    if (rank(points_as_columns) != m - 1) return false;
    for (std::size_t drop = 0; drop < m; ++drop)
        if (rank(points_as_columns.delete_col(drop)) != m - 1) return false;
    return true;
}

struct SixPointNormalForm {
    Rational a, b, c, d;
    // the full 3x3 matrix [[1,1,1],[1,a,b],[1,c,d]]
    Matrix matrix() const {
        Matrix m(3, 3);
        m(0, 0) = 1; m(0, 1) = 1; m(0, 2) = 1;
        m(1, 0) = 1; m(1, 1) = a; m(1, 2) = b;
        m(2, 0) = 1; m(2, 1) = c; m(2, 2) = d;
        return m;
    }
};

// Normalize a generic sextuple in P^2: send the first three points to the
// coordinate triangle, then scale rows and columns so the fourth-to-sixth
// coordinate block has first row and column equal to 1.
inline SixPointNormalForm six_point_normal_form(const Configuration& c) {
    if (c.k != 3 || c.n != 6) throw BadParams("normal form needs 6 points in P^2");
    if (!is_general_position(c)) throw NotGeneric();
    std::vector<std::size_t> rows{0, 1, 2};
    Matrix first3 = c.matrix.submatrix(rows, {0, 1, 2});
    // invert by solving first3 * X = remaining columns
    Matrix b(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b(i, j) = c.matrix(i, j + 3);
    Matrix inv(3, 3);
    for (int j = 0; j < 3; ++j) {
        std::vector<Rational> e(3, Rational(0));
        e[j] = 1;
        auto x = solve(first3, e);
        if (!x) throw NotGeneric("first three points are dependent");
        for (int i = 0; i < 3; ++i) inv(i, j) = (*x)[i];
    }
    Matrix nb = inv * b; // coordinates of points 4..6 in the new frame
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (nb(i, j) == 0) throw NotGeneric("vanishing coordinate after normalization");
    // scale rows so the first column is 1, then columns so the first row is 1
    Matrix s(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s(i, j) = nb(i, j) / nb(i, 0) / (nb(0, j) / nb(0, 0));
    SixPointNormalForm nf;
    nf.a = s(1, 1);
    nf.b = s(1, 2);
    nf.c = s(2, 1);
    nf.d = s(2, 2);
    return nf;
}

inline Rational psi(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    return a * d - b * c + a * b * c + b * c * d - a * c * d - a * b * d;
}

// The 6x6 matrix of degree-2 Veronese lifts (x^2, y^2, z^2, xy, xz, yz) is
// singular exactly when the six points lie on a common conic.
inline bool lies_on_conic(const Configuration& c) {
    if (c.k != 3 || c.n != 6) throw BadParams("conic test needs 6 points in P^2");
    if (!is_general_position(c)) throw NotGeneric();
    Matrix v(6, 6);
    for (int j = 0; j < 6; ++j) {
        const Rational x = c.matrix(0, j), y = c.matrix(1, j), z = c.matrix(2, j);
        v(0, j) = x * x;
        v(1, j) = y * y;
        v(2, j) = z * z;
        v(3, j) = x * y;
        v(4, j) = x * z;
        v(5, j) = y * z;
    }
    return rank(v) < 6;
}

// Projective-plus-torus equivalence of generic configurations, decided by
// matroid equality together with the exchange cross ratios
// p_I p_J / (p_{I-i+j} p_{J-j+i}).
inline bool projectively_equivalent(const Configuration& c1, const Configuration& c2) {
    if (c1.k != c2.k || c1.n != c2.n) return false;
    grassmann::Subspace s1(c1.k, c1.n, c1.matrix);
    grassmann::Subspace s2(c2.k, c2.n, c2.matrix);
    auto p = grassmann::plucker(s1);
    auto q = grassmann::plucker(s2);
    for (const auto& [idx, val] : p.coords)
        if ((val == 0) != (q.coords.at(idx) == 0)) return false;
    auto subsets = k_subsets(c1.n, c1.k);
    for (const auto& I : subsets) {
        if (p.at(I) == 0) continue;
        for (const auto& J : subsets) {
            if (p.at(J) == 0) continue;
            for (int i : I) {
                if (contains(J, i)) continue;
                for (int j : J) {
                    if (contains(I, j) || i == j) continue;
                    Subset I2, J2;
                    std::remove_copy(I.begin(), I.end(), std::back_inserter(I2), i);
                    I2.push_back(j);
                    std::sort(I2.begin(), I2.end());
                    std::remove_copy(J.begin(), J.end(), std::back_inserter(J2), j);
                    J2.push_back(i);
                    std::sort(J2.begin(), J2.end());
                    if (p.at(I2) == 0 || p.at(J2) == 0) continue;
                    if (p.at(I) * p.at(J) * q.at(I2) * q.at(J2) !=
                        q.at(I) * q.at(J) * p.at(I2) * p.at(J2))
                        return false;
                }
            }
        }
    }
    return true;
}

} // namespace chowkit::configurations

namespace chowkit::grassmann {

// Columns of the subspace matrix read as n points of P^{k-1}
// (the matrix picture of the torus-orbit / configuration correspondence).
inline configurations::Configuration gm_configuration(const Subspace& s) {
    return configurations::Configuration(s.k, s.n, s.matrix);
}

} // namespace chowkit::grassmann
