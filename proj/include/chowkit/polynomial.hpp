#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "chowkit/errors.hpp"
#include "chowkit/rational.hpp"

namespace chowkit {

// Sparse multivariate polynomial over Q. Exponent vectors always have
// length num_vars; zero coefficients are never stored.
class MultiPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    MultiPoly() : num_vars_(0) {}
    explicit MultiPoly(int num_vars) : num_vars_(num_vars) {}

    static MultiPoly constant(int num_vars, const Rational& c) {
        MultiPoly p(num_vars);
        if (c != 0) p.terms_[Exponents(num_vars, 0)] = c;
        return p;
    }

    static MultiPoly variable(int num_vars, int index, const Rational& coeff = 1) {
        if (index < 0 || index >= num_vars) throw IndexOutOfRange("variable index");
        MultiPoly p(num_vars);
        if (coeff != 0) {
            Exponents e(num_vars, 0);
            e[index] = 1;
            p.terms_[e] = coeff;
        }
        return p;
    }

    static MultiPoly linear_form(const std::vector<Rational>& coeffs) {
        MultiPoly p(static_cast<int>(coeffs.size()));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) continue;
            Exponents e(coeffs.size(), 0);
            e[i] = 1;
            p.terms_[e] = coeffs[i];
        }
        return p;
    }

    int num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Rational& c) {
        if (static_cast<int>(e.size()) != num_vars_) throw SizeMismatch("exponent length");
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly operator+(const MultiPoly& o) const {
        check_vars(o);
        MultiPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    MultiPoly operator-(const MultiPoly& o) const {
        check_vars(o);
        MultiPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }

    MultiPoly operator-() const {
        MultiPoly r(num_vars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    MultiPoly operator*(const MultiPoly& o) const {
        check_vars(o);
        MultiPoly r(num_vars_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Exponents e(num_vars_);
                for (int i = 0; i < num_vars_; ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }

    MultiPoly operator*(const Rational& c) const {
        MultiPoly r(num_vars_);
        if (c == 0) return r;
        for (const auto& [e, coeff] : terms_) r.terms_[e] = coeff * c;
        return r;
    }

    bool operator==(const MultiPoly& o) const {
        return num_vars_ == o.num_vars_ && terms_ == o.terms_;
    }

    Rational eval(const std::vector<Rational>& x) const {
        if (static_cast<int>(x.size()) != num_vars_) throw SizeMismatch("evaluation point length");
        Rational out = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < num_vars_; ++i)
                for (int p = 0; p < e[i]; ++p) t *= x[i];
            out += t;
        }
        return out;
    }

    int total_degree() const {
        int d = -1; // degree of the zero polynomial by convention
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int v : e) s += v;
            if (s > d) d = s;
        }
        return d;
    }

    bool is_homogeneous() const {
        int d = -2;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int v : e) s += v;
            if (d == -2) d = s;
            else if (s != d) return false;
        }
        return true;
    }

private:
    void check_vars(const MultiPoly& o) const {
        if (num_vars_ != o.num_vars_) throw SizeMismatch("num_vars mismatch");
    }

    int num_vars_;
    TermMap terms_;
};

// Symbolic determinant by expansion along the first remaining row, with
// memoization on the set of unused columns. Matrices here stay small
// (at most ~8x8), so a bitmask key suffices.
inline MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw SizeMismatch("poly_det needs a square matrix");
    if (n == 0) return MultiPoly::constant(0, 1);
    if (n > 20) throw TooLarge("poly_det limited to 20x20");
    const int vars = m[0][0].num_vars();

    std::unordered_map<unsigned long, MultiPoly> memo;
    const unsigned long full = (n >= 64) ? ~0ul : ((1ul << n) - 1);

    auto rec = [&](auto&& self, unsigned long colmask, std::size_t row) -> MultiPoly {
        if (row == n) return MultiPoly::constant(vars, 1);
        auto it = memo.find(colmask);
        if (it != memo.end()) return it->second;
        MultiPoly acc(vars);
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(colmask & (1ul << c))) continue;
            if (!m[row][c].is_zero()) {
                MultiPoly sub = self(self, colmask & ~(1ul << c), row + 1);
                MultiPoly term = m[row][c] * sub;
                acc = (sign > 0) ? acc + term : acc - term;
            }
            sign = -sign;
        }
        memo.emplace(colmask, acc);
        return acc;
    };
    return rec(rec, full, 0);
}

} // namespace chowkit
