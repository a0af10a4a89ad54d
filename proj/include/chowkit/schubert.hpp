#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "chowkit/errors.hpp"
#include "chowkit/rational.hpp"

namespace chowkit::schubert {

// Partitions are weakly decreasing vectors of positive integers; the empty
// diagram is {}.
using YoungDiagram = std::vector<int>;
using Weight = std::vector<int>; // non-negative, not necessarily sorted

inline YoungDiagram normalize_diagram(YoungDiagram d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
        if (d[i] < d[i + 1]) throw BadParams("parts must be weakly decreasing");
    for (int part : d)
        if (part < 0) throw BadParams("parts must be non-negative");
    return d;
}

inline int weight_of(const YoungDiagram& d) {
    int s = 0;
    for (int p : d) s += p;
    return s;
}

inline bool fits_rectangle(const YoungDiagram& d, int rows, int cols) {
    if (static_cast<int>(d.size()) > rows) return false;
    return d.empty() || d.front() <= cols;
}

inline YoungDiagram conjugate(const YoungDiagram& d) {
    YoungDiagram out;
    if (d.empty()) return out;
    out.assign(d.front(), 0);
    for (int part : d)
        for (int c = 0; c < part; ++c) ++out[c];
    return out;
}

// Heights along the boundary lattice path of the diagram inside the
// rectangle [0,q-p] x [0,p]: ht_i is the ordinate of the end of the i-th
// edge, i = 1..q.
inline std::vector<int> heights(const YoungDiagram& alpha, int p, int q) {
    if (!fits_rectangle(alpha, p, q - p)) throw DoesNotFit();
    std::vector<int> ht(q);
    auto part = [&](int j) { return j <= static_cast<int>(alpha.size()) ? alpha[j - 1] : 0; };
    for (int i = 1; i <= q; ++i) {
        int count = 0;
        for (int j = 1; j <= p; ++j)
            if (part(j) >= q - p + j - i) ++count;
        ht[i - 1] = count;
    }
    return ht;
}

// Hook-content formula: dimension of the irreducible GL(m)-representation
// with highest weight alpha; zero when the diagram has more than m rows.
inline Integer schur_dim(const YoungDiagram& alpha, int m) {
    if (m < 0) throw BadParams("negative dimension");
    if (static_cast<int>(alpha.size()) > m) return 0;
    if (alpha.empty()) return 1;
    const YoungDiagram conj = conjugate(alpha);
    Rational dim = 1;
    for (std::size_t r = 0; r < alpha.size(); ++r) {
        for (int c = 0; c < alpha[r]; ++c) {
            const int arm = alpha[r] - c - 1;
            const int leg = conj[c] - static_cast<int>(r) - 1;
            const int hook = arm + leg + 1;
            dim *= Rational(m + c - static_cast<int>(r), hook);
        }
    }
    if (denominator(dim) != 1) throw BadParams("hook-content product not integral");
    return numerator(dim);
}

// Kostka number: semistandard tableaux of shape alpha and content lambda,
// counted by direct backtracking over cells in row-major order.
inline Integer kostka(const Weight& lambda, const YoungDiagram& alpha) {
    int total = 0;
    for (int v : lambda) {
        if (v < 0) throw BadWeight("negative weight entry");
        total += v;
    }
    if (total != weight_of(alpha)) throw SizeMismatch("|lambda| must equal |alpha|");
    if (alpha.empty()) return 1;
    const int letters = static_cast<int>(lambda.size());
    std::vector<int> remaining = lambda;
    std::vector<std::vector<int>> cell(alpha.size());
    for (std::size_t r = 0; r < alpha.size(); ++r) cell[r].assign(alpha[r], 0);

    Integer count = 0;
    auto rec = [&](auto&& self, std::size_t r, int c) -> void {
        if (r == alpha.size()) {
            ++count;
            return;
        }
        if (c == alpha[r]) {
            self(self, r + 1, 0);
            return;
        }
        const int lo_row = c > 0 ? cell[r][c - 1] : 1;
        const int lo_col = (r > 0 && c < alpha[r - 1]) ? cell[r - 1][c] + 1 : 1;
        for (int x = std::max(lo_row, lo_col); x <= letters; ++x) {
            if (remaining[x - 1] == 0) continue;
            --remaining[x - 1];
            cell[r][c] = x;
            self(self, r, c + 1);
            ++remaining[x - 1];
        }
    };
    rec(rec, 0, 0);
    return count;
}

// Littlewood-Richardson number c^gamma_{alpha,beta}: skew semistandard
// fillings of gamma/alpha with content beta whose row word, read right to
// left and top to bottom, is a lattice word.
inline Integer littlewood_richardson(const YoungDiagram& alpha, const YoungDiagram& beta,
                                     const YoungDiagram& gamma) {
    if (weight_of(gamma) != weight_of(alpha) + weight_of(beta))
        throw SizeMismatch("|gamma| must equal |alpha| + |beta|");
    if (gamma.size() < alpha.size()) return 0;
    for (std::size_t r = 0; r < alpha.size(); ++r)
        if (alpha[r] > gamma[r]) return 0;
    if (beta.empty()) return 1;
    const int letters = static_cast<int>(beta.size());

    // reading order: rows top to bottom, cells right to left
    struct Cell {
        int r, c;
    };
    std::vector<Cell> order;
    for (std::size_t r = 0; r < gamma.size(); ++r) {
        const int start = r < alpha.size() ? alpha[r] : 0;
        for (int c = gamma[r] - 1; c >= start; --c) order.push_back({static_cast<int>(r), c});
    }

    std::vector<int> remaining = beta;
    std::vector<int> seen(letters + 2, 0); // prefix letter counts
    std::vector<std::vector<int>> cell(gamma.size());
    for (std::size_t r = 0; r < gamma.size(); ++r) cell[r].assign(gamma[r], 0);

    Integer count = 0;
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == order.size()) {
            ++count;
            return;
        }
        const auto [r, c] = order[pos];
        int hi = letters;
        if (c + 1 < static_cast<int>(cell[r].size())) hi = std::min(hi, cell[r][c + 1]);
        int lo = 1;
        if (r > 0 && c < static_cast<int>(cell[r - 1].size())) {
            const int above_start = r - 1 < static_cast<int>(alpha.size()) ? alpha[r - 1] : 0;
            if (c >= above_start) lo = std::max(lo, cell[r - 1][c] + 1);
        }
        for (int x = lo; x <= hi; ++x) {
            if (remaining[x - 1] == 0) continue;
            if (x > 1 && seen[x - 1] <= seen[x]) continue; // lattice condition
            --remaining[x - 1];
            ++seen[x];
            cell[r][c] = x;
            self(self, pos + 1);
            cell[r][c] = 0;
            --seen[x];
            ++remaining[x - 1];
        }
    };
    rec(rec, 0);
    return count;
}

// Integer combination of Schubert cycles in a fixed G(p,q); diagrams that
// do not fit the p x (q-p) rectangle are dropped and counted.
struct SchubertClass {
    int p = 0;
    int q = 0;
    std::map<YoungDiagram, Integer> coeffs;
    int dropped_terms = 0;

    void add(const YoungDiagram& d, const Integer& c) {
        if (c == 0) return;
        if (!fits_rectangle(d, p, q - p)) {
            ++dropped_terms;
            return;
        }
        auto it = coeffs.find(d);
        if (it == coeffs.end()) {
            coeffs[d] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs.erase(it);
        }
    }

    bool operator==(const SchubertClass& o) const {
        return p == o.p && q == o.q && coeffs == o.coeffs;
    }
};

inline std::vector<YoungDiagram> diagrams_in_rectangle(int rows, int cols, int cells) {
    std::vector<YoungDiagram> out;
    YoungDiagram cur;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == rows) return;
        for (int part = std::min(remaining, maxpart); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    if (cells == 0) out.push_back({});
    else if (rows > 0 && cols > 0) rec(rec, cells, cols);
    return out;
}

// Image of sigma_alpha (x) sigma_beta under the direct sum map
// G(p1,q1) x G(p2,q2) -> G(p1+p2, q1+q2): the LR expansion, truncated to
// the target rectangle.
inline SchubertClass direct_sum_pushforward(const YoungDiagram& alpha, int p1, int q1,
                                            const YoungDiagram& beta, int p2, int q2) {
    if (!fits_rectangle(alpha, p1, q1 - p1) || !fits_rectangle(beta, p2, q2 - p2))
        throw DoesNotFit("factor diagram does not fit its rectangle");
    SchubertClass out;
    out.p = p1 + p2;
    out.q = q1 + q2;
    const int cells = weight_of(alpha) + weight_of(beta);
    for (const auto& gamma :
         diagrams_in_rectangle(out.p, std::max(weight_of(alpha) + weight_of(beta), 1), cells)) {
        const Integer c = littlewood_richardson(alpha, beta, gamma);
        if (c != 0) out.add(gamma, c);
    }
    return out;
}

inline SchubertClass direct_sum_pushforward(const SchubertClass& a, const SchubertClass& b) {
    SchubertClass out;
    out.p = a.p + b.p;
    out.q = a.q + b.q;
    for (const auto& [alpha, ca] : a.coeffs)
        for (const auto& [beta, cb] : b.coeffs) {
            SchubertClass partial = direct_sum_pushforward(alpha, a.p, a.q, beta, b.p, b.q);
            for (const auto& [gamma, c] : partial.coeffs) out.add(gamma, ca * cb * c);
            out.dropped_terms += partial.dropped_terms;
        }
    return out;
}

// Weight label of a component: lengths of the unit-increment progressions
// into which the index sequence splits. Bijection with W(n-k, k-1).
inline Weight weight_of_subset(const std::vector<int>& indices, int n) {
    const int km1 = static_cast<int>(indices.size());
    if (n < km1 + 2) throw BadIndices("n too small for the index set");
    for (int t = 0; t < km1; ++t) {
        if (indices[t] < 1 || indices[t] > n - 2) throw BadIndices("index out of range");
        if (t > 0 && indices[t] <= indices[t - 1]) throw BadIndices("indices must increase");
    }
    std::vector<int> j;
    for (int x = 1; x <= n - 2; ++x)
        if (!std::binary_search(indices.begin(), indices.end(), x)) j.push_back(x);
    j.push_back(n - 1);
    Weight lambda(j.size());
    int prev = 0;
    for (std::size_t t = 0; t < j.size(); ++t) {
        lambda[t] = j[t] - prev - 1;
        prev = j[t];
    }
    return lambda;
}

inline void check_weight(const Weight& lambda, int k, int n) {
    if (static_cast<int>(lambda.size()) != n - k) throw BadWeight("weight length must be n-k");
    int total = 0;
    for (int v : lambda) {
        if (v < 0) throw BadWeight("negative weight entry");
        total += v;
    }
    if (total != k - 1) throw BadWeight("weight total must be k-1");
}

// Homology class of the component X(lambda) in G(k-1, n-1):
// sum over |alpha| = k-1 of K_{lambda, alpha*} sigma_alpha.
inline SchubertClass component_class(const Weight& lambda, int k, int n) {
    check_weight(lambda, k, n);
    SchubertClass out;
    out.p = k - 1;
    out.q = n - 1;
    for (const auto& alpha : diagrams_in_rectangle(k - 1, n - k, k - 1))
        out.add(alpha, kostka(lambda, conjugate(alpha)));
    return out;
}

// Class of a special Veronese variety in G(k-1, n-1): coefficients are the
// dimensions of the GL(n-k) representations with conjugate highest weight.
inline SchubertClass veronese_class(int k, int n) {
    if (k < 2 || k > n - 2) throw BadParams("need 2 <= k <= n-2");
    SchubertClass out;
    out.p = k - 1;
    out.q = n - 1;
    for (const auto& alpha : diagrams_in_rectangle(k - 1, n - k, k - 1))
        out.add(alpha, schur_dim(conjugate(alpha), n - k));
    return out;
}

// The same class through the hyperplane-section route: alternating sums of
// Schur dimensions of the composite diagram (n-k, alpha_1, .., alpha_{k-1}).
inline SchubertClass klyachko_contour_class(int k, int n) {
    if (k < 2 || k > n - 2) throw BadParams("need 2 <= k <= n-2");
    SchubertClass out;
    out.p = k - 1;
    out.q = n - 1;
    for (const auto& alpha : diagrams_in_rectangle(k - 1, n - k, k - 1)) {
        YoungDiagram composite{n - k};
        for (int part : alpha) composite.push_back(part);
        composite = normalize_diagram(std::move(composite));
        Integer m = 0;
        for (int i = 0; i <= k; ++i) {
            const Integer term = binomial(n, i) * schur_dim(composite, k - i);
            m += (i % 2 == 0) ? term : -term;
        }
        out.add(alpha, m);
    }
    return out;
}

// Klyachko's decomposition of the fundamental class of a Lie complex in
// G(k,n) over diagrams with n-1 cells.
inline SchubertClass lie_complex_class(int k, int n) {
    if (k < 2 || k > n - 2) throw BadParams("need 2 <= k <= n-2");
    SchubertClass out;
    out.p = k;
    out.q = n;
    for (const auto& alpha : diagrams_in_rectangle(k, n - k, n - 1)) {
        Integer m = 0;
        for (int i = 0; i <= k; ++i) {
            const Integer term = binomial(n, i) * schur_dim(alpha, k - i);
            m += (i % 2 == 0) ? term : -term;
        }
        out.add(alpha, m);
    }
    return out;
}

} // namespace chowkit::schubert
