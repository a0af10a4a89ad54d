#pragma once

#include <optional>
#include <vector>

#include "chowkit/errors.hpp"
#include "chowkit/rational.hpp"

namespace chowkit {

// Exact feasibility solver: phase-1 simplex over Q with Bland's rule.
// Variables are free (internally split into positive parts); constraints
// are a-dot-x REL b.

enum class Rel { LessEq, GreaterEq, Eq };

struct Constraint {
    std::vector<Rational> a;
    Rel rel = Rel::LessEq;
    Rational b = 0;
};

inline Constraint make_constraint(std::vector<Rational> a, Rel rel, Rational b) {
    return Constraint{std::move(a), rel, std::move(b)};
}

namespace detail {

struct Tableau {
    // basis[i] = variable index basic in row i; column layout:
    // [vars | slacks | artificials | rhs]
    std::vector<std::vector<Rational>> t;
    std::vector<std::size_t> basis;
    std::size_t ncols = 0;
};

} // namespace detail

inline std::optional<std::vector<Rational>> find_feasible(
    std::size_t nvars, const std::vector<Constraint>& constraints) {
    const std::size_t m = constraints.size();
    const std::size_t split = 2 * nvars;

    std::size_t nslack = 0;
    for (const auto& c : constraints)
        if (c.rel != Rel::Eq) ++nslack;

    const std::size_t nart = m;
    const std::size_t total = split + nslack + nart;

    // rows: a.(u - v) + slack = b, all entries with b >= 0
    std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(total + 1, Rational(0)));
    std::vector<std::size_t> basis(m);

    std::size_t slack_at = split;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = constraints[i];
        if (c.a.size() != nvars) throw SizeMismatch("constraint width");
        std::vector<Rational> row(total + 1, Rational(0));
        for (std::size_t j = 0; j < nvars; ++j) {
            row[2 * j] = c.a[j];
            row[2 * j + 1] = -c.a[j];
        }
        if (c.rel == Rel::LessEq) row[slack_at++] = 1;
        else if (c.rel == Rel::GreaterEq) row[slack_at++] = -1;
        row[total] = c.b;
        if (row[total] < 0)
            for (auto& x : row) x = -x;
        row[split + nslack + i] = 1; // artificial
        t[i] = std::move(row);
        basis[i] = split + nslack + i;
    }

    // objective row: minimize sum of artificials, expressed over the basis
    for (std::size_t j = 0; j <= total; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < m; ++i) s += t[i][j];
        t[m][j] = -s;
    }
    for (std::size_t i = 0; i < m; ++i) t[m][split + nslack + i] = 0;

    auto pivot = [&](std::size_t pr, std::size_t pc) {
        const Rational p = t[pr][pc];
        for (std::size_t j = 0; j <= total; ++j) t[pr][j] /= p;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == pr || t[i][pc] == 0) continue;
            const Rational f = t[i][pc];
            for (std::size_t j = 0; j <= total; ++j) t[i][j] -= f * t[pr][j];
        }
        basis[pr] = pc;
    };

    while (true) {
        // Bland: entering = smallest column with negative reduced cost
        std::size_t pc = total;
        for (std::size_t j = 0; j < total; ++j) {
            if (t[m][j] < 0) {
                pc = j;
                break;
            }
        }
        if (pc == total) break; // optimal
        // ratio test, ties broken by smallest basic variable index
        std::size_t pr = m;
        Rational best = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][pc] <= 0) continue;
            const Rational ratio = t[i][total] / t[i][pc];
            if (pr == m || ratio < best || (ratio == best && basis[i] < basis[pr])) {
                pr = i;
                best = ratio;
            }
        }
        if (pr == m) break; // phase-1 objective is bounded; cannot happen
        pivot(pr, pc);
    }

    // feasible iff the artificial total is zero
    if (t[m][total] != 0) return std::nullopt;

    std::vector<Rational> x(nvars, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < split) {
            const std::size_t v = basis[i] / 2;
            if (basis[i] % 2 == 0) x[v] += t[i][total];
            else x[v] -= t[i][total];
        }
    }
    return x;
}

} // namespace chowkit
