// Copyright 2026 The Tropicon Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * Exact linear feasibility with strict inequalities.
 *
 * Programs have free variables and constraints of the form a·x = b,
 * a·x >= b or a·x > b.  Strictness is handled by a slack variable δ that
 * every strict row must absorb (a·x - δ >= b, 0 <= δ <= 1); the program is
 * feasible iff the maximal δ is positive.  The solver is a dense two-phase
 * tableau simplex over the rationals using Bland's rule, so it terminates
 * and returns the same witness on every run.
 */

#ifndef TROPICON_LP_HPP
#define TROPICON_LP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace tropicon {

enum class Relation { Eq, Ge, Gt };

struct LinearConstraint
{
    QVector a;
    Rational b;
    Relation rel;
};

struct LinearProgram
{
    std::size_t variables = 0;
    std::vector<LinearConstraint> constraints;
    std::optional<QVector> objective;   // maximized by lp_optimize

    explicit LinearProgram(std::size_t n = 0) : variables(n) {}

    void add(QVector a, Rational b, Relation rel)
    {
        if (a.size() != variables)
            throw DimensionMismatch("constraint length " + std::to_string(a.size())
                                    + " != variable count " + std::to_string(variables));
        constraints.push_back({std::move(a), std::move(b), rel});
    }
    void add_eq(QVector a, Rational b) { add(std::move(a), std::move(b), Relation::Eq); }
    void add_ge(QVector a, Rational b) { add(std::move(a), std::move(b), Relation::Ge); }
    void add_gt(QVector a, Rational b) { add(std::move(a), std::move(b), Relation::Gt); }
    void add_le(QVector a, Rational b) { add(-a, -b, Relation::Ge); }
    void add_lt(QVector a, Rational b) { add(-a, -b, Relation::Gt); }
};

/** True iff `x` satisfies every constraint of `lp` (strict ones strictly). */
inline bool satisfies(const LinearProgram& lp, const QVector& x)
{
    if (x.size() != lp.variables)
        return false;
    for (const auto& c : lp.constraints)
    {
        const Rational v = dot(c.a, x);
        switch (c.rel)
        {
            case Relation::Eq: if (v != c.b) return false; break;
            case Relation::Ge: if (v < c.b) return false; break;
            case Relation::Gt: if (v <= c.b) return false; break;
        }
    }
    return true;
}

namespace detail {

enum class SimplexStatus { Optimal, Unbounded };

/**
 * Dense tableau for max c·y subject to M y = r, y >= 0.  Rows are kept
 * in canonical form with respect to `basis`.
 */
class Tableau
{
    public:
        Tableau(std::vector<QVector> rows, QVector rhs, std::vector<std::size_t> basis,
                std::size_t columns)
            : t_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)), cols_(columns) {}

        std::size_t columns() const { return cols_; }

        /** Maximizes c·y over columns allowed by `allowed` (Bland's rule). */
        SimplexStatus maximize(const QVector& c, const std::vector<bool>& allowed)
        {
            const std::size_t n = columns();
            QVector z(n);
            Rational zrhs = 0;
            for (std::size_t j = 0; j < n; ++j)
            {
                Rational s = -c[j];
                for (std::size_t i = 0; i < t_.size(); ++i)
                    if (c[basis_[i]] != 0 && t_[i][j] != 0)
                        s += c[basis_[i]] * t_[i][j];
                z[j] = s;
            }
            while (true)
            {
                std::size_t enter = n;
                for (std::size_t j = 0; j < n; ++j)
                    if (allowed[j] && z[j] < 0)
                    {
                        enter = j;
                        break;
                    }
                if (enter == n)
                    return SimplexStatus::Optimal;
                std::size_t leave = t_.size();
                Rational best;
                for (std::size_t i = 0; i < t_.size(); ++i)
                {
                    if (t_[i][enter] <= 0)
                        continue;
                    const Rational ratio = rhs_[i] / t_[i][enter];
                    if (leave == t_.size() || ratio < best
                        || (ratio == best && basis_[i] < basis_[leave]))
                    {
                        leave = i;
                        best = ratio;
                    }
                }
                if (leave == t_.size())
                    return SimplexStatus::Unbounded;
                pivot(leave, enter);
                const Rational f = z[enter];
                for (std::size_t j = 0; j < n; ++j)
                    if (t_[leave][j] != 0)
                        z[j] -= f * t_[leave][j];
                zrhs -= f * rhs_[leave];
            }
        }

        void pivot(std::size_t row, std::size_t col)
        {
            const Rational inv = 1 / t_[row][col];
            for (auto& x : t_[row])
                x *= inv;
            rhs_[row] *= inv;
            for (std::size_t i = 0; i < t_.size(); ++i)
            {
                if (i == row || t_[i][col] == 0)
                    continue;
                const Rational f = t_[i][col];
                for (std::size_t j = 0; j < t_[i].size(); ++j)
                    if (t_[row][j] != 0)
                        t_[i][j] -= f * t_[row][j];
                rhs_[i] -= f * rhs_[row];
            }
            basis_[row] = col;
        }

        /** Pivots basic columns >= `first_banned` out of the basis, dropping redundant rows. */
        void expel(std::size_t first_banned)
        {
            for (std::size_t i = 0; i < t_.size();)
            {
                if (basis_[i] < first_banned)
                {
                    ++i;
                    continue;
                }
                std::size_t col = first_banned;
                for (std::size_t j = 0; j < first_banned; ++j)
                    if (t_[i][j] != 0)
                    {
                        col = j;
                        break;
                    }
                if (col == first_banned)
                {
                    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
                    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
                    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                    continue;
                }
                pivot(i, col);
                ++i;
            }
        }

        QVector solution() const
        {
            QVector y = zero_vector(columns());
            for (std::size_t i = 0; i < t_.size(); ++i)
                y[basis_[i]] = rhs_[i];
            return y;
        }

    private:
        std::vector<QVector> t_;
        QVector rhs_;
        std::vector<std::size_t> basis_;
        std::size_t cols_ = 0;
};

struct StandardForm
{
    std::vector<QVector> rows;
    QVector rhs;
    std::size_t n = 0;           // original free variables
    std::size_t columns = 0;     // structural columns before artificials
    std::optional<std::size_t> delta;
};

/**
 * Free x = x⁺ - x⁻ occupies columns [0, 2n); then one surplus column per
 * inequality, then δ and its upper-bound slack if any strict row exists.
 */
inline StandardForm to_standard_form(const LinearProgram& lp, bool with_delta)
{
    StandardForm sf;
    sf.n = lp.variables;
    std::size_t surplus = 0;
    for (const auto& c : lp.constraints)
        if (c.rel != Relation::Eq)
            ++surplus;
    sf.columns = 2 * sf.n + surplus + (with_delta ? 2 : 0);
    if (with_delta)
        sf.delta = 2 * sf.n + surplus;
    std::size_t next_surplus = 2 * sf.n;
    for (const auto& c : lp.constraints)
    {
        QVector row = zero_vector(sf.columns);
        for (std::size_t j = 0; j < sf.n; ++j)
        {
            row[j] = c.a[j];
            row[sf.n + j] = -c.a[j];
        }
        if (c.rel != Relation::Eq)
            row[next_surplus++] = -1;
        if (c.rel == Relation::Gt && with_delta)
            row[*sf.delta] = -1;
        sf.rows.push_back(std::move(row));
        sf.rhs.push_back(c.b);
    }
    if (with_delta)
    {
        QVector row = zero_vector(sf.columns);
        row[*sf.delta] = 1;
        row[*sf.delta + 1] = 1;
        sf.rows.push_back(std::move(row));
        sf.rhs.push_back(1);
    }
    return sf;
}

/** Phase one; returns a feasible tableau over the structural columns, or nothing. */
inline std::optional<Tableau> phase_one(const StandardForm& sf)
{
    const std::size_t m = sf.rows.size();
    const std::size_t total = sf.columns + m;
    std::vector<QVector> rows;
    QVector rhs;
    std::vector<std::size_t> basis;
    for (std::size_t i = 0; i < m; ++i)
    {
        QVector r = sf.rows[i];
        Rational b = sf.rhs[i];
        if (b < 0)
        {
            for (auto& x : r)
                x = -x;
            b = -b;
        }
        r.resize(total, Rational(0));
        r[sf.columns + i] = 1;
        rows.push_back(std::move(r));
        rhs.push_back(std::move(b));
        basis.push_back(sf.columns + i);
    }
    Tableau tab(std::move(rows), std::move(rhs), std::move(basis), total);
    QVector c = zero_vector(total);
    for (std::size_t i = 0; i < m; ++i)
        c[sf.columns + i] = -1;
    tab.maximize(c, std::vector<bool>(total, true));
    const QVector y = tab.solution();
    for (std::size_t i = 0; i < m; ++i)
        if (y[sf.columns + i] != 0)
            return std::nullopt;
    tab.expel(sf.columns);
    return tab;
}

inline QVector recover(const StandardForm& sf, const QVector& y)
{
    QVector x(sf.n);
    for (std::size_t j = 0; j < sf.n; ++j)
        x[j] = y[j] - y[sf.n + j];
    return x;
}

}   // namespace detail

/**
 * A point satisfying every constraint (strict ones strictly), or nothing
 * iff the constraint set is empty.  The objective, if any, is ignored.
 */
inline std::optional<QVector> lp_feasible(const LinearProgram& lp)
{
    for (const auto& c : lp.constraints)
        if (c.a.size() != lp.variables)
            throw DimensionMismatch("malformed linear program");
    bool strict = false;
    for (const auto& c : lp.constraints)
        strict = strict || c.rel == Relation::Gt;
    const auto sf = detail::to_standard_form(lp, strict);
    auto tab = detail::phase_one(sf);
    if (!tab)
        return std::nullopt;
    if (strict)
    {
        const std::size_t total = tab->columns();
        QVector c = zero_vector(total);
        c[*sf.delta] = 1;
        std::vector<bool> allowed(total, false);
        for (std::size_t j = 0; j < sf.columns; ++j)
            allowed[j] = true;
        tab->maximize(c, allowed);   // bounded by δ <= 1
        if (tab->solution()[*sf.delta] <= 0)
            return std::nullopt;
    }
    QVector x = detail::recover(sf, tab->solution());
    return x;
}

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpOptimum
{
    LpStatus status = LpStatus::Infeasible;
    QVector point;     // optimal vertex when Optimal, a feasible point when Unbounded
    Rational value;
};

/** Maximizes the objective over the non-strict constraints of `lp`. */
inline LpOptimum lp_optimize(const LinearProgram& lp)
{
    if (!lp.objective || lp.objective->size() != lp.variables)
        throw DimensionMismatch("lp_optimize needs an objective of the program's length");
    for (const auto& c : lp.constraints)
        if (c.rel == Relation::Gt)
            throw Error("lp_optimize does not accept strict constraints");
    const auto sf = detail::to_standard_form(lp, false);
    auto tab = detail::phase_one(sf);
    if (!tab)
        return {};
    const std::size_t total = tab->columns();
    QVector c = zero_vector(total);
    for (std::size_t j = 0; j < sf.n; ++j)
    {
        c[j] = (*lp.objective)[j];
        c[sf.n + j] = -(*lp.objective)[j];
    }
    std::vector<bool> allowed(total, false);
    for (std::size_t j = 0; j < sf.columns; ++j)
        allowed[j] = true;
    LpOptimum out;
    out.status = tab->maximize(c, allowed) == detail::SimplexStatus::Optimal ? LpStatus::Optimal
                                                                             : LpStatus::Unbounded;
    out.point = detail::recover(sf, tab->solution());
    out.value = dot(*lp.objective, out.point);
    return out;
}

}   // namespace tropicon

#endif
