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
 * Double description for homogeneous cones {x : A x >= 0, E x = 0}.
 *
 * Equations are eliminated by parametrizing their kernel, the lineality
 * space ker(A) is split off, and the remaining pointed full-dimensional cone
 * is built one inequality at a time starting from a simplicial cone.  New
 * rays come from adjacent (+,-) pairs, with adjacency decided by the exact
 * rank test on the common tight set.
 */

#ifndef TROPICON_DOUBLE_DESCRIPTION_HPP
#define TROPICON_DOUBLE_DESCRIPTION_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace tropicon {

struct ConeGenerators
{
    std::vector<QVector> lineality;   // primitive integer basis
    std::vector<QVector> rays;        // primitive integer extreme rays, lex-sorted
};

namespace detail {

inline QVector combine(const std::vector<QVector>& basis, const QVector& coeff, std::size_t n)
{
    QVector x = zero_vector(n);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coeff[i] != 0)
            x += coeff[i] * basis[i];
    return x;
}

/** Extreme rays of the pointed full-dimensional cone {z in R^q : C z >= 0}. */
inline std::vector<QVector> pointed_cone_rays(const std::vector<QVector>& c, std::size_t q)
{
    if (q == 0)
        return {};
    // Initial simplicial cone from q independent rows.
    std::vector<std::size_t> chosen;
    std::vector<QVector> chosen_rows;
    for (std::size_t i = 0; i < c.size() && chosen.size() < q; ++i)
    {
        if (is_zero(c[i]))
            continue;
        auto trial = chosen_rows;
        trial.push_back(c[i]);
        if (rank_of(trial, q) == trial.size())
        {
            chosen.push_back(i);
            chosen_rows = std::move(trial);
        }
    }
    // Columns of the inverse of the chosen block are the initial rays.
    std::vector<QVector> rays;
    for (std::size_t k = 0; k < q; ++k)
    {
        QVector e = zero_vector(q);
        e[k] = 1;
        rays.push_back(primitive_q(*solve_linear(QMatrix(chosen_rows, q), e)));
    }
    std::vector<bool> processed(c.size(), false);
    for (auto i : chosen)
        processed[i] = true;
    std::vector<std::size_t> done = chosen;

    for (std::size_t i = 0; i < c.size(); ++i)
    {
        if (processed[i])
            continue;
        processed[i] = true;
        std::vector<QVector> pos, neg, zero;
        std::vector<Rational> pos_val, neg_val;
        for (auto& r : rays)
        {
            const Rational v = dot(c[i], r);
            if (v > 0)
            {
                pos.push_back(r);
                pos_val.push_back(v);
            }
            else if (v < 0)
            {
                neg.push_back(r);
                neg_val.push_back(v);
            }
            else
                zero.push_back(r);
        }
        if (neg.empty())
        {
            done.push_back(i);
            continue;
        }
        std::vector<QVector> next = pos;
        next.insert(next.end(), zero.begin(), zero.end());
        // tight sets over already-processed rows
        auto tight = [&](const QVector& r) {
            std::vector<std::size_t> t;
            for (auto j : done)
                if (dot(c[j], r) == 0)
                    t.push_back(j);
            return t;
        };
        std::vector<std::vector<std::size_t>> pos_tight, neg_tight;
        for (auto& r : pos)
            pos_tight.push_back(tight(r));
        for (auto& r : neg)
            neg_tight.push_back(tight(r));
        for (std::size_t a = 0; a < pos.size(); ++a)
            for (std::size_t b = 0; b < neg.size(); ++b)
            {
                std::vector<std::size_t> common;
                std::set_intersection(pos_tight[a].begin(), pos_tight[a].end(),
                                      neg_tight[b].begin(), neg_tight[b].end(),
                                      std::back_inserter(common));
                if (common.size() + 2 < q)
                    continue;
                std::vector<QVector> rows;
                for (auto j : common)
                    rows.push_back(c[j]);
                if (rank_of(rows, q) + 2 != q)
                    continue;
                QVector r = pos_val[a] * neg[b] - neg_val[b] * pos[a];
                next.push_back(primitive_q(r));
            }
        rays = std::move(next);
        done.push_back(i);
        std::sort(done.begin(), done.end());
    }
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    return rays;
}

}   // namespace detail

/**
 * Lineality basis and extreme rays of {x in R^n : A x >= 0, E x = 0}.
 * Rays are returned modulo the lineality space, orthogonal to it.
 */
inline ConeGenerators cone_from_inequalities(const std::vector<QVector>& ineqs,
                                             const std::vector<QVector>& eqs, std::size_t n)
{
    // x = K y with K spanning ker(E)
    const std::vector<QVector> k = orthogonal_complement(span_basis(eqs, n), n);
    const std::size_t p = k.size();
    ConeGenerators out;
    if (p == 0)
        return out;
    std::vector<QVector> b;   // A K
    for (const auto& a : ineqs)
    {
        QVector row(p);
        for (std::size_t j = 0; j < p; ++j)
            row[j] = dot(a, k[j]);
        b.push_back(std::move(row));
    }
    // Lineality in y-space: ker(B); pointed part lives in rowspace(B).
    std::vector<QVector> lin_y = orthogonal_complement(span_basis(b, p), p);
    const std::vector<QVector> row_space = span_basis(b, p);
    const std::size_t q = row_space.size();
    std::vector<QVector> c;   // B Rᵀ
    for (const auto& row : b)
    {
        QVector r(q);
        for (std::size_t j = 0; j < q; ++j)
            r[j] = dot(row, row_space[j]);
        c.push_back(std::move(r));
    }
    const auto z_rays = detail::pointed_cone_rays(c, q);

    std::vector<QVector> lineality;
    for (const auto& ly : lin_y)
        lineality.push_back(detail::combine(k, ly, n));
    for (const auto& l : span_basis(lineality, n))
        out.lineality.push_back(primitive_q(l));
    for (const auto& z : z_rays)
    {
        const QVector y = detail::combine(row_space, z, p);
        QVector x = project_off(detail::combine(k, y, n), out.lineality);
        out.rays.push_back(primitive_q(x));
    }
    std::sort(out.rays.begin(), out.rays.end());
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    return out;
}

}   // namespace tropicon

#endif
