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
 * Exact linear algebra over the rationals and the integers: reduced row
 * echelon forms, kernels, spans, primitive vectors, and the Hermite-style
 * unimodular reductions used for integer lattices.
 */

#ifndef TROPICON_LINALG_HPP
#define TROPICON_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace tropicon {

struct EchelonForm
{
    QMatrix reduced;                   // nonzero rows only
    std::vector<std::size_t> pivots;   // pivot column of each row
};

/** Gauss-Jordan elimination; the pivot of each row is 1 and its column is otherwise zero. */
inline EchelonForm rref(const QMatrix& a)
{
    std::vector<QVector> m = a.row_list();
    const std::size_t cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c)
    {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[r]);
        const Rational inv = 1 / m[r][c];
        for (auto& x : m[r])
            x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i)
        {
            if (i == r || m[i][c] == 0)
                continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (m[r][j] != 0)
                    m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return {QMatrix(std::move(m), cols), std::move(pivots)};
}

struct RankKernel
{
    std::size_t rank = 0;
    std::vector<QVector> kernel_basis;
};

/**
 * Rank and a kernel basis of `a`.  The basis has one vector per free column,
 * with a 1 in that column and 0 in the other free columns.
 */
inline RankKernel rank_and_kernel(const QMatrix& a)
{
    const EchelonForm e = rref(a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    RankKernel out;
    out.rank = e.pivots.size();
    for (std::size_t f = 0; f < n; ++f)
    {
        if (is_pivot[f])
            continue;
        QVector k = zero_vector(n);
        k[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            k[e.pivots[i]] = -e.reduced(i, f);
        out.kernel_basis.push_back(std::move(k));
    }
    return out;
}

inline std::size_t rank_of(const std::vector<QVector>& rows, std::size_t n)
{
    if (rows.empty())
        return 0;
    return rref(QMatrix(rows, n)).pivots.size();
}

/** Kernel of the matrix whose rows are `rows`, i.e. the orthogonal complement of their span. */
inline std::vector<QVector> orthogonal_complement(const std::vector<QVector>& rows, std::size_t n)
{
    if (rows.empty())
    {
        std::vector<QVector> all;
        for (std::size_t i = 0; i < n; ++i)
            all.push_back(unit_vector(n, i));
        return all;
    }
    return rank_and_kernel(QMatrix(rows, n)).kernel_basis;
}

/** Reduced row echelon basis of the span of `rows`; canonical for the subspace. */
inline std::vector<QVector> span_basis(const std::vector<QVector>& rows, std::size_t n)
{
    if (rows.empty())
        return {};
    return rref(QMatrix(rows, n)).reduced.row_list();
}

/** Some solution of A x = b, or nothing when the system is inconsistent. */
inline std::optional<QVector> solve_linear(const QMatrix& a, const QVector& b)
{
    if (b.size() != a.rows())
        throw DimensionMismatch("solve_linear right-hand side");
    std::vector<QVector> aug;
    for (std::size_t i = 0; i < a.rows(); ++i)
    {
        QVector r = a.row(i);
        r.push_back(b[i]);
        aug.push_back(std::move(r));
    }
    const EchelonForm e = rref(QMatrix(std::move(aug), a.cols() + 1));
    QVector x = zero_vector(a.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
    {
        if (e.pivots[i] == a.cols())
            return std::nullopt;
        x[e.pivots[i]] = e.reduced(i, a.cols());
    }
    return x;
}

inline bool in_span(const QVector& v, const std::vector<QVector>& basis)
{
    if (is_zero(v))
        return true;
    if (basis.empty())
        return false;
    return rank_of(basis, v.size()) == [&] {
        auto b = basis;
        b.push_back(v);
        return rank_of(b, v.size());
    }();
}

/** Orthogonal projection of `v` onto the complement of span(`basis`). */
inline QVector project_off(const QVector& v, const std::vector<QVector>& basis)
{
    if (basis.empty())
        return v;
    const std::size_t k = basis.size();
    QMatrix gram(k, k);
    QVector rhs(k);
    for (std::size_t i = 0; i < k; ++i)
    {
        for (std::size_t j = 0; j < k; ++j)
            gram(i, j) = dot(basis[i], basis[j]);
        rhs[i] = dot(basis[i], v);
    }
    const auto coeff = solve_linear(gram, rhs);
    QVector out = v;
    for (std::size_t i = 0; i < k; ++i)
        if ((*coeff)[i] != 0)
            out = out - (*coeff)[i] * basis[i];
    return out;
}

// ---------------------------------------------------------------------------
// Integer vectors and lattices
// ---------------------------------------------------------------------------

inline Integer abs_int(const Integer& a) { return a < 0 ? Integer(-a) : a; }

/** Extended Euclid: returns g = gcd(a, b) >= 0 with x a + y b = g. */
inline Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y)
{
    Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0)
    {
        const Integer q = old_r / r;
        Integer tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0)
    {
        old_r = -old_r; old_s = -old_s; old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

/**
 * The integer vector with coprime entries that is a positive multiple of `v`.
 * Throws ZeroVector for the zero vector.
 */
inline IntVector primitive_vector(const QVector& v)
{
    if (is_zero(v))
        throw ZeroVector("primitive_vector of the zero vector");
    Integer lcm = 1;
    for (const auto& x : v)
    {
        const Integer d = denominator(x);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    IntVector out;
    out.reserve(v.size());
    Integer g = 0;
    for (const auto& x : v)
    {
        out.push_back(numerator(x) * (lcm / denominator(x)));
        g = boost::multiprecision::gcd(g, abs_int(out.back()));
    }
    for (auto& x : out)
        x /= g;
    return out;
}

inline QVector primitive_q(const QVector& v) { return to_qvector(primitive_vector(v)); }

inline bool is_integral(const QVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_integer(x); });
}

using IntMatrix = std::vector<IntVector>;

/**
 * Row Hermite normal form of the lattice spanned by the rows of `rows`
 * (length n each).  Zero rows are dropped; pivots are positive and entries
 * above a pivot are reduced into [0, pivot).  Unique for a given lattice.
 */
inline IntMatrix hermite_normal_form(IntMatrix rows, std::size_t n)
{
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c)
    {
        // Fold all rows below r into row r at column c by unimodular 2x2 steps.
        for (std::size_t i = r + 1; i < rows.size(); ++i)
        {
            if (rows[i][c] == 0)
                continue;
            Integer x, y;
            const Integer a = rows[r][c], b = rows[i][c];
            const Integer g = ext_gcd(a, b, x, y);
            const Integer ua = a / g, ub = b / g;
            for (std::size_t j = 0; j < n; ++j)
            {
                const Integer top = x * rows[r][j] + y * rows[i][j];
                const Integer bot = -ub * rows[r][j] + ua * rows[i][j];
                rows[r][j] = top;
                rows[i][j] = bot;
            }
        }
        if (rows[r][c] == 0)
            continue;
        if (rows[r][c] < 0)
            for (auto& x : rows[r])
                x = -x;
        for (std::size_t i = 0; i < r; ++i)
        {
            // floor division keeps the reduced entry in [0, pivot)
            Integer q = rows[i][c] / rows[r][c];
            if (rows[i][c] - q * rows[r][c] < 0)
                q -= 1;
            if (q != 0)
                for (std::size_t j = 0; j < n; ++j)
                    rows[i][j] -= q * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return rows;
}

/**
 * A basis of the integer kernel lattice {x in Z^n : A x = 0} of an integer
 * matrix, returned in Hermite normal form.  The result is saturated.
 */
inline IntMatrix integer_kernel(const IntMatrix& a, std::size_t n)
{
    // Column operations on A mirrored on U; A U = [H | 0].
    IntMatrix m = a;
    IntMatrix u(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        u[i][i] = 1;
    auto col_combine = [&](std::size_t c1, std::size_t c2, const Integer& x, const Integer& y,
                           const Integer& s, const Integer& t) {
        // (col c1, col c2) <- (x c1 + y c2, s c1 + t c2)
        for (auto* mat : {&m, &u})
            for (auto& row : *mat)
            {
                const Integer a1 = row[c1], a2 = row[c2];
                row[c1] = x * a1 + y * a2;
                row[c2] = s * a1 + t * a2;
            }
    };
    std::size_t start = 0;
    for (std::size_t i = 0; i < m.size() && start < n; ++i)
    {
        for (std::size_t j = start + 1; j < n; ++j)
        {
            if (m[i][j] == 0)
                continue;
            Integer x, y;
            const Integer a1 = m[i][start], a2 = m[i][j];
            const Integer g = ext_gcd(a1, a2, x, y);
            col_combine(start, j, x, y, -a2 / g, a1 / g);
        }
        if (m[i][start] != 0)
            ++start;
    }
    IntMatrix kernel;
    for (std::size_t c = start; c < n; ++c)
    {
        IntVector col(n);
        for (std::size_t r = 0; r < n; ++r)
            col[r] = u[r][c];
        kernel.push_back(std::move(col));
    }
    return hermite_normal_form(std::move(kernel), n);
}

/** Clears denominators row by row. */
inline IntMatrix integral_rows(const std::vector<QVector>& rows)
{
    IntMatrix out;
    for (const auto& r : rows)
        if (!is_zero(r))
            out.push_back(primitive_vector(r));
    return out;
}

/**
 * Hermite basis of the saturated lattice span(`basis`) ∩ Z^n.
 */
inline IntMatrix saturated_lattice(const std::vector<QVector>& basis, std::size_t n)
{
    if (rank_of(basis, n) == 0)
        return {};
    const auto perp = orthogonal_complement(span_basis(basis, n), n);
    if (perp.empty())
        return integer_kernel({}, n);
    return integer_kernel(integral_rows(perp), n);
}

inline std::vector<QVector> to_qrows(const IntMatrix& m)
{
    std::vector<QVector> out;
    for (const auto& r : m)
        out.push_back(to_qvector(r));
    return out;
}

}   // namespace tropicon

#endif
