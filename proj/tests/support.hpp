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

// Independent oracles and the shared fan suite for the test binaries.

#ifndef TROPICON_TESTS_SUPPORT_HPP
#define TROPICON_TESTS_SUPPORT_HPP

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tropicon/tropicon.hpp"

namespace oracle {

using tropicon::Integer;
using tropicon::QVector;
using tropicon::Rational;

/** Rank by plain Gaussian elimination, no pivot bookkeeping shared with the library. */
inline std::size_t rank(std::vector<QVector> m)
{
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c)
    {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i)
        {
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

/** Integer determinant by cofactor expansion (small matrices only). */
inline Integer det(const std::vector<std::vector<Integer>>& a)
{
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return a[0][0];
    Integer sum = 0;
    for (std::size_t j = 0; j < n; ++j)
    {
        std::vector<std::vector<Integer>> minor;
        for (std::size_t i = 1; i < n; ++i)
        {
            std::vector<Integer> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j)
                    row.push_back(a[i][k]);
            minor.push_back(row);
        }
        const Integer term = a[0][j] * det(minor);
        sum += (j % 2 == 0) ? term : Integer(-term);
    }
    return sum;
}

inline Integer gcd(Integer a, Integer b)
{
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0)
    {
        Integer t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/**
 * gcd of the maximal minors of a full-row-rank integer matrix: the product of
 * its Smith invariant factors, i.e. the index of its row lattice in the
 * saturation.
 */
inline Integer maximal_minor_gcd(const std::vector<std::vector<Integer>>& rows)
{
    const std::size_t r = rows.size();
    if (r == 0)
        return 1;
    const std::size_t n = rows[0].size();
    Integer g = 0;
    std::vector<std::size_t> cols(r);
    for (std::size_t i = 0; i < r; ++i)
        cols[i] = i;
    while (true)
    {
        std::vector<std::vector<Integer>> sub(r, std::vector<Integer>(r));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                sub[i][j] = rows[i][cols[j]];
        g = gcd(g, det(sub));
        std::size_t i = r;
        while (i > 0 && cols[i - 1] == n - r + i - 1)
            --i;
        if (i == 0)
            break;
        ++cols[i - 1];
        for (std::size_t j = i; j < r; ++j)
            cols[j] = cols[j - 1] + 1;
    }
    return g;
}

/** Clears denominators row by row. */
inline std::vector<std::vector<Integer>> integer_rows(const std::vector<QVector>& rows)
{
    std::vector<std::vector<Integer>> out;
    for (const auto& r : rows)
    {
        Integer l = 1;
        for (const auto& x : r)
        {
            const Integer d = boost::multiprecision::denominator(x);
            l = l / gcd(l, d) * d;
        }
        std::vector<Integer> row;
        for (const auto& x : r)
            row.push_back(boost::multiprecision::numerator(Rational(x * l)));
        out.push_back(row);
    }
    return out;
}

/** Greedy independent subset of `gens`. */
inline std::vector<QVector> independent(const std::vector<QVector>& gens)
{
    std::vector<QVector> basis;
    for (const auto& g : gens)
    {
        basis.push_back(g);
        if (rank(basis) < basis.size())
            basis.pop_back();
    }
    return basis;
}

/**
 * v generates (span σ ∩ Zⁿ)/(span τ ∩ Zⁿ) iff the Smith index of [B_τ; v]
 * equals the Smith index of B_τ, for any integral basis B_τ of span τ.
 */
inline bool generates_quotient(const std::vector<QVector>& tau_span, const QVector& v)
{
    auto bt = integer_rows(independent(tau_span));
    const Integer before = maximal_minor_gcd(bt);
    auto with = bt;
    with.push_back(integer_rows({v}).front());
    return maximal_minor_gcd(with) == before;
}

/** Direct substitution of a point into a linear program. */
inline bool substitutes(const tropicon::LinearProgram& lp, const QVector& x)
{
    if (x.size() != lp.variables)
        return false;
    for (const auto& c : lp.constraints)
    {
        Rational s = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            s += c.a[i] * x[i];
        switch (c.rel)
        {
        case tropicon::Relation::Eq:
            if (s != c.b)
                return false;
            break;
        case tropicon::Relation::Ge:
            if (s < c.b)
                return false;
            break;
        case tropicon::Relation::Gt:
            if (s <= c.b)
                return false;
            break;
        }
    }
    return true;
}

inline Rational value(const QVector& h, const QVector& x)
{
    Rational s = 0;
    for (std::size_t i = 0; i < h.size(); ++i)
        s += h[i] * x[i];
    return s;
}

/** The polyhedron has points with h·x > c and points with h·x < c (so H meets its relative interior). */
inline bool crosses(const tropicon::Polyhedron& p, const QVector& h, const Rational& c)
{
    bool above = false, below = false;
    const auto verts = p.is_cone() ? std::vector<QVector>{QVector(h.size(), Rational(0))} : p.vertices();
    for (const auto& v : verts)
    {
        above = above || value(h, v) > c;
        below = below || value(h, v) < c;
    }
    for (const auto& r : p.rays())
    {
        above = above || value(h, r) > 0;
        below = below || value(h, r) < 0;
    }
    for (const auto& l : p.lineality_generators())
        if (value(h, l) != 0)
            above = below = true;
    return above && below;
}

/** Every point of p lies strictly on the side `sign` of h·x = c. */
inline bool strictly_on_side(const tropicon::Polyhedron& p, const QVector& h, const Rational& c, int sign)
{
    const auto verts = p.is_cone() ? std::vector<QVector>{QVector(h.size(), Rational(0))} : p.vertices();
    for (const auto& v : verts)
        if ((value(h, v) - c) * sign <= 0)
            return false;
    for (const auto& r : p.rays())
        if (value(h, r) * sign < 0)
            return false;
    for (const auto& l : p.lineality_generators())
        if (value(h, l) != 0)
            return false;
    return true;
}

/** Every generator of p lies in h·x = c. */
inline bool contained(const tropicon::Polyhedron& p, const QVector& h, const Rational& c)
{
    const auto verts = p.is_cone() ? std::vector<QVector>{QVector(h.size(), Rational(0))} : p.vertices();
    for (const auto& v : verts)
        if (value(h, v) != c)
            return false;
    for (const auto& r : p.rays())
        if (value(h, r) != 0)
            return false;
    for (const auto& l : p.lineality_generators())
        if (value(h, l) != 0)
            return false;
    return true;
}

/**
 * Witness predicate for P ~_F Q: H crosses or contains each of P and Q (so
 * meets its relative interior) and leaves F strictly on one side.
 */
inline bool is_witness(const tropicon::Polyhedron& p, const tropicon::Polyhedron& q,
                       const tropicon::Polyhedron& f, const QVector& h, const Rational& c)
{
    return (crosses(p, h, c) || contained(p, h, c)) && (crosses(q, h, c) || contained(q, h, c))
           && (strictly_on_side(f, h, c, 1) || strictly_on_side(f, h, c, -1));
}

}   // namespace oracle

namespace suite {

using namespace tropicon;

inline QVector random_vector(std::mt19937& rng, std::size_t n, int range)
{
    std::uniform_int_distribution<int> dist(-range, range);
    QVector v(n);
    for (auto& x : v)
        x = dist(rng);
    return v;
}

inline QVector random_nonzero(std::mt19937& rng, std::size_t n, int range)
{
    QVector v;
    do
        v = random_vector(rng, n, range);
    while (is_zero(v));
    return v;
}

struct NamedFan
{
    std::string name;
    Complex fan;
};

/** Pure complexes whose connectivity matches their Theorem 1.1 bound, plus the two-planes counterexample. */
inline std::vector<NamedFan> connectivity_suite()
{
    std::vector<NamedFan> out;
    out.push_back({"two-planes", two_planes_fan()});
    out.push_back({"tropical-plane", tropical_plane_fan()});
    out.push_back({"tropical-line", tropical_line_fan()});
    out.push_back({"U23", bergman_fine(Matroid::uniform(2, 3))});
    out.push_back({"U34", bergman_fine(Matroid::uniform(3, 4))});
    out.push_back({"U45", bergman_fine(Matroid::uniform(4, 5))});
    out.push_back({"K4", bergman_fine(graphic_k4())});
    out.push_back({"square", cube_normal_fan(2)});
    out.push_back({"cube", cube_normal_fan(3)});
    out.push_back({"cube-2-skeleton", skeleton(cube_normal_fan(3), 2)});
    return out;
}

/** Random full-dimensional 3-polytope normal fans (at most 10 vertices). */
inline std::vector<NamedFan> random_polytope_fans(std::size_t count = 5)
{
    std::vector<NamedFan> out;
    for (std::uint32_t seed = 1; out.size() < count; ++seed)
    {
        const auto pts = random_polytope_vertices(seed, 4 + seed % 7, 3);
        out.push_back({"random-polytope-" + std::to_string(seed), normal_fan(pts)});
    }
    return out;
}

/** Simple matroids on at most six elements. */
inline std::vector<std::pair<std::string, Matroid>> small_matroids()
{
    std::vector<std::pair<std::string, Matroid>> out;
    out.emplace_back("U23", Matroid::uniform(2, 3));
    out.emplace_back("U24", Matroid::uniform(2, 4));
    out.emplace_back("U34", Matroid::uniform(3, 4));
    out.emplace_back("U35", Matroid::uniform(3, 5));
    out.emplace_back("U45", Matroid::uniform(4, 5));
    out.emplace_back("K4", graphic_k4());
    out.emplace_back("linear-5", Matroid::linear({qvec({1, 0, 0}), qvec({0, 1, 0}), qvec({0, 0, 1}),
                                                  qvec({1, 1, 0}), qvec({1, 1, 1})}));
    out.emplace_back("C4", Matroid::graphic({{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    return out;
}

/** Canonical cell set of a complex, for structural comparison. */
inline std::vector<CanonicalCell> cell_set(const Complex& c)
{
    std::vector<CanonicalCell> out;
    for (auto f : c.facet_indices())
        out.push_back(c.cell(f).canonical());
    std::sort(out.begin(), out.end());
    return out;
}

/** Runs a shell command, returning exit status and stdout. */
inline std::pair<int, std::string> run(const std::string& cmd)
{
    std::string out;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe)
        return {-1, out};
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}   // namespace suite

#endif
