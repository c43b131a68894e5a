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

#include <random>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace tropicon;

namespace {

QMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols)
{
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), sparse(0, 3);
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = sparse(rng) == 0 ? Rational(0) : Rational(num(rng), den(rng));
    // duplicate a row now and then to force rank drops
    if (rows > 1 && sparse(rng) == 0)
        for (std::size_t j = 0; j < cols; ++j)
            m(rows - 1, j) = 2 * m(0, j);
    return m;
}

}   // namespace

TEST(Rational, ParseAndPrint)
{
    EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-4"), Rational(-4));
    EXPECT_EQ(to_string(Rational(-2, 4)), "-1/2");
    EXPECT_EQ(to_string(Rational(5)), "5");
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("abc"), ParseError);
    EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Linalg, KnownRankAndKernel)
{
    const QMatrix a({qvec({1, 2, 3}), qvec({2, 4, 6}), qvec({1, 0, 1})}, 3);
    const auto rk = rank_and_kernel(a);
    EXPECT_EQ(rk.rank, 2u);
    ASSERT_EQ(rk.kernel_basis.size(), 1u);
    EXPECT_TRUE(is_zero(a * rk.kernel_basis[0]));
}

TEST(Linalg, RankNullityAgainstOracle)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int t = 0; t < 300; ++t)
    {
        const auto m = random_matrix(rng, dim(rng), dim(rng));
        const auto rk = rank_and_kernel(m);
        ASSERT_EQ(rk.rank, oracle::rank(m.row_list()));
        ASSERT_EQ(rk.rank + rk.kernel_basis.size(), m.cols());
        for (const auto& k : rk.kernel_basis)
            ASSERT_TRUE(is_zero(m * k));
        ASSERT_EQ(oracle::rank(rk.kernel_basis), rk.kernel_basis.size());
    }
}

TEST(Linalg, RrefIsReducedEchelon)
{
    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t)
    {
        const auto m = random_matrix(rng, 4, 5);
        const auto e = rref(m);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
        {
            EXPECT_EQ(e.reduced(i, e.pivots[i]), 1);
            for (std::size_t j = 0; j < e.reduced.rows(); ++j)
                EXPECT_EQ(e.reduced(j, e.pivots[i]), j == i ? 1 : 0);
        }
        EXPECT_EQ(oracle::rank(e.reduced.row_list()), oracle::rank(m.row_list()));
    }
}

TEST(Linalg, SolveLinear)
{
    const QMatrix a({qvec({1, 1}), qvec({1, -1})}, 2);
    const auto x = solve_linear(a, qvec({3, 1}));
    ASSERT_TRUE(x);
    EXPECT_EQ(*x, qvec({2, 1}));
    const QMatrix b({qvec({1, 1}), qvec({2, 2})}, 2);
    EXPECT_FALSE(solve_linear(b, qvec({1, 3})));
}

TEST(Linalg, OrthogonalComplementAndProjection)
{
    const std::vector<QVector> span{qvec({1, 1, 1})};
    const auto comp = orthogonal_complement(span, 3);
    ASSERT_EQ(comp.size(), 2u);
    for (const auto& c : comp)
        EXPECT_EQ(dot(c, span[0]), 0);
    const auto p = project_off(qvec({3, 0, 0}), span);
    EXPECT_EQ(p, qvec({2, -1, -1}));
}

TEST(Primitive, KnownValues)
{
    EXPECT_EQ(to_qvector(primitive_vector(qvec({2, -4, 6}))), qvec({1, -2, 3}));
    EXPECT_EQ(to_qvector(primitive_vector(QVector{Rational(1, 2), Rational(1, 3)})), qvec({3, 2}));
    EXPECT_EQ(to_qvector(primitive_vector(qvec({0, 0, -5}))), qvec({0, 0, -1}));
    EXPECT_THROW(primitive_vector(qvec({0, 0})), ZeroVector);
}

TEST(Primitive, Idempotent)
{
    std::mt19937 rng(3);
    for (int t = 0; t < 200; ++t)
    {
        const auto v = suite::random_nonzero(rng, 4, 9);
        const auto p = primitive_q(v);
        EXPECT_EQ(primitive_q(p), p);
        Integer g = 0;
        for (const auto& x : p)
            g = oracle::gcd(g, numerator(x));
        EXPECT_EQ(g, 1);
        // same direction, positive multiple
        EXPECT_EQ(oracle::rank({v, p}), 1u);
        EXPECT_GT(dot(v, p), 0);
    }
}

TEST(Lattice, HermiteNormalFormPreservesLattice)
{
    std::mt19937 rng(5);
    for (int t = 0; t < 60; ++t)
    {
        IntMatrix m;
        for (int i = 0; i < 3; ++i)
        {
            IntVector row;
            for (const auto& x : suite::random_vector(rng, 4, 6))
                row.push_back(numerator(x));
            m.push_back(row);
        }
        const auto h = hermite_normal_form(m, 4);
        const auto hq = to_qrows(h), mq = to_qrows(m);
        ASSERT_EQ(h.size(), oracle::rank(mq));
        // same row lattice: same span and same Smith index
        auto both = hq;
        both.insert(both.end(), mq.begin(), mq.end());
        EXPECT_EQ(oracle::rank(both), h.size());
        if (!h.empty())
        {
            const auto full = oracle::integer_rows(oracle::independent(mq));
            EXPECT_EQ(oracle::maximal_minor_gcd(h), oracle::maximal_minor_gcd(full));
        }
    }
}

TEST(Lattice, IntegerKernelIsSaturated)
{
    std::mt19937 rng(9);
    for (int t = 0; t < 60; ++t)
    {
        IntMatrix a;
        for (int i = 0; i < 2; ++i)
        {
            IntVector row;
            for (const auto& x : suite::random_vector(rng, 4, 5))
                row.push_back(numerator(x));
            a.push_back(row);
        }
        const auto k = integer_kernel(a, 4);
        const auto aq = to_qrows(a);
        EXPECT_EQ(k.size() + oracle::rank(aq), 4u);
        for (const auto& kv : k)
            for (const auto& r : aq)
                EXPECT_EQ(dot(r, to_qvector(kv)), 0);
        if (!k.empty())
        {
            EXPECT_EQ(oracle::maximal_minor_gcd(k), 1);
        }
    }
}

TEST(Lp, FeasibleWitnessSubstitutes)
{
    LinearProgram lp(2);
    lp.add_ge(qvec({1, 0}), 1);
    lp.add_le(qvec({1, 1}), 3);
    lp.add_gt(qvec({0, 1}), 0);
    const auto x = lp_feasible(lp);
    ASSERT_TRUE(x);
    EXPECT_TRUE(oracle::substitutes(lp, *x));
}

TEST(Lp, StrictInfeasibility)
{
    LinearProgram lp(1);
    lp.add_gt(qvec({1}), 0);
    lp.add_le(qvec({1}), 0);
    EXPECT_FALSE(lp_feasible(lp));
    LinearProgram lp2(2);
    lp2.add_eq(qvec({1, 1}), 1);
    lp2.add_eq(qvec({1, 1}), 2);
    EXPECT_FALSE(lp_feasible(lp2));
}

TEST(Lp, EmptyProgramIsFeasible)
{
    LinearProgram lp(3);
    const auto x = lp_feasible(lp);
    ASSERT_TRUE(x);
    EXPECT_EQ(x->size(), 3u);
}

TEST(Lp, OptimizeKnownValue)
{
    LinearProgram lp(2);
    lp.add_ge(qvec({1, 0}), 0);
    lp.add_ge(qvec({0, 1}), 0);
    lp.add_le(qvec({1, 2}), 4);
    lp.add_le(qvec({3, 1}), 6);
    lp.objective = qvec({1, 1});
    const auto r = lp_optimize(lp);
    ASSERT_EQ(r.status, LpStatus::Optimal);
    EXPECT_EQ(r.value, Rational(14, 5));
    EXPECT_TRUE(oracle::substitutes(lp, r.point));
    lp.objective = qvec({-1, 1});
    lp.constraints.pop_back();
    lp.constraints.pop_back();
    lp.objective = qvec({1, 0});
    EXPECT_EQ(lp_optimize(lp).status, LpStatus::Unbounded);
}

TEST(Lp, RandomProgramsAroundAKnownPoint)
{
    // Constraints built to hold at x0: feasibility is known, the witness is checked by substitution.
    std::mt19937 rng(21);
    for (int t = 0; t < 150; ++t)
    {
        const std::size_t n = 1 + t % 4;
        const auto x0 = suite::random_vector(rng, n, 3);
        LinearProgram lp(n);
        for (int i = 0; i < 5; ++i)
        {
            const auto a = suite::random_vector(rng, n, 4);
            const Rational v = dot(a, x0);
            switch (i % 3)
            {
            case 0: lp.add_ge(a, v - 1); break;
            case 1: lp.add_gt(a, v - 1); break;
            default: lp.add_le(a, v); break;
            }
        }
        const auto x = lp_feasible(lp);
        ASSERT_TRUE(x);
        ASSERT_TRUE(oracle::substitutes(lp, *x));
        // and a contradicting pair makes it infeasible
        const auto a = suite::random_nonzero(rng, n, 4);
        lp.add_gt(a, 5);
        lp.add_lt(a, 5);
        ASSERT_FALSE(lp_feasible(lp));
    }
}

TEST(Lp, DimensionMismatch)
{
    LinearProgram lp(2);
    EXPECT_THROW(lp.add_ge(qvec({1}), 0), DimensionMismatch);
}
