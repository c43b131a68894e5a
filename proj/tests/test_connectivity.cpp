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

#include <bit>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace tropicon;

namespace {

/** Closed-facet removal by union-find over a bitmask of removed facets. */
bool brute_connected(const FacetRidgeHypergraph& h, std::uint64_t removed)
{
    const std::size_t n = h.facet_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : h.hyperedges)
    {
        bool alive = true;
        for (auto f : e)
            alive = alive && !((removed >> f) & 1);
        if (!alive)
            continue;
        for (std::size_t i = 1; i < e.size(); ++i)
            parent[find(e[i])] = find(e[0]);
    }
    std::size_t roots = 0;
    for (std::size_t f = 0; f < n; ++f)
        if (!((removed >> f) & 1) && find(f) == f)
            ++roots;
    return roots <= 1;
}

/** Smallest number of facets whose removal disconnects, by scanning all masks. */
std::optional<std::size_t> brute_min_cut(const FacetRidgeHypergraph& h)
{
    const std::size_t n = h.facet_count();
    std::optional<std::size_t> best;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    {
        const auto size = static_cast<std::size_t>(std::popcount(m));
        if (best && size >= *best)
            continue;
        if (n - size >= 2 && !brute_connected(h, m))
            best = size;
    }
    return best;
}

FacetRidgeHypergraph random_hypergraph(std::mt19937& rng, std::size_t n, std::size_t edges)
{
    FacetRidgeHypergraph h;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1), size(2, 3);
    for (std::size_t f = 0; f < n; ++f)
    {
        h.facet_labels.push_back("f" + std::to_string(f));
        h.facet_cells.push_back(f);
    }
    for (std::size_t e = 0; e < edges; ++e)
    {
        std::vector<std::size_t> edge;
        const auto s = size(rng);
        while (edge.size() < s)
        {
            const auto f = pick(rng);
            if (std::find(edge.begin(), edge.end(), f) == edge.end())
                edge.push_back(f);
        }
        std::sort(edge.begin(), edge.end());
        h.hyperedges.push_back(edge);
        h.ridge_labels.push_back("r" + std::to_string(e));
    }
    return h;
}

}   // namespace

TEST(Hypergraph, TwoPlanesShape)
{
    const auto h = build_hypergraph(two_planes_fan());
    EXPECT_EQ(h.facet_count(), 12u);
    EXPECT_EQ(h.ridge_count(), 7u);
    std::vector<std::size_t> sizes;
    for (const auto& e : h.hyperedges)
        sizes.push_back(e.size());
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, (std::vector<std::size_t>{3, 3, 3, 3, 3, 3, 6}));
}

TEST(Hypergraph, BergmanU34Shape)
{
    const auto h = build_hypergraph(bergman_fine(Matroid::uniform(3, 4)));
    EXPECT_EQ(h.facet_count(), 12u);
    EXPECT_EQ(h.ridge_count(), 10u);
    std::size_t threes = 0, twos = 0;
    for (const auto& e : h.hyperedges)
        (e.size() == 3 ? threes : twos) += 1;
    EXPECT_EQ(threes, 4u);
    EXPECT_EQ(twos, 6u);
}

TEST(Hypergraph, ImpureComplexRejected)
{
    const Complex c(3, {}, {qvec({1, 0, 0}), qvec({0, 1, 0}), qvec({0, 0, 1})}, {}, {{{}, {0, 1}}, {{}, {2}}});
    EXPECT_THROW(build_hypergraph(c), InvalidComplex);
}

TEST(Connectivity, ExampleOneThree)
{
    const auto c = two_planes_fan();
    const auto h = build_hypergraph(c);
    EXPECT_TRUE(is_k_connected(h, 1).verdict);
    const auto cert = is_k_connected(h, 2);
    EXPECT_FALSE(cert.verdict);
    ASSERT_TRUE(cert.witness);
    ASSERT_EQ(cert.witness->size(), 1u);
    // the removed facet contains the e1 ray
    const auto& cell = c.cells()[h.facet_cells[cert.witness->front()]];
    bool has_e1 = false;
    for (auto r : cell.rays)
        has_e1 = has_e1 || c.rays()[r] == qvec({1, 0, 0, 0, 0});
    EXPECT_TRUE(has_e1);
    EXPECT_FALSE(connected_after_removal(h, *cert.witness));
    const auto cut = min_facet_cut(h);
    ASSERT_TRUE(cut);
    EXPECT_EQ(cut->size, 1u);
}

TEST(Connectivity, CliqueGap)
{
    const auto h = build_hypergraph(two_planes_fan());
    const auto cert = is_k_connected(h, 2);
    ASSERT_TRUE(cert.witness);
    EXPECT_FALSE(connected_after_removal(h, *cert.witness));
    EXPECT_TRUE(connected_after_removal_clique(h, *cert.witness));
}

TEST(Connectivity, AgreesWithBruteForceOnRandomHypergraphs)
{
    std::mt19937 rng(41);
    for (int t = 0; t < 60; ++t)
    {
        const std::size_t n = 4 + t % 6;
        const auto h = random_hypergraph(rng, n, n + t % 5);
        const auto brute = brute_min_cut(h);
        for (std::size_t k = 1; k <= 4; ++k)
        {
            const auto cert = is_k_connected(h, k);
            bool expected = true;
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
                if (static_cast<std::size_t>(std::popcount(m)) == k - 1 && !brute_connected(h, m))
                    expected = false;
            ASSERT_EQ(cert.verdict, expected) << "t=" << t << " k=" << k;
            if (!cert.verdict)
            {
                ASSERT_TRUE(cert.witness);
                std::uint64_t mask = 0;
                for (auto f : *cert.witness)
                    mask |= std::uint64_t{1} << f;
                ASSERT_FALSE(brute_connected(h, mask));
            }
            SearchOptions par{kDefaultSubsetBudget, 3};
            const auto pc = is_k_connected(h, k, par);
            ASSERT_EQ(pc.verdict, cert.verdict);
            ASSERT_EQ(pc.witness, cert.witness);
            ASSERT_EQ(pc.subsets_examined, cert.subsets_examined);
        }
        const auto cut = min_facet_cut(h);
        ASSERT_EQ(cut.has_value(), brute.has_value()) << "t=" << t;
        if (cut)
        {
            ASSERT_EQ(cut->size, *brute) << "t=" << t;
            ASSERT_FALSE(connected_after_removal(h, cut->witness));
        }
    }
}

TEST(Connectivity, ConsistencyAndMonotonicityOnSuite)
{
    auto fans = suite::connectivity_suite();
    for (auto& f : suite::random_polytope_fans(2))
        fans.push_back(std::move(f));
    for (const auto& [name, fan] : fans)
    {
        const auto h = build_hypergraph(fan);
        const auto cut = min_facet_cut(h);
        ASSERT_TRUE(cut) << name;
        bool seen_false = false;
        for (std::size_t k = 1; k <= cut->size + 1; ++k)
        {
            const bool v = is_k_connected(h, k).verdict;
            EXPECT_EQ(v, k <= cut->size) << name << " k=" << k;
            EXPECT_TRUE(!seen_false || !v) << name;
            seen_false = seen_false || !v;
        }
    }
}

TEST(Connectivity, BudgetExceeded)
{
    const auto h = build_hypergraph(bergman_fine(Matroid::uniform(4, 5)));
    try
    {
        is_k_connected(h, 3, SearchOptions{100, 1});
        FAIL() << "expected BudgetExceeded";
    }
    catch (const BudgetExceeded& e)
    {
        EXPECT_EQ(e.budget, 100u);
    }
}

TEST(Connectivity, VacuousCases)
{
    FacetRidgeHypergraph single;
    single.facet_labels = {"only"};
    single.facet_cells = {0};
    EXPECT_TRUE(is_k_connected(single, 5).verdict);
    EXPECT_THROW(min_facet_cut(single), TooFewFacets);
    const auto h = build_hypergraph(bergman_fine(Matroid::uniform(2, 3)));
    EXPECT_TRUE(is_k_connected(h, 3).verdict);
    EXPECT_THROW(is_k_connected(h, 0), Error);
}

TEST(Colex, UnrankMatchesNext)
{
    for (std::size_t k = 1; k <= 3; ++k)
    {
        std::vector<std::size_t> c(k);
        std::iota(c.begin(), c.end(), 0);
        std::uint64_t rank = 0;
        do
        {
            ASSERT_EQ(detail::colex_unrank(rank, k), c);
            ++rank;
        } while (detail::colex_next(c, 7));
        EXPECT_EQ(rank, detail::binomial(7, k));
    }
}

TEST(Dot, Counts)
{
    const auto dot = to_dot(build_hypergraph(two_planes_fan()));
    auto count = [&](const std::string& needle) {
        std::size_t n = 0;
        for (auto p = dot.find(needle); p != std::string::npos; p = dot.find(needle, p + 1))
            ++n;
        return n;
    };
    EXPECT_EQ(count("shape=box"), 12u);
    EXPECT_EQ(count("shape=circle"), 7u);
    EXPECT_EQ(count(" -- "), 24u);
    EXPECT_EQ(to_dot(build_hypergraph(two_planes_fan())), dot);
}

TEST(Dot, SingleCone)
{
    const Complex c(2, {}, {qvec({1, 0}), qvec({0, 1})}, {}, {{{}, {0, 1}}});
    const auto dot = to_dot(build_hypergraph(c));
    EXPECT_NE(dot.find("shape=box"), std::string::npos);
    std::size_t circles = 0;
    for (auto p = dot.find("shape=circle"); p != std::string::npos; p = dot.find("shape=circle", p + 1))
        ++circles;
    EXPECT_EQ(circles, 2u);
}
