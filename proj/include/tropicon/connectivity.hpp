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
 * Facet-ridge incidence hypergraphs and exhaustive k-connectivity
 * certification through codimension one.
 *
 * Removing a facet removes it together with every ridge (hyperedge) that
 * contains it.  A hypergraph is k-connected when every removal of k - 1
 * facets leaves the remaining facets connected through the remaining ridges;
 * remainders with at most one facet count as connected.
 */

#ifndef TROPICON_CONNECTIVITY_HPP
#define TROPICON_CONNECTIVITY_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "complex.hpp"
#include "error.hpp"
#include "polyhedron.hpp"

namespace tropicon {

inline constexpr std::uint64_t kDefaultSubsetBudget = 10'000'000;

struct FacetRidgeHypergraph
{
    std::vector<std::string> facet_labels;
    std::vector<std::size_t> facet_cells;               // cell index in the source complex
    std::vector<std::vector<std::size_t>> hyperedges;   // sorted facet ids per ridge
    std::vector<std::string> ridge_labels;
    std::vector<CanonicalCell> ridge_keys;

    std::size_t facet_count() const { return facet_labels.size(); }
    std::size_t ridge_count() const { return hyperedges.size(); }

    /** Hyperedge ids containing each facet. */
    std::vector<std::vector<std::size_t>> incidence() const
    {
        std::vector<std::vector<std::size_t>> inc(facet_count());
        for (std::size_t r = 0; r < hyperedges.size(); ++r)
            for (auto f : hyperedges[r])
                inc[f].push_back(r);
        return inc;
    }
};

inline std::string describe_cell(const CanonicalCell& c)
{
    std::ostringstream out;
    bool apex = c.vertices.size() == 1 && is_zero(c.vertices.front());
    if (!apex)
    {
        out << "conv{";
        for (std::size_t i = 0; i < c.vertices.size(); ++i)
            out << (i ? " " : "") << to_string(c.vertices[i]);
        out << "}";
        if (!c.rays.empty())
            out << "+";
    }
    if (apex || !c.rays.empty())
    {
        out << "cone{";
        for (std::size_t i = 0; i < c.rays.size(); ++i)
            out << (i ? " " : "") << to_string(c.rays[i]);
        out << "}";
    }
    return out.str();
}

/**
 * Facets are the maximal cells in listed order; ridges are the distinct
 * codimension-one faces of facets, numbered by first appearance.
 */
inline FacetRidgeHypergraph build_hypergraph(const Complex& c)
{
    const auto report = validate_complex(c);
    if (!report.valid)
        throw InvalidComplex(report.message);
    FacetRidgeHypergraph h;
    std::map<CanonicalCell, std::size_t> ridge_id;
    const auto& facets = c.facet_indices();
    for (std::size_t f = 0; f < facets.size(); ++f)
    {
        h.facet_labels.push_back(cell_label(c.cells()[facets[f]]));
        h.facet_cells.push_back(facets[f]);
        for (const auto& face : codim1_faces(c.cell(facets[f])))
        {
            const auto& key = face.canonical();
            auto [it, inserted] = ridge_id.try_emplace(key, h.hyperedges.size());
            if (inserted)
            {
                h.hyperedges.emplace_back();
                h.ridge_labels.push_back(describe_cell(key));
                h.ridge_keys.push_back(key);
            }
            h.hyperedges[it->second].push_back(f);
        }
    }
    for (auto& e : h.hyperedges)
    {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
    }
    return h;
}

/** Hyperedge lists compared as multisets under the identity map on facets. */
inline bool same_incidence(const FacetRidgeHypergraph& a, const FacetRidgeHypergraph& b)
{
    if (a.facet_count() != b.facet_count())
        return false;
    auto ea = a.hyperedges, eb = b.hyperedges;
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return ea == eb;
}

namespace detail {

/** Component count of the facets not in `removed`, with closed-facet semantics. */
inline std::size_t components_after_removal(const FacetRidgeHypergraph& h,
                                            const std::vector<std::vector<std::size_t>>& inc,
                                            const std::vector<char>& removed, bool clique)
{
    const std::size_t n = h.facet_count();
    std::vector<char> edge_alive(h.ridge_count(), 1);
    if (!clique)
        for (std::size_t f = 0; f < n; ++f)
            if (removed[f])
                for (auto r : inc[f])
                    edge_alive[r] = 0;
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack;
    std::size_t components = 0;
    for (std::size_t s = 0; s < n; ++s)
    {
        if (removed[s] || seen[s])
            continue;
        ++components;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty())
        {
            const auto f = stack.back();
            stack.pop_back();
            for (auto r : inc[f])
            {
                if (!edge_alive[r])
                    continue;
                for (auto g : h.hyperedges[r])
                    if (!removed[g] && !seen[g])
                    {
                        seen[g] = 1;
                        stack.push_back(g);
                    }
            }
        }
    }
    return components;
}

inline std::vector<char> mask_of(std::size_t n, const std::vector<std::size_t>& removed)
{
    std::vector<char> mask(n, 0);
    for (auto f : removed)
    {
        if (f >= n)
            throw Error("facet id " + std::to_string(f) + " out of range");
        mask[f] = 1;
    }
    return mask;
}

/** C(n, k), saturating at the maximum of uint64. */
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
    {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

/** The k-subset of rank `rank` in colexicographic order. */
inline std::vector<std::size_t> colex_unrank(std::uint64_t rank, std::size_t k)
{
    std::vector<std::size_t> c(k);
    for (std::size_t i = k; i-- > 0;)
    {
        std::uint64_t v = i;
        while (binomial(v + 1, i + 1) <= rank)
            ++v;
        c[i] = static_cast<std::size_t>(v);
        rank -= binomial(v, i + 1);
    }
    return c;
}

/** Advances to the next k-subset of {0..n-1} in colex order; false at the end. */
inline bool colex_next(std::vector<std::size_t>& c, std::size_t n)
{
    const std::size_t k = c.size();
    for (std::size_t i = 0; i < k; ++i)
    {
        const std::size_t limit = (i + 1 < k) ? c[i + 1] : n;
        if (c[i] + 1 < limit)
        {
            ++c[i];
            for (std::size_t j = 0; j < i; ++j)
                c[j] = j;
            return true;
        }
    }
    return false;
}

/**
 * Lowest colex rank in [0, count) whose removal disconnects, split across
 * `jobs` workers.  Returns `count` if none does.
 */
inline std::uint64_t first_disconnecting(const FacetRidgeHypergraph& h, std::size_t k,
                                         std::uint64_t count, unsigned jobs)
{
    const auto inc = h.incidence();
    const std::size_t n = h.facet_count();
    std::atomic<std::uint64_t> best{count};
    auto work = [&](std::uint64_t begin, std::uint64_t end) {
        if (begin >= end)
            return;
        auto subset = colex_unrank(begin, k);
        std::vector<char> mask(n, 0);
        for (std::uint64_t r = begin; r < end; ++r)
        {
            if (r >= best.load(std::memory_order_relaxed))
                return;
            std::fill(mask.begin(), mask.end(), 0);
            for (auto f : subset)
                mask[f] = 1;
            if (n - k >= 2 && components_after_removal(h, inc, mask, false) > 1)
            {
                std::uint64_t cur = best.load();
                while (r < cur && !best.compare_exchange_weak(cur, r)) {}
                return;
            }
            if (r + 1 < end)
                colex_next(subset, n);
        }
    };
    jobs = std::max(1u, jobs);
    if (jobs == 1 || count < 2 * jobs)
        work(0, count);
    else
    {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (count + jobs - 1) / jobs;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(work, j * chunk, std::min(count, (j + 1) * chunk));
        for (auto& t : pool)
            t.join();
    }
    return best.load();
}

}   // namespace detail

inline bool connected_after_removal(const FacetRidgeHypergraph& h, const std::vector<std::size_t>& removed)
{
    const auto mask = detail::mask_of(h.facet_count(), removed);
    return detail::components_after_removal(h, h.incidence(), mask, false) <= 1;
}

/**
 * Comparison semantics where each hyperedge is replaced by a clique: removed
 * facets drop out but their ridges keep joining the remaining facets.
 */
inline bool connected_after_removal_clique(const FacetRidgeHypergraph& h,
                                           const std::vector<std::size_t>& removed)
{
    const auto mask = detail::mask_of(h.facet_count(), removed);
    return detail::components_after_removal(h, h.incidence(), mask, true) <= 1;
}

inline std::size_t component_count(const FacetRidgeHypergraph& h)
{
    return detail::components_after_removal(h, h.incidence(), std::vector<char>(h.facet_count(), 0),
                                            false);
}

struct SearchOptions
{
    std::uint64_t budget = kDefaultSubsetBudget;
    unsigned jobs = 1;
};

struct ConnectivityCertificate
{
    std::size_t k = 1;
    bool verdict = true;
    std::optional<std::vector<std::size_t>> witness;   // disconnecting (k-1)-set when verdict is false
    std::uint64_t subsets_examined = 0;
};

/**
 * Tests every (k-1)-subset of facets in colex order.  A false verdict
 * carries the colex-least disconnecting subset; subsets_examined counts the
 * subsets up to and including it.  Throws BudgetExceeded if the budget runs
 * out before a verdict.
 */
inline ConnectivityCertificate is_k_connected(const FacetRidgeHypergraph& h, std::size_t k,
                                              const SearchOptions& opt = {})
{
    if (k < 1)
        throw Error("connectivity order must be at least 1");
    ConnectivityCertificate cert;
    cert.k = k;
    const std::size_t n = h.facet_count();
    const std::size_t r = k - 1;
    if (r > n || n - r <= 1)
    {
        cert.subsets_examined = detail::binomial(n, r);
        return cert;
    }
    const std::uint64_t total = detail::binomial(n, r);
    const std::uint64_t scan = std::min(total, opt.budget);
    const std::uint64_t hit = detail::first_disconnecting(h, r, scan, opt.jobs);
    if (hit < scan)
    {
        cert.verdict = false;
        cert.witness = detail::colex_unrank(hit, r);
        cert.subsets_examined = hit + 1;
        return cert;
    }
    if (scan < total)
        throw BudgetExceeded(scan, opt.budget);
    cert.subsets_examined = total;
    return cert;
}

struct FacetCut
{
    std::size_t size = 0;
    std::vector<std::size_t> witness;
};

namespace detail {

/** Fewest other facets whose removal kills every ridge through `f`, with the set. */
inline std::vector<std::size_t> isolating_set(const FacetRidgeHypergraph& h,
                                              const std::vector<std::vector<std::size_t>>& inc,
                                              std::size_t f)
{
    std::vector<std::vector<std::size_t>> needs;   // each must be hit
    std::vector<std::size_t> pool;
    for (auto r : inc[f])
    {
        std::vector<std::size_t> others;
        for (auto g : h.hyperedges[r])
            if (g != f)
                others.push_back(g);
        if (others.empty())
            continue;
        for (auto g : others)
            if (std::find(pool.begin(), pool.end(), g) == pool.end())
                pool.push_back(g);
        needs.push_back(std::move(others));
    }
    std::sort(pool.begin(), pool.end());
    for (std::size_t s = 0; s <= pool.size(); ++s)
    {
        if (s == 0)
        {
            if (needs.empty())
                return {};
            continue;
        }
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i)
            idx[i] = i;
        do
        {
            std::vector<std::size_t> chosen;
            for (auto i : idx)
                chosen.push_back(pool[i]);
            const bool hits = std::all_of(needs.begin(), needs.end(), [&](const auto& need) {
                return std::any_of(need.begin(), need.end(), [&](std::size_t g) {
                    return std::binary_search(chosen.begin(), chosen.end(), g);
                });
            });
            if (hits)
                return chosen;
        } while (colex_next(idx, pool.size()));
    }
    return pool;
}

}   // namespace detail

/**
 * Smallest facet set whose removal leaves at least two facets that are not
 * connected.  Cardinalities are searched upward, capped by the cheapest
 * isolation of a single facet.  Returns nothing when no such set exists.
 */
inline std::optional<FacetCut> min_facet_cut(const FacetRidgeHypergraph& h, const SearchOptions& opt = {})
{
    const std::size_t n = h.facet_count();
    if (n < 2)
        throw TooFewFacets("min_facet_cut needs at least two facets, got " + std::to_string(n));
    const auto inc = h.incidence();
    std::optional<FacetCut> bound;
    for (std::size_t f = 0; f < n; ++f)
    {
        auto iso = detail::isolating_set(h, inc, f);
        if (iso.size() + 2 > n)
            continue;
        if (!bound || iso.size() < bound->size)
            bound = FacetCut{iso.size(), std::move(iso)};
    }
    const std::size_t limit = bound ? bound->size : n - 1;   // sizes < limit still to search
    std::uint64_t spent = 0;
    for (std::size_t s = 0; s < limit && s + 2 <= n; ++s)
    {
        const std::uint64_t total = detail::binomial(n, s);
        if (spent + total > opt.budget)
            throw BudgetExceeded(spent, opt.budget);
        const std::uint64_t hit = detail::first_disconnecting(h, s, total, opt.jobs);
        spent += hit < total ? hit + 1 : total;
        if (hit < total)
            return FacetCut{s, detail::colex_unrank(hit, s)};
    }
    return bound;
}

/** Bipartite facet/ridge incidence graph in Graphviz DOT. */
inline std::string to_dot(const FacetRidgeHypergraph& h, const std::string& name = "facet_ridge")
{
    auto escape = [](const std::string& s) {
        std::string out;
        for (char ch : s)
        {
            if (ch == '"' || ch == '\\')
                out += '\\';
            out += ch;
        }
        return out;
    };
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (std::size_t f = 0; f < h.facet_count(); ++f)
        out << "  f" << f << " [shape=box, label=\"" << escape(h.facet_labels[f]) << "\"];\n";
    for (std::size_t r = 0; r < h.ridge_count(); ++r)
        out << "  r" << r << " [shape=circle, label=\"" << escape(h.ridge_labels[r]) << "\"];\n";
    for (std::size_t r = 0; r < h.ridge_count(); ++r)
        for (auto f : h.hyperedges[r])
            out << "  f" << f << " -- r" << r << ";\n";
    out << "}\n";
    return out.str();
}

}   // namespace tropicon

#endif
