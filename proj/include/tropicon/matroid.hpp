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
 * Matroids as memoized rank oracles on ground sets {0, ..., n}, their
 * lattices of flats, and Bergman fans in the fine subdivision.
 */

#ifndef TROPICON_MATROID_HPP
#define TROPICON_MATROID_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "error.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace tropicon {

using ElementSet = std::uint32_t;

inline constexpr std::size_t kDefaultMaxGroundSize = 12;
inline constexpr std::size_t kHardMaxGroundSize = 31;

inline std::vector<int> elements_of(ElementSet s)
{
    std::vector<int> out;
    for (int i = 0; s; ++i, s >>= 1)
        if (s & 1u)
            out.push_back(i);
    return out;
}

inline ElementSet set_of(const std::vector<int>& elements)
{
    ElementSet s = 0;
    for (int e : elements)
        s |= ElementSet{1} << e;
    return s;
}

inline int cardinality(ElementSet s) { return std::popcount(s); }

/** Lexicographic order on sorted element lists. */
inline bool lex_less(ElementSet a, ElementSet b) { return elements_of(a) < elements_of(b); }

struct Flat
{
    ElementSet elements = 0;
    int rank = 0;

    std::vector<int> element_list() const { return elements_of(elements); }
    friend bool operator==(const Flat&, const Flat&) = default;
};

/** Flats ordered by rank, then lexicographically by elements. */
inline bool flat_less(const Flat& a, const Flat& b)
{
    if (a.rank != b.rank)
        return a.rank < b.rank;
    return lex_less(a.elements, b.elements);
}

struct FlagChain
{
    std::vector<Flat> flats;   // strictly increasing, proper, nonempty
};

enum class MatroidKind { Uniform, Graphic, Linear, Bases, Contraction };

class Matroid
{
    public:
        using RankFunction = std::function<int(ElementSet)>;

        Matroid(std::size_t ground_size, MatroidKind kind, RankFunction rank,
                std::size_t max_ground = kDefaultMaxGroundSize)
            : n_(ground_size), kind_(kind), oracle_(std::make_shared<Oracle>(std::move(rank)))
        {
            if (ground_size > std::min(max_ground, kHardMaxGroundSize))
                throw BadMatroid("ground set of size " + std::to_string(ground_size)
                                 + " exceeds the configured cap of "
                                 + std::to_string(std::min(max_ground, kHardMaxGroundSize)));
            for (std::size_t i = 0; i < n_; ++i)
                labels_.push_back(static_cast<int>(i));
        }

        static Matroid uniform(int r, int n, std::size_t max_ground = kDefaultMaxGroundSize)
        {
            if (n < 0 || r < 0 || r > n)
                throw BadMatroid("uniform matroid needs 0 <= r <= n, got r=" + std::to_string(r)
                                 + " n=" + std::to_string(n));
            return Matroid(static_cast<std::size_t>(n), MatroidKind::Uniform,
                           [r](ElementSet s) { return std::min(cardinality(s), r); }, max_ground);
        }

        /** Cycle matroid of a multigraph; rank is the size of a spanning forest. */
        static Matroid graphic(std::vector<std::pair<int, int>> edges,
                               std::size_t max_ground = kDefaultMaxGroundSize)
        {
            int vertices = 0;
            for (auto [u, v] : edges)
            {
                if (u < 0 || v < 0)
                    throw BadMatroid("negative vertex in graphic matroid");
                vertices = std::max({vertices, u + 1, v + 1});
            }
            auto rank = [edges, vertices](ElementSet s) {
                std::vector<int> parent(static_cast<std::size_t>(vertices));
                for (int i = 0; i < vertices; ++i)
                    parent[static_cast<std::size_t>(i)] = i;
                std::function<int(int)> find = [&](int x) {
                    while (parent[static_cast<std::size_t>(x)] != x)
                        x = parent[static_cast<std::size_t>(x)] =
                            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                    return x;
                };
                int r = 0;
                for (int e : elements_of(s))
                {
                    const int a = find(edges[static_cast<std::size_t>(e)].first);
                    const int b = find(edges[static_cast<std::size_t>(e)].second);
                    if (a != b)
                    {
                        parent[static_cast<std::size_t>(a)] = b;
                        ++r;
                    }
                }
                return r;
            };
            return Matroid(edges.size(), MatroidKind::Graphic, rank, max_ground);
        }

        /** Column matroid of a rational matrix given by its columns. */
        static Matroid linear(std::vector<QVector> columns, std::size_t max_ground = kDefaultMaxGroundSize)
        {
            const std::size_t m = columns.empty() ? 0 : columns.front().size();
            for (const auto& c : columns)
                if (c.size() != m)
                    throw BadMatroid("linear matroid columns of unequal length");
            auto rank = [columns, m](ElementSet s) {
                std::vector<QVector> sel;
                for (int e : elements_of(s))
                    sel.push_back(columns[static_cast<std::size_t>(e)]);
                return static_cast<int>(rank_of(sel, m));
            };
            return Matroid(columns.size(), MatroidKind::Linear, rank, max_ground);
        }

        /** Rank is max |S ∩ B| over the listed bases. */
        static Matroid from_bases(int n, std::vector<std::vector<int>> bases,
                                  std::size_t max_ground = kDefaultMaxGroundSize)
        {
            if (bases.empty())
                throw BadMatroid("a matroid needs at least one basis");
            std::vector<ElementSet> sets;
            for (const auto& b : bases)
            {
                for (int e : b)
                    if (e < 0 || e >= n)
                        throw BadMatroid("basis element " + std::to_string(e) + " outside ground set");
                sets.push_back(set_of(b));
                if (cardinality(sets.back()) != cardinality(sets.front()))
                    throw BadMatroid("bases of different sizes");
            }
            auto rank = [sets](ElementSet s) {
                int r = 0;
                for (auto b : sets)
                    r = std::max(r, cardinality(s & b));
                return r;
            };
            return Matroid(static_cast<std::size_t>(n), MatroidKind::Bases, rank, max_ground);
        }

        std::size_t ground_size() const { return n_; }
        ElementSet ground_set() const
        {
            return n_ == 32 ? ~ElementSet{0} : ((ElementSet{1} << n_) - 1);
        }
        MatroidKind kind() const { return kind_; }

        /** Original element labels (differ from 0..n-1 after contraction). */
        const std::vector<int>& labels() const { return labels_; }

        int rank(ElementSet s) const { return oracle_->rank(s); }
        int rank() const { return rank(ground_set()); }

        ElementSet closure(ElementSet s) const
        {
            const int r = rank(s);
            ElementSet out = s;
            for (std::size_t e = 0; e < n_; ++e)
            {
                const ElementSet bit = ElementSet{1} << e;
                if (!(s & bit) && rank(s | bit) == r)
                    out |= bit;
            }
            return out;
        }

        /** M / e on the remaining elements, relabeled 0..n-2 in order. */
        Matroid contract(int e) const
        {
            if (e < 0 || static_cast<std::size_t>(e) >= n_)
                throw BadMatroid("contraction element out of range");
            const ElementSet ebit = ElementSet{1} << e;
            if (rank(ebit) == 0)
                throw LoopContraction("element " + std::to_string(e) + " is a loop");
            std::vector<int> keep;
            for (std::size_t i = 0; i < n_; ++i)
                if (static_cast<int>(i) != e)
                    keep.push_back(static_cast<int>(i));
            auto parent = oracle_;
            auto rank_fn = [parent, keep, ebit](ElementSet s) {
                ElementSet lifted = ebit;
                for (std::size_t i = 0; i < keep.size(); ++i)
                    if (s & (ElementSet{1} << i))
                        lifted |= ElementSet{1} << keep[i];
                return parent->rank(lifted) - 1;
            };
            Matroid m(n_ - 1, MatroidKind::Contraction, rank_fn, kHardMaxGroundSize);
            m.labels_.clear();
            for (int i : keep)
                m.labels_.push_back(labels_[static_cast<std::size_t>(i)]);
            return m;
        }

    private:
        class Oracle
        {
            public:
                explicit Oracle(RankFunction f) : f_(std::move(f)) {}

                int rank(ElementSet s)
                {
                    {
                        std::lock_guard<std::mutex> lock(mutex_);
                        if (auto it = memo_.find(s); it != memo_.end())
                            return it->second;
                    }
                    const int r = f_(s);
                    std::lock_guard<std::mutex> lock(mutex_);
                    memo_.emplace(s, r);
                    return r;
                }

            private:
                RankFunction f_;
                std::mutex mutex_;
                std::unordered_map<ElementSet, int> memo_;
        };

        std::size_t n_;
        MatroidKind kind_;
        std::vector<int> labels_;
        std::shared_ptr<Oracle> oracle_;
};

/** Minimal flat containing `s`, and the rank of `s`. */
inline std::pair<Flat, int> closure_and_rank(const Matroid& m, ElementSet s)
{
    const int r = m.rank(s);
    return {Flat{m.closure(s), r}, r};
}

inline Matroid contraction(const Matroid& m, int e) { return m.contract(e); }

struct ParallelClasses
{
    std::vector<ElementSet> classes;   // ordered by least element
    ElementSet loops = 0;
};

inline ParallelClasses parallel_classes_and_loops(const Matroid& m)
{
    ParallelClasses out;
    ElementSet seen = 0;
    for (std::size_t e = 0; e < m.ground_size(); ++e)
    {
        const ElementSet bit = ElementSet{1} << e;
        if (m.rank(bit) == 0)
        {
            out.loops |= bit;
            continue;
        }
        if (seen & bit)
            continue;
        ElementSet cls = 0;
        for (std::size_t f = 0; f < m.ground_size(); ++f)
        {
            const ElementSet fb = ElementSet{1} << f;
            if (m.rank(fb) == 1 && m.rank(bit | fb) == 1)
                cls |= fb;
        }
        seen |= cls;
        out.classes.push_back(cls);
    }
    return out;
}

/**
 * All flats F with ∅ ⊊ F ⊊ E, sorted by rank and then lexicographically.
 * Built upward from the closure of the empty set by closing covers.
 */
inline std::vector<Flat> proper_flats(const Matroid& m)
{
    const ElementSet ground = m.ground_set();
    std::vector<Flat> out;
    std::vector<ElementSet> layer{m.closure(0)};
    int r = 0;
    while (!layer.empty())
    {
        for (auto f : layer)
            if (f != 0 && f != ground)
                out.push_back({f, r});
        std::vector<ElementSet> next;
        for (auto f : layer)
        {
            if (f == ground)
                continue;
            for (std::size_t e = 0; e < m.ground_size(); ++e)
            {
                const ElementSet bit = ElementSet{1} << e;
                if (f & bit)
                    continue;
                const ElementSet g = m.closure(f | bit);
                if (std::find(next.begin(), next.end(), g) == next.end())
                    next.push_back(g);
            }
        }
        layer = std::move(next);
        ++r;
    }
    std::sort(out.begin(), out.end(), flat_less);
    return out;
}

inline std::vector<std::vector<Flat>> flats_by_rank(const std::vector<Flat>& flats)
{
    std::vector<std::vector<Flat>> out;
    for (const auto& f : flats)
    {
        if (out.size() <= static_cast<std::size_t>(f.rank))
            out.resize(static_cast<std::size_t>(f.rank) + 1);
        out[static_cast<std::size_t>(f.rank)].push_back(f);
    }
    return out;
}

inline void require_loop_free(const Matroid& m)
{
    const auto pc = parallel_classes_and_loops(m);
    if (pc.loops != 0)
        throw HasLoops("matroid has loops " + [&] {
            std::string s;
            for (int e : elements_of(pc.loops))
                s += (s.empty() ? "" : ",") + std::to_string(e);
            return s;
        }());
}

/**
 * Chains F1 ⊊ ... ⊊ Fd of proper nonempty flats with rank(Fi) = i, where the
 * matroid has rank d + 1.  Enumerated depth-first in flat order.
 */
inline std::vector<FlagChain> maximal_chains(const Matroid& m)
{
    require_loop_free(m);
    const auto flats = proper_flats(m);
    const int d = m.rank() - 1;
    std::vector<FlagChain> out;
    if (d <= 0)
    {
        if (m.rank() == 1)
            out.push_back({});
        return out;
    }
    FlagChain current;
    std::function<void()> extend = [&]() {
        if (static_cast<int>(current.flats.size()) == d)
        {
            out.push_back(current);
            return;
        }
        const int want = static_cast<int>(current.flats.size()) + 1;
        const ElementSet below = current.flats.empty() ? 0 : current.flats.back().elements;
        for (const auto& f : flats)
        {
            if (f.rank != want || (f.elements & below) != below)
                continue;
            current.flats.push_back(f);
            extend();
            current.flats.pop_back();
        }
    };
    extend();
    return out;
}

inline QVector indicator_vector(ElementSet s, std::size_t n)
{
    QVector v = zero_vector(n);
    for (int e : elements_of(s))
        v[static_cast<std::size_t>(e)] = 1;
    return v;
}

/**
 * Bergman fan of a loop-free matroid in its fine subdivision: one ray per
 * proper nonempty flat (its 0/1 indicator vector), lineality spanned by the
 * all-ones vector, and one maximal cone per maximal chain of flats.
 */
inline Complex bergman_fine(const Matroid& m)
{
    require_loop_free(m);
    const std::size_t n = m.ground_size();
    if (n == 0)
        throw BadMatroid("Bergman fan of the empty matroid");
    const auto flats = proper_flats(m);
    std::vector<QVector> rays;
    std::map<ElementSet, std::size_t> ray_of;
    for (const auto& f : flats)
    {
        ray_of[f.elements] = rays.size();
        rays.push_back(indicator_vector(f.elements, n));
    }
    std::vector<CellIndices> cells;
    for (const auto& chain : maximal_chains(m))
    {
        CellIndices c;
        for (const auto& f : chain.flats)
            c.rays.push_back(ray_of.at(f.elements));
        cells.push_back(std::move(c));
    }
    return Complex(n, {}, std::move(rays), {QVector(n, Rational(1))}, std::move(cells));
}

/** Exhaustive rank-axiom check: normalization, unit increase, monotone, submodular. */
inline bool check_rank_axioms(const Matroid& m)
{
    const std::size_t n = m.ground_size();
    if (n > 16)
        throw BadMatroid("exhaustive rank-axiom check limited to 16 elements");
    if (m.rank(0) != 0)
        return false;
    const ElementSet full = m.ground_set();
    for (ElementSet s = 0;; ++s)
    {
        const int rs = m.rank(s);
        for (std::size_t e = 0; e < n; ++e)
        {
            const ElementSet bit = ElementSet{1} << e;
            if (s & bit)
                continue;
            const int re = m.rank(s | bit);
            if (re < rs || re > rs + 1)
                return false;
        }
        if (s == full)
            break;
    }
    // submodularity on pairs of single-element extensions is equivalent to the full axiom
    for (ElementSet s = 0;; ++s)
    {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
            {
                const ElementSet ab = ElementSet{1} << a, bb = ElementSet{1} << b;
                if ((s & ab) || (s & bb))
                    continue;
                if (m.rank(s | ab) + m.rank(s | bb) < m.rank(s | ab | bb) + m.rank(s))
                    return false;
            }
        if (s == full)
            break;
    }
    return true;
}

}   // namespace tropicon

#endif
