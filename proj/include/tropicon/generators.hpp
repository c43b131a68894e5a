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
 * Canonical example complexes.
 */

#ifndef TROPICON_GENERATORS_HPP
#define TROPICON_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "complex.hpp"
#include "matroid.hpp"
#include "tropical.hpp"

namespace tropicon {

/** Rays e1, e2, e3, -e1-e2-e3 of R^3 with all six 2-dimensional cones. */
inline Complex tropical_plane_fan()
{
    std::vector<QVector> rays{qvec({1, 0, 0}), qvec({0, 1, 0}), qvec({0, 0, 1}), qvec({-1, -1, -1})};
    std::vector<CellIndices> cells;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            cells.push_back({{}, {i, j}});
    return Complex(3, {}, std::move(rays), {}, std::move(cells));
}

/**
 * Two standard tropical planes in R^5, one in span(e1, e2, e3) and one in
 * span(e1, e4, e5), glued along the ray of e1.  Ray pool:
 * e1, e2, e3, -e1-e2-e3, e4, e5, -e1-e4-e5.
 */
inline Complex two_planes_fan()
{
    std::vector<QVector> rays{qvec({1, 0, 0, 0, 0}),   qvec({0, 1, 0, 0, 0}), qvec({0, 0, 1, 0, 0}),
                              qvec({-1, -1, -1, 0, 0}), qvec({0, 0, 0, 1, 0}), qvec({0, 0, 0, 0, 1}),
                              qvec({-1, 0, 0, -1, -1})};
    std::vector<CellIndices> cells;
    for (const auto& plane : {std::vector<std::size_t>{0, 1, 2, 3}, std::vector<std::size_t>{0, 4, 5, 6}})
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                cells.push_back({{}, {plane[i], plane[j]}});
    return Complex(5, {}, std::move(rays), {}, std::move(cells));
}

/** Rays e1, e2, -e1-e2 of R^2; `weights` apply in that order. */
inline Complex tropical_line_fan(std::vector<long> weights = {1, 1, 1})
{
    return Complex(2, {}, {qvec({1, 0}), qvec({0, 1}), qvec({-1, -1})}, {},
                   {{{}, {0}}, {{}, {1}}, {{}, {2}}}, std::move(weights));
}

inline std::vector<QVector> cube_vertices(std::size_t d)
{
    std::vector<QVector> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask)
    {
        QVector v(d);
        for (std::size_t i = 0; i < d; ++i)
            v[i] = (mask >> i) & 1 ? 1 : -1;
        out.push_back(std::move(v));
    }
    return out;
}

/** Normal fan of [-1, 1]^d: the 2^d closed orthants. */
inline Complex cube_normal_fan(std::size_t d) { return normal_fan(cube_vertices(d)); }

/**
 * `count` integer points in [-range, range]^dim drawn from a seeded Mersenne
 * twister, redrawn until their convex hull is full-dimensional.
 */
inline std::vector<QVector> random_polytope_vertices(std::uint32_t seed, std::size_t count, std::size_t dim,
                                                     long range = 5)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> coord(-range, range);
    while (true)
    {
        std::vector<QVector> pts;
        for (std::size_t i = 0; i < count; ++i)
        {
            QVector p(dim);
            for (auto& x : p)
                x = coord(rng);
            pts.push_back(std::move(p));
        }
        if (Polyhedron::polytope(dim, pts).dim() == dim)
            return pts;
    }
}

inline Matroid graphic_k4()
{
    return Matroid::graphic({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

}   // namespace tropicon

#endif
