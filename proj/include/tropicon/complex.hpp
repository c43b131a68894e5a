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
 * Pure rational polyhedral complexes with shared generator pools.
 */

#ifndef TROPICON_COMPLEX_HPP
#define TROPICON_COMPLEX_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"
#include "polyhedron.hpp"
#include "rational.hpp"

namespace tropicon {

/** Indices into the vertex and ray pools of a Complex.  No vertices means a cone at 0. */
struct CellIndices
{
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> rays;

    friend bool operator==(const CellIndices&, const CellIndices&) = default;
};

inline std::string cell_label(const CellIndices& c)
{
    std::ostringstream out;
    if (!c.vertices.empty())
    {
        out << "v[";
        for (std::size_t i = 0; i < c.vertices.size(); ++i)
            out << (i ? "," : "") << c.vertices[i];
        out << "]";
    }
    out << "r[";
    for (std::size_t i = 0; i < c.rays.size(); ++i)
        out << (i ? "," : "") << c.rays[i];
    out << "]";
    return out.str();
}

/** Optional result of intersecting two polyhedra. */
inline std::optional<Polyhedron> intersect(const Polyhedron& p, const Polyhedron& q)
{
    HRep h = p.hrep();
    const auto& hq = q.hrep();
    h.inequalities.insert(h.inequalities.end(), hq.inequalities.begin(), hq.inequalities.end());
    h.equations.insert(h.equations.end(), hq.equations.begin(), hq.equations.end());
    try
    {
        return dual_description(h);
    }
    catch (const EmptyPolyhedron&)
    {
        return std::nullopt;
    }
}

/**
 * A polyhedral complex presented by its cells.  Listed cells may include
 * lower-dimensional faces; the facets are the inclusion-maximal listed cells.
 * Every cell contains the declared lineality space.
 */
class Complex
{
    public:
        Complex() = default;

        Complex(std::size_t ambient_dim, std::vector<QVector> vertices, std::vector<QVector> rays,
                std::vector<QVector> lineality, std::vector<CellIndices> cells,
                std::vector<long> weights = {})
            : n_(ambient_dim), vertices_(std::move(vertices)), rays_(std::move(rays)),
              lineality_(canonical_lineality(lineality, ambient_dim)), cells_(std::move(cells)),
              weights_(std::move(weights))
        {
            if (weights_.empty())
                weights_.assign(cells_.size(), 1);
            for (const auto& v : vertices_)
                if (v.size() != n_)
                    throw InvalidComplex("vertex " + to_string(v) + " has wrong length");
            for (auto& r : rays_)
            {
                if (r.size() != n_)
                    throw InvalidComplex("ray " + to_string(r) + " has wrong length");
                if (is_zero(r))
                    throw InvalidComplex("zero ray in pool");
            }
            for (const auto& l : lineality)
                if (l.size() != n_)
                    throw InvalidComplex("lineality generator has wrong length");
            for (auto& c : cells_)
            {
                for (auto i : c.vertices)
                    if (i >= vertices_.size())
                        throw InvalidComplex("vertex index " + std::to_string(i) + " out of range");
                for (auto i : c.rays)
                    if (i >= rays_.size())
                        throw InvalidComplex("ray index " + std::to_string(i) + " out of range");
                std::sort(c.vertices.begin(), c.vertices.end());
                std::sort(c.rays.begin(), c.rays.end());
            }
            polyhedra_.reserve(cells_.size());
            for (const auto& c : cells_)
                polyhedra_.push_back(make_polyhedron(c));
            compute_facets();
        }

        std::size_t ambient_dim() const { return n_; }
        const std::vector<QVector>& vertices() const { return vertices_; }
        const std::vector<QVector>& rays() const { return rays_; }
        const std::vector<QVector>& lineality() const { return lineality_; }
        const std::vector<CellIndices>& cells() const { return cells_; }
        const std::vector<long>& weights() const { return weights_; }
        bool is_fan() const { return vertices_.empty(); }

        const Polyhedron& cell(std::size_t i) const { return polyhedra_.at(i); }

        /** Maximum cell dimension, or -1 for a complex without cells. */
        long dim() const
        {
            long d = -1;
            for (const auto& p : polyhedra_)
                d = std::max(d, static_cast<long>(p.dim()));
            return d;
        }

        /** Indices of inclusion-maximal cells, in listed order. */
        const std::vector<std::size_t>& facet_indices() const { return facets_; }

        long facet_weight(std::size_t cell_index) const { return weights_.at(cell_index); }

        Polyhedron make_polyhedron(const CellIndices& c) const
        {
            std::vector<QVector> vs, rs;
            for (auto i : c.vertices)
                vs.push_back(vertices_[i]);
            for (auto i : c.rays)
                rs.push_back(rays_[i]);
            return Polyhedron(n_, std::move(vs), std::move(rs), lineality_);
        }

    private:
        void compute_facets()
        {
            const long d = dim();
            for (std::size_t i = 0; i < polyhedra_.size(); ++i)
            {
                bool maximal = true;
                if (static_cast<long>(polyhedra_[i].dim()) < d)
                    for (std::size_t j = 0; j < polyhedra_.size() && maximal; ++j)
                        if (j != i && polyhedra_[j].dim() > polyhedra_[i].dim()
                            && detail::tight_set(polyhedra_[i], polyhedra_[j]))
                            maximal = false;
                if (maximal)
                    facets_.push_back(i);
            }
        }

        std::size_t n_ = 0;
        std::vector<QVector> vertices_;
        std::vector<QVector> rays_;
        std::vector<QVector> lineality_;
        std::vector<CellIndices> cells_;
        std::vector<long> weights_;
        std::vector<Polyhedron> polyhedra_;
        std::vector<std::size_t> facets_;
};

/**
 * Assembles a complex from polyhedra, pooling generators by their canonical
 * primitive forms.  Cells are stored relative to the given lineality space.
 */
class ComplexBuilder
{
    public:
        ComplexBuilder(std::size_t ambient_dim, std::vector<QVector> lineality)
            : n_(ambient_dim), lineality_(canonical_lineality(lineality, ambient_dim)) {}

        std::size_t add_ray(const QVector& r)
        {
            QVector p = primitive_q(project_off(r, lineality_));
            auto [it, inserted] = ray_index_.try_emplace(p, rays_.size());
            if (inserted)
                rays_.push_back(p);
            return it->second;
        }

        std::size_t add_vertex(const QVector& v)
        {
            QVector p = project_off(v, lineality_);
            auto [it, inserted] = vertex_index_.try_emplace(p, vertices_.size());
            if (inserted)
                vertices_.push_back(p);
            return it->second;
        }

        /** Adds `p` unless an equal cell is already present; returns its index. */
        std::size_t add_cell(const Polyhedron& p, long weight = 1)
        {
            if (auto it = cell_index_.find(p.canonical()); it != cell_index_.end())
                return it->second;
            const auto& c = p.canonical();
            for (const auto& l : lineality_)
                if (!in_span(l, c.lineality))
                    throw InvalidComplex("cell does not contain the complex lineality");
            CellIndices idx;
            if (!(c.vertices.size() == 1 && is_zero(c.vertices.front())))
                for (const auto& v : c.vertices)
                    idx.vertices.push_back(add_vertex(v));
            for (const auto& r : c.rays)
                idx.rays.push_back(add_ray(r));
            // Cell lineality beyond the complex lineality is stored as opposite rays.
            std::vector<QVector> extra;
            for (const auto& l : c.lineality)
            {
                QVector q = project_off(l, lineality_);
                if (is_zero(q) || in_span(q, extra))
                    continue;
                extra.push_back(q);
                idx.rays.push_back(add_ray(q));
                idx.rays.push_back(add_ray(-q));
            }
            std::sort(idx.vertices.begin(), idx.vertices.end());
            std::sort(idx.rays.begin(), idx.rays.end());
            idx.rays.erase(std::unique(idx.rays.begin(), idx.rays.end()), idx.rays.end());
            cells_.push_back(std::move(idx));
            weights_.push_back(weight);
            cell_index_.emplace(c, cells_.size() - 1);
            return cells_.size() - 1;
        }

        std::size_t cell_count() const { return cells_.size(); }

        Complex build() const
        {
            return Complex(n_, vertices_, rays_, lineality_, cells_, weights_);
        }

    private:
        std::size_t n_;
        std::vector<QVector> lineality_;
        std::vector<QVector> vertices_;
        std::vector<QVector> rays_;
        std::map<QVector, std::size_t> vertex_index_;
        std::map<QVector, std::size_t> ray_index_;
        std::vector<CellIndices> cells_;
        std::vector<long> weights_;
        std::map<CanonicalCell, std::size_t> cell_index_;
};

struct ValidationReport
{
    bool valid = true;
    bool pure = true;
    long dim = -1;
    std::string message;                 // first violation, empty when valid
    std::optional<std::size_t> cell;     // offending cell, if any
    std::optional<std::size_t> other_cell;
};

/**
 * Structural checks: cells nonempty, weights positive, purity, declared
 * lineality contained in every cell, and (optionally, quadratic) that
 * pairwise intersections of facets are common faces.
 */
inline ValidationReport validate_complex(const Complex& c, bool check_intersections = false)
{
    ValidationReport rep;
    rep.dim = c.dim();
    auto fail = [&](std::string msg, std::optional<std::size_t> a = {},
                    std::optional<std::size_t> b = {}) {
        rep.valid = false;
        rep.message = std::move(msg);
        rep.cell = a;
        rep.other_cell = b;
        return rep;
    };
    if (c.cells().empty())
        return fail("complex has no cells");
    if (c.weights().size() != c.cells().size())
        return fail("weight count does not match cell count");
    for (std::size_t i = 0; i < c.cells().size(); ++i)
    {
        if (c.weights()[i] <= 0)
            return fail("non-positive weight on cell " + std::to_string(i), i);
        const auto& lin = c.cell(i).lineality_space();
        for (const auto& l : c.lineality())
            if (!in_span(l, lin))
                return fail("cell " + std::to_string(i) + " does not contain the declared lineality", i);
    }
    for (auto i : c.facet_indices())
        if (static_cast<long>(c.cell(i).dim()) != rep.dim)
        {
            rep.pure = false;
            return fail("impure: maximal cell " + std::to_string(i) + " has dimension "
                            + std::to_string(c.cell(i).dim()) + " but the complex has dimension "
                            + std::to_string(rep.dim),
                        i);
        }
    if (check_intersections)
    {
        const auto& f = c.facet_indices();
        for (std::size_t a = 0; a < f.size(); ++a)
            for (std::size_t b = a + 1; b < f.size(); ++b)
            {
                const auto meet = intersect(c.cell(f[a]), c.cell(f[b]));
                if (!meet)
                    continue;
                if (!is_face_of(*meet, c.cell(f[a])) || !is_face_of(*meet, c.cell(f[b])))
                    return fail("cells " + std::to_string(f[a]) + " and " + std::to_string(f[b])
                                    + " intersect outside a common face",
                                f[a], f[b]);
            }
    }
    return rep;
}

}   // namespace tropicon

#endif
