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
 * Operations on weighted rational complexes used to certify connectivity of
 * tropical varieties: lineality quotients, stars, normal fans and their
 * skeleta, recession fans, balancing, transverse hyperplane sections and
 * separating-hyperplane witnesses.
 */

#ifndef TROPICON_TROPICAL_HPP
#define TROPICON_TROPICAL_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "complex.hpp"
#include "connectivity.hpp"
#include "error.hpp"
#include "linalg.hpp"
#include "lp.hpp"
#include "polyhedron.hpp"

namespace tropicon {

/** A complex whose cell weights are meaningful. */
using WeightedComplex = Complex;

inline std::vector<QVector> intersect_subspaces(const std::vector<QVector>& a,
                                                const std::vector<QVector>& b, std::size_t n)
{
    auto perp = orthogonal_complement(span_basis(a, n), n);
    const auto pb = orthogonal_complement(span_basis(b, n), n);
    perp.insert(perp.end(), pb.begin(), pb.end());
    return canonical_lineality(orthogonal_complement(span_basis(perp, n), n), n);
}

/**
 * Largest subspace contained in the lineality space of every facet.  Throws
 * DeclarationMismatch if the declared lineality is not inside it.
 */
inline std::vector<QVector> complex_lineality_space(const Complex& c)
{
    const std::size_t n = c.ambient_dim();
    std::vector<QVector> space;
    bool first = true;
    for (auto i : c.facet_indices())
    {
        const auto& lin = c.cell(i).lineality_space();
        space = first ? lin : intersect_subspaces(space, lin, n);
        first = false;
    }
    space = canonical_lineality(space, n);
    for (const auto& l : c.lineality())
        if (!in_span(l, space))
            throw DeclarationMismatch("declared lineality " + to_string(l)
                                      + " is not contained in every facet");
    return space;
}

struct QuotientResult
{
    Complex complex;
    IntMatrix projection;   // rows map R^n onto R^(n - l)
};

/**
 * Projects along the lineality space with an integer matrix whose rows are
 * the Hermite basis of the integer vectors orthogonal to it.  Cell order is
 * preserved, so facets correspond index for index.
 */
inline QuotientResult quotient_by_lineality(const Complex& c)
{
    const std::size_t n = c.ambient_dim();
    const auto lin = complex_lineality_space(c);
    IntMatrix proj = integer_kernel(integral_rows(lin), n);
    const std::vector<QVector> rows = to_qrows(proj);
    const std::size_t m = rows.size();
    const QMatrix p(rows, n);
    std::vector<QVector> verts;
    for (const auto& v : c.vertices())
        verts.push_back(p * v);
    std::vector<QVector> rays;
    std::vector<std::optional<std::size_t>> ray_map;
    for (const auto& r : c.rays())
    {
        const QVector img = p * r;
        if (is_zero(img))
        {
            ray_map.push_back(std::nullopt);
            continue;
        }
        ray_map.push_back(rays.size());
        rays.push_back(primitive_q(img));
    }
    std::vector<CellIndices> cells;
    for (const auto& cell : c.cells())
    {
        CellIndices q;
        q.vertices = cell.vertices;
        for (auto r : cell.rays)
            if (ray_map[r])
                q.rays.push_back(*ray_map[r]);
        cells.push_back(std::move(q));
    }
    return {Complex(m, std::move(verts), std::move(rays), {}, std::move(cells), c.weights()), std::move(proj)};
}

/**
 * Star of `face`: for each facet containing it, the cone of directions from
 * a relative-interior point of the face into the facet, with the face's
 * direction space added to the lineality.
 */
inline Complex star(const Complex& c, const Polyhedron& face)
{
    const std::size_t n = c.ambient_dim();
    std::vector<QVector> lin = c.lineality();
    const auto dir = face.direction_space();
    lin.insert(lin.end(), dir.begin(), dir.end());
    ComplexBuilder builder(n, lin);
    const QVector p = relint_point(face);
    bool found = false;
    for (auto i : c.facet_indices())
    {
        const auto& sigma = c.cell(i);
        if (!is_face_of(face, sigma))
            continue;
        found = true;
        std::vector<QVector> gens;
        for (const auto& v : sigma.points())
        {
            QVector d = v - p;
            if (!is_zero(d))
                gens.push_back(d);
        }
        gens.insert(gens.end(), sigma.rays().begin(), sigma.rays().end());
        builder.add_cell(Polyhedron::cone(n, gens, lin), c.facet_weight(i));
    }
    if (!found)
        throw NotInComplex("face " + describe_cell(face.canonical()) + " is not a face of any facet");
    return builder.build();
}

/**
 * Outer normal fan of conv(vertices): the maximal cone at vertex v is
 * {h : h·v >= h·w for all vertices w}.  Lineality is the normal space of the
 * polytope's affine span.  Cones follow the sorted vertex order.
 */
inline WeightedComplex normal_fan(const std::vector<QVector>& vertices)
{
    if (vertices.empty())
        throw EmptyPolyhedron("normal fan of an empty point set");
    const std::size_t n = vertices.front().size();
    const auto poly = Polyhedron::polytope(n, vertices);
    const auto& verts = poly.canonical().vertices;
    const auto lin = canonical_lineality(orthogonal_complement(poly.direction_space(), n), n);
    ComplexBuilder builder(n, lin);
    for (const auto& v : verts)
    {
        HRep h;
        h.ambient_dim = n;
        for (const auto& w : verts)
            if (w != v)
                h.inequalities.push_back({v - w, 0});
        builder.add_cell(dual_description(h));
    }
    return builder.build();
}

/**
 * All faces of dimension `k` of the facets of `c`, as a pure k-dimensional
 * complex with the same lineality.
 */
inline Complex skeleton(const Complex& c, std::size_t k)
{
    const long d = c.dim();
    if (k < 1 || static_cast<long>(k) > d)
        throw Error("skeleton dimension " + std::to_string(k) + " outside [1, " + std::to_string(d) + "]");
    const auto lin = complex_lineality_space(c);
    if (k < lin.size())
        throw LinealityObstruction("skeleton of dimension " + std::to_string(k)
                                   + " lies below the lineality dimension " + std::to_string(lin.size()));
    std::vector<Polyhedron> level;
    std::map<CanonicalCell, bool> seen;
    for (auto i : c.facet_indices())
        if (seen.emplace(c.cell(i).canonical(), true).second)
            level.push_back(c.cell(i));
    for (long dim = d; dim > static_cast<long>(k); --dim)
    {
        std::vector<Polyhedron> next;
        std::map<CanonicalCell, bool> next_seen;
        for (const auto& p : level)
            for (const auto& f : codim1_faces(p))
                if (next_seen.emplace(f.canonical(), true).second)
                    next.push_back(f);
        level = std::move(next);
    }
    ComplexBuilder builder(c.ambient_dim(), c.lineality());
    for (const auto& p : level)
        builder.add_cell(p);
    return builder.build();
}

struct RecessionResult
{
    Complex fan;
    bool pure = true;
};

/** Recession cones (rays plus lineality) of every listed cell, deduplicated. */
inline RecessionResult recession_fan(const Complex& c)
{
    ComplexBuilder builder(c.ambient_dim(), c.lineality());
    for (std::size_t i = 0; i < c.cells().size(); ++i)
    {
        const auto& p = c.cell(i);
        builder.add_cell(Polyhedron::cone(c.ambient_dim(), p.rays(), p.lineality_generators()));
    }
    RecessionResult out{builder.build(), true};
    out.pure = validate_complex(out.fan).valid;
    return out;
}

struct RidgeBalance
{
    std::size_t ridge = 0;
    std::string label;
    QVector normal_sum;   // Σ weight·(lattice normal)
    QVector residual;     // normal_sum projected off span(ridge)
    bool balanced = true;
};

struct BalancingReport
{
    bool balanced = true;
    std::vector<RidgeBalance> ridges;

    std::vector<RidgeBalance> failures() const
    {
        std::vector<RidgeBalance> out;
        for (const auto& r : ridges)
            if (!r.balanced)
                out.push_back(r);
        return out;
    }
};

inline Polyhedron polyhedron_of(const CanonicalCell& key, std::size_t n)
{
    if (key.vertices.size() == 1 && is_zero(key.vertices.front()))
        return Polyhedron::cone(n, key.rays, key.lineality);
    return Polyhedron(n, key.vertices, key.rays, key.lineality);
}

/**
 * At every ridge, the weighted sum of lattice normal generators of the
 * facets around it must lie in the ridge's direction space.
 */
inline BalancingReport balancing_check(const WeightedComplex& c)
{
    const auto h = build_hypergraph(c);
    const std::size_t n = c.ambient_dim();
    BalancingReport rep;
    for (std::size_t r = 0; r < h.ridge_count(); ++r)
    {
        const Polyhedron tau = polyhedron_of(h.ridge_keys[r], n);
        RidgeBalance rb;
        rb.ridge = r;
        rb.label = h.ridge_labels[r];
        rb.normal_sum = zero_vector(n);
        for (auto f : h.hyperedges[r])
        {
            const auto cell = h.facet_cells[f];
            const auto v = lattice_normal_generator(c.cell(cell), tau);
            rb.normal_sum += Rational(c.facet_weight(cell)) * to_qvector(v);
        }
        rb.residual = project_off(rb.normal_sum, tau.direction_space());
        rb.balanced = is_zero(rb.residual);
        rep.balanced = rep.balanced && rb.balanced;
        rep.ridges.push_back(std::move(rb));
    }
    return rep;
}

/** True iff the hyperplane meets the relative interior of `p`. */
inline bool meets_relative_interior(const Polyhedron& p, const AffineHyperplane& hyp)
{
    const std::size_t n = p.ambient_dim();
    LinearProgram lp(n);
    for (const auto& e : p.hrep().equations)
        lp.add_eq(e.a, e.b);
    for (const auto& i : p.hrep().inequalities)
        lp.add_gt(i.a, i.b);
    lp.add_eq(hyp.normal_q(), hyp.offset);
    return lp_feasible(lp).has_value();
}

struct TransversalityReport
{
    bool transverse = true;
    std::string detail;
};

/** No vertex (the origin, for fans) on the hyperplane and no cell's affine span inside it. */
inline TransversalityReport check_transverse(const Complex& c, const AffineHyperplane& hyp)
{
    const std::size_t n = c.ambient_dim();
    if (hyp.normal.size() != n)
        throw DimensionMismatch("hyperplane normal has length " + std::to_string(hyp.normal.size())
                                + ", complex has ambient dimension " + std::to_string(n));
    std::vector<QVector> points = c.vertices();
    bool has_cone_cell = c.is_fan();
    for (const auto& cell : c.cells())
        has_cone_cell = has_cone_cell || cell.vertices.empty();
    if (has_cone_cell)
        points.push_back(zero_vector(n));
    for (const auto& v : points)
        if (hyp.evaluate(v) == 0)
            return {false, "vertex " + to_string(v) + " lies on the hyperplane"};
    const QVector h = hyp.normal_q();
    for (std::size_t i = 0; i < c.cells().size(); ++i)
    {
        const auto& p = c.cell(i);
        bool inside = true;
        for (const auto& v : p.points())
            inside = inside && hyp.evaluate(v) == 0;
        for (const auto& d : p.direction_space())
            inside = inside && dot(h, d) == 0;
        if (inside)
            return {false, "cell " + std::to_string(i) + " spans an affine space inside the hyperplane"};
    }
    return {};
}

struct SectionResult
{
    Complex section;
    std::vector<std::optional<std::size_t>> facet_provenance;   // per section cell: source cell index
    bool pure = true;
    TransversalityReport transversality;
};

/**
 * Intersection of a complex with a transverse affine hyperplane.  Facets met
 * in their relative interior give the (d-1)-cells of the section; facets
 * touched only on their boundary contribute their intersection as well, so
 * that a non-pure section is reported rather than hidden.
 */
inline SectionResult hyperplane_section(const Complex& c, const AffineHyperplane& hyp)
{
    const std::size_t n = c.ambient_dim();
    SectionResult out;
    out.transversality = check_transverse(c, hyp);
    if (!out.transversality.transverse)
        throw NotTransverse(out.transversality.detail);
    const QVector h = hyp.normal_q();
    const auto section_lin = intersect_subspaces(c.lineality(), orthogonal_complement({h}, n), n);
    ComplexBuilder builder(n, section_lin);
    std::map<std::size_t, std::size_t> provenance;
    auto cut = [&](const Polyhedron& p) -> std::optional<Polyhedron> {
        HRep hr = p.hrep();
        hr.equations.push_back({h, hyp.offset});
        try
        {
            return dual_description(hr);
        }
        catch (const EmptyPolyhedron&)
        {
            return std::nullopt;
        }
    };
    std::vector<std::size_t> touched;
    for (auto i : c.facet_indices())
    {
        if (!meets_relative_interior(c.cell(i), hyp))
        {
            touched.push_back(i);
            continue;
        }
        const auto piece = cut(c.cell(i));
        const std::size_t idx = builder.add_cell(*piece, c.facet_weight(i));
        provenance.emplace(idx, i);
    }
    for (auto i : touched)
        if (const auto piece = cut(c.cell(i)))
            builder.add_cell(*piece, c.facet_weight(i));
    if (builder.cell_count() == 0)
        throw NotTransverse("hyperplane misses the complex");
    out.section = builder.build();
    for (std::size_t k = 0; k < out.section.cells().size(); ++k)
    {
        auto it = provenance.find(k);
        out.facet_provenance.push_back(it == provenance.end() ? std::nullopt
                                                              : std::optional<std::size_t>(it->second));
    }
    const auto rep = validate_complex(out.section);
    out.pure = rep.valid && rep.pure && out.section.dim() + 1 == c.dim();
    return out;
}

namespace detail {

/** Values of a linear functional (h, c) on generators, as rows over the unknowns (h, c). */
struct GeneratorRows
{
    std::vector<QVector> points;   // h·v - c
    std::vector<QVector> rays;     // h·r
    std::vector<QVector> lines;    // h·l
};

inline GeneratorRows generator_rows(const Polyhedron& p)
{
    GeneratorRows g;
    const auto& canon = p.canonical();
    for (const auto& v : canon.vertices)
    {
        QVector row = v;
        row.push_back(-1);
        g.points.push_back(std::move(row));
    }
    for (const auto& r : canon.rays)
    {
        QVector row = r;
        row.push_back(0);
        g.rays.push_back(std::move(row));
    }
    for (const auto& l : canon.lineality)
    {
        QVector row = l;
        row.push_back(0);
        g.lines.push_back(std::move(row));
    }
    return g;
}

/** Ways for a hyperplane to meet relint(P), each a list of constraints on (h, c). */
inline std::vector<std::vector<LinearConstraint>> meeting_cases(const GeneratorRows& g)
{
    std::vector<std::vector<LinearConstraint>> cases;
    std::vector<QVector> all = g.points;
    all.insert(all.end(), g.rays.begin(), g.rays.end());
    {
        std::vector<LinearConstraint> contain;
        for (const auto& row : all)
            contain.push_back({row, 0, Relation::Eq});
        for (const auto& row : g.lines)
            contain.push_back({row, 0, Relation::Eq});
        cases.push_back(std::move(contain));
    }
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j)
            if (i != j)
                cases.push_back({{all[i], 0, Relation::Gt}, {-all[j], 0, Relation::Gt}});
    for (const auto& row : g.lines)
        cases.push_back({{row, 0, Relation::Gt}});
    return cases;
}

}   // namespace detail

/**
 * A hyperplane meeting the relative interiors of P and Q and missing F, or
 * nothing if none exists.  Both "F strictly above" and "F strictly below"
 * are tried, each over every way of crossing P and Q.
 */
inline std::optional<AffineHyperplane> witness_hyperplane(const Polyhedron& p, const Polyhedron& q,
                                                          const Polyhedron& f)
{
    if (p == q || f == p || f == q)
        throw DegenerateInput("witness_hyperplane needs three distinct cells");
    const std::size_t n = p.ambient_dim();
    if (q.ambient_dim() != n || f.ambient_dim() != n)
        throw DimensionMismatch("witness_hyperplane across ambient dimensions");
    const auto gp = detail::generator_rows(p);
    const auto gq = detail::generator_rows(q);
    const auto gf = detail::generator_rows(f);
    const auto p_cases = detail::meeting_cases(gp);
    const auto q_cases = detail::meeting_cases(gq);
    for (int side : {+1, -1})
    {
        LinearProgram base(n + 1);
        const Rational s(side);
        for (const auto& row : gf.points)
            base.add_gt(s * row, 0);
        for (const auto& row : gf.rays)
            base.add_ge(s * row, 0);
        for (const auto& row : gf.lines)
            base.add_eq(row, 0);
        for (const auto& pc : p_cases)
            for (const auto& qc : q_cases)
            {
                LinearProgram lp = base;
                for (const auto& con : pc)
                    lp.add(con.a, con.b, con.rel);
                for (const auto& con : qc)
                    lp.add(con.a, con.b, con.rel);
                const auto x = lp_feasible(lp);
                if (!x)
                    continue;
                const QVector h(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(n));
                if (is_zero(h))
                    continue;
                return AffineHyperplane(h, (*x)[n]);
            }
    }
    return std::nullopt;
}

}   // namespace tropicon

#endif
