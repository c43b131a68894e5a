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
 * Rational polyhedra in V- and H-representation.
 *
 * A Polyhedron is given by vertices, rays and lineality generators; an empty
 * vertex list means a cone with apex at the origin.  The H-representation and
 * a canonical minimal V-representation are computed on first use and cached.
 */

#ifndef TROPICON_POLYHEDRON_HPP
#define TROPICON_POLYHEDRON_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "double_description.hpp"
#include "error.hpp"
#include "linalg.hpp"
#include "lp.hpp"
#include "rational.hpp"

namespace tropicon {

/** a·x >= b, or a·x = b when used as an equation. */
struct Halfspace
{
    QVector a;
    Rational b;

    friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

struct HRep
{
    std::size_t ambient_dim = 0;
    std::vector<Halfspace> inequalities;
    std::vector<Halfspace> equations;
};

/**
 * Canonical minimal V-representation: lineality in reduced echelon form with
 * primitive rows, rays and vertices projected orthogonally off the
 * lineality, rays primitive, both lists sorted.  Cones list the origin as
 * their single vertex.  Two polyhedra are equal iff their keys are.
 */
struct CanonicalCell
{
    std::vector<QVector> vertices;
    std::vector<QVector> rays;
    std::vector<QVector> lineality;

    friend bool operator==(const CanonicalCell&, const CanonicalCell&) = default;
    friend auto operator<=>(const CanonicalCell& a, const CanonicalCell& b)
    {
        if (auto c = a.vertices <=> b.vertices; c != 0)
            return c;
        if (auto c = a.rays <=> b.rays; c != 0)
            return c;
        return a.lineality <=> b.lineality;
    }
};

inline std::vector<QVector> canonical_lineality(const std::vector<QVector>& gens, std::size_t n)
{
    std::vector<QVector> out;
    for (const auto& r : span_basis(gens, n))
        out.push_back(primitive_q(r));
    return out;
}

class Polyhedron
{
    public:
        Polyhedron() : Polyhedron(0, {}, {}, {}) {}

        Polyhedron(std::size_t ambient_dim, std::vector<QVector> vertices, std::vector<QVector> rays,
                   std::vector<QVector> lineality)
            : n_(ambient_dim), cache_(std::make_shared<Cache>())
        {
            for (const auto& v : vertices)
                if (v.size() != n_)
                    throw DimensionMismatch("vertex of wrong length");
            lineality_ = canonical_lineality(lineality, n_);
            for (auto& v : vertices)
                if (std::find(vertices_.begin(), vertices_.end(), v) == vertices_.end())
                    vertices_.push_back(std::move(v));
            for (const auto& r : rays)
            {
                if (r.size() != n_)
                    throw DimensionMismatch("ray of wrong length");
                if (in_span(r, lineality_))
                    continue;
                QVector p = primitive_q(r);
                if (std::find(rays_.begin(), rays_.end(), p) == rays_.end())
                    rays_.push_back(std::move(p));
            }
        }

        static Polyhedron cone(std::size_t n, std::vector<QVector> rays,
                               std::vector<QVector> lineality = {})
        {
            return Polyhedron(n, {}, std::move(rays), std::move(lineality));
        }

        static Polyhedron polytope(std::size_t n, std::vector<QVector> vertices)
        {
            if (vertices.empty())
                throw EmptyPolyhedron("polytope without vertices");
            return Polyhedron(n, std::move(vertices), {}, {});
        }

        std::size_t ambient_dim() const { return n_; }
        bool is_cone() const { return vertices_.empty(); }
        const std::vector<QVector>& vertices() const { return vertices_; }
        const std::vector<QVector>& rays() const { return rays_; }
        const std::vector<QVector>& lineality_generators() const { return lineality_; }

        /** Vertices, or the apex for a cone. */
        std::vector<QVector> points() const
        {
            return is_cone() ? std::vector<QVector>{zero_vector(n_)} : vertices_;
        }

        /** Linear span of differences of points plus rays and lineality. */
        std::vector<QVector> direction_space() const
        {
            std::vector<QVector> gens;
            const auto pts = points();
            for (std::size_t i = 1; i < pts.size(); ++i)
                gens.push_back(pts[i] - pts[0]);
            gens.insert(gens.end(), rays_.begin(), rays_.end());
            gens.insert(gens.end(), lineality_.begin(), lineality_.end());
            return span_basis(gens, n_);
        }

        /** Linear span of all points, rays and lineality generators. */
        std::vector<QVector> linear_span() const
        {
            std::vector<QVector> gens = points();
            gens.insert(gens.end(), rays_.begin(), rays_.end());
            gens.insert(gens.end(), lineality_.begin(), lineality_.end());
            return span_basis(gens, n_);
        }

        std::size_t dim() const { return direction_space().size(); }

        const HRep& hrep() const;
        const CanonicalCell& canonical() const;

        /** Maximal linear subspace L with P + L = P. */
        const std::vector<QVector>& lineality_space() const { return canonical().lineality; }
        bool pointed() const { return lineality_space().empty(); }

        /** Rebuilt from the canonical minimal generators; cones stay cones. */
        Polyhedron canonicalized() const
        {
            const auto& c = canonical();
            if (c.vertices.size() == 1 && is_zero(c.vertices.front()))
                return cone(n_, c.rays, c.lineality);
            return Polyhedron(n_, c.vertices, c.rays, c.lineality);
        }

        bool contains(const QVector& x) const
        {
            const auto& h = hrep();
            for (const auto& e : h.equations)
                if (dot(e.a, x) != e.b)
                    return false;
            for (const auto& i : h.inequalities)
                if (dot(i.a, x) < i.b)
                    return false;
            return true;
        }

        friend bool operator==(const Polyhedron& a, const Polyhedron& b)
        {
            return a.n_ == b.n_ && a.canonical() == b.canonical();
        }

    private:
        struct Cache
        {
            std::once_flag hrep_once, canon_once;
            HRep hrep;
            CanonicalCell canonical;
        };

        std::size_t n_ = 0;
        std::vector<QVector> vertices_;
        std::vector<QVector> rays_;
        std::vector<QVector> lineality_;
        std::shared_ptr<Cache> cache_;
};

// ---------------------------------------------------------------------------
// Dual description
// ---------------------------------------------------------------------------

namespace detail {

inline QVector lift(const Rational& head, const QVector& tail)
{
    QVector v;
    v.reserve(tail.size() + 1);
    v.push_back(head);
    v.insert(v.end(), tail.begin(), tail.end());
    return v;
}

inline QVector tail_of(const QVector& v) { return QVector(v.begin() + 1, v.end()); }

}   // namespace detail

/** Irredundant H-representation of a V-described polyhedron. */
inline HRep dual_description(const Polyhedron& p)
{
    const std::size_t n = p.ambient_dim();
    std::vector<QVector> gens;
    for (const auto& v : p.points())
        gens.push_back(detail::lift(1, v));
    for (const auto& r : p.rays())
        gens.push_back(detail::lift(0, r));
    std::vector<QVector> lin;
    for (const auto& l : p.lineality_generators())
        lin.push_back(detail::lift(0, l));
    const ConeGenerators dual = cone_from_inequalities(gens, lin, n + 1);
    HRep h;
    h.ambient_dim = n;
    for (const auto& e : dual.lineality)
        h.equations.push_back({detail::tail_of(e), -e[0]});
    const auto pts = p.points();
    for (const auto& r : dual.rays)
    {
        QVector a = detail::tail_of(r);
        // A facet touching no vertex is the face at infinity (t = 0) of the homogenization.
        const bool touches = std::any_of(pts.begin(), pts.end(),
                                         [&](const QVector& v) { return dot(a, v) == -r[0]; });
        if (!touches)
            continue;
        h.inequalities.push_back({std::move(a), -r[0]});
    }
    return h;
}

/**
 * Minimal V-representation of an H-described polyhedron in canonical form.
 * Throws EmptyPolyhedron when the system is infeasible.
 */
inline CanonicalCell canonical_from_hrep(const HRep& h)
{
    const std::size_t n = h.ambient_dim;
    std::vector<QVector> ineqs, eqs;
    for (const auto& i : h.inequalities)
        ineqs.push_back(detail::lift(-i.b, i.a));
    ineqs.push_back(unit_vector(n + 1, 0));
    for (const auto& e : h.equations)
        eqs.push_back(detail::lift(-e.b, e.a));
    const ConeGenerators g = cone_from_inequalities(ineqs, eqs, n + 1);
    CanonicalCell c;
    for (const auto& l : g.lineality)
        c.lineality.push_back(detail::tail_of(l));
    c.lineality = canonical_lineality(c.lineality, n);
    for (const auto& r : g.rays)
    {
        if (r[0] == 0)
            c.rays.push_back(primitive_q(project_off(detail::tail_of(r), c.lineality)));
        else
            c.vertices.push_back(project_off((1 / r[0]) * detail::tail_of(r), c.lineality));
    }
    if (c.vertices.empty())
        throw EmptyPolyhedron("H-representation is infeasible");
    std::sort(c.vertices.begin(), c.vertices.end());
    std::sort(c.rays.begin(), c.rays.end());
    c.rays.erase(std::unique(c.rays.begin(), c.rays.end()), c.rays.end());
    return c;
}

inline Polyhedron dual_description(const HRep& h)
{
    const CanonicalCell c = canonical_from_hrep(h);
    if (c.vertices.size() == 1 && is_zero(c.vertices.front()))
        return Polyhedron::cone(h.ambient_dim, c.rays, c.lineality);
    return Polyhedron(h.ambient_dim, c.vertices, c.rays, c.lineality);
}

inline const HRep& Polyhedron::hrep() const
{
    std::call_once(cache_->hrep_once, [this] { cache_->hrep = dual_description(*this); });
    return cache_->hrep;
}

inline const CanonicalCell& Polyhedron::canonical() const
{
    std::call_once(cache_->canon_once, [this] { cache_->canonical = canonical_from_hrep(hrep()); });
    return cache_->canonical;
}

// ---------------------------------------------------------------------------
// Structure queries
// ---------------------------------------------------------------------------

struct DimensionInfo
{
    std::size_t dim = 0;
    std::vector<QVector> lineality;
    bool pointed = true;
};

inline DimensionInfo dim_lineality_pointed(const Polyhedron& p)
{
    return {p.dim(), p.lineality_space(), p.pointed()};
}

/**
 * Barycenter of the canonical vertices plus the sum of the canonical rays.
 * The point is checked against every facet inequality.
 */
inline QVector relint_point(const Polyhedron& p)
{
    const auto& c = p.canonical();
    QVector x = zero_vector(p.ambient_dim());
    for (const auto& v : c.vertices)
        x += v;
    x = Rational(1, static_cast<long>(c.vertices.size())) * x;
    for (const auto& r : c.rays)
        x += r;
    for (const auto& i : p.hrep().inequalities)
        if (dot(i.a, x) <= i.b)
            throw std::logic_error("relint_point: point not strictly interior");
    return x;
}

/** The face of `p` where inequality `index` of its H-representation is tight. */
inline Polyhedron facet_face(const Polyhedron& p, std::size_t index)
{
    HRep h = p.hrep();
    h.equations.push_back(h.inequalities.at(index));
    h.inequalities.erase(h.inequalities.begin() + static_cast<std::ptrdiff_t>(index));
    return dual_description(h);
}

inline bool is_simplicial_cone(const Polyhedron& p)
{
    if (!p.is_cone())
        return false;
    std::vector<QVector> gens = p.rays();
    const auto& lin = p.lineality_generators();
    gens.insert(gens.end(), lin.begin(), lin.end());
    return rank_of(gens, p.ambient_dim()) == gens.size();
}

inline void sort_by_canonical(std::vector<Polyhedron>& faces)
{
    std::sort(faces.begin(), faces.end(), [](const Polyhedron& a, const Polyhedron& b) {
        return a.canonical() < b.canonical();
    });
}

/** Codimension-one faces obtained by tightening each irredundant inequality. */
inline std::vector<Polyhedron> codim1_faces_hrep(const Polyhedron& p)
{
    std::vector<Polyhedron> faces;
    for (std::size_t i = 0; i < p.hrep().inequalities.size(); ++i)
        faces.push_back(facet_face(p, i).canonicalized());
    sort_by_canonical(faces);
    return faces;
}

/**
 * All faces of dimension dim(p) - 1, canonicalized and sorted.  Simplicial
 * cones take the drop-one-ray shortcut.
 */
inline std::vector<Polyhedron> codim1_faces(const Polyhedron& p)
{
    if (!is_simplicial_cone(p))
        return codim1_faces_hrep(p);
    std::vector<Polyhedron> faces;
    const auto& rays = p.rays();
    for (std::size_t skip = 0; skip < rays.size(); ++skip)
    {
        std::vector<QVector> kept;
        for (std::size_t j = 0; j < rays.size(); ++j)
            if (j != skip)
                kept.push_back(rays[j]);
        faces.push_back(Polyhedron::cone(p.ambient_dim(), kept, p.lineality_generators()).canonicalized());
    }
    sort_by_canonical(faces);
    return faces;
}

namespace detail {

/** Inequalities of `sigma` tight on all of `tau`, or nothing if tau ⊄ sigma. */
inline std::optional<std::vector<std::size_t>> tight_set(const Polyhedron& tau, const Polyhedron& sigma)
{
    const auto& h = sigma.hrep();
    const auto pts = tau.points();
    for (const auto& v : pts)
        if (!sigma.contains(v))
            return std::nullopt;
    auto dirs = tau.rays();
    for (const auto& l : tau.lineality_generators())
    {
        dirs.push_back(l);
        dirs.push_back(-l);
    }
    for (const auto& d : dirs)
    {
        for (const auto& e : h.equations)
            if (dot(e.a, d) != 0)
                return std::nullopt;
        for (const auto& i : h.inequalities)
            if (dot(i.a, d) < 0)
                return std::nullopt;
    }
    std::vector<std::size_t> tight;
    for (std::size_t k = 0; k < h.inequalities.size(); ++k)
    {
        const auto& i = h.inequalities[k];
        bool all = std::all_of(pts.begin(), pts.end(), [&](const QVector& v) { return dot(i.a, v) == i.b; })
                   && std::all_of(dirs.begin(), dirs.end(), [&](const QVector& d) { return dot(i.a, d) == 0; });
        if (all)
            tight.push_back(k);
    }
    return tight;
}

}   // namespace detail

/**
 * True iff `tau` equals the face of `sigma` cut out by the inequalities of
 * sigma that are tight on tau.
 */
inline bool is_face_of(const Polyhedron& tau, const Polyhedron& sigma)
{
    if (tau.ambient_dim() != sigma.ambient_dim())
        throw DimensionMismatch("is_face_of across ambient dimensions");
    const auto tight = detail::tight_set(tau, sigma);
    if (!tight)
        return false;
    HRep h = sigma.hrep();
    std::vector<Halfspace> keep;
    for (std::size_t k = 0; k < h.inequalities.size(); ++k)
    {
        if (std::find(tight->begin(), tight->end(), k) != tight->end())
            h.equations.push_back(h.inequalities[k]);
        else
            keep.push_back(h.inequalities[k]);
    }
    h.inequalities = std::move(keep);
    return canonical_from_hrep(h) == tau.canonical();
}

/**
 * Integral vector in the direction space of `sigma`, pointing from `tau`
 * into `sigma`, whose class generates the rank-one quotient of the
 * saturated lattices of sigma and tau.
 */
inline IntVector lattice_normal_generator(const Polyhedron& sigma, const Polyhedron& tau)
{
    if (!is_face_of(tau, sigma))
        throw NotAFace("lattice_normal_generator: tau is not a face of sigma");
    const std::size_t n = sigma.ambient_dim();
    const auto lin_sigma = sigma.direction_space();
    const auto lin_tau = tau.direction_space();
    if (lin_sigma.size() != lin_tau.size() + 1)
        throw WrongCodimension("lattice_normal_generator: tau has codimension "
                               + std::to_string(lin_sigma.size() - lin_tau.size()));
    const IntMatrix s = saturated_lattice(lin_sigma, n);
    const IntMatrix t = saturated_lattice(lin_tau, n);
    const std::size_t k = s.size();
    const QMatrix s_cols = QMatrix(to_qrows(s), n).transpose();
    auto coords = [&](const QVector& x) { return *solve_linear(s_cols, x); };
    // tau's lattice sits inside sigma's, so these coordinates are integers
    IntMatrix t_coords;
    for (const auto& row : t)
    {
        IntVector c;
        for (const auto& x : coords(to_qvector(row)))
            c.push_back(numerator(x));
        t_coords.push_back(std::move(c));
    }
    IntMatrix f_basis = integer_kernel(t_coords, k);
    IntVector f = f_basis.front();
    // u with f·u = 1
    IntVector u(k, 0);
    Integer g = 0;
    for (std::size_t i = 0; i < k; ++i)
    {
        if (f[i] == 0)
            continue;
        Integer x, y;
        const Integer ng = ext_gcd(g, f[i], x, y);
        for (auto& ui : u)
            ui *= x;
        u[i] = y;
        g = ng;
    }
    QVector v = zero_vector(n);
    for (std::size_t i = 0; i < k; ++i)
        if (u[i] != 0)
            v += Rational(u[i]) * to_qvector(s[i]);
    const QVector d = coords(relint_point(sigma) - relint_point(tau));
    Rational side = 0;
    for (std::size_t i = 0; i < k; ++i)
        side += Rational(f[i]) * d[i];
    if (side < 0)
        v = -v;
    IntVector out;
    for (const auto& x : v)
        out.push_back(numerator(x));
    return out;
}

/** The affine hyperplane {x : normal·x = offset} with a primitive integral normal. */
struct AffineHyperplane
{
    IntVector normal;
    Rational offset;

    AffineHyperplane() = default;
    AffineHyperplane(const QVector& h, const Rational& c)
    {
        if (is_zero(h))
            throw ZeroVector("hyperplane normal must be nonzero");
        normal = primitive_vector(h);
        // primitive = lambda h with lambda > 0
        std::size_t i = 0;
        while (h[i] == 0)
            ++i;
        offset = c * (Rational(normal[i]) / h[i]);
    }

    QVector normal_q() const { return to_qvector(normal); }
    Rational evaluate(const QVector& x) const { return dot(normal_q(), x) - offset; }
};

}   // namespace tropicon

#endif
