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
 * JSON interchange for complexes, certificates and matroids.
 *
 * Fan file layout (keys in this order):
 *
 *     {"ambient_dim": n,
 *      "rays": [[int, ...], ...],
 *      "vertices": [["p/q", ...], ...],
 *      "lineality": [[int, ...], ...],
 *      "cells": [{"v": [...], "r": [...]}, ...],
 *      "weights": [int, ...]}
 *
 * Rationals are written as "p" or "p/q" strings so nothing is lost to
 * floating point.
 */

#ifndef TROPICON_IO_HPP
#define TROPICON_IO_HPP

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "complex.hpp"
#include "connectivity.hpp"
#include "error.hpp"
#include "matroid.hpp"
#include "rational.hpp"

namespace tropicon {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json int_row(const QVector& v)
{
    const QVector p = is_integral(v) ? v : primitive_q(v);
    Json row = Json::array();
    for (const auto& x : p)
    {
        const Integer z = numerator(x);
        if (z > Integer(std::numeric_limits<long long>::max()) || z < Integer(std::numeric_limits<long long>::min()))
            row.push_back(z.str());
        else
            row.push_back(z.convert_to<long long>());
    }
    return row;
}

inline Rational json_rational(const Json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw ParseError("expected an integer or a \"p/q\" string, got " + j.dump());
}

inline QVector json_vector(const Json& j, std::size_t n, const char* what)
{
    if (!j.is_array() || j.size() != n)
        throw ParseError(std::string(what) + " must be an array of length " + std::to_string(n));
    QVector v;
    for (const auto& x : j)
        v.push_back(json_rational(x));
    return v;
}

inline std::vector<std::size_t> json_indices(const Json& j, const char* what)
{
    if (!j.is_array())
        throw ParseError(std::string(what) + " must be an array of indices");
    std::vector<std::size_t> out;
    for (const auto& x : j)
    {
        if (!x.is_number_integer() || x.get<long long>() < 0)
            throw ParseError(std::string(what) + " entries must be non-negative integers");
        out.push_back(x.get<std::size_t>());
    }
    return out;
}

}   // namespace detail

inline Json complex_to_json(const Complex& c)
{
    Json j;
    j["ambient_dim"] = c.ambient_dim();
    j["rays"] = Json::array();
    for (const auto& r : c.rays())
        j["rays"].push_back(detail::int_row(r));
    j["vertices"] = Json::array();
    for (const auto& v : c.vertices())
    {
        Json row = Json::array();
        for (const auto& x : v)
            row.push_back(to_string(x));
        j["vertices"].push_back(std::move(row));
    }
    j["lineality"] = Json::array();
    for (const auto& l : c.lineality())
        j["lineality"].push_back(detail::int_row(l));
    j["cells"] = Json::array();
    for (const auto& cell : c.cells())
        j["cells"].push_back(Json{{"v", cell.vertices}, {"r", cell.rays}});
    j["weights"] = c.weights();
    return j;
}

inline std::string print_complex(const Complex& c) { return complex_to_json(c).dump(1) + "\n"; }

inline Complex complex_from_json(const Json& j)
{
    if (!j.is_object())
        throw ParseError("fan file must be a JSON object");
    if (!j.contains("ambient_dim") || !j["ambient_dim"].is_number_integer() || j["ambient_dim"].get<long long>() < 0)
        throw ParseError("fan file needs a non-negative integer \"ambient_dim\"");
    const auto n = j["ambient_dim"].get<std::size_t>();
    auto rows = [&](const char* key) {
        std::vector<QVector> out;
        if (!j.contains(key))
            return out;
        if (!j[key].is_array())
            throw ParseError(std::string("\"") + key + "\" must be an array");
        for (const auto& r : j[key])
            out.push_back(detail::json_vector(r, n, key));
        return out;
    };
    auto rays = rows("rays");
    for (const auto& r : rays)
        if (!is_integral(r))
            throw ParseError("rays must be integer vectors");
    auto verts = rows("vertices");
    auto lin = rows("lineality");
    if (!j.contains("cells") || !j["cells"].is_array())
        throw ParseError("fan file needs a \"cells\" array");
    std::vector<CellIndices> cells;
    for (const auto& c : j["cells"])
    {
        if (!c.is_object())
            throw ParseError("each cell must be an object with \"v\" and \"r\"");
        CellIndices idx;
        if (c.contains("v"))
            idx.vertices = detail::json_indices(c["v"], "cell \"v\"");
        if (c.contains("r"))
            idx.rays = detail::json_indices(c["r"], "cell \"r\"");
        cells.push_back(std::move(idx));
    }
    std::vector<long> weights;
    if (j.contains("weights"))
    {
        if (!j["weights"].is_array())
            throw ParseError("\"weights\" must be an array");
        for (const auto& w : j["weights"])
        {
            if (!w.is_number_integer())
                throw ParseError("weights must be integers");
            weights.push_back(w.get<long>());
        }
        if (weights.size() != cells.size())
            throw ParseError("weights and cells differ in length");
    }
    return Complex(n, std::move(verts), std::move(rays), std::move(lin), std::move(cells), std::move(weights));
}

inline Complex parse_complex(const std::string& text)
{
    Json j;
    try
    {
        j = Json::parse(text);
    }
    catch (const nlohmann::json::exception& e)
    {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try
    {
        return complex_from_json(j);
    }
    catch (const nlohmann::json::exception& e)
    {
        throw ParseError(std::string("malformed fan file: ") + e.what());
    }
}

struct CertificateSummary
{
    ConnectivityCertificate certificate;
    long d = 0;
    std::size_t lineality_dim = 0;
    std::size_t facets = 0;
    std::size_t ridges = 0;
    std::optional<std::optional<FacetCut>> mincut;   // outer: requested; inner: cut exists
};

inline Json certificate_to_json(const CertificateSummary& s)
{
    Json j;
    j["k"] = s.certificate.k;
    j["verdict"] = s.certificate.verdict;
    j["witness"] = s.certificate.witness ? Json(*s.certificate.witness) : Json(nullptr);
    j["d"] = s.d;
    j["lineality_dim"] = s.lineality_dim;
    j["facets"] = s.facets;
    j["ridges"] = s.ridges;
    j["subsets_examined"] = s.certificate.subsets_examined;
    if (s.mincut)
    {
        if (*s.mincut)
            j["mincut"] = Json{{"size", (*s.mincut)->size}, {"witness", (*s.mincut)->witness}};
        else
            j["mincut"] = nullptr;
    }
    return j;
}

/**
 * {"type":"uniform","r":3,"n":4} | {"type":"graphic","edges":[[0,1],...]} |
 * {"type":"linear","columns":[[...],...]} | {"type":"bases","n":4,"bases":[[...],...]}
 */
inline Matroid matroid_from_json(const Json& j)
{
    try
    {
        const std::string type = j.at("type").get<std::string>();
        if (type == "uniform")
            return Matroid::uniform(j.at("r").get<int>(), j.at("n").get<int>());
        if (type == "graphic")
        {
            std::vector<std::pair<int, int>> edges;
            for (const auto& e : j.at("edges"))
            {
                if (!e.is_array() || e.size() != 2)
                    throw ParseError("graphic edges must be pairs");
                edges.emplace_back(e[0].get<int>(), e[1].get<int>());
            }
            return Matroid::graphic(std::move(edges));
        }
        if (type == "linear")
        {
            std::vector<QVector> cols;
            for (const auto& c : j.at("columns"))
            {
                QVector v;
                for (const auto& x : c)
                    v.push_back(detail::json_rational(x));
                cols.push_back(std::move(v));
            }
            return Matroid::linear(std::move(cols));
        }
        if (type == "bases")
            return Matroid::from_bases(j.at("n").get<int>(), j.at("bases").get<std::vector<std::vector<int>>>());
        throw ParseError("unknown matroid type '" + type + "'");
    }
    catch (const nlohmann::json::exception& e)
    {
        throw ParseError(std::string("malformed matroid description: ") + e.what());
    }
}

}   // namespace tropicon

#endif
