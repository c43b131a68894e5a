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

// tropicon: generate rational fans, certify connectivity through codimension
// one, slice by hyperplanes, and export incidence graphs.
//
// Exit codes: 0 success / certified, 1 input or usage error, 2 certified failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tropicon/tropicon.hpp"

namespace {

using namespace tropicon;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitFailure = 2;

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-")
    {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write '" + path + "'");
    out << text;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        out.push_back(cur);
    return out;
}

QVector parse_vector(const std::string& text)
{
    QVector v;
    for (const auto& tok : split(text, ','))
        v.push_back(parse_rational(tok));
    if (v.empty())
        throw ParseError("empty vector '" + text + "'");
    return v;
}

int parse_int(const std::string& s)
{
    try
    {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size())
            throw ParseError("bad integer '" + s + "'");
        return v;
    }
    catch (const std::logic_error&)
    {
        throw ParseError("bad integer '" + s + "'");
    }
}

/** Edges as "0-1,0-2,1-2". */
std::vector<std::pair<int, int>> parse_edges(const std::string& text)
{
    std::vector<std::pair<int, int>> edges;
    for (const auto& tok : split(text, ','))
    {
        const auto ends = split(tok, '-');
        if (ends.size() != 2)
            throw ParseError("edge '" + tok + "' is not of the form u-v");
        edges.emplace_back(parse_int(ends[0]), parse_int(ends[1]));
    }
    return edges;
}

std::vector<QVector> parse_vertex_file(const std::string& path)
{
    Json j;
    try
    {
        j = Json::parse(read_file(path));
    }
    catch (const nlohmann::json::exception& e)
    {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (j.is_object() && j.contains("vertices"))
        j = j["vertices"];
    if (!j.is_array() || j.empty())
        throw ParseError("vertex file must be a nonempty array of points");
    std::vector<QVector> out;
    for (const auto& row : j)
    {
        if (!row.is_array())
            throw ParseError("each vertex must be an array");
        QVector v;
        for (const auto& x : row)
        {
            if (x.is_number_integer())
                v.emplace_back(x.get<long long>());
            else if (x.is_string())
                v.push_back(parse_rational(x.get<std::string>()));
            else
                throw ParseError("vertex coordinates must be integers or \"p/q\" strings");
        }
        if (!out.empty() && v.size() != out.front().size())
            throw ParseError("vertices of different lengths");
        out.push_back(std::move(v));
    }
    return out;
}

Complex generate(const std::vector<std::string>& args)
{
    if (args.empty())
        throw UnknownKind("gen needs a kind");
    const std::string& kind = args[0];
    auto need = [&](std::size_t count) {
        if (args.size() != count + 1)
            throw ParseError("gen " + kind + " expects " + std::to_string(count) + " parameter(s)");
    };
    if (kind == "two-planes")
    {
        need(0);
        return two_planes_fan();
    }
    if (kind == "tropical-plane")
    {
        need(0);
        return tropical_plane_fan();
    }
    if (kind == "tropical-line")
    {
        need(0);
        return tropical_line_fan();
    }
    if (kind == "bergman-uniform")
    {
        need(2);
        return bergman_fine(Matroid::uniform(parse_int(args[1]), parse_int(args[2])));
    }
    if (kind == "bergman-graphic")
    {
        need(1);
        return bergman_fine(Matroid::graphic(parse_edges(args[1])));
    }
    if (kind == "bergman")
    {
        need(1);
        try
        {
            return bergman_fine(matroid_from_json(Json::parse(read_file(args[1]))));
        }
        catch (const nlohmann::json::exception& e)
        {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
    }
    if (kind == "normal-fan-cube")
    {
        need(1);
        const int d = parse_int(args[1]);
        if (d < 1 || d > 8)
            throw ParseError("cube dimension must be between 1 and 8");
        return cube_normal_fan(static_cast<std::size_t>(d));
    }
    if (kind == "normal-fan")
    {
        need(1);
        return normal_fan(parse_vertex_file(args[1]));
    }
    throw UnknownKind("unknown kind '" + kind
                      + "' (expected two-planes, tropical-plane, tropical-line, bergman-uniform, "
                        "bergman-graphic, bergman, normal-fan-cube, normal-fan)");
}

Complex load(const std::string& path)
{
    Complex c = parse_complex(read_file(path));
    const auto rep = validate_complex(c);
    if (!rep.valid)
        throw InvalidComplex(rep.message);
    return c;
}

/** "r:0,3" or "v:1;r:0,2"; "r:" is the apex of a fan. */
Polyhedron parse_face(const Complex& c, const std::string& spec)
{
    CellIndices idx;
    for (const auto& part : split(spec, ';'))
    {
        if (part.size() < 2 || part[1] != ':' || (part[0] != 'v' && part[0] != 'r'))
            throw ParseError("face spec '" + spec + "' must look like r:0,3 or v:1;r:0");
        auto& target = part[0] == 'v' ? idx.vertices : idx.rays;
        for (const auto& tok : split(part.substr(2), ','))
        {
            const int i = parse_int(tok);
            const std::size_t limit = part[0] == 'v' ? c.vertices().size() : c.rays().size();
            if (i < 0 || static_cast<std::size_t>(i) >= limit)
                throw ParseError("face index " + tok + " out of range");
            target.push_back(static_cast<std::size_t>(i));
        }
    }
    return c.make_polyhedron(idx);
}

std::uint64_t budget_from_env()
{
    if (const char* env = std::getenv("TROPICON_BUDGET"))
    {
        try
        {
            return std::stoull(env);
        }
        catch (const std::logic_error&)
        {
            throw ParseError(std::string("TROPICON_BUDGET='") + env + "' is not a number");
        }
    }
    return kDefaultSubsetBudget;
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rational fans, facet-ridge hypergraphs and connectivity certificates"};
    app.require_subcommand(1);

    std::vector<std::string> gen_args;
    std::string out_path, in_path, h_text, c_text, face_spec;
    int k_opt = 0, skeleton_k = 0;
    bool mincut = false, intersections = false;
    unsigned jobs = 1;

    auto* gen = app.add_subcommand("gen", "Generate a canonical complex");
    gen->add_option("kind", gen_args, "Kind followed by its parameters")->required();
    gen->add_option("-o,--output", out_path, "Output fan file (default stdout)");
    gen->add_option("--skeleton", skeleton_k, "Emit the k-skeleton instead");

    auto* check = app.add_subcommand("check", "Certify k-connectivity through codimension one");
    check->add_option("fan", in_path)->required();
    check->add_option("--k", k_opt, "Connectivity to certify (default d - lineality dim)");
    check->add_flag("--mincut", mincut, "Also report a minimum facet cut");
    check->add_option("--jobs", jobs, "Worker threads for the subset search");
    check->add_option("-o,--output", out_path, "Certificate file (default stdout)");

    auto* slice = app.add_subcommand("slice", "Intersect with a transverse affine hyperplane h·x = c");
    slice->set_help_flag("--help", "Print this help message and exit");
    slice->add_option("fan", in_path)->required();
    slice->add_option("--h", h_text, "Normal vector, comma separated")->required();
    slice->add_option("--c", c_text, "Offset (integer or p/q)")->required();
    slice->add_option("-o,--output", out_path, "Section fan file");

    auto* balance = app.add_subcommand("balance", "Check the balancing condition at every ridge");
    balance->add_option("fan", in_path)->required();

    auto* quotient = app.add_subcommand("quotient", "Quotient by the lineality space");
    quotient->add_option("fan", in_path)->required();
    quotient->add_option("-o,--output", out_path);

    auto* star_cmd = app.add_subcommand("star", "Star at a face");
    star_cmd->add_option("fan", in_path)->required();
    star_cmd->add_option("--face", face_spec, "Face as r:0,3 or v:1;r:0")->required();
    star_cmd->add_option("-o,--output", out_path);

    auto* skel = app.add_subcommand("skeleton", "k-skeleton of a complex");
    skel->add_option("fan", in_path)->required();
    skel->add_option("--k", skeleton_k)->required();
    skel->add_option("-o,--output", out_path);

    auto* dot = app.add_subcommand("dot", "Facet/ridge incidence graph in DOT");
    dot->add_option("fan", in_path)->required();
    dot->add_option("-o,--output", out_path);

    auto* validate = app.add_subcommand("validate", "Validate a fan file");
    validate->add_option("fan", in_path)->required();
    validate->add_flag("--intersections", intersections, "Also check pairwise intersections");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return kExitInput;
    }

    try
    {
        if (*gen)
        {
            Complex c = generate(gen_args);
            if (skeleton_k > 0)
                c = skeleton(c, static_cast<std::size_t>(skeleton_k));
            write_output(out_path, print_complex(c));
            return kExitOk;
        }
        if (*check)
        {
            const Complex c = load(in_path);
            const auto h = build_hypergraph(c);
            const auto lin = complex_lineality_space(c);
            CertificateSummary s;
            s.d = c.dim();
            s.lineality_dim = lin.size();
            s.facets = h.facet_count();
            s.ridges = h.ridge_count();
            const long bound = s.d - static_cast<long>(s.lineality_dim);
            const std::size_t k = k_opt > 0 ? static_cast<std::size_t>(k_opt)
                                            : static_cast<std::size_t>(std::max(1L, bound));
            SearchOptions opt{budget_from_env(), std::max(1u, jobs)};
            s.certificate = is_k_connected(h, k, opt);
            if (mincut)
                s.mincut = h.facet_count() >= 2 ? min_facet_cut(h, opt) : std::optional<FacetCut>{};
            write_output(out_path, certificate_to_json(s).dump(2) + "\n");
            return s.certificate.verdict ? kExitOk : kExitFailure;
        }
        if (*slice)
        {
            const Complex c = load(in_path);
            const AffineHyperplane hyp(parse_vector(h_text), parse_rational(c_text));
            const auto res = hyperplane_section(c, hyp);
            const auto h = build_hypergraph(res.section);
            if (!out_path.empty())
                write_output(out_path, print_complex(res.section));
            Json summary;
            summary["facets"] = h.facet_count();
            summary["ridges"] = h.ridge_count();
            summary["connected"] = component_count(h) <= 1;
            summary["components"] = component_count(h);
            summary["pure"] = res.pure;
            std::cout << summary.dump() << "\n";
            return kExitOk;
        }
        if (*balance)
        {
            const auto rep = balancing_check(load(in_path));
            Json j;
            j["balanced"] = rep.balanced;
            j["ridges"] = Json::array();
            for (const auto& r : rep.ridges)
            {
                Json rj;
                rj["ridge"] = r.ridge;
                rj["label"] = r.label;
                rj["balanced"] = r.balanced;
                rj["normal_sum"] = Json::array();
                for (const auto& x : r.normal_sum)
                    rj["normal_sum"].push_back(to_string(x));
                rj["residual"] = Json::array();
                for (const auto& x : r.residual)
                    rj["residual"].push_back(to_string(x));
                j["ridges"].push_back(std::move(rj));
            }
            std::cout << j.dump(2) << "\n";
            return rep.balanced ? kExitOk : kExitFailure;
        }
        if (*quotient)
        {
            write_output(out_path, print_complex(quotient_by_lineality(load(in_path)).complex));
            return kExitOk;
        }
        if (*star_cmd)
        {
            const Complex c = load(in_path);
            write_output(out_path, print_complex(star(c, parse_face(c, face_spec))));
            return kExitOk;
        }
        if (*skel)
        {
            if (skeleton_k < 1)
                throw ParseError("--k must be positive");
            write_output(out_path, print_complex(skeleton(load(in_path), static_cast<std::size_t>(skeleton_k))));
            return kExitOk;
        }
        if (*dot)
        {
            write_output(out_path, to_dot(build_hypergraph(load(in_path))));
            return kExitOk;
        }
        if (*validate)
        {
            const auto rep = validate_complex(parse_complex(read_file(in_path)), intersections);
            Json j;
            j["valid"] = rep.valid;
            j["pure"] = rep.pure;
            j["dim"] = rep.dim;
            j["message"] = rep.message;
            std::cout << j.dump() << "\n";
            return rep.valid ? kExitOk : kExitFailure;
        }
    }
    catch (const tropicon::Error& e)
    {
        std::cerr << "tropicon: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
