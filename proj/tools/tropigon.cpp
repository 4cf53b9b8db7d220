#include "tropigon/covers.hpp"
#include "tropigon/divisor.hpp"
#include "tropigon/dual_curve.hpp"
#include "tropigon/error.hpp"
#include "tropigon/json_io.hpp"
#include "tropigon/lattice.hpp"
#include "tropigon/metric_graph.hpp"
#include "tropigon/realizability.hpp"
#include "tropigon/sweep.hpp"
#include "tropigon/unfolding.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace tropigon;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Common {
    bool json = false;
    std::uint64_t seed = 1;
    std::string output;
};

Json read_json(const std::string& path) {
    try {
        if (path == "-") return Json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::BadInput, "cannot open " + path);
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::BadInput, path + ": " + e.what());
    }
}

void emit(const Common& c, const Json& j, const std::string& human) {
    std::ostringstream os;
    if (c.json) {
        os << j.dump(2) << '\n';
    } else {
        os << human;
    }
    if (c.output.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream out(c.output);
        if (!out) throw Error(ErrorCode::BadInput, "cannot write " + c.output);
        out << os.str();
    }
}

Json header(const std::string& command, const Common& c) {
    return {{"tool", "tropigon"}, {"version", kVersion}, {"command", command}, {"seed", c.seed}};
}

void add_common(CLI::App* sub, Common& c) {
    sub->add_flag("--json", c.json, "machine-readable JSON output");
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("-o,--output", c.output, "write the report to this file");
}

std::string table(const std::vector<std::pair<std::string, std::string>>& rows) {
    size_t w = 0;
    for (const auto& r : rows) w = std::max(w, r.first.size());
    std::ostringstream os;
    for (const auto& [k, v] : rows) os << k << std::string(w - k.size() + 2, ' ') << v << '\n';
    return os.str();
}

std::string realizability_name(Realizability r) {
    switch (r) {
        case Realizability::Realizable: return "realizable";
        case Realizability::NotRealizable: return "not realizable";
        case Realizability::Unknown: return "unknown";
    }
    return "?";
}

// A triangulation with heights, from --input or from (--g, --n, --index) and a seeded sample.
struct CurveSource {
    std::string input;
    int g = 3, n = 1, index = 0;
};

void add_curve_source(CLI::App* sub, CurveSource& s) {
    sub->add_option("--input", s.input, "JSON {\"triangulation\":..., \"heights\":...}");
    sub->add_option("--g", s.g, "genus");
    sub->add_option("--n", s.n, "Maroni parameter");
    sub->add_option("--index", s.index, "triangulation index in enumeration order");
}

std::pair<Triangulation, HeightFunction> load_curve(const CurveSource& s, std::uint64_t seed) {
    if (!s.input.empty()) {
        Json j = read_json(s.input);
        return {triangulation_from(j.at("triangulation")), heights_from(j.at("heights"))};
    }
    auto all = unimodular_triangulations(hirzebruch_polygon(s.g, s.n));
    if (s.index < 0 || s.index >= static_cast<int>(all.size())) {
        throw Error(ErrorCode::BadInput, "index out of range (" + std::to_string(all.size()) + " triangulations)");
    }
    const Triangulation& T = all[s.index];
    auto h0 = is_regular(T);
    if (!h0) throw Error(ErrorCode::NotRegular, "triangulation " + std::to_string(s.index) + " is not regular");
    auto rng = sample_rng(seed, s.index, 0);
    return {T, sample_heights(T, *h0, rng)};
}

std::string fmt_point(const RationalPoint& p) { return "(" + to_string(p[0]) + ", " + to_string(p[1]) + ")"; }

std::string svg_curve(const TropicalPlaneCurve& C) {
    std::vector<double> xs, ys;
    for (const auto& p : C.vertices) {
        xs.push_back(p[0].get_d());
        ys.push_back(p[1].get_d());
    }
    double x0 = *std::min_element(xs.begin(), xs.end()), x1 = *std::max_element(xs.begin(), xs.end());
    double y0 = *std::min_element(ys.begin(), ys.end()), y1 = *std::max_element(ys.begin(), ys.end());
    double span = std::max({x1 - x0, y1 - y0, 1e-9});
    double ray = 0.25 * span, size = 600, pad = 0.35 * span;
    double scale = size / (span + 2 * pad);
    auto X = [&](double x) { return (x - x0 + pad) * scale; };
    auto Y = [&](double y) { return size - (y - y0 + pad) * scale; };
    std::ostringstream os;
    os.precision(6);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
    for (const auto& e : C.edges) {
        os << "<line x1=\"" << X(xs[e.a]) << "\" y1=\"" << Y(ys[e.a]) << "\" x2=\"" << X(xs[e.b]) << "\" y2=\""
           << Y(ys[e.b]) << "\" stroke=\"black\" stroke-width=\"" << e.weight << "\"/>\n";
    }
    for (const auto& r : C.rays) {
        double len = std::hypot(double(r.dir.x), double(r.dir.y));
        double ex = xs[r.vertex] + ray * r.dir.x / len, ey = ys[r.vertex] + ray * r.dir.y / len;
        os << "<line x1=\"" << X(xs[r.vertex]) << "\" y1=\"" << Y(ys[r.vertex]) << "\" x2=\"" << X(ex) << "\" y2=\""
           << Y(ey) << "\" stroke=\"gray\" stroke-width=\"" << r.weight << "\"/>\n";
    }
    for (size_t v = 0; v < xs.size(); ++v) {
        os << "<circle cx=\"" << X(xs[v]) << "\" cy=\"" << Y(ys[v]) << "\" r=\"2\" fill=\"red\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

Json sweep_json(const SweepReport& rep, const Common& c, bool with_heights) {
    Json j = header("sweep", c);
    j["g"] = rep.config.g;
    j["n"] = rep.config.n;
    j["samples"] = rep.config.samples;
    j["subsample"] = rep.config.subsample;
    j["triangulations"] = rep.triangulations;
    j["regular"] = rep.regular;
    Json rows = Json::array();
    std::map<std::string, int> types;
    int covers_ok = 0, own_refuted = 0;
    for (const auto& r : rep.rows) {
        Json row = {{"triangulation", r.triangulation}, {"sample", r.sample}, {"type", r.type}};
        Json lengths = Json::object();
        for (const auto& [role, e] : r.roles) lengths[role] = rational_json(r.skeleton.edges[e].len);
        row["lengths"] = lengths;
        if (r.type.empty()) row["skeleton"] = to_json(r.skeleton);
        Json vs = Json::array();
        for (const auto& v : r.verdicts) {
            vs.push_back(to_json(v));
            if (v.n == rep.config.n && v.verdict == Verdict::Refuted) ++own_refuted;
        }
        row["verdicts"] = vs;
        bool ok = r.cover_ok && r.cover_degree == 3 && r.well_contracted && r.min_slack >= 0 && r.slack_one;
        covers_ok += ok;
        row["cover"] = {{"verified", r.cover_ok},
                        {"degree", r.cover_degree},
                        {"well_contracted", r.well_contracted},
                        {"min_slack", r.min_slack},
                        {"slack_one", r.slack_one}};
        if (!r.cover_error.empty()) row["cover"]["error"] = r.cover_error;
        row["round_trip"] = r.round_trip;
        if (with_heights) row["heights"] = to_json(r.heights);
        ++types[r.type.empty() ? "untyped" : r.type];
        rows.push_back(row);
    }
    j["summary"] = {{"rows", rep.rows.size()}, {"types", types}, {"covers_ok", covers_ok}, {"own_conditions_refuted", own_refuted}};
    j["rows"] = rows;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trigonal tropical curves, Hirzebruch polygons and covers"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    Common c;

    int g = 3, n = 1;
    auto* polygon = app.add_subcommand("polygon", "Hirzebruch polygon of a genus and Maroni parameter");
    polygon->add_option("--g", g)->required();
    polygon->add_option("--n", n)->required();
    add_common(polygon, c);

    bool regular_only = false, list = false;
    auto* triangulate = app.add_subcommand("triangulate", "enumerate unimodular triangulations");
    triangulate->add_option("--g", g)->required();
    triangulate->add_option("--n", n)->required();
    triangulate->add_flag("--regular", regular_only, "check regularity of each triangulation");
    triangulate->add_flag("--list", list, "include the triangulations");
    add_common(triangulate, c);

    SweepConfig sc;
    bool with_heights = false;
    auto* sweep = app.add_subcommand("sweep", "sample curves over all regular unimodular triangulations");
    sweep->add_option("--g", sc.g)->required();
    sweep->add_option("--n", sc.n)->required();
    sweep->add_option("--samples", sc.samples, "height samples per triangulation");
    sweep->add_option("--subsample", sc.subsample, "seeded number of triangulations to sweep (0: all)");
    sweep->add_option("--threads", sc.threads, "worker threads (default TROPIGON_THREADS)");
    sweep->add_flag("--heights", with_heights, "include sampled heights");
    add_common(sweep, c);

    CurveSource cs;
    auto* dual = app.add_subcommand("dual", "tropical plane curve dual to a regular subdivision");
    add_curve_source(dual, cs);
    add_common(dual, c);
    auto* skel = app.add_subcommand("skeleton", "abstract tropical curve of a smooth plane curve");
    add_curve_source(skel, cs);
    add_common(skel, c);
    auto* svg = app.add_subcommand("render-svg", "SVG drawing of a plane curve (presentation only)");
    add_curve_source(svg, cs);
    add_common(svg, c);

    std::string graph_path, divisor_path;
    auto* classify = app.add_subcommand("classify", "combinatorial type of a genus 3 or 4 curve");
    classify->add_option("--graph", graph_path)->required();
    add_common(classify, c);

    int degree = 3, budget = 2;
    auto* cover = app.add_subcommand("cover-search", "search for a well-contracted tropical cover");
    cover->add_option("--graph", graph_path)->required();
    cover->add_option("--degree", degree);
    cover->add_option("--budget", budget, "maximal absolute slope");
    add_common(cover, c);

    auto* rank_cmd = app.add_subcommand("rank", "Baker-Norine rank of a divisor");
    rank_cmd->add_option("--graph", graph_path)->required();
    rank_cmd->add_option("--divisor", divisor_path)->required();
    add_common(rank_cmd, c);

    int d = 3;
    auto* gon = app.add_subcommand("gonality", "search for a rank-1 divisor of degree d");
    gon->add_option("--graph", graph_path)->required();
    gon->add_option("--d", d);
    add_common(gon, c);

    auto* maroni = app.add_subcommand("maroni", "tropical Maroni invariant");
    maroni->add_option("--graph", graph_path)->required();
    add_common(maroni, c);

    bool search = false;
    auto* check = app.add_subcommand("check-realizability", "edge-length conditions for a Hirzebruch surface");
    check->add_option("--graph", graph_path)->required();
    check->add_option("--n", n)->required();
    check->add_flag("--search", search, "also run the certified triangulation search");
    add_common(check, c);

    std::string unfold_input;
    auto* unfold = app.add_subcommand("unfold", "unfold a trigonal morphism of a (000)A curve");
    unfold->add_option("--input", unfold_input)->required();
    add_common(unfold, c);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*polygon) {
            auto P = hirzebruch_polygon(g, n);
            Json j = header("polygon", c);
            j["g"] = g;
            j["n"] = n;
            j["polygon"] = to_json(P);
            Json ip = Json::array();
            for (const auto& p : interior_points(P)) ip.push_back(to_json(p));
            j["interior_points"] = ip;
            std::string vs;
            for (const auto& p : P.vertices) vs += to_string(p) + " ";
            emit(c, j, table({{"vertices", vs}, {"interior points", std::to_string(ip.size())}}));
        } else if (*triangulate) {
            auto all = unimodular_triangulations(hirzebruch_polygon(g, n));
            Json j = header("triangulate", c);
            j["g"] = g;
            j["n"] = n;
            j["unimodular"] = all.size();
            int reg = 0;
            Json items = Json::array();
            for (const auto& T : all) {
                std::optional<HeightFunction> h;
                if (regular_only) reg += (h = is_regular(T)).has_value();
                if (list) {
                    Json t = to_json(T);
                    if (h) t["heights"] = to_json(*h);
                    if (regular_only) t["regular"] = h.has_value();
                    items.push_back(t);
                }
            }
            std::vector<std::pair<std::string, std::string>> rows{{"unimodular", std::to_string(all.size())}};
            if (regular_only) {
                j["regular"] = reg;
                rows.push_back({"regular", std::to_string(reg)});
            }
            if (list) j["triangulations"] = items;
            emit(c, j, table(rows));
        } else if (*sweep) {
            sc.seed = c.seed;
            auto rep = run_sweep(sc);
            Json j = sweep_json(rep, c, with_heights);
            std::vector<std::pair<std::string, std::string>> rows{
                {"triangulations", std::to_string(rep.triangulations)},
                {"swept regular", std::to_string(rep.regular)},
                {"samples", std::to_string(rep.rows.size())},
                {"covers ok", j["summary"]["covers_ok"].dump()},
                {"own conditions refuted", j["summary"]["own_conditions_refuted"].dump()}};
            for (const auto& [t, k] : j["summary"]["types"].items()) rows.push_back({"  " + t, k.dump()});
            emit(c, j, table(rows));
        } else if (*dual || *skel || *svg) {
            auto [T, h] = load_curve(cs, c.seed);
            auto curve = dual_tropical_curve(T, h);
            if (*svg) {
                std::string s = svg_curve(curve);
                Json j = header("render-svg", c);
                j["svg"] = s;
                emit(c, j, s);
            } else if (*dual) {
                Json j = header("dual", c);
                j["triangulation"] = to_json(T);
                j["heights"] = to_json(h);
                j["curve"] = to_json(curve);
                std::ostringstream os;
                for (size_t v = 0; v < curve.vertices.size(); ++v) os << "vertex " << v << "  " << fmt_point(curve.vertices[v]) << '\n';
                for (const auto& e : curve.edges) {
                    os << "edge " << e.a << "-" << e.b << "  dir " << to_string(e.dir) << "  weight " << e.weight
                       << "  length " << to_string(e.length) << '\n';
                }
                os << curve.rays.size() << " rays, " << (curve.smooth ? "smooth" : "not smooth") << '\n';
                emit(c, j, os.str());
            } else {
                MetricGraph G = skeleton(curve);
                Json j = header("skeleton", c);
                j["graph"] = to_json(G);
                j["genus"] = genus(G);
                auto m = identify_type(G);
                j["type"] = m ? Json(m->type->name) : Json(nullptr);
                std::ostringstream os;
                os << "genus " << genus(G) << ", type " << (m ? m->type->name : "none") << '\n';
                for (const auto& e : G.edges) os << e.u << "-" << e.v << "  " << to_string(e.len) << '\n';
                emit(c, j, os.str());
            }
        } else if (*classify) {
            MetricGraph G = graph_from(read_json(graph_path));
            validate(G);
            MetricGraph C = canonical_model(G);
            Json j = header("classify", c);
            j["genus"] = genus(C);
            j["canonical"] = to_json(C);
            auto m = identify_type(C);
            std::vector<std::pair<std::string, std::string>> rows{{"genus", std::to_string(genus(C))}};
            if (m) {
                j["type"] = m->type->name;
                j["realizability"] = realizability_name(m->type->realizability);
                j["reconstructed"] = m->type->reconstructed;
                Json roles = Json::object();
                for (size_t r = 0; r < m->type->edge_roles.size(); ++r) roles[m->type->edge_roles[r]] = m->iso.emap[r];
                j["roles"] = roles;
                rows.push_back({"type", m->type->name});
                rows.push_back({"realizability", realizability_name(m->type->realizability)});
            } else {
                j["type"] = nullptr;
                rows.push_back({"type", "none"});
            }
            emit(c, j, table(rows));
        } else if (*cover) {
            MetricGraph G = graph_from(read_json(graph_path));
            auto res = search_well_contracted_cover(G, degree, budget);
            Json j = header("cover-search", c);
            j["degree"] = degree;
            j["budget"] = budget;
            j["found"] = res.cover.has_value();
            j["nodes"] = res.nodes;
            if (res.cover) {
                j["cover"] = to_json(*res.cover);
                j["slopes"] = res.slopes;
            }
            MetricGraph C = canonical_model(G);
            j["sprawling"] = detect_sprawling_node(C);
            j["crowded"] = detect_crowded_graph(C);
            j["tie_fighter"] = detect_tie_fighter(C);
            std::vector<std::pair<std::string, std::string>> rows{{"found", res.cover ? "yes" : "no"},
                                                                  {"nodes", std::to_string(res.nodes)}};
            if (res.cover) {
                for (size_t e = 0; e < res.slopes.size(); ++e) {
                    std::string s;
                    for (int k : res.slopes[e]) s += std::to_string(k) + " ";
                    rows.push_back({"edge " + std::to_string(e), s});
                }
            }
            emit(c, j, table(rows));
        } else if (*rank_cmd) {
            MetricGraph G = graph_from(read_json(graph_path));
            Divisor D = divisor_from(read_json(divisor_path));
            int r = rank(G, D);
            Json j = header("rank", c);
            j["degree"] = D.degree();
            j["rank"] = r;
            emit(c, j, table({{"degree", std::to_string(D.degree())}, {"rank", std::to_string(r)}}));
        } else if (*gon) {
            MetricGraph G = graph_from(read_json(graph_path));
            auto res = divisorial_gonality_search(G, d);
            Json j = header("gonality", c);
            j["d"] = d;
            j["found"] = res.witness.has_value();
            if (res.witness) j["witness"] = to_json(*res.witness);
            j["resolution"] = res.resolution.get_str();
            j["exhaustive_at_resolution"] = res.exhaustive_at_resolution;
            emit(c, j, table({{"found", res.witness ? "yes" : "no"}, {"resolution", res.resolution.get_str()}}));
        } else if (*maroni) {
            MetricGraph G = graph_from(read_json(graph_path));
            auto m = tropical_maroni(G);
            Json j = header("maroni", c);
            j["maroni"] = m ? Json(*m) : Json(nullptr);
            emit(c, j, table({{"maroni", m ? std::to_string(*m) : "none"}}));
        } else if (*check) {
            MetricGraph G = graph_from(read_json(graph_path));
            auto v = check_conditions(G, n);
            Json j = header("check-realizability", c);
            j["verdict"] = to_json(v);
            std::vector<std::pair<std::string, std::string>> rows{{"type", v.type},
                                                                  {"n", std::to_string(n)},
                                                                  {"verdict", verdict_name(v.verdict)}};
            if (search) {
                auto rep = realizability_search(G, n);
                j["search"] = {{"found", rep.certificate.has_value()}, {"structures", rep.structures}, {"programs", rep.programs}};
                if (rep.certificate) {
                    j["search"]["triangulation"] = to_json(rep.certificate->triangulation);
                    j["search"]["heights"] = to_json(rep.certificate->heights);
                }
                rows.push_back({"search", rep.certificate ? "certificate found" : "exhausted"});
            }
            emit(c, j, table(rows));
        } else if (*unfold) {
            auto in = trigonal_from(read_json(unfold_input));
            auto r = unfold_000A(in);
            bool ok = verify_unfolding(in, r);
            Json j = header("unfold", c);
            j["input"] = to_json(in);
            j["result"] = to_json(r);
            j["verified"] = ok;
            std::vector<std::pair<std::string, std::string>> rows{{"variant", variant_name(r.variant)}};
            for (int k = 1; k <= 14; ++k) rows.push_back({"l" + std::to_string(k), r.has(k) ? to_string(r.lv(k)) : "-"});
            rows.push_back({"verified", ok ? "yes" : "no"});
            emit(c, j, table(rows));
            if (!ok) return 1;
        }
    } catch (const Error& e) {
        std::cerr << "tropigon: " << e.what() << '\n';
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "tropigon: internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
