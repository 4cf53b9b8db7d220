// Acceptance runner: one PASS/FAIL line per criterion.  Usage: tropigon_acceptance [criterion...]

#include "fixtures.hpp"
#include "oracles.hpp"

#include "tropigon/covers.hpp"
#include "tropigon/divisor.hpp"
#include "tropigon/dual_curve.hpp"
#include "tropigon/error.hpp"
#include "tropigon/json_io.hpp"
#include "tropigon/realizability.hpp"
#include "tropigon/sweep.hpp"
#include "tropigon/unfolding.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <unistd.h>

using namespace tropigon;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", s);
    return buf;
}

bool env_flag(const char* name) {
    const char* v = std::getenv(name);
    return v && *v && std::string(v) != "0";
}

// --------------------------------------------------------------------------------------------

Outcome c1_maroni_gate() {
    Outcome out;
    auto t0 = Clock::now();
    std::set<std::pair<int, int>> accepted;
    for (int g : {3, 4}) {
        for (int n = 0; n <= 4; ++n) {
            try {
                auto P = hirzebruch_polygon(g, n);
                accepted.insert({g, n});
                int k = static_cast<int>(interior_points(P).size());
                out.require(k == g, "interior points of (" + std::to_string(g) + "," + std::to_string(n) + "): " + std::to_string(k));
            } catch (const Error&) {
            }
        }
    }
    out.require(accepted == std::set<std::pair<int, int>>{{3, 1}, {4, 0}, {4, 2}}, "accepted set differs");
    double s = seconds_since(t0);
    out.require(s < 1, "runtime " + fmt_seconds(s));
    out.note("accepted (3,1) (4,0) (4,2)");
    return out;
}

SweepReport genus3_sweep() {
    SweepConfig cfg;
    cfg.g = 3;
    cfg.n = 1;
    cfg.samples = 10;
    cfg.seed = 1;
    return run_sweep(cfg);
}

Outcome c2_projection_covers() {
    Outcome out;
    auto t0 = Clock::now();
    auto rep = genus3_sweep();
    int bad = 0;
    for (const auto& r : rep.rows) {
        bool ok = r.cover_ok && r.cover_degree == 3 && r.min_slack >= 0 && r.slack_one && r.well_contracted;
        if (!ok && bad++ < 5) {
            out.note("triangulation " + std::to_string(r.triangulation) + " sample " + std::to_string(r.sample) + ": " +
                     (r.cover_error.empty() ? "slack or degree" : r.cover_error));
        }
    }
    out.require(rep.regular == rep.triangulations, "not every triangulation is regular");
    out.require(static_cast<int>(rep.rows.size()) == 10 * rep.regular, "missing samples");
    out.require(bad == 0, std::to_string(bad) + " samples fail cover verification");
    out.note(std::to_string(rep.regular) + " regular triangulations, " + std::to_string(rep.rows.size()) + " samples, " +
             fmt_seconds(seconds_since(t0)));
    return out;
}

MetricGraph k4_lengths(const std::array<long, 6>& l) {
    const char* roles[] = {"x", "y", "z", "u", "v", "w"};
    std::vector<std::pair<std::string, Q>> v;
    for (int i = 0; i < 6; ++i) v.push_back({roles[i], Q(l[i])});
    return with_lengths(*find_type(3, "(000)"), v);
}

Outcome c3_genus3_theorem() {
    Outcome out;
    auto t0 = Clock::now();
    auto rep = genus3_sweep();
    std::map<std::string, int> types;
    int refuted = 0;
    for (const auto& r : rep.rows) {
        ++types[r.type.empty() ? "untyped" : r.type];
        if (r.type == "(000)" && (r.verdicts.empty() || r.verdicts[0].verdict != Verdict::Satisfied)) ++refuted;
    }
    std::set<std::string> allowed{"(000)", "(020)", "(111)", "(212)"};
    for (const auto& [t, k] : types) out.require(allowed.count(t) > 0, std::to_string(k) + " samples of type " + t);
    out.require(refuted == 0, std::to_string(refuted) + " (000) samples violate the conditions");
    std::string dist;
    for (const auto& [t, k] : types) dist += t + ":" + std::to_string(k) + " ";
    out.note("sweep types " + dist + "(" + fmt_seconds(seconds_since(t0)) + ")");

    auto t1 = Clock::now();
    std::mt19937_64 rng(2025);
    std::uniform_int_distribution<long> base(1, 8), inc(1, 4), any(1, 16);
    int found = 0, exhausted = 0;
    for (int i = 0; i < 50; ++i) {
        long x = base(rng), y = base(rng), z = base(rng);
        long u = std::max(x, y) + inc(rng), v = std::max(x, z) + inc(rng), w = y + z + inc(rng);
        MetricGraph G = k4_lengths({x, y, z, u, v, w});
        if (check_conditions(G, 1).verdict != Verdict::Satisfied) {
            out.require(false, "generated vector is not satisfying");
            continue;
        }
        found += realizability_by_search(G, 1).has_value();
    }
    for (int i = 0; i < 50;) {
        MetricGraph G = k4_lengths({any(rng), any(rng), any(rng), any(rng), any(rng), any(rng)});
        if (check_conditions(G, 1).verdict != Verdict::Refuted) continue;
        ++i;
        exhausted += !realizability_by_search(G, 1).has_value();
    }
    out.require(found == 50, "certificates for " + std::to_string(found) + "/50 satisfying vectors");
    out.require(exhausted == 50, "search exhausted for " + std::to_string(exhausted) + "/50 violating vectors");
    double s = seconds_since(t1);
    out.note("search: " + std::to_string(found) + "/50 certified, " + std::to_string(exhausted) + "/50 exhausted, " + fmt_seconds(s));
    out.require(seconds_since(t0) < 600, "runtime " + fmt_seconds(seconds_since(t0)));
    return out;
}

Outcome c4_genus4_lemmas() {
    Outcome out;
    auto t0 = Clock::now();
    const bool full = env_flag("TROPIGON_FULL");
    for (int n : {0, 2}) {
        SweepConfig cfg;
        cfg.g = 4;
        cfg.n = n;
        cfg.samples = 10;
        cfg.seed = 1;
        cfg.subsample = full ? 0 : 3000;
        auto rep = run_sweep(cfg);
        std::map<std::string, int> typed, own_refuted, both;
        int untyped = 0, flagged = 0;
        for (const auto& r : rep.rows) {
            if (r.type.empty()) {
                ++untyped;
                continue;
            }
            ++typed[r.type];
            if (find_type(4, r.type)->realizability == Realizability::NotRealizable) ++flagged;
            int satisfied = 0;
            for (const auto& v : r.verdicts) {
                satisfied += v.verdict == Verdict::Satisfied;
                if (v.n == n && v.verdict == Verdict::Refuted) ++own_refuted[r.type];
            }
            if (satisfied == 2) ++both[r.type];
        }
        std::string tag = "F" + std::to_string(n) + ": ";
        out.require(untyped == 0, tag + std::to_string(untyped) + " samples of no catalog type");
        out.require(flagged == 0, tag + std::to_string(flagged) + " samples of a non-realizable type");
        int total_refuted = 0, total_both = 0;
        std::string detail;
        for (const auto& [t, k] : typed) {
            int r = own_refuted.count(t) ? own_refuted[t] : 0;
            int b = both.count(t) ? both[t] : 0;
            total_refuted += r;
            total_both += b;
            detail += t + " " + std::to_string(r) + "/" + std::to_string(k);
            if (b) detail += " (both " + std::to_string(b) + ")";
            detail += "; ";
        }
        out.require(total_refuted == 0, tag + std::to_string(total_refuted) + " samples violate their own lemma");
        out.require(total_both == 0, tag + std::to_string(total_both) + " samples satisfy both condition sets");
        out.note(tag + std::to_string(rep.chosen.size()) + " triangulations, " + std::to_string(rep.rows.size()) +
                 " samples; violations per type: " + detail);
    }
    double s = seconds_since(t0);
    if (!full) out.require(s < 600, "reduced mode runtime " + fmt_seconds(s));
    out.note(std::string(full ? "full" : "reduced") + " mode, " + fmt_seconds(s));
    return out;
}

Outcome c5_covers_and_patterns() {
    Outcome out;
    auto t0 = Clock::now();
    std::vector<std::pair<std::string, MetricGraph>> positive{
        {"(000)", with_lengths(*find_type(3, "(000)"),
                               {{"x", qi(1)}, {"v", qi(1)}, {"z", qi(1)}, {"u", qi(2)}, {"y", qi(2)}, {"w", qi(3)}})},
        {"(020)", fixture::catalog_graph(3, "(020)")},
        {"(111)", fixture::catalog_graph(3, "(111)")},
        {"(212)", fixture::catalog_graph(3, "(212)")}};
    for (const auto& [name, G] : positive) {
        auto r = search_well_contracted_cover(G, 3, 2);
        bool ok = r.cover && verify_cover(*r.cover).degree == 3 && is_well_contracted(*r.cover);
        out.require(ok, "no cover for genus-3 " + name);
    }
    out.require(!search_well_contracted_cover(fixture::star303(), 3, 2).cover, "cover found for genus-3 (303)");
    out.require(!search_well_contracted_cover(fixture::catalog_graph(4, "(303)"), 3, 2).cover, "cover found for genus-4 (303)");
    auto star = fixture::star_cover_303();
    out.require(verify_cover(star).degree == 3 && !is_well_contracted(star), "genus-4 (303) star cover");

    out.require(!detect_sprawling_node(fixture::star303()).empty(), "no sprawling node in genus-3 (303)");
    for (const char* name : {"(213)", "(314)", "(405)"}) {
        out.require(!detect_sprawling_node(fixture::catalog_graph(4, name)).empty(), std::string("no sprawling node in ") + name);
    }
    out.require(!detect_crowded_graph(canonical_model(fixture::crowded())).empty(), "crowded instance not detected");
    out.require(!detect_tie_fighter(canonical_model(fixture::tie_fighter())).empty(), "TIE-fighter instance not detected");
    int spurious = 0;
    for (const auto& T : catalog()) {
        spurious += !detect_crowded_graph(T.graph).empty() + !detect_tie_fighter(T.graph).empty();
        if (!detect_sprawling_node(T.graph).empty()) {
            out.require(!search_well_contracted_cover(T.graph, 3, 2).cover, "cover despite a sprawling node in " + T.name);
        }
    }
    out.require(spurious == 0, std::to_string(spurious) + " catalog graphs trigger crowded/TIE-fighter");
    double s = seconds_since(t0);
    out.require(s < 300, "runtime " + fmt_seconds(s));
    out.note(fmt_seconds(s));
    return out;
}

Outcome c6_divisors() {
    Outcome out;
    auto t0 = Clock::now();
    std::mt19937_64 rng(6);
    int rr_fail = 0, oracle_cmp = 0, oracle_fail = 0;
    for (int i = 0; i < 200; ++i) {
        MetricGraph G = fixture::random_graph(rng, 4);
        int g = genus(G);
        Divisor D = fixture::random_divisor(rng, G, 2 * g);
        Divisor KD = canonical_divisor(G);
        for (const auto& [p, k] : D.chips) KD.add(p, -k);
        int r = rank(G, D);
        rr_fail += r - rank(G, KD) != D.degree() - g + 1;
        std::vector<GraphPoint> support;
        for (const auto& [p, k] : D.chips) support.push_back(p);
        DiscretizedGraph X = discretize(G, support);
        if (X.n <= 8) {
            ++oracle_cmp;
            oracle_fail += oracle::rank(X, X.chips(D)) != r;
        }
    }
    out.require(rr_fail == 0, std::to_string(rr_fail) + "/200 Riemann-Roch failures");
    out.require(oracle_fail == 0, std::to_string(oracle_fail) + "/" + std::to_string(oracle_cmp) + " oracle disagreements");
    out.require(oracle_cmp > 0, "no graph small enough for the oracle");
    int gonal = 0, fixtures = 0;
    for (const auto& T : catalog()) {
        if (T.realizability != Realizability::Realizable || T.name == "(223)") continue;
        ++fixtures;
        auto w = is_divisorially_d_gonal(T.graph, 3);
        bool ok = w && w->degree() == 3 && w->effective() && rank(T.graph, *w) >= 1;
        gonal += ok;
        out.require(ok, "no trigonal witness for " + T.name);
    }
    out.require(fixtures == 15, std::to_string(fixtures) + " fixtures instead of 15");
    double s = seconds_since(t0);
    out.require(s < 600, "runtime " + fmt_seconds(s));
    out.note("RR on 200 graphs, oracle on " + std::to_string(oracle_cmp) + ", trigonal " + std::to_string(gonal) + "/" +
             std::to_string(fixtures) + ", " + fmt_seconds(s));
    return out;
}

Outcome c7_unfolding() {
    Outcome out;
    auto t0 = Clock::now();
    std::mt19937_64 rng(7);
    int bad = 0;
    for (auto [i, j] : fixture::trigonal_cases()) {
        for (int k = 0; k < 100; ++k) {
            auto in = fixture::random_trigonal(rng, i, j);
            auto r = unfold_000A(in);
            bool ok = verify_unfolding(in, r);
            for (int m = 1; m <= 14; ++m) ok = ok && (!r.has(m) || r.lv(m) >= 0);
            bad += !ok;
        }
    }
    out.require(bad == 0, std::to_string(bad) + "/600 unfoldings rejected");
    double s = seconds_since(t0);
    out.require(s < 10, "runtime " + fmt_seconds(s));
    out.note("600 inputs, " + fmt_seconds(s));
    return out;
}

#ifndef TROPIGON_CLI
#define TROPIGON_CLI "tropigon"
#endif

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_json(const std::filesystem::path& p, const Json& j) { std::ofstream(p) << j.dump(2) << '\n'; }

Outcome c8_determinism() {
    Outcome out;
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / ("tropigon_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const auto k4 = with_lengths(*find_type(3, "(000)"),
                                 {{"x", qi(1)}, {"y", qi(1)}, {"z", qi(1)}, {"u", qi(2)}, {"v", qi(2)}, {"w", qi(3)}});
    write_json(dir / "k4.json", to_json(k4));
    write_json(dir / "g4.json", to_json(fixture::g4_000A_f2()));
    Divisor D;
    D.add(GraphPoint::at_vertex(0), 2);
    D.add(GraphPoint::on_edge(1, qi(1, 2)), 1);
    write_json(dir / "divisor.json", to_json(D));
    std::mt19937_64 rng(8);
    write_json(dir / "unfold.json", to_json(fixture::random_trigonal(rng, 1, 3)));

    auto all = unimodular_triangulations(hirzebruch_polygon(3, 1));
    auto srng = sample_rng(4, 10, 0);
    write_json(dir / "curve.json", {{"triangulation", to_json(all[10])},
                                     {"heights", to_json(sample_heights(all[10], *is_regular(all[10]), srng))}});

    const std::string k = (dir / "k4.json").string();
    std::vector<std::string> commands{
        "polygon --g 4 --n 2",
        "triangulate --g 3 --n 1 --regular",
        "sweep --g 3 --n 1 --samples 2 --subsample 50",
        "sweep --g 4 --n 2 --samples 1 --subsample 50 --heights",
        "dual --g 3 --n 1 --index 42",
        "dual --input " + (dir / "curve.json").string(),
        "skeleton --g 4 --n 0 --index 1000",
        "render-svg --g 3 --n 1 --index 7",
        "classify --graph " + k,
        "cover-search --graph " + k,
        "rank --graph " + k + " --divisor " + (dir / "divisor.json").string(),
        "gonality --graph " + k,
        "maroni --graph " + (dir / "g4.json").string(),
        "check-realizability --graph " + k + " --n 1",
        "unfold --input " + (dir / "unfold.json").string(),
    };
    int differing = 0;
    for (size_t i = 0; i < commands.size(); ++i) {
        std::string outs[2];
        int codes[2];
        for (int rep = 0; rep < 2; ++rep) {
            fs::path file = dir / ("out" + std::to_string(i) + "_" + std::to_string(rep) + ".json");
            std::string cmd = std::string(TROPIGON_CLI) + " " + commands[i] + " --json --seed 5 --output " + file.string();
            if (rep == 1) cmd = "TROPIGON_THREADS=1 " + cmd;
            codes[rep] = std::system(cmd.c_str());
            outs[rep] = slurp(file);
        }
        bool same = codes[0] == 0 && codes[1] == 0 && !outs[0].empty() && outs[0] == outs[1];
        if (same) {
            auto j = Json::parse(outs[0]);
            same = j.value("seed", 0) == 5 && j.contains("version");
        }
        if (!same) {
            ++differing;
            out.note("not reproducible: " + commands[i]);
        }
    }
    out.require(differing == 0, std::to_string(differing) + " commands differ between runs");
    out.note(std::to_string(commands.size()) + " commands, each run twice");
    fs::remove_all(dir);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"C1 Maroni gate", c1_maroni_gate},
        {"C2 projection covers of genus-3 curves", c2_projection_covers},
        {"C3 genus-3 edge-length theorem", c3_genus3_theorem},
        {"C4 genus-4 lemmas", c4_genus4_lemmas},
        {"C5 covers and forbidden patterns", c5_covers_and_patterns},
        {"C6 divisor theory", c6_divisors},
        {"C7 unfolding", c7_unfolding},
        {"C8 determinism", c8_determinism},
    };
    std::set<int> chosen;
    for (int i = 1; i < argc; ++i) chosen.insert(std::atoi(argv[i]));
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        if (!chosen.empty() && !chosen.count(static_cast<int>(i) + 1)) continue;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << criteria[i].first << std::endl;
        for (const auto& n : o.notes) std::cout << "    " << n << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
