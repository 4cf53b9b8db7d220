#include "fixtures.hpp"

#include "tropigon/dual_curve.hpp"
#include "tropigon/error.hpp"
#include "tropigon/realizability.hpp"
#include "tropigon/sweep.hpp"

#include <doctest.h>

using namespace tropigon;

namespace {

MetricGraph k4(int x, int y, int z, int u, int v, int w) {
    return with_lengths(*find_type(3, "(000)"),
                        {{"x", qi(x)}, {"y", qi(y)}, {"z", qi(z)}, {"u", qi(u)}, {"v", qi(v)}, {"w", qi(w)}});
}

}  // namespace

TEST_CASE("relations parse and print") {
    Relation r = parse_relation("wz+xz<xy");
    CHECK(r.kind == RelKind::Less);
    CHECK(r.lhs.size() == 2);
    CHECK(r.rhs.at("xy") == 1);
    CHECK(parse_relation(to_string(r)).lhs == r.lhs);
    Relation s = parse_relation("vy=uz+2uv");
    CHECK(s.rhs.at("uv") == 2);
    CHECK(parse_relation("a<=b").kind == RelKind::LessEq);
}

TEST_CASE("every condition set names roles of its type") {
    for (const auto& cs : condition_sets()) {
        const auto* T = find_type(cs.genus, cs.type);
        REQUIRE(T != nullptr);
        for (const auto& r : cs.relations) {
            for (const auto* side : {&r.lhs, &r.rhs}) {
                for (const auto& [role, coeff] : *side) {
                    CAPTURE(r.text);
                    CHECK(resolve_role(*T, role) >= 0);
                }
            }
        }
    }
}

TEST_CASE("genus-3 (000) conditions") {
    CHECK(check_conditions(k4(1, 1, 1, 2, 2, 3), 1).verdict == Verdict::Satisfied);
    CHECK(check_conditions(k4(1, 1, 1, 1, 1, 2), 1).verdict == Verdict::Satisfied);
    CHECK(check_conditions(k4(1, 1, 1, 1, 1, 1), 1).verdict == Verdict::Refuted);
    // Satisfied only after relabelling by a symmetry.
    auto v = check_conditions(k4(1, 2, 2, 1, 1, 3), 1);
    CHECK(v.verdict == Verdict::Satisfied);
    CHECK(v.witness.size() == 6);
    CHECK(check_conditions(fixture::catalog_graph(3, "(020)"), 1).verdict == Verdict::NotStated);
}

TEST_CASE("genus-4 (000)A fixture has Maroni invariant 2") {
    MetricGraph G = fixture::g4_000A_f2();
    CHECK(check_conditions(G, 2).verdict == Verdict::Satisfied);
    CHECK(check_conditions(G, 0).verdict == Verdict::Refuted);
    CHECK(tropical_maroni(G) == 2);
}

TEST_CASE("conditions reject inputs outside their scope") {
    CHECK_THROWS_AS(check_conditions(fixture::catalog_graph(3, "(000)"), 0), Error);
    CHECK_THROWS_AS(check_conditions(fixture::crowded(), 1), Error);
}

TEST_CASE("tropical Maroni invariant of genus-3 curves") {
    CHECK(tropical_maroni(k4(1, 1, 1, 2, 2, 3)) == 1);
    CHECK_FALSE(tropical_maroni(k4(1, 1, 1, 1, 1, 1)).has_value());
    CHECK_FALSE(tropical_maroni(fixture::star303()).has_value());
}

TEST_CASE("search certificate realizes the curve") {
    MetricGraph G = k4(1, 1, 1, 2, 2, 3);
    auto rep = realizability_search(G, 1);
    REQUIRE(rep.certificate.has_value());
    CHECK(rep.structures > 0);
    const auto& cert = *rep.certificate;
    CHECK(cert.triangulation.polygon.vertices == hirzebruch_polygon(3, 1).vertices);
    auto curve = dual_tropical_curve(cert.triangulation, cert.heights);
    CHECK(curve.smooth);
    CHECK(isometric(canonical_model(skeleton(curve)), canonical_model(G)));
}

TEST_CASE("sampled genus-3 curves satisfy the (000) conditions") {
    SweepConfig cfg;
    cfg.g = 3;
    cfg.n = 1;
    cfg.subsample = 300;
    cfg.seed = 21;
    auto rep = run_sweep(cfg);
    CHECK(rep.rows.size() == 300);
    for (const auto& row : rep.rows) {
        CHECK((row.type == "(000)" || row.type == "(020)" || row.type == "(111)" || row.type == "(212)"));
        REQUIRE(row.verdicts.size() == 1);
        if (row.type == "(000)") CHECK(row.verdicts[0].verdict == Verdict::Satisfied);
    }
}

TEST_CASE("sampled F2 curves of type (000)A satisfy wz = uv") {
    SweepConfig cfg;
    cfg.g = 4;
    cfg.n = 2;
    cfg.subsample = 1500;
    cfg.seed = 5;
    auto rep = run_sweep(cfg);
    int seen = 0;
    for (const auto& row : rep.rows) {
        if (row.type != "(000)A") continue;
        ++seen;
        for (const auto& v : row.verdicts) {
            if (v.n == 2) CHECK(v.verdict == Verdict::Satisfied);
        }
    }
    CHECK(seen > 0);
}
