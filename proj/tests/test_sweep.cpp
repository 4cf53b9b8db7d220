#include "tropigon/json_io.hpp"
#include "tropigon/sweep.hpp"

#include <doctest.h>

using namespace tropigon;

namespace {

Json digest(const SweepReport& rep) {
    Json rows = Json::array();
    for (const auto& r : rep.rows) {
        rows.push_back({r.triangulation, r.sample, r.type, to_json(r.heights), to_json(r.skeleton), r.cover_ok});
    }
    return {rep.chosen, rep.regular, rows};
}

}  // namespace

TEST_CASE("sweeps are reproducible and independent of the thread count") {
    SweepConfig cfg;
    cfg.g = 4;
    cfg.n = 2;
    cfg.samples = 2;
    cfg.subsample = 40;
    cfg.seed = 17;
    cfg.threads = 1;
    Json a = digest(run_sweep(cfg));
    cfg.threads = 4;
    Json b = digest(run_sweep(cfg));
    CHECK(a == b);
    cfg.seed = 18;
    CHECK(digest(run_sweep(cfg)) != a);
}

TEST_CASE("sampled heights induce their triangulation") {
    auto all = unimodular_triangulations(hirzebruch_polygon(4, 0));
    for (int t : {0, 1000, 20000, 46000}) {
        auto h0 = is_regular(all[t]);
        REQUIRE(h0.has_value());
        for (int s = 0; s < 3; ++s) {
            auto rng = sample_rng(3, t, s);
            auto h = sample_heights(all[t], *h0, rng);
            for (const auto& [p, v] : h.values) CHECK(is_integer(v));
            auto R = recompute_subdivision(all[t].polygon, h);
            REQUIRE(R.has_value());
            CHECK(*R == all[t]);
        }
    }
}

TEST_CASE("sweep rows carry verdicts for every Maroni parameter of the genus") {
    SweepConfig cfg;
    cfg.g = 4;
    cfg.n = 0;
    cfg.subsample = 10;
    auto rep = run_sweep(cfg);
    CHECK(rep.chosen.size() == 10);
    for (const auto& r : rep.rows) {
        if (r.type.empty()) continue;
        REQUIRE(r.verdicts.size() == 2);
        CHECK(r.verdicts[0].n == 0);
        CHECK(r.verdicts[1].n == 2);
        CHECK(r.round_trip);
        CHECK(r.cover_ok);
    }
}
