#pragma once

#include "tropigon/covers.hpp"
#include "tropigon/lattice.hpp"
#include "tropigon/metric_graph.hpp"
#include "tropigon/realizability.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace tropigon {

// Integer heights K*h0 + r inducing T, where h0 is an integral regularity certificate and r is drawn
// uniformly from [-2^30, 2^30]^points; K starts at 1 and doubles until every fold is positive.
HeightFunction sample_heights(const Triangulation& T, const HeightFunction& h0, std::mt19937_64& rng);

// Generator for sample s of triangulation t.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t t, std::uint64_t s);

// TROPIGON_THREADS when set and positive, otherwise the hardware concurrency.
int thread_count();

struct SweepConfig {
    int g = 3, n = 1;
    int samples = 1;
    std::uint64_t seed = 1;
    int subsample = 0;  // when positive, a seeded choice of this many triangulations
    int threads = 0;    // 0: thread_count()
    bool conditions = true;
};

struct SweepRow {
    int triangulation = 0;  // index in enumeration order
    int sample = 0;
    HeightFunction heights;
    MetricGraph skeleton;       // canonical model
    std::string type;           // empty if no catalog type matches
    std::map<std::string, int> roles;  // role -> skeleton edge for the matched labelling
    std::vector<ConditionVerdict> verdicts;  // for every Maroni parameter of the genus
    bool cover_ok = false;
    std::string cover_error;
    int cover_degree = 0;
    bool well_contracted = false;
    bool slack_one = false;  // RH slack 1 at every vertex
    int min_slack = 0;
    bool round_trip = false;  // Newton subdivision of the curve recovers the triangulation
};

struct SweepReport {
    SweepConfig config;
    int triangulations = 0;  // unimodular
    int regular = 0;
    std::vector<int> chosen;  // triangulation indices swept
    std::vector<SweepRow> rows;  // ordered by (triangulation, sample)
};

SweepReport run_sweep(const SweepConfig& cfg);

SweepRow sweep_sample(const Triangulation& T, const HeightFunction& h, int g);

}  // namespace tropigon
