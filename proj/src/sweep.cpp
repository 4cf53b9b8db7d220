#include "tropigon/sweep.hpp"

#include "tropigon/dual_curve.hpp"
#include "tropigon/error.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <mutex>
#include <thread>

namespace tropigon {

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t t, std::uint64_t s) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(s)};
    return std::mt19937_64(seq);
}

int thread_count() {
    if (const char* env = std::getenv("TROPIGON_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

HeightFunction sample_heights(const Triangulation& T, const HeightFunction& h0, std::mt19937_64& rng) {
    Z den = 1;
    for (const auto& [p, v] : h0.values) den = lcm_den(den, v);
    std::uniform_int_distribution<long long> dist(-(1LL << 30), 1LL << 30);
    std::map<LatticePoint, Q> r;
    for (const auto& [p, v] : h0.values) r[p] = qi(dist(rng));
    Mesh M = build_mesh(T);
    for (Z K = 1;; K *= 2) {
        HeightFunction h;
        for (const auto& [p, v] : h0.values) h.values[p] = Q(v * den * K) + r[p];
        bool ok = true;
        auto s = edge_slacks(M, h);
        for (size_t e = 0; e < M.edges.size() && ok; ++e) ok = !M.edges[e].interior() || sgn(s[e]) > 0;
        if (ok) return h;
    }
}

SweepRow sweep_sample(const Triangulation& T, const HeightFunction& h, int g) {
    SweepRow row;
    row.heights = h;
    auto curve = dual_tropical_curve(T, h);
    row.round_trip = newton_subdivision(curve) == T;
    row.skeleton = skeleton(curve);
    if (auto m = identify_type(row.skeleton)) {
        row.type = m->type->name;
        for (size_t r = 0; r < m->type->edge_roles.size(); ++r) row.roles[m->type->edge_roles[r]] = m->iso.emap[r];
        for (int n : g == 3 ? std::vector<int>{1} : std::vector<int>{0, 2}) {
            row.verdicts.push_back(check_conditions(row.skeleton, n));
        }
    }
    try {
        auto cov = projection_cover(curve);
        auto rh = verify_cover(cov);
        row.cover_ok = true;
        row.cover_degree = rh.degree;
        row.well_contracted = is_well_contracted(cov);
        row.min_slack = rh.slack.empty() ? 0 : *std::min_element(rh.slack.begin(), rh.slack.end());
        row.slack_one = std::all_of(rh.slack.begin(), rh.slack.end(), [](int s) { return s == 1; });
    } catch (const Error& e) {
        row.cover_error = e.what();
    }
    return row;
}

SweepReport run_sweep(const SweepConfig& cfg) {
    SweepReport rep;
    rep.config = cfg;
    auto P = hirzebruch_polygon(cfg.g, cfg.n);
    auto all = unimodular_triangulations(P);
    rep.triangulations = static_cast<int>(all.size());
    std::vector<int> idx(all.size());
    std::iota(idx.begin(), idx.end(), 0);
    if (cfg.subsample > 0 && cfg.subsample < static_cast<int>(idx.size())) {
        std::mt19937_64 rng = sample_rng(cfg.seed, ~0ULL, ~0ULL);
        std::shuffle(idx.begin(), idx.end(), rng);
        idx.resize(cfg.subsample);
        std::sort(idx.begin(), idx.end());
    }
    rep.chosen = idx;

    std::vector<std::vector<SweepRow>> slots(idx.size());
    std::vector<char> regular(idx.size(), 0);
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto work = [&] {
        for (;;) {
            size_t k = next++;
            if (k >= idx.size()) return;
            try {
                const Triangulation& T = all[idx[k]];
                auto h0 = is_regular(T);
                if (!h0) continue;
                regular[k] = 1;
                for (int s = 0; s < cfg.samples; ++s) {
                    auto rng = sample_rng(cfg.seed, idx[k], s);
                    auto h = sample_heights(T, *h0, rng);
                    SweepRow row = sweep_sample(T, h, cfg.g);
                    if (!cfg.conditions) row.verdicts.clear();
                    row.triangulation = idx[k];
                    row.sample = s;
                    slots[k].push_back(std::move(row));
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    int nt = cfg.threads > 0 ? cfg.threads : thread_count();
    std::vector<std::thread> pool;
    for (int i = 1; i < nt; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    for (size_t k = 0; k < idx.size(); ++k) {
        rep.regular += regular[k];
        for (auto& r : slots[k]) rep.rows.push_back(std::move(r));
    }
    return rep;
}

}  // namespace tropigon
