#include "oracles.hpp"

#include "tropigon/dual_curve.hpp"
#include "tropigon/error.hpp"
#include "tropigon/sweep.hpp"

#include <doctest.h>

using namespace tropigon;

namespace {

struct Sample {
    Triangulation T;
    HeightFunction h;
};

std::vector<Sample> samples(int g, int n, int count, std::uint64_t seed) {
    auto all = unimodular_triangulations(hirzebruch_polygon(g, n));
    std::vector<Sample> out;
    for (size_t i = 0; i < all.size() && static_cast<int>(out.size()) < count; i += all.size() / count + 1) {
        auto h0 = is_regular(all[i]);
        if (!h0) continue;
        auto rng = sample_rng(seed, i, 0);
        out.push_back({all[i], sample_heights(all[i], *h0, rng)});
    }
    return out;
}

Q value(const HeightFunction& h, const LatticePoint& a, const RationalPoint& p) {
    return h.at(a) + Q(static_cast<long>(a.x)) * p[0] + Q(static_cast<long>(a.y)) * p[1];
}

}  // namespace

TEST_CASE("curve vertices are the points where the three monomials of a triangle tie for the maximum") {
    for (const auto& s : samples(3, 1, 20, 4)) {
        auto C = dual_tropical_curve(s.T, s.h);
        Mesh M = build_mesh(s.T);
        REQUIRE(C.vertices.size() == M.tris.size());
        auto lattice = s.T.polygon.lattice_points();
        for (size_t t = 0; t < M.tris.size(); ++t) {
            const auto& a = M.pts[M.tris[t][0]];
            const auto& b = M.pts[M.tris[t][1]];
            const auto& c = M.pts[M.tris[t][2]];
            auto p = oracle::solve({{Q(static_cast<long>(a.x - b.x)), Q(static_cast<long>(a.y - b.y))},
                                    {Q(static_cast<long>(a.x - c.x)), Q(static_cast<long>(a.y - c.y))}},
                                   {s.h.at(b) - s.h.at(a), s.h.at(c) - s.h.at(a)});
            REQUIRE(p.size() == 2);
            CHECK(C.vertices[t][0] == p[0]);
            CHECK(C.vertices[t][1] == p[1]);
            Q top = value(s.h, a, C.vertices[t]);
            for (const auto& q : lattice) {
                bool corner = q == a || q == b || q == c;
                if (corner) {
                    CHECK(value(s.h, q, C.vertices[t]) == top);
                } else {
                    CHECK(value(s.h, q, C.vertices[t]) < top);
                }
            }
        }
    }
}

TEST_CASE("balancing, smoothness and round trip") {
    for (auto [g, n] : {std::pair{3, 1}, std::pair{4, 0}, std::pair{4, 2}}) {
        for (const auto& s : samples(g, n, 15, 6)) {
            auto C = dual_tropical_curve(s.T, s.h);
            CHECK(C.smooth);
            for (int v = 0; v < static_cast<int>(C.vertices.size()); ++v) {
                auto r = balancing_residual(C, v);
                CHECK(r[0] == 0);
                CHECK(r[1] == 0);
            }
            CHECK(newton_subdivision(C) == s.T);
            Mesh M = build_mesh(s.T);
            auto slack = edge_slacks(M, s.h);
            for (const auto& e : C.edges) CHECK(e.length == slack[e.mesh_edge]);
            CHECK(C.rays.size() == s.T.polygon.boundary_points().size());
            MetricGraph G = skeleton(C);
            CHECK(genus(G) == g);
            CHECK(is_canonical(G));
        }
    }
}

TEST_CASE("skeleton lengths scale with the heights") {
    auto s = samples(3, 1, 1, 12).front();
    HeightFunction h2 = s.h;
    for (auto& [p, v] : h2.values) v *= 5;
    MetricGraph A = skeleton(dual_tropical_curve(s.T, s.h));
    MetricGraph B = skeleton(dual_tropical_curve(s.T, h2));
    for (auto& e : A.edges) e.len *= 5;
    CHECK(isometric(A, B));
}

TEST_CASE("heights that induce another subdivision are rejected") {
    auto s = samples(3, 1, 2, 1);
    REQUIRE(s.size() == 2);
    CHECK_THROWS_AS(dual_tropical_curve(s[0].T, s[1].h), Error);
}

TEST_CASE("the honeycomb triangle") {
    // Degree-3 plane cubic with the standard honeycomb subdivision: genus 1, cycle of six edges.
    auto P = make_polygon({{0, 0}, {3, 0}, {0, 3}});
    HeightFunction h;
    for (const auto& p : P.lattice_points()) h.values[p] = Q(static_cast<long>(-(p.x * p.x + p.y * p.y + p.x * p.y)));
    auto T = recompute_subdivision(P, h);
    REQUIRE(T.has_value());
    auto C = dual_tropical_curve(*T, h);
    MetricGraph G = skeleton(C);
    CHECK(genus(G) == 1);
    REQUIRE(G.num_edges() == 1);
    CHECK(G.edges[0].len == 6);
}
