#pragma once

#include "tropigon/covers.hpp"
#include "tropigon/divisor.hpp"
#include "tropigon/metric_graph.hpp"
#include "tropigon/unfolding.hpp"

#include <random>
#include <string>
#include <vector>

namespace fixture {

using namespace tropigon;

inline MetricGraph catalog_graph(int g, const std::string& name) { return find_type(g, name)->graph; }

// Hubs v1, v2 joined through three double-edge blocks.
inline MetricGraph crowded() {
    MetricGraph G;
    int v1 = G.add_vertex(), v2 = G.add_vertex();
    for (int i = 0; i < 3; ++i) {
        int p = G.add_vertex(), q = G.add_vertex();
        G.add_edge(v1, p, qi(1 + i));
        G.add_edge(v2, q, qi(2));
        G.add_edge(p, q, qi(1));
        G.add_edge(p, q, qi(3));
    }
    return G;
}

// Two loops on bridges at the wings, two double-edge blocks in the middle.
inline MetricGraph tie_fighter() {
    MetricGraph G;
    int a = G.add_vertex(), b = G.add_vertex(), w1 = G.add_vertex(), w4 = G.add_vertex();
    G.add_edge(a, w1, qi(1));
    G.add_edge(w1, w1, qi(2));
    G.add_edge(b, w4, qi(1));
    G.add_edge(w4, w4, qi(2));
    for (int i = 0; i < 2; ++i) {
        int p = G.add_vertex(), q = G.add_vertex();
        G.add_edge(a, p, qi(1));
        G.add_edge(b, q, qi(1));
        G.add_edge(p, q, qi(1));
        G.add_edge(p, q, qi(2));
    }
    return G;
}

// Three loops on bridges at a common trivalent vertex.
inline MetricGraph star303() { return catalog_graph(3, "(303)"); }

// K_{3,3} with the given edge lengths in the order ad, ae, af, bd, be, bf, cd, ce, cf.
inline MetricGraph k33(const std::vector<Q>& len) {
    MetricGraph G;
    for (int i = 0; i < 6; ++i) G.add_vertex();
    int k = 0;
    for (int a = 0; a < 3; ++a) {
        for (int d = 3; d < 6; ++d) G.add_edge(a, d, len[k++]);
    }
    return G;
}

// (000)A with wz = uv, wz + wy < xy and wz + xz < xy.
inline MetricGraph g4_000A_f2() {
    return with_lengths(*find_type(4, "(000)A"),
                        {{"wz", qi(1)}, {"uv", qi(1)}, {"wy", qi(1)}, {"xz", qi(1)}, {"xy", qi(3)},
                         {"ux", qi(2)}, {"uz", qi(2)}, {"vw", qi(2)}, {"vy", qi(2)}});
}

// The degree-3 cover of a genus-4 (303) curve onto a star with three branches: a hexagon whose
// alternate vertices sit over the centre, with the loops hung on bridges of dilation 2.
inline TropicalCover star_cover_303() {
    TropicalCover c;
    MetricGraph& G = c.source;
    c.num_branches = 3;
    auto vertex = [&](int branch, const Q& h) {
        int v = G.add_vertex();
        c.branch.push_back(branch);
        c.height.push_back(h);
        return v;
    };
    auto edge = [&](int u, int v, const Q& len, int mu) {
        G.add_edge(u, v, len);
        c.mu.push_back(mu);
    };
    int centre[3], outer[3];
    for (int b = 0; b < 3; ++b) {
        centre[b] = vertex(-1, 0);
        outer[b] = vertex(b, qi(1));
    }
    for (int b = 0; b < 3; ++b) {
        edge(centre[b], outer[b], qi(1), 1);
        edge(outer[b], centre[(b + 1) % 3], qi(1), 1);
        int x = vertex(b, qi(3)), y = vertex(b, qi(5));
        edge(outer[b], x, qi(1), 2);
        edge(x, y, qi(2), 1);
        edge(x, y, qi(2), 1);
        c.legs.push_back({y, 2, b});
        c.legs.push_back({centre[b], 1, (b + 1) % 3});
    }
    return c;
}

// Connected graph with genus at most max_genus, integer lengths in [1, 3] and no degenerate vertices.
inline MetricGraph random_graph(std::mt19937_64& rng, int max_genus) {
    std::uniform_int_distribution<int> len(1, 3);
    MetricGraph G;
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int i = 0; i < n; ++i) G.add_vertex();
    for (int v = 1; v < n; ++v) G.add_edge(std::uniform_int_distribution<int>(0, v - 1)(rng), v, qi(len(rng)));
    int extra = std::uniform_int_distribution<int>(1, max_genus)(rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < extra; ++i) G.add_edge(pick(rng), pick(rng), qi(len(rng)));
    return G;
}

inline Divisor random_divisor(std::mt19937_64& rng, const MetricGraph& G, int max_abs_degree) {
    Divisor D;
    int target = std::uniform_int_distribution<int>(-max_abs_degree, max_abs_degree)(rng);
    int spread = std::uniform_int_distribution<int>(0, 2)(rng);
    std::uniform_int_distribution<int> pick(0, G.num_vertices() - 1);
    for (int i = 0; i < spread; ++i) {
        D.add(GraphPoint::at_vertex(pick(rng)), 1);
        D.add(GraphPoint::at_vertex(pick(rng)), -1);
    }
    for (int i = 0; i < std::abs(target); ++i) D.add(GraphPoint::at_vertex(pick(rng)), target > 0 ? 1 : -1);
    return D;
}

// Random input for case (i, j): forced zeros are 0, the other a-values are integers in [0, 6].
inline TrigonalType000A random_trigonal(std::mt19937_64& rng, int i, int j) {
    TrigonalType000A in;
    in.i = i;
    in.j = j;
    std::uniform_int_distribution<int> val(0, 6), pos(1, 4);
    for (int k = 0; k < 8; ++k) in.a[k] = qi(val(rng));
    for (int z : forced_zeros(i, j)) in.a[z - 1] = 0;
    for (int k = 0; k < 3; ++k) in.L[k] = qi(pos(rng));
    return in;
}

inline const std::vector<std::pair<int, int>>& trigonal_cases() {
    static const std::vector<std::pair<int, int>> cases{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}};
    return cases;
}

}  // namespace fixture
