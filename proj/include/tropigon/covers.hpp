#pragma once

#include "tropigon/divisor.hpp"
#include "tropigon/metric_graph.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tropigon {

// Unbounded end attached to a source vertex.  On a line target dir is +1 (up), -1 (down) or 0 for a
// contracted end; on a star target dir is the branch the end escapes along, -1 when contracted.
struct CoverLeg {
    int vertex = 0;
    int mu = 0;
    int dir = 0;
};

struct TropicalCover {
    MetricGraph source;
    std::vector<Q> height;  // line target: image in R; star target: distance from the centre
    std::vector<int> mu;    // dilation per source edge
    std::vector<CoverLeg> legs;
    std::vector<int> branch;  // star target only: branch per vertex, -1 at the centre
    int num_branches = 0;

    bool line_target() const { return branch.empty(); }
};

struct RHReport {
    int degree = 0;
    std::vector<int> local_degree;
    std::vector<int> slack;  // (2m-2) - sum over incident edges and legs of (mu-1)
    bool realizable = false;  // degree <= 3
};

// Throws the first violated invariant.
RHReport verify_cover(const TropicalCover& c);
bool is_well_contracted(const TropicalCover& c);

// Pullback of a generic target point (line targets); chips on legs sit at the leg's vertex.
Divisor pullback(const TropicalCover& c, const Q& t);

struct CoverSearchResult {
    std::optional<TropicalCover> cover;
    int degree = 0;
    int budget = 0;
    long nodes = 0;
    std::vector<std::vector<int>> slopes;  // per input edge: signed dilations of its segments from u to v
    std::vector<int> edge_of_segment;      // input edge carrying each cover edge
};

CoverSearchResult search_well_contracted_cover(const MetricGraph& G, int d, int budget = 2);

std::vector<int> detect_sprawling_node(const MetricGraph& G);
std::vector<std::pair<int, int>> detect_crowded_graph(const MetricGraph& G);
std::vector<std::pair<int, int>> detect_tie_fighter(const MetricGraph& G);

}  // namespace tropigon
