#pragma once

#include "tropigon/metric_graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace tropigon {

// A vertex, or a point at a rational distance from edge.u strictly inside the edge.
struct GraphPoint {
    int vertex = -1;
    int edge = -1;
    Q offset = 0;

    static GraphPoint at_vertex(int v) { return GraphPoint{v, -1, 0}; }
    static GraphPoint on_edge(int e, const Q& t) { return GraphPoint{-1, e, t}; }
    bool is_vertex() const { return vertex >= 0; }
    bool operator<(const GraphPoint& o) const;
    bool operator==(const GraphPoint& o) const;
};

struct Divisor {
    std::map<GraphPoint, long> chips;  // zero coefficients are dropped

    void add(const GraphPoint& p, long n);
    long degree() const;
    bool effective() const;
};

using Chips = std::vector<long>;

// Unit-segment subdivision after scaling all lengths (and divisor offsets) to integers.
// Vertices 0..|V|-1 are the original vertices; vertex genus h is modelled by h extra cycles at the vertex.
struct DiscretizedGraph {
    MetricGraph source;
    Z scale = 1;
    int n = 0;
    std::vector<std::vector<int>> adj;        // neighbours with multiplicity
    std::vector<std::vector<int>> edge_points;  // per source edge: vertices from u to v
    std::vector<GraphPoint> origin;           // per vertex; edge = -2 on virtual genus cycles

    int vertex_of(const GraphPoint& p) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    Chips chips(const Divisor& D) const;
    Divisor divisor(const Chips& c) const;
};

DiscretizedGraph discretize(const MetricGraph& G, const std::vector<GraphPoint>& points = {}, int refine = 1);

Divisor canonical_divisor(const MetricGraph& G);

// Vertices left unburnt by a fire started at q (sorted).
std::vector<int> dhar_burn(const DiscretizedGraph& X, const Chips& c, int q);

Chips q_reduced(const DiscretizedGraph& X, Chips c, int q);
bool equivalent_to_effective(const DiscretizedGraph& X, const Chips& c);

// Divisor classes Pic(X) = Z ⊕ Jac(X), with Jac(X) from a diagonalized reduced Laplacian.
class PicardGroup {
public:
    explicit PicardGroup(const DiscretizedGraph& X);

    uint64_t order() const { return order_; }  // |Jac|, the number of spanning trees
    uint64_t key(const Chips& c) const;         // Jacobian component of the class of c
    uint64_t vertex_key(int v) const { return vkey_[v]; }
    uint64_t add(uint64_t a, uint64_t b) const;
    uint64_t sub(uint64_t a, uint64_t b) const;

    // effective_classes(k): membership table of classes of effective divisors of degree k.
    const std::vector<uint8_t>& effective_classes(int k);
    // Effective divisor representing a class from effective_classes(k).
    Chips representative(int k, uint64_t cls);

private:
    const DiscretizedGraph* X_;
    std::vector<uint64_t> mod_;
    std::vector<std::vector<uint64_t>> U_;  // rows reduced modulo mod_
    std::vector<uint64_t> vkey_;
    uint64_t order_ = 1;
    std::vector<std::vector<uint8_t>> levels_;
    std::vector<std::vector<uint32_t>> parent_vertex_;  // vertex added to reach each class
};

int rank_discrete(PicardGroup& P, const Chips& c);
int rank_discrete(const DiscretizedGraph& X, const Chips& c);
int rank(const MetricGraph& G, const Divisor& D);

struct GonalityResult {
    std::optional<Divisor> witness;
    Z resolution;  // segments per unit length at the last resolution searched
    bool exhaustive_at_resolution = true;
};

// Searches effective degree-d divisors on vertices of a subdivision, refining up to max_refine times.
GonalityResult divisorial_gonality_search(const MetricGraph& G, int d, int max_refine = 2);
std::optional<Divisor> is_divisorially_d_gonal(const MetricGraph& G, int d);

int scrollar_delta(const MetricGraph& G, const Divisor& D);

}  // namespace tropigon
