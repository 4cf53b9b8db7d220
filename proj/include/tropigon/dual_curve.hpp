#pragma once

#include "tropigon/covers.hpp"
#include "tropigon/lattice.hpp"
#include "tropigon/metric_graph.hpp"

#include <array>
#include <vector>

namespace tropigon {

using RationalPoint = std::array<Q, 2>;

struct CurveEdge {
    int a = 0, b = 0;       // curve vertices (= triangle indices of the mesh)
    LatticePoint dir;       // primitive, pointing from a to b
    int weight = 1;
    Q length;               // lattice length
    int mesh_edge = -1;     // dual edge of the subdivision
};

struct CurveRay {
    int vertex = 0;
    LatticePoint dir;  // primitive
    int weight = 1;
    int mesh_edge = -1;
};

// Max-plus curve of the polynomial max_a (h(a) + <a, p>).
struct TropicalPlaneCurve {
    Triangulation subdivision;
    HeightFunction heights;
    std::vector<RationalPoint> vertices;  // one per triangle of the mesh order
    std::vector<CurveEdge> edges;
    std::vector<CurveRay> rays;
    bool smooth = false;
};

TropicalPlaneCurve dual_tropical_curve(const Triangulation& T, const HeightFunction& h);

// Sum of weight * direction over the edges and rays at v; zero for a balanced curve.
std::array<Q, 2> balancing_residual(const TropicalPlaneCurve& C, int v);

// Cells where the maximum is attained at least three times, read off from the curve vertices.
Triangulation newton_subdivision(const TropicalPlaneCurve& C);

// Paths are curve edge ids.
TracedModel skeleton_traced(const TropicalPlaneCurve& C);
MetricGraph skeleton(const TropicalPlaneCurve& C);

TropicalCover projection_cover(const TropicalPlaneCurve& C);

}  // namespace tropigon
