#pragma once

#include "tropigon/rational.hpp"

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tropigon {

struct LatticePoint {
    long long x = 0;
    long long y = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

inline LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.x - b.x, a.y - b.y}; }
inline LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x + b.x, a.y + b.y}; }
inline long long cross(LatticePoint a, LatticePoint b) { return a.x * b.y - a.y * b.x; }
inline long long cross3(LatticePoint o, LatticePoint a, LatticePoint b) { return cross(a - o, b - o); }

std::string to_string(const LatticePoint& p);

struct LatticePolygon {
    std::vector<LatticePoint> vertices;  // counterclockwise, strictly convex

    Q area() const;
    bool contains(const LatticePoint& p) const;
    bool on_boundary(const LatticePoint& p) const;
    std::vector<LatticePoint> lattice_points() const;  // lexicographic
    std::vector<LatticePoint> boundary_points() const;
};

// Validates convexity and orientation; drops repeated and collinear vertices.
LatticePolygon make_polygon(std::vector<LatticePoint> vertices);

LatticePolygon hirzebruch_polygon(int g, int n);
std::vector<LatticePoint> interior_points(const LatticePolygon& P);

using Triangle = std::array<LatticePoint, 3>;  // vertices in lexicographic order

Triangle make_triangle(LatticePoint a, LatticePoint b, LatticePoint c);

struct Triangulation {
    LatticePolygon polygon;
    std::vector<Triangle> triangles;  // sorted

    void normalize();
    bool operator==(const Triangulation& o) const { return triangles == o.triangles; }
};

bool is_unimodular(const Triangulation& T);

// Empty string when the triangles tile the polygon with pairwise disjoint interiors.
std::string validate_triangulation(const Triangulation& T);

struct HeightFunction {
    std::map<LatticePoint, Q> values;
    const Q& at(const LatticePoint& p) const;
};

struct MeshEdge {
    int a = -1, b = -1;          // point indices, a < b
    int tri[2] = {-1, -1};       // tri[1] == -1 on the boundary
    int opp[2] = {-1, -1};       // vertex opposite to the edge in tri[i]
    bool interior() const { return tri[1] >= 0; }
};

// Index view of a triangulation used by regularity, duality and skeleton code.
struct Mesh {
    std::vector<LatticePoint> pts;
    std::map<LatticePoint, int> index;
    std::vector<std::array<int, 3>> tris;  // counterclockwise
    std::vector<MeshEdge> edges;
    std::vector<std::array<int, 3>> tri_edges;
    std::vector<std::vector<int>> point_edges;
    std::vector<char> interior_point;

    int edge_between(int a, int b) const;
};

Mesh build_mesh(const Triangulation& T);

void enumerate_unimodular_triangulations(const LatticePolygon& P,
                                         const std::function<void(const Triangulation&)>& sink);
std::vector<Triangulation> unimodular_triangulations(const LatticePolygon& P);

// Value at d of the affine function interpolating h on triangle (a,b,c).
Q interpolate(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c, const Q& ha, const Q& hb,
              const Q& hc, const LatticePoint& d);

// Folding slack of each interior edge: positive for all edges iff h induces the triangulation.
// Boundary edges get 0.  For unimodular triangles this is the lattice length of the dual curve edge.
std::vector<Q> edge_slacks(const Mesh& M, const HeightFunction& h);

// Integrates a slack vector into heights (zero on the vertices of the first triangle).
std::optional<HeightFunction> heights_from_slacks(const Mesh& M, const std::vector<Q>& slack);

std::optional<HeightFunction> is_regular(const Triangulation& T);

// Margin LP over heights; slower, valid for any triangulation.
std::optional<HeightFunction> is_regular_by_heights(const Triangulation& T);

// Projects the upper faces of the lifted point set; absent when some face is not a triangle.
std::optional<Triangulation> recompute_subdivision(const LatticePolygon& P, const HeightFunction& h);

}  // namespace tropigon
