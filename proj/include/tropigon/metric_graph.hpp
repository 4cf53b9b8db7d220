#pragma once

#include "tropigon/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropigon {

struct GraphEdge {
    int u = 0;
    int v = 0;
    Q len = 1;
};

struct MetricGraph {
    std::vector<int> vertex_genus;
    std::vector<GraphEdge> edges;
    std::vector<int> legs;  // vertex carrying each unbounded end

    int num_vertices() const { return static_cast<int>(vertex_genus.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    int add_vertex(int g = 0);
    int add_edge(int u, int v, const Q& len = 1);
    int valence(int v) const;  // loops count twice, legs once
    bool connected() const;
    std::vector<std::vector<int>> incident_edges() const;
};

// Throws NonPositiveLength or BadInput on malformed graphs.
void validate(const MetricGraph& G);

int genus(const MetricGraph& G);

struct TracedModel {
    MetricGraph graph;
    std::vector<std::vector<int>> paths;  // input edges forming each output edge, in order from u to v
    std::vector<int> vertex_origin;       // input vertex of each output vertex
};

MetricGraph canonical_model(const MetricGraph& G);
TracedModel canonical_model_traced(const MetricGraph& G);
bool is_canonical(const MetricGraph& G);

// Maps vertices and edges of a source graph onto a target graph.
struct Isomorphism {
    std::vector<int> vmap;
    std::vector<int> emap;
};

// Every multigraph isomorphism A -> B preserving vertex genera; parallel edges and loops are
// matched in all possible ways, so each combinatorial automorphism is listed once per edge bijection.
std::vector<Isomorphism> isomorphisms(const MetricGraph& A, const MetricGraph& B, size_t limit = 0);
bool isomorphic(const MetricGraph& A, const MetricGraph& B);

// Whether two graphs are isometric (isomorphic with equal edge lengths).
bool isometric(const MetricGraph& A, const MetricGraph& B);

enum class Realizability { Realizable, NotRealizable, Unknown };

struct CombinatorialType {
    std::string name;  // e.g. "(000)A"
    int genus = 0;
    MetricGraph graph;  // unit lengths
    std::vector<std::string> vertex_roles;
    std::vector<std::string> edge_roles;
    Realizability realizability = Realizability::Unknown;
    bool reconstructed = false;  // graph rebuilt from a verbal description

    int edge_role(const std::string& role) const;  // -1 if absent
    int vertex_role(const std::string& role) const;
};

const std::vector<CombinatorialType>& catalog();
const CombinatorialType* find_type(int genus, const std::string& name);

struct TypeMatch {
    const CombinatorialType* type = nullptr;
    Isomorphism iso;  // catalog graph -> matched graph
};

std::optional<TypeMatch> identify_type(const MetricGraph& G);

// Automorphisms of the catalog graph; emap permutes edge roles.
std::vector<Isomorphism> symmetry_group(const CombinatorialType& T);

// Catalog graph with the given role lengths (unit length for roles not listed).
MetricGraph with_lengths(const CombinatorialType& T, const std::vector<std::pair<std::string, Q>>& lengths);

}  // namespace tropigon
