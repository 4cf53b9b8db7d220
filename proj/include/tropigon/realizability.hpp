#pragma once

#include "tropigon/lattice.hpp"
#include "tropigon/metric_graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tropigon {

enum class RelKind { Less, LessEq, Equal };

// Linear relation between role-labelled edge lengths, e.g. "wz+vw<uv".
struct Relation {
    std::map<std::string, Q> lhs, rhs;
    RelKind kind = RelKind::Equal;
    std::string text;
};

Relation parse_relation(const std::string& text);
std::string to_string(const Relation& r);

struct ConditionSet {
    std::string type;
    int genus = 0;
    int n = 0;
    int alternative = 0;  // sets sharing (type, n) are alternatives joined by "or"
    std::vector<Relation> relations;
    bool necessary_only = true;  // false when the conditions characterize realizability
};

const std::vector<ConditionSet>& condition_sets();

// Edge of the catalog graph named by a role in a relation: exact role, reversed letter pair, or the first
// slot of a parallel pair.
int resolve_role(const CombinatorialType& T, const std::string& role);

enum class Verdict { Satisfied, Refuted, NotStated };

const char* verdict_name(Verdict v);

struct ConditionVerdict {
    std::string type;
    int n = 0;
    Verdict verdict = Verdict::NotStated;
    bool necessary_only = true;
    int alternative = -1;                   // satisfied alternative
    std::map<std::string, int> witness;     // role -> edge of the input graph, for the satisfying symmetry
    std::string note;
};

// The input must be a canonical model of genus 3 or 4 of a catalog type.
ConditionVerdict check_conditions(const MetricGraph& G, int n);

// Whether the lengths of G, read through iso (catalog -> G) composed with each automorphism, satisfy all relations.
bool satisfies(const CombinatorialType& T, const std::vector<Relation>& rels, const MetricGraph& G,
               const Isomorphism& iso, std::map<std::string, int>* witness = nullptr);

struct RealizationCertificate {
    Triangulation triangulation;
    HeightFunction heights;
};

struct SearchReport {
    std::optional<RealizationCertificate> certificate;
    int structures = 0;  // distinct skeleton structures of the matching type
    int programs = 0;    // linear programs solved
};

SearchReport realizability_search(const MetricGraph& G, int n);
std::optional<RealizationCertificate> realizability_by_search(const MetricGraph& G, int n);

std::optional<int> tropical_maroni(const MetricGraph& G);

// Combinatorial skeleton of the curves dual to T: paths are lists of mesh edge ids.
struct SkeletonStructure {
    Triangulation triangulation;
    MetricGraph graph;                     // unit lengths
    std::vector<std::vector<int>> paths;   // mesh edges per skeleton edge
    const CombinatorialType* type = nullptr;
};

SkeletonStructure skeleton_structure(const Triangulation& T, const Mesh& M);

// Distinct skeleton structures over all unimodular triangulations of hirzebruch_polygon(g, n) (cached).
const std::vector<SkeletonStructure>& skeleton_structures(int g, int n);

}  // namespace tropigon
