#pragma once

#include "tropigon/covers.hpp"
#include "tropigon/divisor.hpp"
#include "tropigon/dual_curve.hpp"
#include "tropigon/lattice.hpp"
#include "tropigon/metric_graph.hpp"
#include "tropigon/realizability.hpp"
#include "tropigon/unfolding.hpp"

#include <json.hpp>

namespace tropigon {

using Json = nlohmann::json;

Json rational_json(const Q& q);
Q rational_from(const Json& j);

Json to_json(const LatticePoint& p);
Json to_json(const LatticePolygon& P);
Json to_json(const Triangulation& T);
Json to_json(const HeightFunction& h);
Json to_json(const MetricGraph& G);
Json to_json(const Divisor& D);
Json to_json(const TropicalCover& c);
Json to_json(const TropicalPlaneCurve& C);
Json to_json(const ConditionVerdict& v);
Json to_json(const TrigonalType000A& in);
Json to_json(const UnfoldingResult& r);

LatticePolygon polygon_from(const Json& j);
Triangulation triangulation_from(const Json& j);  // polygon taken from "polygon" or the triangle hull
HeightFunction heights_from(const Json& j);
MetricGraph graph_from(const Json& j);
Divisor divisor_from(const Json& j);
TropicalCover cover_from(const Json& j);
TrigonalType000A trigonal_from(const Json& j);
UnfoldingResult unfolding_from(const Json& j);

}  // namespace tropigon
