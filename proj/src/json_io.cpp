#include "tropigon/json_io.hpp"

#include "tropigon/error.hpp"

#include <algorithm>
#include <cstdio>

namespace tropigon {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::BadInput, what);
}

const Json& field(const Json& j, const char* key) {
    require(j.is_object() && j.contains(key), std::string("missing field \"") + key + "\"");
    return j.at(key);
}

LatticePoint point_from(const Json& j) {
    require(j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer(),
            "lattice point must be [x,y] with integer entries");
    return {j[0].get<long long>(), j[1].get<long long>()};
}

LatticePoint point_key(const std::string& s) {
    long long x = 0, y = 0;
    char tail = 0;
    require(std::sscanf(s.c_str(), " [ %lld , %lld ]%c", &x, &y, &tail) == 2, "bad point key '" + s + "'");
    return {x, y};
}

int int_key(const std::string& s) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::BadInput, "bad integer key '" + s + "'");
}

// Lower and upper monotone chains.
std::vector<LatticePoint> hull(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<LatticePoint> h(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross3(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross3(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

GraphPoint graph_point_from(const Json& j) {
    if (j.contains("vertex")) return GraphPoint::at_vertex(j.at("vertex").get<int>());
    return GraphPoint::on_edge(field(j, "edge").get<int>(), rational_from(field(j, "offset")));
}

}  // namespace

Json rational_json(const Q& q) { return to_string(q); }

Q rational_from(const Json& j) {
    if (j.is_number_integer()) return qi(j.get<long long>());
    require(j.is_string(), "rational must be a \"p/q\" string or an integer");
    return parse_rational(j.get<std::string>());
}

Json to_json(const LatticePoint& p) { return Json::array({p.x, p.y}); }

Json to_json(const LatticePolygon& P) {
    Json v = Json::array();
    for (const auto& p : P.vertices) v.push_back(to_json(p));
    return {{"vertices", v}};
}

Json to_json(const Triangulation& T) {
    Json tris = Json::array();
    for (const auto& t : T.triangles) tris.push_back({to_json(t[0]), to_json(t[1]), to_json(t[2])});
    return {{"polygon", to_json(T.polygon)}, {"triangles", tris}};
}

Json to_json(const HeightFunction& h) {
    Json j = Json::object();
    for (const auto& [p, v] : h.values) j[to_string(p)] = rational_json(v);
    return j;
}

Json to_json(const MetricGraph& G) {
    Json vs = Json::array(), es = Json::array(), ls = Json::array();
    for (int v = 0; v < G.num_vertices(); ++v) vs.push_back({{"id", v}, {"genus", G.vertex_genus[v]}});
    for (const auto& e : G.edges) es.push_back({{"u", e.u}, {"v", e.v}, {"len", rational_json(e.len)}});
    for (int v : G.legs) ls.push_back({{"v", v}});
    return {{"vertices", vs}, {"edges", es}, {"legs", ls}};
}

Json to_json(const Divisor& D) {
    Json chips = Json::array();
    for (const auto& [p, n] : D.chips) {
        Json at = p.is_vertex() ? Json{{"vertex", p.vertex}} : Json{{"edge", p.edge}, {"offset", rational_json(p.offset)}};
        chips.push_back({{"at", at}, {"n", n}});
    }
    return {{"chips", chips}};
}

Json to_json(const TropicalCover& c) {
    Json h = Json::object(), mu = Json::object(), legs = Json::array();
    for (size_t v = 0; v < c.height.size(); ++v) h[std::to_string(v)] = rational_json(c.height[v]);
    for (size_t e = 0; e < c.mu.size(); ++e) mu[std::to_string(e)] = c.mu[e];
    for (const auto& l : c.legs) legs.push_back({{"v", l.vertex}, {"mu", l.mu}, {"dir", l.dir}});
    Json j = {{"graph", to_json(c.source)}, {"heights", h}, {"mu", mu}, {"legs", legs}};
    if (!c.line_target()) {
        j["branch"] = c.branch;
        j["num_branches"] = c.num_branches;
    }
    return j;
}

Json to_json(const TropicalPlaneCurve& C) {
    Json vs = Json::array(), es = Json::array(), rs = Json::array();
    for (const auto& p : C.vertices) vs.push_back({rational_json(p[0]), rational_json(p[1])});
    for (const auto& e : C.edges) {
        es.push_back({{"a", e.a},
                      {"b", e.b},
                      {"direction", to_json(e.dir)},
                      {"weight", e.weight},
                      {"length", rational_json(e.length)}});
    }
    for (const auto& r : C.rays) rs.push_back({{"vertex", r.vertex}, {"direction", to_json(r.dir)}, {"weight", r.weight}});
    return {{"smooth", C.smooth}, {"vertices", vs}, {"edges", es}, {"rays", rs}};
}

Json to_json(const ConditionVerdict& v) {
    Json j = {{"type", v.type}, {"n", v.n}, {"verdict", verdict_name(v.verdict)}, {"necessary_only", v.necessary_only}};
    if (v.alternative >= 0) j["alternative"] = v.alternative;
    if (!v.witness.empty()) j["witness"] = v.witness;
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

Json to_json(const TrigonalType000A& in) {
    Json j = {{"case", "(" + std::to_string(in.i) + "," + std::to_string(in.j) + ")"}};
    for (int k = 1; k <= 8; ++k) j["a" + std::to_string(k)] = rational_json(in.av(k));
    for (int k = 1; k <= 3; ++k) j["L" + std::to_string(k)] = rational_json(in.L[k - 1]);
    return j;
}

Json to_json(const UnfoldingResult& r) {
    Json j = {{"variant", variant_name(r.variant)}};
    for (int k = 1; k <= 14; ++k) {
        if (r.has(k)) j["l" + std::to_string(k)] = rational_json(r.lv(k));
    }
    return j;
}

LatticePolygon polygon_from(const Json& j) {
    std::vector<LatticePoint> vs;
    for (const auto& p : field(j, "vertices")) vs.push_back(point_from(p));
    return make_polygon(hull(vs));
}

Triangulation triangulation_from(const Json& j) {
    Triangulation T;
    std::vector<LatticePoint> all;
    for (const auto& t : field(j, "triangles")) {
        require(t.is_array() && t.size() == 3, "triangle must list three points");
        Triangle tri = make_triangle(point_from(t[0]), point_from(t[1]), point_from(t[2]));
        all.insert(all.end(), tri.begin(), tri.end());
        T.triangles.push_back(tri);
    }
    T.polygon = j.contains("polygon") ? polygon_from(j.at("polygon")) : make_polygon(hull(all));
    T.normalize();
    return T;
}

HeightFunction heights_from(const Json& j) {
    require(j.is_object(), "heights must be an object keyed by \"[x,y]\"");
    HeightFunction h;
    for (const auto& [k, v] : j.items()) h.values[point_key(k)] = rational_from(v);
    return h;
}

MetricGraph graph_from(const Json& j) {
    MetricGraph G;
    std::map<int, int> id;
    for (const auto& v : field(j, "vertices")) {
        int key = v.is_object() ? field(v, "id").get<int>() : v.get<int>();
        int g = v.is_object() && v.contains("genus") ? v.at("genus").get<int>() : 0;
        require(!id.count(key), "duplicate vertex id " + std::to_string(key));
        id[key] = G.add_vertex(g);
    }
    auto vid = [&](const Json& x) {
        int key = x.get<int>();
        require(id.count(key), "unknown vertex id " + std::to_string(key));
        return id[key];
    };
    for (const auto& e : field(j, "edges")) {
        G.add_edge(vid(field(e, "u")), vid(field(e, "v")), e.contains("len") ? rational_from(e.at("len")) : Q(1));
    }
    if (j.contains("legs")) {
        for (const auto& l : j.at("legs")) G.legs.push_back(vid(field(l, "v")));
    }
    return G;
}

Divisor divisor_from(const Json& j) {
    Divisor D;
    for (const auto& c : field(j, "chips")) D.add(graph_point_from(field(c, "at")), field(c, "n").get<long>());
    return D;
}

TropicalCover cover_from(const Json& j) {
    TropicalCover c;
    c.source = graph_from(field(j, "graph"));
    c.height.assign(c.source.num_vertices(), Q(0));
    c.mu.assign(c.source.num_edges(), 0);
    for (const auto& [k, v] : field(j, "heights").items()) {
        int i = int_key(k);
        require(i >= 0 && i < c.source.num_vertices(), "height for unknown vertex " + k);
        c.height[i] = rational_from(v);
    }
    for (const auto& [k, v] : field(j, "mu").items()) {
        int i = int_key(k);
        require(i >= 0 && i < c.source.num_edges(), "dilation for unknown edge " + k);
        c.mu[i] = v.get<int>();
    }
    if (j.contains("legs")) {
        for (const auto& l : j.at("legs")) {
            c.legs.push_back({field(l, "v").get<int>(), field(l, "mu").get<int>(), l.value("dir", 0)});
        }
    }
    c.source.legs.clear();
    if (j.contains("branch")) {
        c.branch = j.at("branch").get<std::vector<int>>();
        c.num_branches = field(j, "num_branches").get<int>();
    }
    return c;
}

TrigonalType000A trigonal_from(const Json& j) {
    TrigonalType000A in;
    std::string cs = field(j, "case").get<std::string>();
    char tail = 0;
    require(std::sscanf(cs.c_str(), " ( %d , %d )%c", &in.i, &in.j, &tail) == 2, "case must read \"(i,j)\"");
    for (int k = 1; k <= 8; ++k) {
        std::string key = "a" + std::to_string(k);
        in.a[k - 1] = j.contains(key) ? rational_from(j.at(key)) : Q(0);
    }
    for (int k = 1; k <= 3; ++k) in.L[k - 1] = rational_from(field(j, ("L" + std::to_string(k)).c_str()));
    return in;
}

UnfoldingResult unfolding_from(const Json& j) {
    UnfoldingResult r;
    r.variant = parse_variant(field(j, "variant").get<std::string>());
    for (int k = 1; k <= 14; ++k) {
        std::string key = "l" + std::to_string(k);
        if (j.contains(key)) r.l[k - 1] = rational_from(j.at(key));
    }
    return r;
}

}  // namespace tropigon
