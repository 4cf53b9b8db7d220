#include "tropigon/realizability.hpp"

#include "tropigon/dual_curve.hpp"
#include "tropigon/error.hpp"
#include "tropigon/lp.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <set>
#include <tuple>
#include <sstream>

namespace tropigon {

namespace {

std::map<std::string, Q> parse_side(const std::string& s, const std::string& text) {
    std::map<std::string, Q> out;
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        Q coef = j > i ? Q(std::stol(s.substr(i, j - i))) : Q(1);
        if (j < s.size() && s[j] == '*') ++j;
        size_t k = j;
        while (k < s.size() && std::isalnum(static_cast<unsigned char>(s[k]))) ++k;
        if (k == j || !std::isalpha(static_cast<unsigned char>(s[j]))) {
            throw Error(ErrorCode::BadInput, "cannot parse relation '" + text + "'");
        }
        out[s.substr(j, k - j)] += sign * coef;
        i = k;
    }
    if (out.empty()) throw Error(ErrorCode::BadInput, "empty side in relation '" + text + "'");
    return out;
}

std::string side_string(const std::map<std::string, Q>& side) {
    std::string s;
    for (const auto& [role, c] : side) {
        if (!s.empty()) s += sgn(c) < 0 ? "-" : "+";
        else if (sgn(c) < 0) s += "-";
        Q a = abs_q(c);
        if (a != 1) s += tropigon::to_string(a);
        s += role;
    }
    return s;
}

}  // namespace

Relation parse_relation(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    Relation r;
    r.text = text;
    size_t pos;
    size_t oplen = 1;
    if ((pos = s.find("<=")) != std::string::npos) {
        r.kind = RelKind::LessEq;
        oplen = 2;
    } else if ((pos = s.find('<')) != std::string::npos) {
        r.kind = RelKind::Less;
    } else if ((pos = s.find('=')) != std::string::npos) {
        r.kind = RelKind::Equal;
    } else {
        throw Error(ErrorCode::BadInput, "relation '" + text + "' has no comparison");
    }
    r.lhs = parse_side(s.substr(0, pos), text);
    r.rhs = parse_side(s.substr(pos + oplen), text);
    return r;
}

std::string to_string(const Relation& r) {
    const char* op = r.kind == RelKind::Less ? "<" : (r.kind == RelKind::LessEq ? "<=" : "=");
    return side_string(r.lhs) + op + side_string(r.rhs);
}

namespace {

std::vector<ConditionSet> build_conditions() {
    struct Raw {
        const char* type;
        int genus, n, alt;
        std::vector<const char*> rels;
        bool necessary_only;
    };
    const std::vector<Raw> raw = {
        {"(000)", 3, 1, 0, {"x<=u", "y<=u", "x<=v", "z<=v", "y+z<=w"}, false},
        {"(000)A", 4, 0, 0, {"wz+vw<uv", "wz+uz<uv", "wz+wy<xy", "wz+xz<xy"}, true},
        {"(000)A", 4, 2, 0, {"wz=uv", "wz+wy<xy", "wz+xz<xy"}, true},
        {"(010)", 4, 0, 0, {"uz+vz+vy<ux", "vz+2vy+xy<ux"}, true},
        {"(010)", 4, 2, 0, {"vz+vy=ux"}, true},
        {"(020)", 4, 0, 0, {"2xz+wz<uw", "2vw+wz<yz"}, true},
        {"(020)", 4, 2, 0, {"xz+wz<uw", "vw=yz"}, true},
        {"(020)", 4, 2, 1, {"2xz+wz<uw", "yz=vw+wz"}, true},
        {"(021)", 4, 0, 0, {"ux+2wx<uw", "vy+2yz<vz"}, true},
        {"(021)", 4, 2, 0, {"yz=vz"}, true},
        {"(030)", 4, 0, 0, {"2yz+uz+uv<xw", "yz+uz+2uv<xw"}, true},
        {"(030)", 4, 2, 0, {"yz+uz+uv=xw"}, true},
        {"(101)", 4, 0, 0, {"2uv+uz=vy"}, true},
        {"(101)", 4, 2, 0, {"uv+uz=vy"}, true},
        {"(111)", 4, 0, 0, {"uy+2uv=vy"}, true},
        {"(111)", 4, 2, 0, {"uy+uv=vy"}, true},
        {"(121)", 4, 0, 0, {"xz+zu+2uv=vy"}, true},
        {"(121)", 4, 2, 0, {"xz+zu+uv=vy"}, true},
        {"(122)", 4, 0, 0, {"uv1=2uv2"}, true},
        {"(122)", 4, 2, 0, {"uv1=uv2"}, true},
        {"(122)", 4, 2, 1, {"xy=yz"}, true},
        {"(202)", 4, 0, 0, {"yz=2uz+uy", "ux=2xy+uy"}, true},
        {"(202)", 4, 2, 0, {"uz=yz"}, true},
        {"(212)", 4, 0, 0, {"xz+xy+2uy=uz", "2xz+xy+uy=uz"}, true},
        {"(212)", 4, 2, 0, {"2uy+xy=uz", "uy+xy+xz=uz"}, true},
    };
    std::vector<ConditionSet> out;
    for (const auto& r : raw) {
        ConditionSet cs;
        cs.type = r.type;
        cs.genus = r.genus;
        cs.n = r.n;
        cs.alternative = r.alt;
        cs.necessary_only = r.necessary_only;
        const CombinatorialType* T = find_type(r.genus, r.type);
        for (const char* text : r.rels) {
            cs.relations.push_back(parse_relation(text));
            for (const auto* side : {&cs.relations.back().lhs, &cs.relations.back().rhs}) {
                for (const auto& [role, c] : *side) {
                    if (resolve_role(*T, role) < 0) throw std::logic_error(std::string("unknown role in ") + text);
                }
            }
        }
        out.push_back(std::move(cs));
    }
    return out;
}

}  // namespace

const std::vector<ConditionSet>& condition_sets() {
    static const std::vector<ConditionSet> sets = build_conditions();
    return sets;
}

int resolve_role(const CombinatorialType& T, const std::string& role) {
    int e = T.edge_role(role);
    if (e >= 0) return e;
    std::string key = role;
    std::sort(key.begin(), key.end());
    e = T.edge_role(key);
    if (e >= 0) return e;
    return T.edge_role(key + "1");
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Satisfied: return "satisfied";
        case Verdict::Refuted: return "refuted";
        case Verdict::NotStated: return "not-stated";
    }
    return "?";
}

namespace {

Q evaluate(const std::map<std::string, Q>& side, const CombinatorialType& T, const std::vector<Q>& len) {
    Q total = 0;
    for (const auto& [role, c] : side) total += c * len[resolve_role(T, role)];
    return total;
}

bool holds(const Relation& r, const CombinatorialType& T, const std::vector<Q>& len) {
    Q a = evaluate(r.lhs, T, len), b = evaluate(r.rhs, T, len);
    switch (r.kind) {
        case RelKind::Less: return a < b;
        case RelKind::LessEq: return a <= b;
        case RelKind::Equal: return a == b;
    }
    return false;
}

void check_maroni_pair(int g, int n) {
    try {
        hirzebruch_polygon(g, n);
    } catch (const Error& e) {
        throw Error(ErrorCode::BadMaroniParameter, e.what());
    }
}

TypeMatch match_type(const MetricGraph& G) {
    auto m = identify_type(G);
    if (!m) throw Error(ErrorCode::UnknownType, "graph is not of a catalogued maximal type");
    return *m;
}

}  // namespace

bool satisfies(const CombinatorialType& T, const std::vector<Relation>& rels, const MetricGraph& G,
               const Isomorphism& iso, std::map<std::string, int>* witness) {
    for (const auto& a : symmetry_group(T)) {
        std::vector<Q> len(T.graph.num_edges());
        std::vector<int> edge(T.graph.num_edges());
        for (int r = 0; r < T.graph.num_edges(); ++r) {
            edge[r] = iso.emap[a.emap[r]];
            len[r] = G.edges[edge[r]].len;
        }
        bool ok = true;
        for (const auto& rel : rels) ok = ok && holds(rel, T, len);
        if (ok) {
            if (witness) {
                witness->clear();
                for (int r = 0; r < T.graph.num_edges(); ++r) (*witness)[T.edge_roles[r]] = edge[r];
            }
            return true;
        }
    }
    return false;
}

ConditionVerdict check_conditions(const MetricGraph& G, int n) {
    validate(G);
    int g = genus(G);
    if (g != 3 && g != 4) throw Error(ErrorCode::UnsupportedGenus, "genus " + std::to_string(g));
    check_maroni_pair(g, n);
    TypeMatch m = match_type(G);
    ConditionVerdict v;
    v.type = m.type->name;
    v.n = n;
    if (m.type->realizability == Realizability::NotRealizable) {
        v.verdict = Verdict::Refuted;
        v.necessary_only = false;
        v.note = "type is not realizable in any Hirzebruch surface";
        return v;
    }
    bool any = false;
    for (const auto& cs : condition_sets()) {
        if (cs.type != m.type->name || cs.genus != g || cs.n != n) continue;
        any = true;
        v.necessary_only = cs.necessary_only;
        std::map<std::string, int> w;
        if (satisfies(*m.type, cs.relations, G, m.iso, &w)) {
            v.verdict = Verdict::Satisfied;
            v.alternative = cs.alternative;
            v.witness = w;
            return v;
        }
    }
    if (!any) {
        v.verdict = Verdict::NotStated;
        v.note = "no edge-length conditions are stated for this type";
        return v;
    }
    v.verdict = Verdict::Refuted;
    return v;
}

// ---------------------------------------------------------------------------------------------

SkeletonStructure skeleton_structure(const Triangulation& T, const Mesh& M) {
    MetricGraph curve;
    for (size_t t = 0; t < M.tris.size(); ++t) curve.add_vertex();
    std::vector<int> mesh_of;
    for (int e = 0; e < static_cast<int>(M.edges.size()); ++e) {
        if (!M.edges[e].interior()) continue;
        curve.add_edge(M.edges[e].tri[0], M.edges[e].tri[1], 1);
        mesh_of.push_back(e);
    }
    TracedModel tm = canonical_model_traced(curve);
    SkeletonStructure s;
    s.triangulation = T;
    s.graph = tm.graph;
    for (auto& e : s.graph.edges) e.len = 1;
    for (const auto& p : tm.paths) {
        std::vector<int> path;
        for (int c : p) path.push_back(mesh_of[c]);
        s.paths.push_back(path);
    }
    auto m = identify_type(s.graph);
    s.type = m ? m->type : nullptr;
    return s;
}

namespace {

std::string structure_key(const Mesh& M, const SkeletonStructure& s) {
    std::vector<char> relevant(M.edges.size(), 0);
    for (size_t e = 0; e < M.edges.size(); ++e) {
        if (M.interior_point[M.edges[e].a] || M.interior_point[M.edges[e].b]) relevant[e] = 1;
    }
    auto put = [&](std::ostringstream& os, int e) {
        os << M.pts[M.edges[e].a].x << ',' << M.pts[M.edges[e].a].y << ',' << M.pts[M.edges[e].b].x << ','
           << M.pts[M.edges[e].b].y << ';';
    };
    std::ostringstream os;
    for (size_t e = 0; e < M.edges.size(); ++e) {
        if (relevant[e]) put(os, static_cast<int>(e));
    }
    os << '|';
    std::vector<std::string> paths;
    for (const auto& p : s.paths) {
        std::ostringstream ps;
        for (int e : p) put(ps, e);
        paths.push_back(ps.str());
    }
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths) os << p << '|';
    return os.str();
}

}  // namespace

const std::vector<SkeletonStructure>& skeleton_structures(int g, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<SkeletonStructure>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({g, n});
    if (it != cache.end()) return it->second;
    auto P = hirzebruch_polygon(g, n);
    std::vector<SkeletonStructure> out;
    std::map<std::string, int> seen;
    for (const auto& T : unimodular_triangulations(P)) {
        Mesh M = build_mesh(T);
        SkeletonStructure s = skeleton_structure(T, M);
        std::string key = structure_key(M, s);
        if (seen.count(key)) continue;
        seen[key] = static_cast<int>(out.size());
        out.push_back(std::move(s));
    }
    return cache[{g, n}] = std::move(out);
}

namespace {

// Multipliers of the path rows of a slack program whose combination with the closure rows is
// nonnegative on every u-column and equals gamma on the t-column; they exclude t > 0 for every length
// vector l with beta.l <= 0 and (gamma > 0 or beta.l < 0).
struct Refutation {
    std::vector<Q> beta;
    Q gamma;

    bool refutes(const std::vector<Q>& lengths) const {
        Q v = 0;
        for (size_t r = 0; r < beta.size(); ++r) v += beta[r] * lengths[r];
        return sgn(v) < 0 || (sgn(v) == 0 && sgn(gamma) > 0);
    }
};

std::mutex refutation_mu;

// Slack program of one skeleton structure read through one labelling of the catalog graph.  Mesh edges
// outside the stars of the interior points only need to be positive, so a path through k of them
// becomes "star part + k t <= length".
struct SlackProgram {
    const SkeletonStructure* structure = nullptr;
    Isomorphism iso;                                  // catalog -> structure graph
    std::vector<int> star;                            // mesh edges carrying variables
    struct Term {
        int var, slot;
        LatticePoint d;
    };
    std::vector<Term> closure;                        // closure around the interior point in slot
    int interior_points = 0;
    std::vector<std::vector<int>> path_vars;          // per catalog edge
    std::vector<int> free_count;
    std::shared_ptr<std::vector<struct Refutation>> refutations = std::make_shared<std::vector<Refutation>>();
};

SlackProgram make_program(const Mesh& M, const SkeletonStructure& s, const Isomorphism& iso, std::string& key) {
    SlackProgram P;
    P.structure = &s;
    P.iso = iso;
    std::vector<std::pair<std::array<long long, 4>, int>> star;
    for (int e = 0; e < static_cast<int>(M.edges.size()); ++e) {
        const auto& E = M.edges[e];
        if (M.interior_point[E.a] || M.interior_point[E.b]) {
            star.push_back({{M.pts[E.a].x, M.pts[E.a].y, M.pts[E.b].x, M.pts[E.b].y}, e});
        }
    }
    std::sort(star.begin(), star.end());
    std::vector<int> var(M.edges.size(), -1);
    std::ostringstream os;
    for (size_t i = 0; i < star.size(); ++i) {
        P.star.push_back(star[i].second);
        var[star[i].second] = static_cast<int>(i);
        for (long long c : star[i].first) os << c << ',';
        os << ';';
    }
    std::map<int, int> slot;
    for (int p = 0; p < static_cast<int>(M.pts.size()); ++p) {
        if (M.interior_point[p]) slot[p] = static_cast<int>(slot.size());
    }
    P.interior_points = static_cast<int>(slot.size());
    for (int e : P.star) {
        for (int end : {M.edges[e].a, M.edges[e].b}) {
            if (!M.interior_point[end]) continue;
            int q = end == M.edges[e].a ? M.edges[e].b : M.edges[e].a;
            LatticePoint d = M.pts[q] - M.pts[end];
            P.closure.push_back({var[e], slot[end], d});
        }
    }
    for (size_t r = 0; r < iso.emap.size(); ++r) {
        std::vector<int> vars;
        int k = 0;
        for (int e : s.paths[iso.emap[r]]) {
            if (var[e] >= 0) {
                vars.push_back(var[e]);
            } else {
                ++k;
            }
        }
        std::sort(vars.begin(), vars.end());
        os << '|';
        for (int v : vars) os << v << ',';
        os << '+' << k;
        P.path_vars.push_back(vars);
        P.free_count.push_back(k);
    }
    key = os.str();
    return P;
}

const std::vector<SlackProgram>& slack_programs(int g, int n, const CombinatorialType& T) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, std::string>, std::vector<SlackProgram>> cache;
    const auto& structures = skeleton_structures(g, n);
    std::lock_guard<std::mutex> lock(mu);
    auto k = std::make_tuple(g, n, T.name);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    std::vector<SlackProgram> out;
    std::set<std::string> seen;
    for (const auto& s : structures) {
        if (s.type != &T) continue;
        Mesh M = build_mesh(s.triangulation);
        for (const auto& iso : isomorphisms(T.graph, s.graph)) {
            std::string key;
            SlackProgram P = make_program(M, s, iso, key);
            if (seen.insert(key).second) out.push_back(std::move(P));
        }
    }
    return cache[k] = std::move(out);
}

// Constraint rows over the columns u_0..u_{nv-1}, t: closure rows (equalities with zero right-hand side)
// followed by one row per catalog edge.
LinearProgram program_rows(const SlackProgram& P, const std::vector<Q>& lengths) {
    const int nv = static_cast<int>(P.star.size());
    const int t = nv;
    LinearProgram lp;
    lp.nvars = nv + 1;
    lp.objective.assign(lp.nvars, Q(0));
    lp.objective[t] = 1;
    for (int i = 0; i < 2 * P.interior_points; ++i) lp.add_row(Rel::EQ, 0);
    for (const auto& c : P.closure) {
        for (int k : {c.var, t}) {
            lp.rows[2 * c.slot].a[k] += qi(c.d.x);
            lp.rows[2 * c.slot + 1].a[k] += qi(c.d.y);
        }
    }
    for (size_t r = 0; r < lengths.size(); ++r) {
        auto& row = lp.add_row(P.free_count[r] > 0 ? Rel::LE : Rel::EQ, lengths[r]);
        for (int v : P.path_vars[r]) row.a[v] += 1;
        row.a[t] += static_cast<long>(P.path_vars[r].size()) + P.free_count[r];
    }
    return lp;
}

Refutation find_refutation(const LinearProgram& rows, int closure_rows) {
    const int m = static_cast<int>(rows.rows.size());
    const int t = rows.nvars - 1;
    std::vector<int> col(m);
    int nd = 0;
    for (int i = 0; i < m; ++i) {
        col[i] = nd;
        nd += rows.rows[i].rel == Rel::EQ ? 2 : 1;
    }
    LinearProgram d;
    d.nvars = nd;
    d.objective.assign(nd, Q(0));
    auto put = [&](std::vector<Q>& a, int i, const Q& c) {
        a[col[i]] += c;
        if (rows.rows[i].rel == Rel::EQ) a[col[i] + 1] -= c;
    };
    for (int j = 0; j < t; ++j) {
        auto& row = d.add_row(Rel::GE, 0);
        for (int i = 0; i < m; ++i) put(row.a, i, rows.rows[i].a[j]);
    }
    auto& gamma = d.add_row(Rel::GE, 0);
    for (int i = 0; i < m; ++i) put(gamma.a, i, rows.rows[i].a[t]);
    auto& lam = d.add_row(Rel::LE, 0);
    for (int i = closure_rows; i < m; ++i) put(lam.a, i, rows.rows[i].b);
    auto& norm = d.add_row(Rel::EQ, 1);
    for (int i = 0; i < m; ++i) put(norm.a, i, rows.rows[i].a[t] - rows.rows[i].b);
    for (int i = closure_rows; i < m; ++i) put(d.objective, i, Q(-rows.rows[i].b));
    auto sol = solve_lp(d);
    if (sol.status != LPSolution::Status::Optimal) throw std::logic_error("no refutation for an infeasible slack program");
    auto y = [&](int i) { return rows.rows[i].rel == Rel::EQ ? Q(sol.x[col[i]] - sol.x[col[i] + 1]) : sol.x[col[i]]; };
    Refutation R;
    R.gamma = 0;
    for (int i = 0; i < m; ++i) R.gamma += y(i) * rows.rows[i].a[t];
    for (int i = closure_rows; i < m; ++i) R.beta.push_back(y(i));
    return R;
}

// Largest common lower bound t <= 1 of the slacks; positive iff the lengths are attained.
// Slacks are written t + u with u >= 0.
std::optional<std::vector<Q>> solve_program(const SlackProgram& P, const std::vector<Q>& lengths) {
    {
        std::lock_guard<std::mutex> lock(refutation_mu);
        for (const auto& R : *P.refutations) {
            if (R.refutes(lengths)) return std::nullopt;
        }
    }
    const int nv = static_cast<int>(P.star.size());
    const int t = nv;
    LinearProgram lp = program_rows(P, lengths);
    LinearProgram rows = lp;
    lp.add_row(Rel::LE, 1).a[t] = 1;
    auto sol = solve_lp(lp);
    if (sol.status != LPSolution::Status::Optimal || sgn(sol.value) <= 0) {
        Refutation R = find_refutation(rows, 2 * P.interior_points);
        if (!R.refutes(lengths)) throw std::logic_error("refutation does not exclude the lengths");
        std::lock_guard<std::mutex> lock(refutation_mu);
        P.refutations->push_back(std::move(R));
        return std::nullopt;
    }
    for (int v = 0; v < nv; ++v) sol.x[v] += sol.x[t];
    const SkeletonStructure& s = *P.structure;
    Mesh M = build_mesh(s.triangulation);
    std::vector<Q> slack(M.edges.size(), Q(0));
    for (int e = 0; e < static_cast<int>(M.edges.size()); ++e) {
        if (M.edges[e].interior()) slack[e] = 1;
    }
    for (int v = 0; v < nv; ++v) slack[P.star[v]] = sol.x[v];
    std::vector<char> in_star(M.edges.size(), 0);
    for (int e : P.star) in_star[e] = 1;
    for (size_t r = 0; r < lengths.size(); ++r) {
        if (P.free_count[r] == 0) continue;
        Q rest = lengths[r];
        for (int v : P.path_vars[r]) rest -= sol.x[v];
        rest /= P.free_count[r];
        for (int e : s.paths[P.iso.emap[r]]) {
            if (!in_star[e]) slack[e] = rest;
        }
    }
    return slack;
}

}  // namespace

SearchReport realizability_search(const MetricGraph& G, int n) {
    validate(G);
    int g = genus(G);
    if (g != 3 && g != 4) throw Error(ErrorCode::UnsupportedGenus, "genus " + std::to_string(g));
    check_maroni_pair(g, n);
    MetricGraph C = canonical_model(G);
    TypeMatch m = match_type(C);
    SearchReport rep;
    for (const auto& s : skeleton_structures(g, n)) {
        if (s.type == m.type) ++rep.structures;
    }
    std::vector<Q> lengths;
    for (int e : m.iso.emap) lengths.push_back(C.edges[e].len);
    for (const auto& P : slack_programs(g, n, *m.type)) {
        ++rep.programs;
        auto slack = solve_program(P, lengths);
        if (!slack) continue;
        const auto& s = *P.structure;
        Mesh M = build_mesh(s.triangulation);
        auto h = heights_from_slacks(M, *slack);
        if (!h) throw std::logic_error("slack vector does not integrate to heights");
        auto curve = dual_tropical_curve(s.triangulation, *h);
        if (!isometric(skeleton(curve), C)) throw std::logic_error("certificate skeleton is not isometric");
        rep.certificate = RealizationCertificate{s.triangulation, *h};
        return rep;
    }
    return rep;
}

std::optional<RealizationCertificate> realizability_by_search(const MetricGraph& G, int n) {
    return realizability_search(G, n).certificate;
}

std::optional<int> tropical_maroni(const MetricGraph& G) {
    validate(G);
    int g = genus(G);
    if (g != 3 && g != 4) throw Error(ErrorCode::UnsupportedGenus, "genus " + std::to_string(g));
    MetricGraph C = canonical_model(G);
    TypeMatch m = match_type(C);
    if (m.type->realizability == Realizability::NotRealizable) return std::nullopt;
    std::vector<int> ns = g == 3 ? std::vector<int>{1} : std::vector<int>{0, 2};
    std::vector<int> hits;
    for (int n : ns) {
        ConditionVerdict v = check_conditions(C, n);
        bool ok = v.verdict == Verdict::Satisfied;
        if (v.verdict == Verdict::NotStated) ok = realizability_by_search(C, n).has_value();
        if (ok) hits.push_back(n);
    }
    if (hits.size() == 1) return hits[0];
    return std::nullopt;
}

}  // namespace tropigon
