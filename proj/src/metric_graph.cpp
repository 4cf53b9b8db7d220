#include "tropigon/metric_graph.hpp"

#include "tropigon/error.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <functional>
#include <map>
#include <numeric>

namespace tropigon {

int MetricGraph::add_vertex(int g) {
    vertex_genus.push_back(g);
    return num_vertices() - 1;
}

int MetricGraph::add_edge(int u, int v, const Q& len) {
    edges.push_back({u, v, len});
    return num_edges() - 1;
}

int MetricGraph::valence(int v) const {
    int val = 0;
    for (const auto& e : edges) {
        if (e.u == v) ++val;
        if (e.v == v) ++val;
    }
    for (int l : legs) {
        if (l == v) ++val;
    }
    return val;
}

std::vector<std::vector<int>> MetricGraph::incident_edges() const {
    std::vector<std::vector<int>> inc(vertex_genus.size());
    for (int e = 0; e < num_edges(); ++e) {
        inc[edges[e].u].push_back(e);
        if (edges[e].v != edges[e].u) inc[edges[e].v].push_back(e);
    }
    return inc;
}

bool MetricGraph::connected() const {
    if (vertex_genus.empty()) return false;
    std::vector<int> parent(vertex_genus.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    int comps = num_vertices();
    for (const auto& e : edges) {
        int a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return comps == 1;
}

void validate(const MetricGraph& G) {
    for (int g : G.vertex_genus) {
        if (g < 0) throw Error(ErrorCode::BadInput, "negative vertex genus");
    }
    for (const auto& e : G.edges) {
        if (e.u < 0 || e.v < 0 || e.u >= G.num_vertices() || e.v >= G.num_vertices()) {
            throw Error(ErrorCode::BadInput, "edge endpoint out of range");
        }
        if (sgn(e.len) <= 0) throw Error(ErrorCode::NonPositiveLength, "edge length " + to_string(e.len));
    }
    for (int l : G.legs) {
        if (l < 0 || l >= G.num_vertices()) throw Error(ErrorCode::BadInput, "leg vertex out of range");
    }
}

int genus(const MetricGraph& G) {
    if (!G.connected()) throw Error(ErrorCode::Disconnected, "graph is not connected");
    int g = G.num_edges() - G.num_vertices() + 1;
    for (int h : G.vertex_genus) g += h;
    return g;
}

TracedModel canonical_model_traced(const MetricGraph& G) {
    validate(G);
    if (genus(G) < 1) throw Error(ErrorCode::GenusZero, "genus-zero graph has no canonical model");
    struct WEdge {
        int u, v;
        Q len;
        std::vector<int> path;
        bool alive = true;
    };
    std::vector<WEdge> E;
    for (int e = 0; e < G.num_edges(); ++e) E.push_back({G.edges[e].u, G.edges[e].v, G.edges[e].len, {e}, true});
    const int n = G.num_vertices();
    std::vector<char> alive(n, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::vector<int>> ends(n);
        for (int e = 0; e < static_cast<int>(E.size()); ++e) {
            if (!E[e].alive) continue;
            ends[E[e].u].push_back(e);
            ends[E[e].v].push_back(e);
        }
        for (int v = 0; v < n && !changed; ++v) {
            if (!alive[v] || G.vertex_genus[v] != 0) continue;
            if (ends[v].size() == 1) {
                E[ends[v][0]].alive = false;
                alive[v] = 0;
                changed = true;
            } else if (ends[v].size() == 2 && ends[v][0] != ends[v][1]) {
                WEdge& a = E[ends[v][0]];
                WEdge& b = E[ends[v][1]];
                std::vector<int> pa = a.path, pb = b.path;
                int x = a.u, y = b.v;
                if (a.u == v) {
                    std::reverse(pa.begin(), pa.end());
                    x = a.v;
                }
                if (b.v == v) {
                    std::reverse(pb.begin(), pb.end());
                    y = b.u;
                }
                pa.insert(pa.end(), pb.begin(), pb.end());
                a.u = x;
                a.v = y;
                a.len += b.len;
                a.path = pa;
                b.alive = false;
                alive[v] = 0;
                changed = true;
            }
        }
    }
    TracedModel out;
    std::vector<int> newid(n, -1);
    for (int v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        newid[v] = out.graph.add_vertex(G.vertex_genus[v]);
        out.vertex_origin.push_back(v);
    }
    for (auto& e : E) {
        if (!e.alive) continue;
        out.graph.add_edge(newid[e.u], newid[e.v], e.len);
        out.paths.push_back(e.path);
    }
    return out;
}

MetricGraph canonical_model(const MetricGraph& G) { return canonical_model_traced(G).graph; }

bool is_canonical(const MetricGraph& G) {
    if (!G.legs.empty()) return false;
    for (int v = 0; v < G.num_vertices(); ++v) {
        if (G.vertex_genus[v] != 0) continue;
        int val = G.valence(v);
        if (val <= 1) return false;
        if (val == 2) {
            bool loop = false;
            for (const auto& e : G.edges) loop |= (e.u == v && e.v == v);
            if (!loop) return false;
        }
    }
    return true;
}

namespace {

struct Shape {
    int n = 0;
    std::vector<std::vector<int>> mult;  // symmetric edge multiplicities, loops on the diagonal
    std::vector<std::array<int, 3>> sig;  // genus, valence, loops
    std::map<std::pair<int, int>, std::vector<int>> groups;
};

Shape shape_of(const MetricGraph& G) {
    Shape s;
    s.n = G.num_vertices();
    s.mult.assign(s.n, std::vector<int>(s.n, 0));
    s.sig.assign(s.n, {0, 0, 0});
    for (int e = 0; e < G.num_edges(); ++e) {
        int u = G.edges[e].u, v = G.edges[e].v;
        if (u == v) {
            s.mult[u][u]++;
            s.sig[u][2]++;
        } else {
            s.mult[u][v]++;
            s.mult[v][u]++;
        }
        s.groups[{std::min(u, v), std::max(u, v)}].push_back(e);
    }
    for (int v = 0; v < s.n; ++v) {
        s.sig[v][0] = G.vertex_genus[v];
        s.sig[v][1] = G.valence(v);
    }
    return s;
}

}  // namespace

std::vector<Isomorphism> isomorphisms(const MetricGraph& A, const MetricGraph& B, size_t limit) {
    std::vector<Isomorphism> out;
    if (A.num_vertices() != B.num_vertices() || A.num_edges() != B.num_edges()) return out;
    if (A.legs.size() != B.legs.size()) return out;
    Shape sa = shape_of(A), sb = shape_of(B);
    const int n = sa.n;
    std::vector<int> vmap(n, -1);
    std::vector<char> used(n, 0);
    bool stop = false;

    auto emit_edges = [&]() {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> blocks;
        for (const auto& [key, list] : sa.groups) {
            int u = vmap[key.first], v = vmap[key.second];
            auto it = sb.groups.find({std::min(u, v), std::max(u, v)});
            blocks.push_back({list, it->second});
        }
        std::vector<std::vector<int>> perms(blocks.size());
        for (size_t i = 0; i < blocks.size(); ++i) {
            perms[i].resize(blocks[i].second.size());
            std::iota(perms[i].begin(), perms[i].end(), 0);
        }
        for (;;) {
            Isomorphism iso;
            iso.vmap = vmap;
            iso.emap.assign(A.num_edges(), -1);
            for (size_t i = 0; i < blocks.size(); ++i) {
                for (size_t k = 0; k < blocks[i].first.size(); ++k) {
                    iso.emap[blocks[i].first[k]] = blocks[i].second[perms[i][k]];
                }
            }
            out.push_back(std::move(iso));
            if (limit && out.size() >= limit) {
                stop = true;
                return;
            }
            int i = static_cast<int>(blocks.size()) - 1;
            while (i >= 0 && !std::next_permutation(perms[i].begin(), perms[i].end())) --i;
            if (i < 0) return;
        }
    };

    std::function<void(int)> assign = [&](int i) {
        if (stop) return;
        if (i == n) {
            emit_edges();
            return;
        }
        for (int t = 0; t < n && !stop; ++t) {
            if (used[t] || sa.sig[i] != sb.sig[t]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) ok = sa.mult[i][j] == sb.mult[t][vmap[j]];
            if (!ok) continue;
            vmap[i] = t;
            used[t] = 1;
            assign(i + 1);
            used[t] = 0;
            vmap[i] = -1;
        }
    };
    assign(0);
    return out;
}

bool isomorphic(const MetricGraph& A, const MetricGraph& B) { return !isomorphisms(A, B, 1).empty(); }

bool isometric(const MetricGraph& A, const MetricGraph& B) {
    for (const auto& iso : isomorphisms(A, B)) {
        bool ok = true;
        for (int e = 0; e < A.num_edges() && ok; ++e) ok = A.edges[e].len == B.edges[iso.emap[e]].len;
        if (ok) return true;
    }
    return false;
}

int CombinatorialType::edge_role(const std::string& role) const {
    for (size_t i = 0; i < edge_roles.size(); ++i) {
        if (edge_roles[i] == role) return static_cast<int>(i);
    }
    return -1;
}

int CombinatorialType::vertex_role(const std::string& role) const {
    for (size_t i = 0; i < vertex_roles.size(); ++i) {
        if (vertex_roles[i] == role) return static_cast<int>(i);
    }
    return -1;
}

namespace {

// Vertices are single letters; each edge is written as its two endpoint letters.
// Roles are the sorted letter pair, with slot numbers 1,2 on parallel edges.
CombinatorialType lettered(const std::string& name, int g, const std::string& letters,
                           const std::vector<std::string>& edges, Realizability r, bool reconstructed) {
    CombinatorialType T;
    T.name = name;
    T.genus = g;
    T.realizability = r;
    T.reconstructed = reconstructed;
    for (char c : letters) {
        T.vertex_roles.push_back(std::string(1, c));
        T.graph.add_vertex(0);
    }
    std::map<std::string, int> seen;
    for (const auto& e : edges) {
        std::string key = e;
        std::sort(key.begin(), key.end());
        seen[key]++;
    }
    std::map<std::string, int> slot;
    for (const auto& e : edges) {
        std::string key = e;
        std::sort(key.begin(), key.end());
        int u = static_cast<int>(letters.find(e[0]));
        int v = static_cast<int>(letters.find(e[1]));
        T.graph.add_edge(u, v, 1);
        std::string role = key;
        if (seen[key] > 1) role += std::to_string(++slot[key]);
        T.edge_roles.push_back(role);
    }
    return T;
}

CombinatorialType numbered(const std::string& name, int g, const std::vector<std::pair<int, int>>& edges,
                           Realizability r, bool reconstructed) {
    int n = 0;
    for (auto [a, b] : edges) n = std::max({n, a + 1, b + 1});
    std::string letters;
    for (int i = 0; i < n; ++i) letters.push_back(static_cast<char>('a' + i));
    std::vector<std::string> es;
    for (auto [a, b] : edges) es.push_back(std::string{letters[a], letters[b]});
    return lettered(name, g, letters, es, r, reconstructed);
}

std::vector<CombinatorialType> build_catalog() {
    using R = Realizability;
    std::vector<CombinatorialType> c;

    // Genus 3. K4 with vertices 1 (bottom left), 2 (bottom right), 3 (top), 4 (center).
    {
        CombinatorialType T;
        T.name = "(000)";
        T.genus = 3;
        T.realizability = R::Realizable;
        T.vertex_roles = {"1", "2", "3", "4"};
        for (int i = 0; i < 4; ++i) T.graph.add_vertex(0);
        const std::vector<std::tuple<std::string, int, int>> es{
            {"x", 0, 3}, {"y", 2, 3}, {"z", 1, 3}, {"u", 0, 2}, {"v", 0, 1}, {"w", 1, 2}};
        for (const auto& [role, a, b] : es) {
            T.graph.add_edge(a, b, 1);
            T.edge_roles.push_back(role);
        }
        c.push_back(T);
    }
    c.push_back(numbered("(020)", 3, {{0, 2}, {0, 3}, {0, 3}, {1, 2}, {1, 2}, {1, 3}}, R::Realizable, false));
    c.push_back(numbered("(111)", 3, {{0, 2}, {0, 3}, {0, 3}, {1, 1}, {1, 2}, {2, 3}}, R::Realizable, false));
    c.push_back(numbered("(212)", 3, {{0, 2}, {0, 3}, {0, 3}, {1, 1}, {1, 3}, {2, 2}}, R::Realizable, false));
    c.push_back(numbered("(303)", 3, {{0, 1}, {0, 2}, {0, 3}, {1, 1}, {2, 2}, {3, 3}}, R::NotRealizable, false));

    // Genus 4, lettered as in the realizability lemmas.
    c.push_back(lettered("(000)A", 4, "xyzuvw", {"xu", "xz", "xy", "zw", "zu", "wy", "wv", "yv", "vu"},
                         R::Realizable, false));
    c.push_back(numbered("(000)B", 4, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}},
                         R::NotRealizable, false));
    c.push_back(lettered("(010)", 4, "xyzuvw", {"xu", "yv", "uz", "vz", "wz", "vw", "uw", "xy", "xy"},
                         R::Realizable, false));
    c.push_back(lettered("(020)", 4, "xyzuvw", {"xz", "zw", "zy", "uw", "wv", "xu", "xu", "yv", "yv"},
                         R::Realizable, false));
    c.push_back(lettered("(021)", 4, "xyzuvw", {"xw", "wz", "zy", "uw", "zv", "xu", "xu", "yv", "yv"},
                         R::Realizable, false));
    c.push_back(lettered("(030)", 4, "xyzuvw", {"yz", "xw", "uv", "xy", "xy", "zu", "zu", "wv", "wv"},
                         R::Realizable, false));
    c.push_back(lettered("(101)", 4, "xyzuvw", {"xy", "xz", "xu", "zy", "zu", "uv", "yv", "vw", "ww"},
                         R::Realizable, false));
    c.push_back(lettered("(111)", 4, "xyzuvw", {"xy", "zu", "uy", "uv", "yv", "vw", "xz", "xz", "ww"},
                         R::Realizable, false));
    c.push_back(lettered("(121)", 4, "xyzuvw", {"uv", "yv", "wv", "xz", "zu", "zu", "xy", "xy", "ww"},
                         R::Realizable, false));
    c.push_back(lettered("(122)", 4, "xyzuvw", {"zy", "xy", "yu", "vw", "xz", "xz", "uv", "uv", "ww"},
                         R::Realizable, false));
    c.push_back(lettered("(202)", 4, "xyzuvw", {"uy", "xy", "xu", "zu", "zy", "xv", "zw", "vv", "ww"},
                         R::Realizable, false));
    c.push_back(lettered("(212)", 4, "xyzuvw", {"uy", "xz", "zu", "zv", "uw", "xy", "xy", "vv", "ww"},
                         R::Realizable, false));
    c.push_back(numbered("(213)", 4, {{0, 4}, {0, 5}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {2, 2}, {3, 3}, {4, 5}},
                         R::NotRealizable, true));
    c.push_back(numbered("(223)", 4, {{0, 4}, {0, 5}, {0, 5}, {1, 3}, {1, 4}, {1, 4}, {2, 2}, {2, 5}, {3, 3}},
                         R::Realizable, true));
    c.push_back(numbered("(303)", 4, {{0, 3}, {0, 4}, {0, 5}, {1, 1}, {1, 5}, {2, 2}, {2, 4}, {3, 3}, {4, 5}},
                         R::NotRealizable, false));
    c.push_back(numbered("(314)", 4, {{0, 4}, {0, 5}, {0, 5}, {1, 2}, {1, 3}, {1, 5}, {2, 2}, {3, 3}, {4, 4}},
                         R::NotRealizable, true));
    c.push_back(numbered("(405)", 4, {{0, 3}, {0, 4}, {0, 5}, {1, 1}, {1, 5}, {2, 2}, {2, 5}, {3, 3}, {4, 4}},
                         R::NotRealizable, true));
    return c;
}

}  // namespace

const std::vector<CombinatorialType>& catalog() {
    static const std::vector<CombinatorialType> c = build_catalog();
    return c;
}

const CombinatorialType* find_type(int g, const std::string& name) {
    for (const auto& T : catalog()) {
        if (T.genus == g && T.name == name) return &T;
    }
    return nullptr;
}

std::optional<TypeMatch> identify_type(const MetricGraph& G) {
    validate(G);
    int g = genus(G);
    if (g != 3 && g != 4) throw Error(ErrorCode::UnsupportedGenus, "genus " + std::to_string(g));
    if (!is_canonical(G)) throw Error(ErrorCode::NotCanonical, "graph is not a canonical model");
    for (const auto& T : catalog()) {
        if (T.genus != g) continue;
        auto isos = isomorphisms(T.graph, G, 1);
        if (!isos.empty()) return TypeMatch{&T, isos.front()};
    }
    return std::nullopt;
}

std::vector<Isomorphism> symmetry_group(const CombinatorialType& T) { return isomorphisms(T.graph, T.graph); }

MetricGraph with_lengths(const CombinatorialType& T, const std::vector<std::pair<std::string, Q>>& lengths) {
    MetricGraph G = T.graph;
    for (const auto& [role, len] : lengths) {
        int e = T.edge_role(role);
        if (e < 0) throw Error(ErrorCode::BadInput, "type " + T.name + " has no edge role " + role);
        G.edges[e].len = len;
    }
    return G;
}

}  // namespace tropigon
