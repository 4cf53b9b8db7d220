#include "tropigon/lattice.hpp"

#include "tropigon/error.hpp"
#include "tropigon/lp.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>

namespace tropigon {

std::string to_string(const LatticePoint& p) {
    return "[" + std::to_string(p.x) + "," + std::to_string(p.y) + "]";
}

Q LatticePolygon::area() const {
    long long twice = 0;
    for (size_t i = 0; i < vertices.size(); ++i) {
        twice += cross(vertices[i], vertices[(i + 1) % vertices.size()]);
    }
    return qi(twice, 2);
}

bool LatticePolygon::contains(const LatticePoint& p) const {
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (cross3(vertices[i], vertices[(i + 1) % vertices.size()], p) < 0) return false;
    }
    return true;
}

bool LatticePolygon::on_boundary(const LatticePoint& p) const {
    if (!contains(p)) return false;
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (cross3(vertices[i], vertices[(i + 1) % vertices.size()], p) == 0) return true;
    }
    return false;
}

std::vector<LatticePoint> LatticePolygon::lattice_points() const {
    std::vector<LatticePoint> out;
    if (vertices.empty()) return out;
    long long x0 = vertices[0].x, x1 = x0, y0 = vertices[0].y, y1 = y0;
    for (const auto& v : vertices) {
        x0 = std::min(x0, v.x);
        x1 = std::max(x1, v.x);
        y0 = std::min(y0, v.y);
        y1 = std::max(y1, v.y);
    }
    for (long long x = x0; x <= x1; ++x) {
        for (long long y = y0; y <= y1; ++y) {
            if (contains({x, y})) out.push_back({x, y});
        }
    }
    return out;
}

std::vector<LatticePoint> LatticePolygon::boundary_points() const {
    std::vector<LatticePoint> out;
    for (const auto& p : lattice_points()) {
        if (on_boundary(p)) out.push_back(p);
    }
    return out;
}

LatticePolygon make_polygon(std::vector<LatticePoint> v) {
    v.erase(std::unique(v.begin(), v.end()), v.end());
    while (v.size() > 1 && v.front() == v.back()) v.pop_back();
    if (v.size() < 3) throw Error(ErrorCode::InvalidPolygon, "fewer than three vertices");
    long long twice = 0;
    for (size_t i = 0; i < v.size(); ++i) twice += cross(v[i], v[(i + 1) % v.size()]);
    if (twice == 0) throw Error(ErrorCode::InvalidPolygon, "degenerate polygon");
    if (twice < 0) std::reverse(v.begin(), v.end());
    bool changed = true;
    while (changed && v.size() >= 3) {
        changed = false;
        for (size_t i = 0; i < v.size(); ++i) {
            const auto& a = v[(i + v.size() - 1) % v.size()];
            const auto& c = v[(i + 1) % v.size()];
            if (cross3(a, v[i], c) == 0) {
                v.erase(v.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    if (v.size() < 3) throw Error(ErrorCode::InvalidPolygon, "degenerate polygon");
    for (size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[(i + v.size() - 1) % v.size()];
        const auto& c = v[(i + 1) % v.size()];
        if (cross3(a, v[i], c) <= 0) throw Error(ErrorCode::InvalidPolygon, "polygon is not convex");
    }
    auto first = std::min_element(v.begin(), v.end());
    std::rotate(v.begin(), first, v.end());
    return LatticePolygon{v};
}

LatticePolygon hirzebruch_polygon(int g, int n) {
    if (g < 1) throw Error(ErrorCode::BadInput, "genus must be positive");
    if (n < 0) throw Error(ErrorCode::MaroniRange, "n must be non-negative");
    if ((g - n) % 2 != 0) {
        throw Error(ErrorCode::ParityMismatch, "g=" + std::to_string(g) + " and n=" + std::to_string(n) +
                                                   " have different parity");
    }
    if (n > (g + 2) / 3) {
        throw Error(ErrorCode::MaroniRange,
                    "n=" + std::to_string(n) + " exceeds floor((g+2)/3)=" + std::to_string((g + 2) / 3));
    }
    long long right = (g - 3 * n + 2) / 2;
    long long left = (g + 3 * n + 2) / 2;
    std::vector<LatticePoint> v{{0, 0}, {3, 0}};
    if (right > 0) v.push_back({3, right});
    v.push_back({0, left});
    return make_polygon(v);
}

std::vector<LatticePoint> interior_points(const LatticePolygon& P) {
    std::vector<LatticePoint> out;
    for (const auto& p : P.lattice_points()) {
        if (!P.on_boundary(p)) out.push_back(p);
    }
    return out;
}

Triangle make_triangle(LatticePoint a, LatticePoint b, LatticePoint c) {
    Triangle t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

void Triangulation::normalize() {
    for (auto& t : triangles) std::sort(t.begin(), t.end());
    std::sort(triangles.begin(), triangles.end());
}

bool is_unimodular(const Triangulation& T) {
    for (const auto& t : T.triangles) {
        if (std::llabs(cross3(t[0], t[1], t[2])) != 1) return false;
    }
    return true;
}

namespace {

// True when some edge line of A has all of B on its closed outer side.
bool separated_by_edge_of(const Triangle& A, const Triangle& B) {
    long long orient = cross3(A[0], A[1], A[2]) > 0 ? 1 : -1;
    for (int i = 0; i < 3; ++i) {
        const auto& p = A[i];
        const auto& q = A[(i + 1) % 3];
        bool all_out = true;
        for (const auto& r : B) {
            if (orient * cross3(p, q, r) > 0) {
                all_out = false;
                break;
            }
        }
        if (all_out) return true;
    }
    return false;
}

}  // namespace

std::string validate_triangulation(const Triangulation& T) {
    Q total = 0;
    for (const auto& t : T.triangles) {
        long long d = cross3(t[0], t[1], t[2]);
        if (d == 0) return "degenerate triangle";
        for (const auto& p : t) {
            if (!T.polygon.contains(p)) return "vertex " + to_string(p) + " outside polygon";
        }
        total += qi(std::llabs(d), 2);
    }
    if (total != T.polygon.area()) return "triangle areas do not sum to the polygon area";
    for (size_t i = 0; i < T.triangles.size(); ++i) {
        for (size_t j = i + 1; j < T.triangles.size(); ++j) {
            const auto& A = T.triangles[i];
            const auto& B = T.triangles[j];
            if (!separated_by_edge_of(A, B) && !separated_by_edge_of(B, A)) return "overlapping triangles";
        }
    }
    return "";
}

const Q& HeightFunction::at(const LatticePoint& p) const {
    auto it = values.find(p);
    if (it == values.end()) throw Error(ErrorCode::BadInput, "no height at " + to_string(p));
    return it->second;
}

int Mesh::edge_between(int a, int b) const {
    if (a > b) std::swap(a, b);
    for (int e : point_edges[a]) {
        if (edges[e].a == a && edges[e].b == b) return e;
    }
    return -1;
}

Mesh build_mesh(const Triangulation& T) {
    Mesh M;
    for (const auto& t : T.triangles) {
        for (const auto& p : t) M.pts.push_back(p);
    }
    std::sort(M.pts.begin(), M.pts.end());
    M.pts.erase(std::unique(M.pts.begin(), M.pts.end()), M.pts.end());
    for (int i = 0; i < static_cast<int>(M.pts.size()); ++i) M.index[M.pts[i]] = i;
    M.interior_point.resize(M.pts.size());
    for (size_t i = 0; i < M.pts.size(); ++i) M.interior_point[i] = !T.polygon.on_boundary(M.pts[i]);

    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> incid;  // edge -> (triangle, opposite)
    for (const auto& t : T.triangles) {
        std::array<int, 3> v{M.index[t[0]], M.index[t[1]], M.index[t[2]]};
        if (cross3(t[0], t[1], t[2]) < 0) std::swap(v[1], v[2]);
        int ti = static_cast<int>(M.tris.size());
        M.tris.push_back(v);
        for (int i = 0; i < 3; ++i) {
            int a = v[i], b = v[(i + 1) % 3];
            incid[{std::min(a, b), std::max(a, b)}].push_back({ti, v[(i + 2) % 3]});
        }
    }
    std::map<std::pair<int, int>, int> eid;
    for (const auto& [key, list] : incid) {
        MeshEdge e;
        e.a = key.first;
        e.b = key.second;
        for (size_t k = 0; k < list.size() && k < 2; ++k) {
            e.tri[k] = list[k].first;
            e.opp[k] = list[k].second;
        }
        eid[key] = static_cast<int>(M.edges.size());
        M.edges.push_back(e);
    }
    M.point_edges.assign(M.pts.size(), {});
    for (int e = 0; e < static_cast<int>(M.edges.size()); ++e) {
        M.point_edges[M.edges[e].a].push_back(e);
        M.point_edges[M.edges[e].b].push_back(e);
    }
    for (const auto& v : M.tris) {
        std::array<int, 3> te{};
        for (int i = 0; i < 3; ++i) {
            int a = v[i], b = v[(i + 1) % 3];
            te[i] = eid[{std::min(a, b), std::max(a, b)}];
        }
        M.tri_edges.push_back(te);
    }
    return M;
}

namespace {

struct Candidate {
    int k;
    int s1, s2;
    uint8_t b0, b1, b2;  // side bits taken on the base segment and the two new edges
};

class Enumerator {
public:
    Enumerator(const LatticePolygon& P, const std::function<void(const Triangulation&)>& sink)
        : P_(P), sink_(sink), pts_(P.lattice_points()) {
        const int n = static_cast<int>(pts_.size());
        seg_.assign(n, std::vector<int>(n, -1));
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                auto d = pts_[j] - pts_[i];
                if (std::gcd(std::llabs(d.x), std::llabs(d.y)) != 1) continue;
                seg_[i][j] = seg_[j][i] = static_cast<int>(ends_.size());
                ends_.push_back({i, j});
            }
        }
        const int S = static_cast<int>(ends_.size());
        words_ = (S + 63) / 64;
        LatticePoint vsum{0, 0};
        for (const auto& v : P.vertices) vsum = vsum + v;
        const long long nv = static_cast<long long>(P.vertices.size());
        boundary_.assign(S, 0);
        inside_bit_.assign(S, 0);
        for (int s = 0; s < S; ++s) {
            auto [i, j] = ends_[s];
            for (size_t k = 0; k < P.vertices.size(); ++k) {
                const auto& a = P.vertices[k];
                const auto& b = P.vertices[(k + 1) % P.vertices.size()];
                if (cross3(a, b, pts_[i]) == 0 && cross3(a, b, pts_[j]) == 0) boundary_[s] = 1;
            }
            if (boundary_[s]) {
                LatticePoint c{vsum.x - nv * pts_[i].x, vsum.y - nv * pts_[i].y};
                inside_bit_[s] = cross(pts_[j] - pts_[i], c) > 0 ? 1 : 2;
            }
        }
        crossing_.assign(S, std::vector<uint64_t>(words_, 0));
        for (int s = 0; s < S; ++s) {
            for (int t = s + 1; t < S; ++t) {
                auto [a, b] = ends_[s];
                auto [c, d] = ends_[t];
                if (a == c || a == d || b == c || b == d) continue;
                long long o1 = cross3(pts_[a], pts_[b], pts_[c]);
                long long o2 = cross3(pts_[a], pts_[b], pts_[d]);
                long long o3 = cross3(pts_[c], pts_[d], pts_[a]);
                long long o4 = cross3(pts_[c], pts_[d], pts_[b]);
                if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0))) {
                    crossing_[s][t / 64] |= uint64_t(1) << (t % 64);
                    crossing_[t][s / 64] |= uint64_t(1) << (s % 64);
                }
            }
        }
        cands_.assign(S, {});
        for (int s = 0; s < S; ++s) {
            auto [i, j] = ends_[s];
            for (int side = 0; side < 2; ++side) {
                for (int k = 0; k < n; ++k) {
                    if (k == i || k == j) continue;
                    long long o = cross3(pts_[i], pts_[j], pts_[k]);
                    if (std::llabs(o) != 1) continue;
                    if ((o > 0) != (side == 0)) continue;
                    Candidate c;
                    c.k = k;
                    c.s1 = seg_[i][k];
                    c.s2 = seg_[j][k];
                    c.b0 = side == 0 ? 1 : 2;
                    c.b1 = side_bit(c.s1, j);
                    c.b2 = side_bit(c.s2, i);
                    cands_[s][side].push_back(c);
                }
            }
        }
        cover_.assign(S, 0);
        used_.assign(words_, 0);
        target_ = static_cast<int>(Q(P.area() * 2).get_num().get_si());
    }

    void run() { step(); }

private:
    uint8_t side_bit(int s, int p) const {
        auto [i, j] = ends_[s];
        return cross3(pts_[i], pts_[j], pts_[p]) > 0 ? 1 : 2;
    }

    bool crosses_used(int s) const {
        for (int w = 0; w < words_; ++w) {
            if (crossing_[s][w] & used_[w]) return true;
        }
        return false;
    }

    void mark(int s, uint8_t bit) {
        cover_[s] |= bit;
        used_[s / 64] |= uint64_t(1) << (s % 64);
    }

    void step() {
        int open = -1;
        uint8_t need = 0;
        for (int s = 0; s < static_cast<int>(ends_.size()); ++s) {
            if (boundary_[s]) {
                if (cover_[s] == 0) {
                    open = s;
                    need = inside_bit_[s];
                    break;
                }
            } else if (cover_[s] == 1 || cover_[s] == 2) {
                open = s;
                need = static_cast<uint8_t>(3 - cover_[s]);
                break;
            }
        }
        if (open < 0) {
            if (static_cast<int>(chosen_.size()) == target_) emit();
            return;
        }
        for (const Candidate& c : cands_[open][need == 1 ? 0 : 1]) {
            if (cover_[c.s1] & c.b1) continue;
            if (cover_[c.s2] & c.b2) continue;
            if (!(cover_[c.s1]) && crosses_used(c.s1)) continue;
            if (!(cover_[c.s2]) && crosses_used(c.s2)) continue;
            auto saved0 = cover_[open], saved1 = cover_[c.s1], saved2 = cover_[c.s2];
            auto saved_used = used_;
            mark(open, c.b0);
            mark(c.s1, c.b1);
            mark(c.s2, c.b2);
            chosen_.push_back({ends_[open].first, ends_[open].second, c.k});
            step();
            chosen_.pop_back();
            cover_[open] = saved0;
            cover_[c.s1] = saved1;
            cover_[c.s2] = saved2;
            used_ = saved_used;
        }
    }

    void emit() {
        Triangulation T;
        T.polygon = P_;
        for (const auto& t : chosen_) T.triangles.push_back(make_triangle(pts_[t[0]], pts_[t[1]], pts_[t[2]]));
        T.normalize();
        sink_(T);
    }

    const LatticePolygon& P_;
    const std::function<void(const Triangulation&)>& sink_;
    std::vector<LatticePoint> pts_;
    std::vector<std::vector<int>> seg_;
    std::vector<std::pair<int, int>> ends_;
    std::vector<char> boundary_;
    std::vector<uint8_t> inside_bit_;
    int words_ = 0;
    std::vector<std::vector<uint64_t>> crossing_;
    std::vector<std::array<std::vector<Candidate>, 2>> cands_;
    std::vector<uint8_t> cover_;
    std::vector<uint64_t> used_;
    std::vector<std::array<int, 3>> chosen_;
    int target_ = 0;
};

}  // namespace

void enumerate_unimodular_triangulations(const LatticePolygon& P,
                                         const std::function<void(const Triangulation&)>& sink) {
    Enumerator e(P, sink);
    e.run();
}

std::vector<Triangulation> unimodular_triangulations(const LatticePolygon& P) {
    std::vector<Triangulation> out;
    enumerate_unimodular_triangulations(P, [&](const Triangulation& T) { out.push_back(T); });
    std::sort(out.begin(), out.end(), [](const Triangulation& a, const Triangulation& b) {
        return a.triangles < b.triangles;
    });
    return out;
}

Q interpolate(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c, const Q& ha, const Q& hb,
              const Q& hc, const LatticePoint& d) {
    long long D = cross3(a, b, c);
    Q num = qi(cross(d - a, c - a)) * (hb - ha) + qi(cross(b - a, d - a)) * (hc - ha);
    return ha + num / qi(D);
}

std::vector<Q> edge_slacks(const Mesh& M, const HeightFunction& h) {
    std::vector<Q> s(M.edges.size());
    for (size_t e = 0; e < M.edges.size(); ++e) {
        const MeshEdge& E = M.edges[e];
        if (!E.interior()) continue;
        const auto& t = M.tris[E.tri[0]];
        const auto& d = M.pts[E.opp[1]];
        s[e] = interpolate(M.pts[t[0]], M.pts[t[1]], M.pts[t[2]], h.at(M.pts[t[0]]), h.at(M.pts[t[1]]),
                           h.at(M.pts[t[2]]), d) -
               h.at(d);
    }
    return s;
}

std::optional<HeightFunction> heights_from_slacks(const Mesh& M, const std::vector<Q>& slack) {
    std::vector<std::optional<Q>> val(M.pts.size());
    std::vector<char> seen(M.tris.size(), 0);
    if (M.tris.empty()) return HeightFunction{};
    for (int v : M.tris[0]) val[v] = Q(0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
        int t = queue.front();
        queue.pop_front();
        const auto& tv = M.tris[t];
        for (int e : M.tri_edges[t]) {
            const MeshEdge& E = M.edges[e];
            if (!E.interior()) continue;
            int side = E.tri[0] == t ? 1 : 0;
            int nt = E.tri[side];
            int d = E.opp[side];
            Q hd = interpolate(M.pts[tv[0]], M.pts[tv[1]], M.pts[tv[2]], *val[tv[0]], *val[tv[1]], *val[tv[2]],
                               M.pts[d]) -
                   slack[e];
            if (!val[d]) {
                val[d] = hd;
            } else if (*val[d] != hd) {
                return std::nullopt;
            }
            if (!seen[nt]) {
                seen[nt] = 1;
                queue.push_back(nt);
            }
        }
    }
    HeightFunction h;
    for (size_t i = 0; i < M.pts.size(); ++i) {
        if (!val[i]) return std::nullopt;
        h.values[M.pts[i]] = *val[i];
    }
    return h;
}

namespace {

std::optional<HeightFunction> regular_unimodular(const Triangulation& T) {
    Mesh M = build_mesh(T);
    const int E = static_cast<int>(M.edges.size());
    std::vector<int> var(E, -1);
    int m = 0;
    for (int e = 0; e < E; ++e) {
        const MeshEdge& me = M.edges[e];
        if (me.interior() && (M.interior_point[me.a] || M.interior_point[me.b])) var[e] = m++;
    }
    std::vector<Q> s(E, Q(0));
    for (int e = 0; e < E; ++e) {
        if (M.edges[e].interior()) s[e] = 1;
    }
    if (m > 0) {
        LinearProgram lp;
        lp.nvars = m + 1;
        const int tvar = m;
        for (int p = 0; p < static_cast<int>(M.pts.size()); ++p) {
            if (!M.interior_point[p]) continue;
            for (int coord = 0; coord < 2; ++coord) {
                LPRow& row = lp.add_row(Rel::EQ, 0);
                for (int e : M.point_edges[p]) {
                    int q = M.edges[e].a == p ? M.edges[e].b : M.edges[e].a;
                    auto d = M.pts[q] - M.pts[p];
                    long long c = coord == 0 ? d.x : d.y;
                    row.a[var[e]] += qi(c);
                    row.a[tvar] += qi(c);
                }
            }
        }
        LPRow& norm = lp.add_row(Rel::EQ, 1);
        for (int i = 0; i < m; ++i) norm.a[i] = 1;
        norm.a[tvar] = m;
        lp.objective.assign(m + 1, Q(0));
        lp.objective[tvar] = 1;
        LPSolution sol = solve_lp(lp);
        if (sol.status != LPSolution::Status::Optimal || sgn(sol.value) <= 0) return std::nullopt;
        Z scale = 1;
        for (int e = 0; e < E; ++e) {
            if (var[e] >= 0) {
                s[e] = sol.x[var[e]] + sol.value;
                scale = lcm_den(scale, s[e]);
            }
        }
        for (int e = 0; e < E; ++e) {
            if (var[e] >= 0) s[e] *= scale;
        }
    }
    auto h = heights_from_slacks(M, s);
    if (!h) return std::nullopt;
    auto check = edge_slacks(M, *h);
    for (int e = 0; e < E; ++e) {
        if (M.edges[e].interior() && sgn(check[e]) <= 0) return std::nullopt;
    }
    return h;
}

// Margin LP directly on heights: every edge fold and every unused point lies strictly below.
std::optional<HeightFunction> regular_general(const Triangulation& T) {
    auto pts = T.polygon.lattice_points();
    const int n = static_cast<int>(pts.size());
    std::map<LatticePoint, int> idx;
    for (int i = 0; i < n; ++i) idx[pts[i]] = i;
    Mesh M = build_mesh(T);
    LinearProgram lp;
    lp.nvars = n + 1;
    const int tvar = n;
    auto add_below = [&](const std::array<int, 3>& tri, const LatticePoint& d) {
        LatticePoint a = M.pts[tri[0]], b = M.pts[tri[1]], c = M.pts[tri[2]];
        long long D = cross3(a, b, c);
        Q cb = qi(cross(d - a, c - a), D);
        Q cc = qi(cross(b - a, d - a), D);
        Q ca = Q(1) - cb - cc;
        LPRow& row = lp.add_row(Rel::GE, 0);
        row.a[idx[a]] += ca;
        row.a[idx[b]] += cb;
        row.a[idx[c]] += cc;
        row.a[idx[d]] -= 1;
        row.a[tvar] -= 1;
    };
    for (const auto& E : M.edges) {
        if (E.interior()) add_below(M.tris[E.tri[0]], M.pts[E.opp[1]]);
    }
    for (const auto& p : pts) {
        if (M.index.count(p)) continue;
        for (const auto& tri : M.tris) {
            LatticePoint a = M.pts[tri[0]], b = M.pts[tri[1]], c = M.pts[tri[2]];
            if (cross3(a, b, p) >= 0 && cross3(b, c, p) >= 0 && cross3(c, a, p) >= 0) {
                add_below(tri, p);
                break;
            }
        }
    }
    LPRow& cap = lp.add_row(Rel::LE, 1);
    cap.a[tvar] = 1;
    lp.objective.assign(n + 1, Q(0));
    lp.objective[tvar] = 1;
    LPSolution sol = solve_lp(lp);
    if (sol.status != LPSolution::Status::Optimal || sgn(sol.value) <= 0) return std::nullopt;
    HeightFunction h;
    for (int i = 0; i < n; ++i) h.values[pts[i]] = sol.x[i];
    return h;
}

}  // namespace

std::optional<HeightFunction> is_regular(const Triangulation& T) {
    std::string why = validate_triangulation(T);
    if (!why.empty()) throw Error(ErrorCode::InvalidPolygon, why);
    if (is_unimodular(T)) return regular_unimodular(T);
    return regular_general(T);
}

std::optional<HeightFunction> is_regular_by_heights(const Triangulation& T) { return regular_general(T); }

std::optional<Triangulation> recompute_subdivision(const LatticePolygon& P, const HeightFunction& h) {
    auto pts = P.lattice_points();
    const int n = static_cast<int>(pts.size());
    std::vector<Q> hv(n);
    for (int i = 0; i < n; ++i) hv[i] = h.at(pts[i]);
    Triangulation T;
    T.polygon = P;
    Q total = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                long long D = cross3(pts[i], pts[j], pts[k]);
                if (D == 0) continue;
                bool upper = true;
                bool touching = false;
                for (int m = 0; m < n && upper; ++m) {
                    if (m == i || m == j || m == k) continue;
                    int c = sgn(interpolate(pts[i], pts[j], pts[k], hv[i], hv[j], hv[k], pts[m]) - hv[m]);
                    if (c < 0) upper = false;
                    if (c == 0) touching = true;
                }
                if (upper && touching) return std::nullopt;
                if (upper) {
                    T.triangles.push_back(make_triangle(pts[i], pts[j], pts[k]));
                    total += qi(std::llabs(D), 2);
                }
            }
        }
    }
    if (total != P.area()) return std::nullopt;
    T.normalize();
    return T;
}

}  // namespace tropigon
