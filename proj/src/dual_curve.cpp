#include "tropigon/dual_curve.hpp"

#include "tropigon/error.hpp"

#include <algorithm>
#include <numeric>

namespace tropigon {

namespace {

LatticePoint primitive(LatticePoint v, int& g) {
    long long d = std::gcd(v.x < 0 ? -v.x : v.x, v.y < 0 ? -v.y : v.y);
    g = static_cast<int>(d);
    return {v.x / d, v.y / d};
}

LatticePoint rot(LatticePoint v) { return {-v.y, v.x}; }

// Point where h(a) + <a,p> = h(b) + <b,p> = h(c) + <c,p>.
RationalPoint tie_point(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c, const Q& ha, const Q& hb,
                        const Q& hc) {
    LatticePoint u = b - a, v = c - a;
    Q r1 = ha - hb, r2 = ha - hc;
    Q det = qi(cross(u, v));
    return {(r1 * qi(v.y) - r2 * qi(u.y)) / det, (qi(u.x) * r2 - qi(v.x) * r1) / det};
}

}  // namespace

TropicalPlaneCurve dual_tropical_curve(const Triangulation& T, const HeightFunction& h) {
    std::string why = validate_triangulation(T);
    if (!why.empty()) throw Error(ErrorCode::InvalidPolygon, why);
    Mesh M = build_mesh(T);
    for (const auto& p : M.pts) {
        if (!h.values.count(p)) throw Error(ErrorCode::NotRegular, "no height at " + to_string(p));
    }
    auto slack = edge_slacks(M, h);
    for (size_t e = 0; e < M.edges.size(); ++e) {
        if (M.edges[e].interior() && sgn(slack[e]) <= 0) {
            throw Error(ErrorCode::NotRegular, "heights do not fold along " + to_string(M.pts[M.edges[e].a]) + "-" +
                                                   to_string(M.pts[M.edges[e].b]));
        }
    }
    for (const auto& p : T.polygon.lattice_points()) {
        auto it = h.values.find(p);
        if (it == h.values.end() || M.index.count(p)) continue;
        for (const auto& t : M.tris) {
            const auto &a = M.pts[t[0]], &b = M.pts[t[1]], &c = M.pts[t[2]];
            if (cross3(a, b, p) < 0 || cross3(b, c, p) < 0 || cross3(c, a, p) < 0) continue;
            if (it->second >= interpolate(a, b, c, h.at(a), h.at(b), h.at(c), p)) {
                throw Error(ErrorCode::NotRegular, "unused point " + to_string(p) + " is not below the lifted surface");
            }
            break;
        }
    }

    TropicalPlaneCurve C;
    C.subdivision = T;
    C.heights = h;
    C.smooth = is_unimodular(T);
    for (const auto& t : M.tris) {
        const auto &a = M.pts[t[0]], &b = M.pts[t[1]], &c = M.pts[t[2]];
        C.vertices.push_back(tie_point(a, b, c, h.at(a), h.at(b), h.at(c)));
    }
    for (int e = 0; e < static_cast<int>(M.edges.size()); ++e) {
        const MeshEdge& E = M.edges[e];
        int w = 1;
        LatticePoint n = rot(primitive(M.pts[E.b] - M.pts[E.a], w));
        if (E.interior()) {
            const auto& p = C.vertices[E.tri[0]];
            const auto& q = C.vertices[E.tri[1]];
            Q dx = q[0] - p[0], dy = q[1] - p[1];
            Q lam = n.x != 0 ? Q(dx / qi(n.x)) : Q(dy / qi(n.y));
            if (sgn(lam) < 0) {
                n = {-n.x, -n.y};
                lam = -lam;
            }
            if (sgn(lam) == 0 || dx != lam * qi(n.x) || dy != lam * qi(n.y)) {
                throw Error(ErrorCode::NotRegular, "degenerate curve edge");
            }
            C.edges.push_back({E.tri[0], E.tri[1], n, w, lam, e});
        } else {
            // Outward normal: away from the opposite vertex.
            LatticePoint out = M.pts[E.opp[0]] - M.pts[E.a];
            if (n.x * out.x + n.y * out.y > 0) n = {-n.x, -n.y};
            C.rays.push_back({E.tri[0], n, w, e});
        }
    }
    for (int v = 0; v < static_cast<int>(C.vertices.size()); ++v) {
        auto r = balancing_residual(C, v);
        if (sgn(r[0]) != 0 || sgn(r[1]) != 0) throw std::logic_error("unbalanced curve vertex");
    }
    return C;
}

std::array<Q, 2> balancing_residual(const TropicalPlaneCurve& C, int v) {
    std::array<Q, 2> s{Q(0), Q(0)};
    for (const auto& e : C.edges) {
        if (e.a == v) {
            s[0] += e.weight * qi(e.dir.x);
            s[1] += e.weight * qi(e.dir.y);
        }
        if (e.b == v) {
            s[0] -= e.weight * qi(e.dir.x);
            s[1] -= e.weight * qi(e.dir.y);
        }
    }
    for (const auto& r : C.rays) {
        if (r.vertex == v) {
            s[0] += r.weight * qi(r.dir.x);
            s[1] += r.weight * qi(r.dir.y);
        }
    }
    return s;
}

Triangulation newton_subdivision(const TropicalPlaneCurve& C) {
    Triangulation T;
    T.polygon = C.subdivision.polygon;
    for (const auto& p : C.vertices) {
        std::vector<LatticePoint> best;
        Q top;
        for (const auto& [a, ha] : C.heights.values) {
            Q val = ha + qi(a.x) * p[0] + qi(a.y) * p[1];
            if (best.empty() || val > top) {
                best = {a};
                top = val;
            } else if (val == top) {
                best.push_back(a);
            }
        }
        if (best.size() != 3) throw Error(ErrorCode::NotRegular, "curve vertex dual to a non-triangular cell");
        T.triangles.push_back(make_triangle(best[0], best[1], best[2]));
    }
    T.normalize();
    return T;
}

TracedModel skeleton_traced(const TropicalPlaneCurve& C) {
    if (!C.smooth) throw Error(ErrorCode::NotSmooth, "the dual subdivision has non-unimodular cells");
    MetricGraph G;
    for (size_t v = 0; v < C.vertices.size(); ++v) G.add_vertex();
    for (const auto& e : C.edges) G.add_edge(e.a, e.b, e.length);
    return canonical_model_traced(G);
}

MetricGraph skeleton(const TropicalPlaneCurve& C) { return skeleton_traced(C).graph; }

TropicalCover projection_cover(const TropicalPlaneCurve& C) {
    if (!C.smooth) throw Error(ErrorCode::NotSmooth, "the dual subdivision has non-unimodular cells");
    const auto& V = C.subdivision.polygon.vertices;
    long long ymin = V[0].y;
    for (const auto& p : V) ymin = std::min(ymin, p.y);
    std::vector<long long> bottom;
    for (const auto& p : V) {
        if (p.y == ymin) bottom.push_back(p.x);
    }
    if (bottom.size() != 2 || std::abs(bottom[0] - bottom[1]) != 3) {
        throw Error(ErrorCode::WrongPolygon, "the polygon's bottom edge does not have lattice length 3");
    }
    TropicalCover cov;
    for (const auto& p : C.vertices) {
        cov.source.add_vertex();
        cov.height.push_back(p[1]);
    }
    for (const auto& e : C.edges) {
        cov.source.add_edge(e.a, e.b, e.length);
        cov.mu.push_back(e.weight * static_cast<int>(std::abs(e.dir.y)));
    }
    for (const auto& r : C.rays) {
        int dir = r.dir.y > 0 ? 1 : (r.dir.y < 0 ? -1 : 0);
        cov.legs.push_back({r.vertex, r.weight * static_cast<int>(std::abs(r.dir.y)), dir});
    }
    return cov;
}

}  // namespace tropigon
