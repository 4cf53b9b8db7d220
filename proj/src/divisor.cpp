#include "tropigon/divisor.hpp"

#include "tropigon/error.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

namespace tropigon {

bool GraphPoint::operator<(const GraphPoint& o) const {
    if (vertex != o.vertex) return vertex < o.vertex;
    if (edge != o.edge) return edge < o.edge;
    return offset < o.offset;
}

bool GraphPoint::operator==(const GraphPoint& o) const {
    return vertex == o.vertex && edge == o.edge && offset == o.offset;
}

void Divisor::add(const GraphPoint& p, long n) {
    if (n == 0) return;
    long& c = chips[p];
    c += n;
    if (c == 0) chips.erase(p);
}

long Divisor::degree() const {
    long d = 0;
    for (const auto& [p, n] : chips) d += n;
    return d;
}

bool Divisor::effective() const {
    for (const auto& [p, n] : chips) {
        if (n < 0) return false;
    }
    return true;
}

int DiscretizedGraph::vertex_of(const GraphPoint& p) const {
    if (p.is_vertex()) {
        if (p.vertex >= source.num_vertices()) throw Error(ErrorCode::BadDivisor, "vertex out of range");
        return p.vertex;
    }
    if (p.edge < 0 || p.edge >= source.num_edges()) throw Error(ErrorCode::BadDivisor, "edge out of range");
    const auto& e = source.edges[p.edge];
    if (sgn(p.offset) <= 0 || p.offset >= e.len) {
        throw Error(ErrorCode::BadDivisor, "offset " + to_string(p.offset) + " not inside edge");
    }
    Q k = p.offset * Q(scale);
    if (!is_integer(k)) throw Error(ErrorCode::BadDivisor, "offset not on the subdivision");
    return edge_points[p.edge][k.get_num().get_ui()];
}

Chips DiscretizedGraph::chips(const Divisor& D) const {
    Chips c(n, 0);
    for (const auto& [p, k] : D.chips) c[vertex_of(p)] += k;
    return c;
}

Divisor DiscretizedGraph::divisor(const Chips& c) const {
    Divisor D;
    for (int v = 0; v < n; ++v) {
        if (c[v] == 0) continue;
        if (origin[v].edge == -2) throw Error(ErrorCode::BadDivisor, "chips on a virtual genus cycle");
        D.add(origin[v], c[v]);
    }
    return D;
}

constexpr long kMaxDiscretizedVertices = 2000000;

DiscretizedGraph discretize(const MetricGraph& G, const std::vector<GraphPoint>& points, int refine) {
    validate(G);
    DiscretizedGraph X;
    X.source = G;
    Z s = 1;
    for (const auto& e : G.edges) s = lcm_den(s, e.len);
    for (const auto& p : points) {
        if (!p.is_vertex()) s = lcm_den(s, p.offset);
    }
    s *= std::max(refine, 1);
    for (;;) {
        bool ok = true;
        for (const auto& e : G.edges) {
            if (e.u == e.v && e.len * Q(s) < 2) ok = false;
        }
        if (ok) break;
        s *= 2;
    }
    Q total = 0;
    for (const auto& e : G.edges) total += e.len * Q(s);
    if (total > kMaxDiscretizedVertices) {
        throw Error(ErrorCode::BadInput, "discretization needs " + to_string(total) + " vertices (limit " +
                                             std::to_string(kMaxDiscretizedVertices) + ")");
    }
    X.scale = s;
    X.n = G.num_vertices();
    X.adj.assign(X.n, {});
    for (int v = 0; v < X.n; ++v) X.origin.push_back(GraphPoint::at_vertex(v));
    auto link = [&](int a, int b) {
        X.adj[a].push_back(b);
        X.adj[b].push_back(a);
    };
    for (int ei = 0; ei < G.num_edges(); ++ei) {
        const auto& e = G.edges[ei];
        Q Lq = e.len * Q(s);
        long L = Lq.get_num().get_si();
        std::vector<int> path{e.u};
        for (long i = 1; i < L; ++i) {
            int w = X.n++;
            X.adj.push_back({});
            Q off(static_cast<long>(i));
            off /= Q(s);
            X.origin.push_back(GraphPoint::on_edge(ei, off));
            link(path.back(), w);
            path.push_back(w);
        }
        link(path.back(), e.v);
        path.push_back(e.v);
        X.edge_points.push_back(path);
    }
    for (int v = 0; v < G.num_vertices(); ++v) {
        for (int h = 0; h < G.vertex_genus[v]; ++h) {
            int w = X.n++;
            X.adj.push_back({});
            X.origin.push_back(GraphPoint{-1, -2, 0});
            link(v, w);
            link(v, w);
        }
    }
    return X;
}

Divisor canonical_divisor(const MetricGraph& G) {
    std::vector<long> val(G.num_vertices(), 0);
    for (const auto& e : G.edges) {
        val[e.u]++;
        val[e.v]++;
    }
    Divisor K;
    for (int v = 0; v < G.num_vertices(); ++v) K.add(GraphPoint::at_vertex(v), val[v] + 2 * G.vertex_genus[v] - 2);
    return K;
}

std::vector<int> dhar_burn(const DiscretizedGraph& X, const Chips& c, int q) {
    std::vector<char> burnt(X.n, 0);
    std::vector<long> hits(X.n, 0);
    std::deque<int> queue{q};
    burnt[q] = 1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int w : X.adj[x]) {
            if (burnt[w]) continue;
            if (c[w] < ++hits[w]) {
                burnt[w] = 1;
                queue.push_back(w);
            }
        }
    }
    std::vector<int> unburnt;
    for (int v = 0; v < X.n; ++v) {
        if (!burnt[v]) unburnt.push_back(v);
    }
    return unburnt;
}

Chips q_reduced(const DiscretizedGraph& X, Chips c, int q) {
    std::vector<int> dist(X.n, -1);
    std::deque<int> queue{q};
    dist[q] = 0;
    int maxd = 0;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int w : X.adj[x]) {
            if (dist[w] < 0) {
                dist[w] = dist[x] + 1;
                maxd = std::max(maxd, dist[w]);
                queue.push_back(w);
            }
        }
    }
    // Firing the ball {dist < j} pays every vertex at distance j and charges only distance j-1.
    for (int j = maxd; j >= 1; --j) {
        long times = 0;
        for (int v = 0; v < X.n; ++v) {
            if (dist[v] != j || c[v] >= 0) continue;
            long inward = 0;
            for (int w : X.adj[v]) inward += dist[w] == j - 1;
            times = std::max(times, (-c[v] + inward - 1) / inward);
        }
        if (times == 0) continue;
        for (int v = 0; v < X.n; ++v) {
            if (dist[v] == j) {
                for (int w : X.adj[v]) {
                    if (dist[w] == j - 1) {
                        c[v] += times;
                        c[w] -= times;
                    }
                }
            }
        }
    }
    for (;;) {
        std::vector<int> U = dhar_burn(X, c, q);
        if (U.empty()) break;
        std::vector<char> inU(X.n, 0);
        for (int v : U) inU[v] = 1;
        long times = -1;
        for (int v : U) {
            long out = 0;
            for (int w : X.adj[v]) out += !inU[w];
            if (out > 0) {
                long t = c[v] / out;
                times = times < 0 ? t : std::min(times, t);
            }
        }
        if (times <= 0) times = 1;
        for (int v : U) {
            for (int w : X.adj[v]) {
                if (!inU[w]) {
                    c[v] -= times;
                    c[w] += times;
                }
            }
        }
    }
    return c;
}

bool equivalent_to_effective(const DiscretizedGraph& X, const Chips& c) { return q_reduced(X, c, 0)[0] >= 0; }

namespace {

uint64_t mod_u64(const Z& z, uint64_t m) {
    Z r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), m);
    return r.get_ui();
}

}  // namespace

PicardGroup::PicardGroup(const DiscretizedGraph& X) : X_(&X) {
    const int m = X.n - 1;
    std::vector<std::vector<Z>> A(m, std::vector<Z>(m, 0));
    std::vector<std::vector<Z>> U(m, std::vector<Z>(m, 0));
    for (int i = 0; i < m; ++i) {
        U[i][i] = 1;
        A[i][i] = static_cast<long>(X.adj[i + 1].size());
        for (int w : X.adj[i + 1]) {
            if (w > 0) A[i][w - 1] -= 1;
        }
    }
    for (int t = 0; t < m; ++t) {
        for (;;) {
            int pr = -1, pc = -1;
            for (int i = t; i < m; ++i) {
                for (int j = t; j < m; ++j) {
                    if (sgn(A[i][j]) == 0) continue;
                    if (pr < 0 || abs(A[i][j]) < abs(A[pr][pc])) {
                        pr = i;
                        pc = j;
                    }
                }
            }
            if (pr < 0) throw Error(ErrorCode::Disconnected, "singular reduced Laplacian");
            std::swap(A[t], A[pr]);
            std::swap(U[t], U[pr]);
            for (int i = 0; i < m; ++i) std::swap(A[i][t], A[i][pc]);
            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (sgn(A[i][t]) == 0) continue;
                Z f;
                mpz_fdiv_q(f.get_mpz_t(), A[i][t].get_mpz_t(), A[t][t].get_mpz_t());
                for (int j = t; j < m; ++j) A[i][j] -= f * A[t][j];
                for (int j = 0; j < m; ++j) U[i][j] -= f * U[t][j];
                if (sgn(A[i][t]) != 0) clean = false;
            }
            for (int j = t + 1; j < m; ++j) {
                if (sgn(A[t][j]) == 0) continue;
                Z f;
                mpz_fdiv_q(f.get_mpz_t(), A[t][j].get_mpz_t(), A[t][t].get_mpz_t());
                for (int i = t; i < m; ++i) A[i][j] -= f * A[i][t];
                if (sgn(A[t][j]) != 0) clean = false;
            }
            if (clean) break;
        }
    }
    Z total = 1;
    for (int i = 0; i < m; ++i) {
        Z d = abs(A[i][i]);
        if (d == 1) continue;
        total *= d;
        if (total > Z(50000000)) throw Error(ErrorCode::BadInput, "Jacobian too large for class enumeration");
        uint64_t dm = d.get_ui();
        mod_.push_back(dm);
        std::vector<uint64_t> row(X.n, 0);
        for (int v = 1; v < X.n; ++v) row[v] = mod_u64(U[i][v - 1], dm);
        U_.push_back(row);
    }
    order_ = total.get_ui();
    vkey_.assign(X.n, 0);
    for (int v = 0; v < X.n; ++v) {
        Chips c(X.n, 0);
        c[v] = 1;
        vkey_[v] = key(c);
    }
}

uint64_t PicardGroup::key(const Chips& c) const {
    uint64_t k = 0, base = 1;
    for (size_t i = 0; i < mod_.size(); ++i) {
        const uint64_t m = mod_[i];
        unsigned __int128 acc = 0;
        for (int v = 1; v < X_->n; ++v) {
            if (c[v] == 0) continue;
            long cv = c[v];
            uint64_t r = static_cast<uint64_t>(cv >= 0 ? cv : -cv) % m;
            if (cv < 0 && r) r = m - r;
            acc += static_cast<unsigned __int128>(r) * U_[i][v];
            acc %= m;
        }
        k += static_cast<uint64_t>(acc) * base;
        base *= m;
    }
    return k;
}

uint64_t PicardGroup::add(uint64_t a, uint64_t b) const {
    uint64_t k = 0, base = 1;
    for (uint64_t m : mod_) {
        uint64_t d = (a % m + b % m) % m;
        a /= m;
        b /= m;
        k += d * base;
        base *= m;
    }
    return k;
}

uint64_t PicardGroup::sub(uint64_t a, uint64_t b) const {
    uint64_t k = 0, base = 1;
    for (uint64_t m : mod_) {
        uint64_t d = (a % m + m - b % m) % m;
        a /= m;
        b /= m;
        k += d * base;
        base *= m;
    }
    return k;
}

const std::vector<uint8_t>& PicardGroup::effective_classes(int k) {
    if (levels_.empty()) {
        levels_.push_back(std::vector<uint8_t>(order_, 0));
        levels_[0][0] = 1;
        parent_vertex_.push_back({});
    }
    while (static_cast<int>(levels_.size()) <= k) {
        const auto& prev = levels_.back();
        std::vector<uint8_t> next(order_, 0);
        std::vector<uint32_t> parent(order_, 0);
        for (uint64_t cls = 0; cls < order_; ++cls) {
            if (!prev[cls]) continue;
            for (int v = 0; v < X_->n; ++v) {
                uint64_t nc = add(cls, vkey_[v]);
                if (!next[nc]) {
                    next[nc] = 1;
                    parent[nc] = static_cast<uint32_t>(v);
                }
            }
        }
        levels_.push_back(std::move(next));
        parent_vertex_.push_back(std::move(parent));
    }
    return levels_[k];
}

Chips PicardGroup::representative(int k, uint64_t cls) {
    effective_classes(k);
    Chips c(X_->n, 0);
    for (int j = k; j >= 1; --j) {
        int v = static_cast<int>(parent_vertex_[j][cls]);
        c[v]++;
        cls = sub(cls, vkey_[v]);
    }
    return c;
}

int rank_discrete(PicardGroup& P, const Chips& c) {
    long d = 0;
    for (long x : c) d += x;
    if (d < 0) return -1;
    const uint64_t X = P.key(c);
    P.effective_classes(static_cast<int>(d));
    for (int k = 0; k <= d; ++k) {
        const auto& low = P.effective_classes(static_cast<int>(d) - k);
        const auto& sub = P.effective_classes(k);
        for (uint64_t e = 0; e < P.order(); ++e) {
            if (sub[e] && !low[P.sub(X, e)]) return k - 1;
        }
    }
    return static_cast<int>(d);
}

int rank_discrete(const DiscretizedGraph& X, const Chips& c) {
    PicardGroup P(X);
    return rank_discrete(P, c);
}

namespace {

std::vector<GraphPoint> support(const Divisor& D) {
    std::vector<GraphPoint> pts;
    for (const auto& [p, n] : D.chips) pts.push_back(p);
    return pts;
}

}  // namespace

int rank(const MetricGraph& G, const Divisor& D) {
    DiscretizedGraph X = discretize(G, support(D));
    return rank_discrete(X, X.chips(D));
}

GonalityResult divisorial_gonality_search(const MetricGraph& G, int d, int max_refine) {
    if (d < 1) throw Error(ErrorCode::BadInput, "d must be positive");
    GonalityResult res;
    for (int r = 0, refine = 1; r <= max_refine; ++r, refine *= 2) {
        DiscretizedGraph X = discretize(G, {}, refine);
        res.resolution = X.scale;
        PicardGroup P(X);
        const auto& top = P.effective_classes(d);
        const auto& below = P.effective_classes(d - 1);
        for (uint64_t cls = 0; cls < P.order(); ++cls) {
            if (!top[cls]) continue;
            bool ok = true;
            for (int v = 0; v < X.n && ok; ++v) ok = below[P.sub(cls, P.vertex_key(v))];
            if (!ok) continue;
            Chips c = P.representative(d, cls);
            bool virtual_support = false;
            for (int v = 0; v < X.n; ++v) virtual_support |= c[v] != 0 && X.origin[v].edge == -2;
            if (virtual_support) continue;
            res.witness = X.divisor(c);
            return res;
        }
    }
    return res;
}

std::optional<Divisor> is_divisorially_d_gonal(const MetricGraph& G, int d) {
    return divisorial_gonality_search(G, d).witness;
}

int scrollar_delta(const MetricGraph& G, const Divisor& D) {
    if (D.degree() != 3) throw Error(ErrorCode::BadDivisor, "divisor must have degree 3");
    Divisor K = canonical_divisor(G);
    std::vector<GraphPoint> pts = support(D);
    DiscretizedGraph X = discretize(G, pts);
    PicardGroup P(X);
    Chips d = X.chips(D);
    if (rank_discrete(P, d) < 1) throw Error(ErrorCode::BadDivisor, "divisor must have rank at least 1");
    Chips k = X.chips(K);
    for (int m = 0;; ++m) {
        Chips c = k;
        for (int v = 0; v < X.n; ++v) c[v] -= m * d[v];
        if (rank_discrete(P, c) == -1) return m + 1;
    }
}

}  // namespace tropigon
