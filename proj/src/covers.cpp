#include "tropigon/covers.hpp"

#include "tropigon/error.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace tropigon {

namespace {

struct Image {
    int br = 0;  // -1 at the centre of a star
    Q t;
};

Image image_of(const TropicalCover& c, int v) {
    if (c.line_target()) return {0, c.height[v]};
    return {c.branch[v], c.height[v]};
}

Q distance(const TropicalCover& c, const Image& a, const Image& b) {
    if (c.line_target() || a.br == b.br) return abs_q(a.t - b.t);
    return a.t + b.t;
}

void check_shape(const TropicalCover& c) {
    const auto& G = c.source;
    validate(G);
    if (static_cast<int>(c.height.size()) != G.num_vertices() || static_cast<int>(c.mu.size()) != G.num_edges()) {
        throw Error(ErrorCode::BadInput, "cover data does not match the source graph");
    }
    for (int m : c.mu) {
        if (m < 0) throw Error(ErrorCode::BadInput, "negative dilation");
    }
    for (const auto& l : c.legs) {
        if (l.vertex < 0 || l.vertex >= G.num_vertices() || l.mu < 0) throw Error(ErrorCode::BadInput, "bad leg");
        if (c.line_target() && (l.dir < -1 || l.dir > 1 || (l.dir == 0) != (l.mu == 0))) {
            throw Error(ErrorCode::BadInput, "leg direction inconsistent with its dilation");
        }
        if (!c.line_target() && (l.dir < -1 || l.dir >= c.num_branches || (l.dir == -1) != (l.mu == 0))) {
            throw Error(ErrorCode::BadInput, "leg branch inconsistent with its dilation");
        }
    }
    if (!c.line_target()) {
        if (static_cast<int>(c.branch.size()) != G.num_vertices() || c.num_branches < 1) {
            throw Error(ErrorCode::BadInput, "star target needs a branch per vertex");
        }
        for (int v = 0; v < G.num_vertices(); ++v) {
            int b = c.branch[v];
            if (b < -1 || b >= c.num_branches || sgn(c.height[v]) < 0 || (b == -1) != (sgn(c.height[v]) == 0)) {
                throw Error(ErrorCode::BadInput, "vertex " + std::to_string(v) + " has an invalid star position");
            }
        }
    }
}

// Lengths of the target around each branch (line: branch 0 = up, branch 1 = down, measured from the
// lowest / highest image).
struct Extent {
    Q lo, hi;
    bool lo_inf = false, hi_inf = false;
    std::vector<Q> end;
    std::vector<bool> inf;
};

Extent target_extent(const TropicalCover& c) {
    Extent ex;
    const int n = c.source.num_vertices();
    if (c.line_target()) {
        ex.lo = *std::min_element(c.height.begin(), c.height.end());
        ex.hi = *std::max_element(c.height.begin(), c.height.end());
        for (const auto& l : c.legs) {
            if (l.mu > 0 && l.dir > 0) ex.hi_inf = true;
            if (l.mu > 0 && l.dir < 0) ex.lo_inf = true;
        }
        return ex;
    }
    ex.end.assign(c.num_branches, Q(0));
    ex.inf.assign(c.num_branches, false);
    for (int v = 0; v < n; ++v) {
        if (c.branch[v] >= 0) ex.end[c.branch[v]] = std::max(ex.end[c.branch[v]], c.height[v]);
    }
    for (const auto& l : c.legs) {
        if (l.mu > 0) ex.inf[l.dir] = true;
    }
    return ex;
}

// Direction ids at the image of v: line 0 = up, 1 = down; star centre = branch; star branch point:
// outward = branch, inward = num_branches.
int direction_to(const TropicalCover& c, int v, int w) {
    if (c.line_target()) return c.height[w] > c.height[v] ? 0 : 1;
    if (c.branch[v] == -1) return c.branch[w];
    if (c.branch[w] == c.branch[v] && c.height[w] > c.height[v]) return c.branch[v];
    return c.num_branches;
}

int leg_direction(const TropicalCover& c, const CoverLeg& l) {
    if (c.line_target()) return l.dir > 0 ? 0 : 1;
    if (c.branch[l.vertex] == -1) return l.dir;
    return l.dir == c.branch[l.vertex] ? l.dir : c.num_branches;
}

std::vector<int> directions_present(const TropicalCover& c, const Extent& ex, int v, bool& interior) {
    if (c.line_target()) {
        const Q& h = c.height[v];
        bool up = ex.hi_inf || h < ex.hi;
        bool down = ex.lo_inf || h > ex.lo;
        interior = up && down;
        std::vector<int> dirs;
        if (up) dirs.push_back(0);
        if (down) dirs.push_back(1);
        return dirs;
    }
    std::vector<int> dirs;
    int b = c.branch[v];
    if (b == -1) {
        for (int k = 0; k < c.num_branches; ++k) {
            if (ex.inf[k] || sgn(ex.end[k]) > 0) dirs.push_back(k);
        }
    } else {
        dirs.push_back(c.num_branches);
        if (ex.inf[b] || c.height[v] < ex.end[b]) dirs.push_back(b);
    }
    interior = dirs.size() >= 2;
    return dirs;
}

// Total dilation over a generic target point.
int coverage(const TropicalCover& c, int br, const Q& t) {
    int total = 0;
    const auto& G = c.source;
    auto covers_point = [&](const Image& a, const Image& b) {
        if (c.line_target()) return (a.t < t && t < b.t) || (b.t < t && t < a.t);
        if (a.br == b.br) return a.br == br && ((a.t < t && t < b.t) || (b.t < t && t < a.t));
        return (a.br == br && t < a.t) || (b.br == br && t < b.t);
    };
    for (int e = 0; e < G.num_edges(); ++e) {
        if (c.mu[e] == 0) continue;
        if (covers_point(image_of(c, G.edges[e].u), image_of(c, G.edges[e].v))) total += c.mu[e];
    }
    for (const auto& l : c.legs) {
        if (l.mu == 0) continue;
        Image a = image_of(c, l.vertex);
        bool hit;
        if (c.line_target()) {
            hit = l.dir > 0 ? a.t < t : a.t > t;
        } else if (a.br == l.dir) {
            hit = br == l.dir && a.t < t;
        } else {
            hit = br == l.dir || (br == a.br && t < a.t);
        }
        if (hit) total += l.mu;
    }
    return total;
}

std::vector<std::pair<int, Q>> generic_points(const TropicalCover& c, const Extent& ex) {
    std::vector<std::pair<int, Q>> pts;
    auto sample = [&](int br, std::vector<Q> marks, bool lo_inf, bool hi_inf) {
        std::sort(marks.begin(), marks.end());
        marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
        if (lo_inf) pts.push_back({br, marks.front() - 1});
        for (size_t i = 0; i + 1 < marks.size(); ++i) pts.push_back({br, (marks[i] + marks[i + 1]) / 2});
        if (hi_inf) pts.push_back({br, marks.back() + 1});
    };
    if (c.line_target()) {
        sample(0, c.height, ex.lo_inf, ex.hi_inf);
        return pts;
    }
    for (int b = 0; b < c.num_branches; ++b) {
        std::vector<Q> marks{Q(0)};
        for (int v = 0; v < c.source.num_vertices(); ++v) {
            if (c.branch[v] == b) marks.push_back(c.height[v]);
        }
        sample(b, marks, false, ex.inf[b]);
    }
    return pts;
}

}  // namespace

RHReport verify_cover(const TropicalCover& c) {
    check_shape(c);
    const auto& G = c.source;
    const int n = G.num_vertices();

    for (int e = 0; e < G.num_edges(); ++e) {
        const auto& E = G.edges[e];
        Q dist = distance(c, image_of(c, E.u), image_of(c, E.v));
        if (c.mu[e] == 0) {
            if (E.u == E.v) throw Error(ErrorCode::ContractedLoop, "loop " + std::to_string(e) + " is contracted");
            if (sgn(dist) != 0) throw Error(ErrorCode::LengthMismatch, "contracted edge " + std::to_string(e) + " has distinct endpoint images");
        } else if (dist != c.mu[e] * E.len) {
            throw Error(ErrorCode::LengthMismatch, "edge " + std::to_string(e) + ": image length " + to_string(dist) +
                                                       " != " + std::to_string(c.mu[e]) + " * " + to_string(E.len));
        }
    }

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int e = 0; e < G.num_edges(); ++e) {
        if (c.mu[e] != 0) continue;
        int a = find(G.edges[e].u), b = find(G.edges[e].v);
        if (a == b) throw Error(ErrorCode::ContractedLoop, "contracted edges contain a cycle through edge " + std::to_string(e));
        parent[a] = b;
    }

    std::vector<bool> live(n, false);
    for (int e = 0; e < G.num_edges(); ++e) {
        if (c.mu[e] > 0) live[G.edges[e].u] = live[G.edges[e].v] = true;
    }
    for (const auto& l : c.legs) {
        if (l.mu > 0) live[l.vertex] = true;
    }
    for (int v = 0; v < n; ++v) {
        if (!live[v]) throw Error(ErrorCode::DegenerateVertex, "vertex " + std::to_string(v) + " has no non-contracted edge");
    }

    const Extent ex = target_extent(c);
    RHReport rep;
    rep.local_degree.assign(n, 0);
    rep.slack.assign(n, 0);
    std::vector<std::map<int, int>> flow(n);
    std::vector<int> excess(n, 0);  // sum over incident ends of (mu - 1)
    for (int e = 0; e < G.num_edges(); ++e) {
        const auto& E = G.edges[e];
        excess[E.u] += c.mu[e] - 1;
        excess[E.v] += c.mu[e] - 1;
        if (c.mu[e] == 0) continue;
        flow[E.u][direction_to(c, E.u, E.v)] += c.mu[e];
        flow[E.v][direction_to(c, E.v, E.u)] += c.mu[e];
    }
    for (const auto& l : c.legs) {
        excess[l.vertex] += l.mu - 1;
        if (l.mu > 0) flow[l.vertex][leg_direction(c, l)] += l.mu;
    }
    for (int v = 0; v < n; ++v) {
        bool interior = false;
        auto dirs = directions_present(c, ex, v, interior);
        int m = -1;
        for (int dir : dirs) {
            auto it = flow[v].find(dir);
            int s = it == flow[v].end() ? 0 : it->second;
            if (m == -1) {
                m = s;
            } else if (s != m) {
                throw Error(ErrorCode::NotHarmonic, "vertex " + std::to_string(v) + ": dilation sums differ between directions");
            }
        }
        for (const auto& [dir, s] : flow[v]) {
            if (std::find(dirs.begin(), dirs.end(), dir) == dirs.end()) {
                throw Error(ErrorCode::NotHarmonic, "vertex " + std::to_string(v) + " maps an edge outside the target");
            }
        }
        rep.local_degree[v] = std::max(m, 0);
        rep.slack[v] = 2 * rep.local_degree[v] - 2 - excess[v];
    }

    auto pts = generic_points(c, ex);
    if (pts.empty()) throw Error(ErrorCode::DegenerateVertex, "the cover has a point image");
    rep.degree = coverage(c, pts[0].first, pts[0].second);
    for (const auto& [br, t] : pts) {
        int k = coverage(c, br, t);
        if (k != rep.degree) {
            throw Error(ErrorCode::DegreeVaries, "degree " + std::to_string(k) + " over " + to_string(t) + " but " +
                                                     std::to_string(rep.degree) + " elsewhere");
        }
    }
    for (int v = 0; v < n; ++v) {
        if (rep.slack[v] < 0) {
            throw Error(ErrorCode::RHViolated, "vertex " + std::to_string(v) + " has slack " + std::to_string(rep.slack[v]));
        }
    }
    rep.realizable = rep.degree <= 3;
    return rep;
}

bool is_well_contracted(const TropicalCover& c) {
    try {
        verify_cover(c);
    } catch (const Error&) {
        return false;
    }
    if (c.line_target()) return true;
    std::set<int> used;
    const auto& G = c.source;
    for (int e = 0; e < G.num_edges(); ++e) {
        if (c.mu[e] == 0) continue;
        for (int v : {G.edges[e].u, G.edges[e].v}) {
            if (c.branch[v] >= 0) used.insert(c.branch[v]);
        }
    }
    for (const auto& l : c.legs) {
        if (l.mu > 0) used.insert(l.dir);
    }
    return used.size() <= 2;
}

Divisor pullback(const TropicalCover& c, const Q& t) {
    if (!c.line_target()) throw Error(ErrorCode::BadInput, "pullback needs a line target");
    const auto& G = c.source;
    for (const Q& h : c.height) {
        if (h == t) throw Error(ErrorCode::BadInput, "target point " + to_string(t) + " is the image of a vertex");
    }
    Divisor D;
    for (int e = 0; e < G.num_edges(); ++e) {
        if (c.mu[e] == 0) continue;
        const Q& a = c.height[G.edges[e].u];
        const Q& b = c.height[G.edges[e].v];
        if ((a < t && t < b) || (b < t && t < a)) D.add(GraphPoint::on_edge(e, abs_q(t - a) / c.mu[e]), c.mu[e]);
    }
    for (const auto& l : c.legs) {
        if (l.mu == 0) continue;
        const Q& h = c.height[l.vertex];
        if ((l.dir > 0 && h < t) || (l.dir < 0 && h > t)) D.add(GraphPoint::at_vertex(l.vertex), l.mu);
    }
    return D;
}

// ---------------------------------------------------------------------------------------------
// Cover search.

namespace {

// Slopes of the segments of one edge, up to what the constraints can see.
struct SlopeClass {
    int first = 0, last = 0, mn = 0, mx = 0;
    int folds = 0, cost = 0;
    std::vector<int> seq;
    std::vector<int> order_key;
    bool contracted() const { return folds == 0 && first == 0; }
};

std::vector<SlopeClass> slope_classes(int d, int budget) {
    std::vector<int> slopes{0};
    for (int s = 1; s <= d; ++s) {
        slopes.push_back(s);
        slopes.push_back(-s);
    }
    std::map<std::tuple<int, int, int, int>, SlopeClass> best;
    std::vector<int> idx;
    std::function<void(int)> rec = [&](int len) {
        if (static_cast<int>(idx.size()) == len) {
            SlopeClass c;
            for (int i : idx) c.seq.push_back(slopes[i]);
            c.order_key = idx;
            c.first = c.seq.front();
            c.last = c.seq.back();
            c.mn = *std::min_element(c.seq.begin(), c.seq.end());
            c.mx = *std::max_element(c.seq.begin(), c.seq.end());
            c.folds = len - 1;
            for (int i = 0; i + 1 < len; ++i) c.cost += std::abs(c.seq[i + 1] - c.seq[i]);
            auto key = std::make_tuple(c.first, c.last, c.mn, c.mx);
            auto it = best.find(key);
            if (it == best.end() || c.cost < it->second.cost) best[key] = c;
            return;
        }
        for (int i = 0; i < static_cast<int>(slopes.size()); ++i) {
            if (!idx.empty() && idx.back() == i) continue;
            idx.push_back(i);
            rec(len);
            idx.pop_back();
        }
    };
    for (int len = 1; len <= budget + 1; ++len) rec(len);
    std::vector<SlopeClass> out;
    for (auto& [k, c] : best) out.push_back(c);
    std::sort(out.begin(), out.end(), [](const SlopeClass& a, const SlopeClass& b) {
        return std::tie(a.folds, a.order_key) < std::tie(b.folds, b.order_key);
    });
    return out;
}

// Values a + b*eps for an infinitesimal eps > 0.
struct Eps {
    long long a = 0, b = 0;
    Eps operator+(const Eps& o) const { return {a + o.a, b + o.b}; }
    bool operator<(const Eps& o) const { return a != o.a ? a < o.a : b < o.b; }
};

struct Constraint {
    int from, to;  // H_to - H_from <= w
    Eps w;
};

// Union-find with undo, for backtracking.
class RollbackDsu {
public:
    explicit RollbackDsu(int n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            hist_.push_back(-1);
            return false;
        }
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        hist_.push_back(b);
        return true;
    }
    void undo() {
        int b = hist_.back();
        hist_.pop_back();
        if (b < 0) return;
        int a = parent_[b];
        size_[a] -= size_[b];
        parent_[b] = b;
    }

private:
    std::vector<int> parent_, size_, hist_;
};

class CoverSearch {
public:
    CoverSearch(const MetricGraph& G, int d, int budget)
        : G_(G), d_(d), classes_(slope_classes(d, budget)), all_(G.num_vertices()), zero_(G.num_vertices()) {
        n_ = G.num_vertices();
        Z scale = 1;
        for (const auto& e : G.edges) scale = lcm_den(scale, e.len);
        scale_ = scale;
        for (const auto& e : G.edges) {
            Q s = e.len * Q(scale);
            if (!s.get_num().fits_slong_p() || abs(s.get_num()) > Z(1L << 40)) {
                throw Error(ErrorCode::BadInput, "edge lengths need too large a common denominator");
            }
            L_.push_back(s.get_num().get_si());
        }
        build_order();
        assign_.assign(G.num_edges(), -1);
        net_.assign(n_, 0);
        rem_.assign(n_, 0);
        nz_.assign(n_, 0);
        for (const auto& e : G.edges) {
            ++rem_[e.u];
            ++rem_[e.v];
        }
    }

    // Fewest fold points; ties go to the first assignment in search order.
    bool run() {
        dfs(0);
        return best_folds_ != std::numeric_limits<int>::max();
    }
    long nodes() const { return nodes_; }
    const SlopeClass& cls(int e) const { return classes_[best_[e]]; }
    const std::vector<Eps>& potentials() const { return pot_; }
    const std::vector<long long>& scaled_lengths() const { return L_; }
    const Z& scale() const { return scale_; }

private:
    void build_order() {
        std::vector<int> pos(n_, -1), queue{0};
        pos[0] = 0;
        auto inc = G_.incident_edges();
        for (size_t i = 0; i < queue.size(); ++i) {
            for (int e : inc[queue[i]]) {
                for (int w : {G_.edges[e].u, G_.edges[e].v}) {
                    if (pos[w] < 0) {
                        pos[w] = static_cast<int>(queue.size());
                        queue.push_back(w);
                    }
                }
            }
        }
        for (int e = 0; e < G_.num_edges(); ++e) order_.push_back(e);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            const auto &A = G_.edges[a], &B = G_.edges[b];
            auto key = [&](const GraphEdge& E) {
                return std::make_tuple(E.u == E.v ? 0 : 1, std::max(pos[E.u], pos[E.v]), std::min(pos[E.u], pos[E.v]));
            };
            return key(A) < key(B);
        });
    }

    int bound() const {
        int total = cost_;
        for (int v = 0; v < n_; ++v) total += std::max(0, std::abs(net_[v]) - rem_[v] * d_);
        return total;
    }

    bool feasible(std::vector<Eps>* out = nullptr) const {
        std::vector<Eps> dist(n_);
        for (int it = 0; it <= n_; ++it) {
            bool changed = false;
            for (const auto& c : cons_) {
                Eps cand = dist[c.from] + c.w;
                if (cand < dist[c.to]) {
                    dist[c.to] = cand;
                    changed = true;
                }
            }
            if (!changed) {
                if (out) *out = dist;
                return true;
            }
        }
        return false;
    }

    void dfs(int i) {
        ++nodes_;
        if (i == static_cast<int>(order_.size())) {
            std::vector<Eps> pot;
            if (feasible(&pot)) {
                best_folds_ = folds_;
                best_ = assign_;
                pot_ = pot;
            }
            return;
        }
        const int e = order_[i];
        const auto& E = G_.edges[e];
        const bool loop = E.u == E.v;
        auto excess = [&](int v, int dnet, int drem) {
            return std::max(0, std::abs(net_[v] + dnet) - (rem_[v] - drem) * d_);
        };
        const int base = bound() - excess(E.u, 0, 0) - (loop ? 0 : excess(E.v, 0, 0));
        for (int k = 0; k < static_cast<int>(classes_.size()); ++k) {
            const auto& c = classes_[k];
            if (folds_ + c.folds >= best_folds_) continue;
            if (loop && !(c.folds > 0 && c.mn < 0 && c.mx > 0)) continue;
            if (!oriented_ && !c.contracted()) {
                if (std::make_tuple(c.first, c.mx + c.mn, c.last) < std::make_tuple(0, 0, 0)) continue;
            }
            int next_bound = base + c.cost +
                             (loop ? excess(E.u, c.first - c.last, 2) : excess(E.u, c.first, 1) + excess(E.v, -c.last, 1));
            if (next_bound > 2 * d_) continue;
            assign_[e] = k;
            net_[E.u] += c.first;
            net_[E.v] -= c.last;
            --rem_[E.u];
            --rem_[E.v];
            if (c.first != 0) ++nz_[E.u];
            if (c.last != 0) ++nz_[E.v];
            cost_ += c.cost;
            folds_ += c.folds;
            bool was_oriented = oriented_;
            if (!c.contracted()) oriented_ = true;
            bool closes = !all_.unite(E.u, E.v);
            bool zero_cycle = c.contracted() && !zero_.unite(E.u, E.v);
            if (!c.contracted()) zero_.unite(E.u, E.u);
            size_t ncons = cons_.size();
            if (!loop) {
                long long L = L_[e];
                if (c.folds == 0) {
                    cons_.push_back({E.u, E.v, {c.first * L, 0}});
                    cons_.push_back({E.v, E.u, {-c.first * L, 0}});
                } else {
                    cons_.push_back({E.u, E.v, {c.mx * L, -1}});
                    cons_.push_back({E.v, E.u, {-c.mn * L, -1}});
                }
            }

            bool ok = !zero_cycle;
            if (ok && ((rem_[E.u] == 0 && nz_[E.u] == 0) || (rem_[E.v] == 0 && nz_[E.v] == 0))) ok = false;
            if (ok && !loop && closes && !feasible()) ok = false;
            if (ok) dfs(i + 1);

            cons_.resize(ncons);
            zero_.undo();
            all_.undo();
            oriented_ = was_oriented;
            folds_ -= c.folds;
            cost_ -= c.cost;
            if (c.first != 0) --nz_[E.u];
            if (c.last != 0) --nz_[E.v];
            ++rem_[E.u];
            ++rem_[E.v];
            net_[E.u] -= c.first;
            net_[E.v] += c.last;
            assign_[e] = -1;
        }
    }

    const MetricGraph& G_;
    int d_;
    int n_ = 0;
    std::vector<SlopeClass> classes_;
    std::vector<long long> L_;
    Z scale_;
    std::vector<int> order_;
    std::vector<int> assign_, net_, rem_, nz_;
    int cost_ = 0, folds_ = 0;
    bool oriented_ = false;
    RollbackDsu all_, zero_;
    std::vector<Constraint> cons_;
    long nodes_ = 0;
    int best_folds_ = std::numeric_limits<int>::max();
    std::vector<int> best_;
    std::vector<Eps> pot_;
};

// Segment lengths (in scaled units) with the given slopes, total L and total rise R.
std::vector<Q> fold_lengths(const std::vector<int>& seq, const Q& L, const Q& R) {
    const int k = static_cast<int>(seq.size());
    if (k == 1) return {L};
    int mn = *std::min_element(seq.begin(), seq.end());
    int mx = *std::max_element(seq.begin(), seq.end());
    int ia = static_cast<int>(std::find(seq.begin(), seq.end(), mn) - seq.begin());
    int ib = static_cast<int>(std::find(seq.begin(), seq.end(), mx) - seq.begin());
    Q delta = L / (4 * k);
    for (;;) {
        std::vector<Q> len(k, delta);
        Q Lp = L - (k - 2) * delta;
        Q Rp = R;
        for (int i = 0; i < k; ++i) {
            if (i != ia && i != ib) Rp -= seq[i] * delta;
        }
        len[ib] = (Rp - mn * Lp) / (mx - mn);
        len[ia] = Lp - len[ib];
        if (sgn(len[ia]) > 0 && sgn(len[ib]) > 0) return len;
        delta /= 4;
    }
}

}  // namespace

CoverSearchResult search_well_contracted_cover(const MetricGraph& G, int d, int budget) {
    validate(G);
    if (d < 1 || budget < 0) throw Error(ErrorCode::BadInput, "degree must be positive and budget non-negative");
    for (int g : G.vertex_genus) {
        if (g != 0) throw Error(ErrorCode::BadInput, "cover search needs a graph without vertex genus");
    }
    if (!G.connected()) throw Error(ErrorCode::Disconnected, "graph is not connected");

    CoverSearchResult res;
    res.degree = d;
    res.budget = budget;
    CoverSearch S(G, d, budget);
    bool found = S.run();
    res.nodes = S.nodes();
    if (!found) return res;

    const auto& L = S.scaled_lengths();
    const Q scale(S.scale());
    const auto& pot = S.potentials();

    // Pick a concrete epsilon satisfying every strict inequality.
    std::vector<Q> H(G.num_vertices());
    Q eps = 1;
    for (;;) {
        for (int v = 0; v < G.num_vertices(); ++v) H[v] = qi(pot[v].a) + qi(pot[v].b) * eps;
        bool ok = true;
        for (int e = 0; e < G.num_edges() && ok; ++e) {
            const auto& E = G.edges[e];
            const auto& c = S.cls(e);
            if (E.u == E.v) continue;
            Q rise = H[E.v] - H[E.u];
            if (c.folds == 0) {
                ok = rise == qi(c.first * L[e]);
            } else {
                ok = qi(c.mn * L[e]) < rise && rise < qi(c.mx * L[e]);
            }
        }
        if (ok) break;
        eps /= 2;
    }

    TropicalCover cov;
    auto& src = cov.source;
    for (int v = 0; v < G.num_vertices(); ++v) {
        src.add_vertex();
        cov.height.push_back(H[v] / scale);
    }
    res.slopes.resize(G.num_edges());
    std::vector<int> net(G.num_vertices(), 0);
    for (int e = 0; e < G.num_edges(); ++e) {
        const auto& E = G.edges[e];
        const auto& c = S.cls(e);
        res.slopes[e] = c.seq;
        Q rise = E.u == E.v ? Q(0) : Q(H[E.v] - H[E.u]);
        auto lens = fold_lengths(c.seq, qi(L[e]), rise);
        int prev = E.u;
        Q h = H[E.u];
        for (size_t i = 0; i < lens.size(); ++i) {
            h += c.seq[i] * lens[i];
            int next = E.v;
            if (i + 1 < lens.size()) {
                next = src.add_vertex();
                cov.height.push_back(h / scale);
                net.push_back(0);
            }
            src.add_edge(prev, next, lens[i] / scale);
            cov.mu.push_back(std::abs(c.seq[i]));
            res.edge_of_segment.push_back(e);
            net[prev] += c.seq[i];
            net[next] -= c.seq[i];
            prev = next;
        }
    }
    int total = 0;
    for (int v = 0; v < src.num_vertices(); ++v) {
        for (int k = 0; k < std::abs(net[v]); ++k) cov.legs.push_back({v, 1, net[v] > 0 ? -1 : 1});
        total += std::abs(net[v]);
    }
    for (int k = 0; k < d - total / 2; ++k) {
        cov.legs.push_back({0, 1, 1});
        cov.legs.push_back({0, 1, -1});
    }
    RHReport rep = verify_cover(cov);
    if (rep.degree != d || !is_well_contracted(cov)) {
        throw std::logic_error("cover search produced an invalid cover");
    }
    res.cover = std::move(cov);
    return res;
}

// ---------------------------------------------------------------------------------------------
// Forbidden patterns.

namespace {

struct Piece {
    int genus = 0;
    std::vector<int> attach;  // number of edges to each removed vertex
};

// Components of G minus the given vertices, with genus and attaching edge counts.
std::vector<Piece> pieces_without(const MetricGraph& G, const std::vector<int>& removed) {
    const int n = G.num_vertices();
    std::vector<int> comp(n, -1), parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto gone = [&](int v) { return std::find(removed.begin(), removed.end(), v) != removed.end(); };
    for (const auto& e : G.edges) {
        if (!gone(e.u) && !gone(e.v)) parent[find(e.u)] = find(e.v);
    }
    std::map<int, int> index;
    std::vector<Piece> out;
    std::vector<int> verts, edges;
    for (int v = 0; v < n; ++v) {
        if (gone(v)) continue;
        int r = find(v);
        if (!index.count(r)) {
            index[r] = static_cast<int>(out.size());
            out.push_back(Piece{0, std::vector<int>(removed.size(), 0)});
            verts.push_back(0);
            edges.push_back(0);
        }
        comp[v] = index[r];
        ++verts[comp[v]];
        out[comp[v]].genus += G.vertex_genus[v];
    }
    for (const auto& e : G.edges) {
        bool gu = gone(e.u), gv = gone(e.v);
        if (!gu && !gv) {
            ++edges[comp[e.u]];
        } else if (gu != gv) {
            int inside = gu ? e.v : e.u;
            int outside = gu ? e.u : e.v;
            int r = static_cast<int>(std::find(removed.begin(), removed.end(), outside) - removed.begin());
            ++out[comp[inside]].attach[r];
        }
    }
    for (size_t i = 0; i < out.size(); ++i) out[i].genus += edges[i] - verts[i] + 1;
    return out;
}

bool trivalent_simple(const MetricGraph& G, int v) {
    if (G.valence(v) != 3 || G.vertex_genus[v] != 0) return false;
    for (const auto& e : G.edges) {
        if (e.u == v && e.v == v) return false;
    }
    return true;
}

}  // namespace

std::vector<int> detect_sprawling_node(const MetricGraph& G) {
    std::vector<int> out;
    for (int v = 0; v < G.num_vertices(); ++v) {
        if (!trivalent_simple(G, v)) continue;
        auto P = pieces_without(G, {v});
        if (P.size() != 3) continue;
        bool ok = true;
        for (const auto& p : P) ok = ok && p.genus > 0 && p.attach[0] == 1;
        if (ok) out.push_back(v);
    }
    return out;
}

std::vector<std::pair<int, int>> detect_crowded_graph(const MetricGraph& G) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < G.num_vertices(); ++a) {
        if (!trivalent_simple(G, a)) continue;
        for (int b = a + 1; b < G.num_vertices(); ++b) {
            if (!trivalent_simple(G, b)) continue;
            auto P = pieces_without(G, {a, b});
            if (P.size() != 3) continue;
            bool ok = true;
            for (const auto& p : P) ok = ok && p.genus > 0 && p.attach[0] == 1 && p.attach[1] == 1;
            if (ok) out.push_back({a, b});
        }
    }
    return out;
}

std::vector<std::pair<int, int>> detect_tie_fighter(const MetricGraph& G) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < G.num_vertices(); ++a) {
        if (!trivalent_simple(G, a)) continue;
        for (int b = a + 1; b < G.num_vertices(); ++b) {
            if (!trivalent_simple(G, b)) continue;
            auto P = pieces_without(G, {a, b});
            if (P.size() != 4) continue;
            int middle = 0, left = 0, right = 0;
            bool ok = true;
            for (const auto& p : P) {
                ok = ok && p.genus > 0;
                if (p.attach[0] == 1 && p.attach[1] == 1) {
                    ++middle;
                } else if (p.attach[0] == 1 && p.attach[1] == 0) {
                    ++left;
                } else if (p.attach[0] == 0 && p.attach[1] == 1) {
                    ++right;
                } else {
                    ok = false;
                }
            }
            if (ok && middle == 2 && left == 1 && right == 1) out.push_back({a, b});
        }
    }
    return out;
}

}  // namespace tropigon
