#pragma once

// Independent reference computations used to cross-check the library.

#include "tropigon/divisor.hpp"
#include "tropigon/lattice.hpp"
#include "tropigon/metric_graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using namespace tropigon;

// Connected component of the flip graph containing T; in the plane this is every triangulation
// using all lattice points, i.e. every unimodular one.
inline std::set<std::vector<Triangle>> flip_closure(const Triangulation& T) {
    std::set<std::vector<Triangle>> seen{T.triangles};
    std::deque<std::vector<Triangle>> todo{T.triangles};
    while (!todo.empty()) {
        auto cur = std::move(todo.front());
        todo.pop_front();
        std::map<std::pair<LatticePoint, LatticePoint>, std::vector<int>> by_edge;
        for (int i = 0; i < static_cast<int>(cur.size()); ++i) {
            const auto& t = cur[i];
            for (int k = 0; k < 3; ++k) {
                LatticePoint a = t[k], b = t[(k + 1) % 3];
                by_edge[{std::min(a, b), std::max(a, b)}].push_back(i);
            }
        }
        for (const auto& [e, ts] : by_edge) {
            if (ts.size() != 2) continue;
            auto apex = [&](const Triangle& t) {
                for (const auto& p : t) {
                    if (p != e.first && p != e.second) return p;
                }
                return t[0];
            };
            LatticePoint c = apex(cur[ts[0]]), d = apex(cur[ts[1]]);
            long long sa = cross3(c, d, e.first), sb = cross3(c, d, e.second);
            if (!((sa > 0 && sb < 0) || (sa < 0 && sb > 0))) continue;
            std::vector<Triangle> next;
            for (int i = 0; i < static_cast<int>(cur.size()); ++i) {
                if (i != ts[0] && i != ts[1]) next.push_back(cur[i]);
            }
            next.push_back(make_triangle(c, d, e.first));
            next.push_back(make_triangle(c, d, e.second));
            std::sort(next.begin(), next.end());
            if (seen.insert(next).second) todo.push_back(std::move(next));
        }
    }
    return seen;
}

// Solves A x = b exactly; empty when A is singular.
inline std::vector<Q> solve(std::vector<std::vector<Q>> A, std::vector<Q> b) {
    const size_t n = A.size();
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && A[p][c] == 0) ++p;
        if (p == n) return {};
        std::swap(A[p], A[c]);
        std::swap(b[p], b[c]);
        for (size_t r = 0; r < n; ++r) {
            if (r == c || A[r][c] == 0) continue;
            Q f = A[r][c] / A[c][c];
            for (size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
            b[r] -= f * b[c];
        }
    }
    for (size_t i = 0; i < n; ++i) b[i] /= A[i][i];
    return b;
}

// Whether c is the divisor of an integer-valued function: c = -L f with f integral.
inline bool principal(const DiscretizedGraph& X, const std::vector<long>& c) {
    const int n = X.n;
    if (std::accumulate(c.begin(), c.end(), 0L) != 0) return false;
    if (n == 1) return true;
    std::vector<std::vector<Q>> L(n - 1, std::vector<Q>(n - 1, Q(0)));
    std::vector<Q> b(n - 1);
    for (int v = 1; v < n; ++v) {
        for (int w : X.adj[v]) {
            if (w == v) continue;
            L[v - 1][v - 1] += 1;
            if (w != 0) L[v - 1][w - 1] -= 1;
        }
        b[v - 1] = Q(c[v]);
    }
    auto f = solve(L, b);
    if (f.empty()) return false;
    return std::all_of(f.begin(), f.end(), [](const Q& q) { return q.get_den() == 1; });
}

inline void effective_of_degree(int n, int d, const std::function<void(const std::vector<long>&)>& sink) {
    std::vector<long> e(n, 0);
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == n - 1) {
            e[v] = left;
            sink(e);
            e[v] = 0;
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[v] = k;
            rec(v + 1, left - k);
        }
        e[v] = 0;
    };
    if (n > 0) rec(0, d);
}

// Rank from the complete linear system: r(D) >= k iff every effective E of degree k lies below some
// effective divisor equivalent to D.
inline int rank(const DiscretizedGraph& X, const std::vector<long>& D) {
    const long deg = std::accumulate(D.begin(), D.end(), 0L);
    if (deg < 0) return -1;
    std::vector<std::vector<long>> system;
    effective_of_degree(X.n, static_cast<int>(deg), [&](const std::vector<long>& F) {
        std::vector<long> diff(X.n);
        for (int v = 0; v < X.n; ++v) diff[v] = D[v] - F[v];
        if (principal(X, diff)) system.push_back(F);
    });
    if (system.empty()) return -1;
    int r = 0;
    for (;; ++r) {
        if (r + 1 > deg) return r;
        bool all = true;
        effective_of_degree(X.n, r + 1, [&](const std::vector<long>& E) {
            if (!all) return;
            bool below = false;
            for (const auto& F : system) {
                bool le = true;
                for (int v = 0; v < X.n && le; ++v) le = E[v] <= F[v];
                if (le) {
                    below = true;
                    break;
                }
            }
            all = below;
        });
        if (!all) return r;
    }
}

// Number of (vertex permutation, edge bijection) pairs preserving G.
inline long automorphism_count(const MetricGraph& G) {
    const int n = G.num_vertices();
    std::map<std::pair<int, int>, int> mult;
    for (const auto& e : G.edges) mult[{std::min(e.u, e.v), std::max(e.u, e.v)}]++;
    long per_perm = 1;
    for (const auto& [k, m] : mult) {
        for (int i = 2; i <= m; ++i) per_perm *= i;
    }
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    long count = 0;
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) ok = G.vertex_genus[v] == G.vertex_genus[p[v]];
        for (auto it = mult.begin(); it != mult.end() && ok; ++it) {
            int a = p[it->first.first], b = p[it->first.second];
            auto jt = mult.find({std::min(a, b), std::max(a, b)});
            ok = jt != mult.end() && jt->second == it->second;
        }
        if (ok) count += per_perm;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

}  // namespace oracle
