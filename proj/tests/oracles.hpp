// Test-only brute-force oracles, kept independent of the library's
// implementation paths on purpose.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "vth/graph.hpp"

namespace oracle {

// Doubled maximum fractional matching weight: optimal half-integral
// solutions decompose into an integral matching plus vertex-disjoint odd
// cycles carrying weight 1/2, so we enumerate exactly those shapes.
inline long long nu_star_doubled(const vth::Graph& g) {
    std::map<std::uint64_t, long long> memo;
    auto rec = [&](auto&& self, std::uint64_t alive) -> long long {
        if (!alive) return 0;
        auto it = memo.find(alive);
        if (it != memo.end()) return it->second;
        int v = __builtin_ctzll(alive);
        // v unused
        long long best = self(self, alive & ~(1ull << v));
        // v matched integrally
        for (int u : g.adj[v])
            if (alive >> u & 1)
                best = std::max(best, 2 + self(self, alive & ~(1ull << v) & ~(1ull << u)));
        // v on an odd cycle of half-edges: enumerate simple cycles through v
        std::vector<int> path{v};
        std::uint64_t on_path = 1ull << v;
        auto cycles = [&](auto&& cself) -> void {
            int cur = path.back();
            for (int u : g.adj[cur]) {
                if (!(alive >> u & 1)) continue;
                if (u == v && path.size() >= 3 && path.size() % 2 == 1) {
                    std::uint64_t rest = alive & ~on_path;
                    best = std::max(best, (long long)path.size() + self(self, rest));
                }
                if (on_path >> u & 1) continue;
                if (u < v) continue;  // canonical: cycle minimum is v
                path.push_back(u);
                on_path |= 1ull << u;
                cself(cself);
                on_path &= ~(1ull << u);
                path.pop_back();
            }
        };
        cycles(cycles);
        memo[alive] = best;
        return best;
    };
    std::uint64_t all = (g.n >= 64) ? ~0ull : ((1ull << g.n) - 1);
    return rec(rec, all);
}

// Spanning disjoint-path feasibility by scanning all vertex permutations:
// a permutation spells a valid system when it reads as consecutive segments
// x_1 .. y_1 x_2 .. y_2 ... with adjacent consecutive vertices.
inline bool pathition_by_permutations(const vth::Graph& g,
                                      const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<int> endpoint_set;
    for (auto [x, y] : pairs) {
        endpoint_set.insert(x);
        endpoint_set.insert(y);
    }
    do {
        size_t seg = 0;
        size_t pos = 0;
        bool ok = true;
        while (ok && seg < pairs.size()) {
            if (perm[pos] != pairs[seg].first) {
                ok = false;
                break;
            }
            while (pos + 1 < perm.size() && perm[pos] != pairs[seg].second) {
                int nxt = perm[pos + 1];
                // interior vertices must not be endpoints of other pairs
                if (nxt != pairs[seg].second && endpoint_set.count(nxt)) {
                    ok = false;
                    break;
                }
                if (!g.has_edge(perm[pos], nxt)) {
                    ok = false;
                    break;
                }
                ++pos;
            }
            if (!ok) break;
            if (perm[pos] != pairs[seg].second) {
                ok = false;
                break;
            }
            ++seg;
            ++pos;
        }
        if (ok && seg == pairs.size() && pos == perm.size()) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Recursive Hamilton cycle search; structured differently from the library's
// subset DP on purpose.
inline bool hamilton_cycle_exists(const vth::Graph& g) {
    if (g.n < 3) return false;
    std::vector<int> path{0};
    std::vector<char> used(g.n, 0);
    used[0] = 1;
    auto rec = [&](auto&& self) -> bool {
        if ((int)path.size() == g.n) return g.has_edge(path.back(), 0);
        for (int u : g.adj[path.back()]) {
            if (used[u]) continue;
            used[u] = 1;
            path.push_back(u);
            if (self(self)) return true;
            path.pop_back();
            used[u] = 0;
        }
        return false;
    };
    return rec(rec);
}

inline bool hamilton_path_exists(const vth::Graph& g, int x, int y) {
    std::vector<int> path{x};
    std::vector<char> used(g.n, 0);
    used[x] = 1;
    auto rec = [&](auto&& self) -> bool {
        if ((int)path.size() == g.n) return path.back() == y;
        for (int u : g.adj[path.back()]) {
            if (used[u] || (u == y && (int)path.size() + 1 < g.n)) continue;
            used[u] = 1;
            path.push_back(u);
            if (self(self)) return true;
            path.pop_back();
            used[u] = 0;
        }
        return false;
    };
    return rec(rec);
}

inline bool hamilton_connected(const vth::Graph& g) {
    for (int x = 0; x < g.n; ++x)
        for (int y = x + 1; y < g.n; ++y)
            if (!hamilton_path_exists(g, x, y)) return false;
    return true;
}

// Literal transcription of the three shifted-digraph arc families, used as
// the independent route for the arc-set comparison.
inline std::set<std::pair<int, int>> shifted_arcs_literal(
    const vth::Graph& r2, const std::vector<std::pair<int, int>>& matching) {
    std::vector<int> side(r2.n, -1), pair_id(r2.n, -1);  // side 0 = A, 1 = B
    for (size_t i = 0; i < matching.size(); ++i) {
        side[matching[i].first] = 0;
        side[matching[i].second] = 1;
        pair_id[matching[i].first] = (int)i;
        pair_id[matching[i].second] = (int)i;
    }
    auto A = [&](int i) { return matching[i].first; };
    auto B = [&](int i) { return matching[i].second; };
    std::set<std::pair<int, int>> arcs;
    for (auto [u, v] : r2.edges) {
        int i, j;
        if (side[u] == 0 && side[v] == 0) {  // A_i A_j
            i = pair_id[u];
            j = pair_id[v];
            arcs.insert({B(j), A(i)});
            arcs.insert({B(i), A(j)});
        } else if (side[u] == 1 && side[v] == 1) {  // B_i B_j
            i = pair_id[u];
            j = pair_id[v];
            arcs.insert({A(j), B(i)});
            arcs.insert({A(i), B(j)});
        } else {  // one A, one B
            int au = side[u] == 0 ? u : v;
            int bv = side[u] == 0 ? v : u;
            i = pair_id[au];
            j = pair_id[bv];
            if (i != j) {
                arcs.insert({A(j), A(i)});
                arcs.insert({B(i), B(j)});
            }
        }
    }
    return arcs;
}

inline vth::Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::uniform_real_distribution<double>(0, 1)(rng) < p) edges.emplace_back(u, v);
    return vth::Graph(n, std::move(edges));
}

inline vth::Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
    for (int tries = 0; tries < 1000; ++tries) {
        auto g = random_graph(rng, n, p);
        if (g.connected()) return g;
    }
    // Fall back to a path plus random edges.
    std::set<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace(v, v + 1);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::uniform_real_distribution<double>(0, 1)(rng) < p)
                edges.emplace(u, v);
    return vth::Graph(n, {edges.begin(), edges.end()});
}

}  // namespace oracle
