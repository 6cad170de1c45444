#include "vth/pathition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace vth {

namespace {

void validate_request(const Graph& g, const EndpointRequest& req) {
    if (req.pairs.empty()) throw std::invalid_argument("pathition: no endpoint pairs");
    std::set<int> seen;
    for (auto [x, y] : req.pairs) {
        for (int v : {x, y}) {
            if (v < 0 || v >= g.n) throw std::invalid_argument("pathition: endpoint out of range");
            if (!seen.insert(v).second)
                throw std::invalid_argument("pathition: endpoints are not distinct");
            if (req.exceptional.n == g.n && req.exceptional.contains(v))
                throw std::invalid_argument("pathition: endpoint inside the exceptional set");
        }
        if (x == y) throw std::invalid_argument("pathition: pair with equal endpoints");
    }
}

// Complete engine: dp over (visited set, active head). The pair being built
// is recoverable from the state because start vertices x_j enter the visited
// set only when their pair starts, in request order.
struct DpEngine {
    const Graph& g;
    const std::vector<std::pair<int, int>>& pairs;
    int n, ell;
    std::uint32_t full;
    std::vector<std::uint32_t> adj;      // adjacency masks
    std::vector<std::uint32_t> dp;       // head masks per visited set
    std::uint32_t xmask = 0;             // all start vertices
    std::vector<int> y_of_count;         // pair index by x-count (1-based)
    std::uint32_t endpoint_mask = 0;

    DpEngine(const Graph& g_, const std::vector<std::pair<int, int>>& pairs_)
        : g(g_), pairs(pairs_), n(g_.n), ell((int)pairs_.size()) {
        full = (n == 32) ? ~0u : ((1u << n) - 1);
        adj.resize(n);
        for (int v = 0; v < n; ++v) adj[v] = (std::uint32_t)g.adj_bits[v].mask();
        for (auto [x, y] : pairs) {
            xmask |= 1u << x;
            endpoint_mask |= (1u << x) | (1u << y);
        }
    }

    int pair_index(std::uint32_t visited) const {
        return __builtin_popcount(visited & xmask);  // 1-based
    }

    bool solve(PathSystem& out) {
        dp.assign((size_t)full + 1, 0);
        std::uint32_t start = 1u << pairs[0].first;
        dp[start] = start;
        for (std::uint32_t s = start; s <= full; ++s) {
            std::uint32_t heads = dp[s];
            if (!heads) continue;
            int j = pair_index(s);
            int yj = pairs[j - 1].second;
            std::uint32_t allowed = ~endpoint_mask | (1u << yj);
            while (heads) {
                int v = __builtin_ctz(heads);
                heads &= heads - 1;
                if (v == yj) {
                    if (j < ell) {
                        int xn = pairs[j].first;
                        dp[s | (1u << xn)] |= 1u << xn;
                    }
                    continue;
                }
                std::uint32_t ext = adj[v] & ~s & allowed;
                while (ext) {
                    int u = __builtin_ctz(ext);
                    ext &= ext - 1;
                    dp[s | (1u << u)] |= 1u << u;
                }
            }
        }
        int y_last = pairs[ell - 1].second;
        if (!(dp[full] & (1u << y_last))) return false;
        reconstruct(out);
        return true;
    }

    void reconstruct(PathSystem& out) const {
        out.paths.assign(ell, {});
        out.endpoints = pairs;
        std::uint32_t s = full;
        int v = pairs[ell - 1].second;
        int j = ell;
        while (true) {
            out.paths[j - 1].push_back(v);
            if (v == pairs[j - 1].first) {
                if (j == 1) break;
                --j;
                s &= ~(1u << v);
                v = pairs[j - 1].second;
                continue;
            }
            std::uint32_t prev_s = s & ~(1u << v);
            std::uint32_t cand = dp[prev_s] & adj[v];
            // Smallest predecessor head keeps the output deterministic.
            int u = __builtin_ctz(cand);
            s = prev_s;
            v = u;
        }
        for (auto& p : out.paths) std::reverse(p.begin(), p.end());
    }
};

// Budgeted backtracking with a component-reachability prune. Complete unless
// the node budget runs out.
struct BacktrackEngine {
    const Graph& g;
    const std::vector<std::pair<int, int>>& pairs;
    int n, ell;
    long long budget, nodes = 0;
    bool exhausted = false;
    std::vector<int> order_by;           // branch order: (degree, label)
    std::uint32_t endpoint_mask = 0, full;
    std::vector<std::uint32_t> adj;
    std::vector<int> current;            // current path stack
    PathSystem result;

    BacktrackEngine(const Graph& g_, const std::vector<std::pair<int, int>>& pairs_,
                    long long budget_)
        : g(g_), pairs(pairs_), n(g_.n), ell((int)pairs_.size()), budget(budget_) {
        full = (n == 32) ? ~0u : ((1u << n) - 1);
        adj.resize(n);
        for (int v = 0; v < n; ++v) adj[v] = (std::uint32_t)g.adj_bits[v].mask();
        for (auto [x, y] : pairs) endpoint_mask |= (1u << x) | (1u << y);
    }

    // Every component of the unvisited graph must see the head or contain a
    // usable future endpoint; otherwise it can never be covered.
    bool prune(std::uint32_t visited, int head, int j) const {
        std::uint32_t unvisited = full & ~visited;
        std::uint32_t future = 1u << pairs[j - 1].second;
        for (int t = j; t < ell; ++t)
            future |= (1u << pairs[t].first) | (1u << pairs[t].second);
        std::uint32_t remaining = unvisited;
        while (remaining) {
            int s = __builtin_ctz(remaining);
            std::uint32_t comp = 1u << s, frontier = comp;
            while (frontier) {
                int v = __builtin_ctz(frontier);
                frontier &= frontier - 1;
                std::uint32_t nb = adj[v] & unvisited & ~comp;
                comp |= nb;
                frontier |= nb;
            }
            remaining &= ~comp;
            if (!(comp & future) && !(adj[head] & comp)) return true;
        }
        return false;
    }

    bool dfs(std::uint32_t visited, int head, int j) {
        if (++nodes > budget) {
            exhausted = true;
            return false;
        }
        int yj = pairs[j - 1].second;
        if (head == yj) {
            if (j == ell) {
                if (visited != full) return false;
                result.paths.push_back(current);
                return true;
            }
            result.paths.push_back(current);
            int xn = pairs[j].first;
            current = {xn};
            if (dfs(visited | (1u << xn), xn, j + 1)) return true;
            current = result.paths.back();
            result.paths.pop_back();
            return false;
        }
        if (prune(visited, head, j)) return false;
        std::uint32_t allowed = adj[head] & ~visited & (~endpoint_mask | (1u << yj));
        std::vector<int> opts;
        while (allowed) {
            int u = __builtin_ctz(allowed);
            allowed &= allowed - 1;
            opts.push_back(u);
        }
        std::sort(opts.begin(), opts.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
            return a < b;
        });
        for (int u : opts) {
            current.push_back(u);
            if (dfs(visited | (1u << u), u, j)) return true;
            current.pop_back();
            if (exhausted) return false;
        }
        return false;
    }

    bool solve(PathSystem& out) {
        int x1 = pairs[0].first;
        current = {x1};
        result.paths.clear();
        result.endpoints = pairs;
        bool ok = dfs(1u << x1, x1, 1);
        if (ok) out = result;
        return ok;
    }
};

}  // namespace

PathitionResult pathition(const Graph& g, const EndpointRequest& req, const PathitionLimits& lim) {
    validate_request(g, req);
    PathitionResult res;
    res.verdict = PathitionVerdict::unknown;
    if (g.n <= lim.dp_limit) {
        DpEngine engine(g, req.pairs);
        PathSystem sys;
        res.note = "dp";
        if (engine.solve(sys)) {
            res.verdict = PathitionVerdict::feasible;
            res.system = std::move(sys);
        } else {
            res.verdict = PathitionVerdict::infeasible;
        }
        return res;
    }
    if (g.n <= lim.backtrack_limit) {
        BacktrackEngine engine(g, req.pairs, lim.node_budget);
        PathSystem sys;
        bool ok = engine.solve(sys);
        res.nodes_explored = engine.nodes;
        if (ok) {
            res.verdict = PathitionVerdict::feasible;
            res.system = std::move(sys);
            res.note = "backtracking";
        } else if (engine.exhausted) {
            res.verdict = PathitionVerdict::unknown;
            res.note = "backtracking: node budget exhausted";
        } else {
            res.verdict = PathitionVerdict::infeasible;
            res.note = "backtracking: search space exhausted";
        }
        return res;
    }
    res.note = "capacity: n exceeds every engine limit";
    return res;
}

PathitionResult bipathition(const Graph& g, const Bipartition& p, const EndpointRequest& req,
                            const PathitionLimits& lim) {
    validate_request(g, req);
    int in_a = 0, in_b = 0;
    for (auto [x, y] : req.pairs) {
        for (int v : {x, y}) {
            if (p.a.contains(v))
                ++in_a;
            else
                ++in_b;
        }
    }
    if (in_a != in_b) {
        PathitionResult res;
        res.verdict = PathitionVerdict::parity_violation;
        res.note = "endpoint balance " + std::to_string(in_a) + " vs " + std::to_string(in_b);
        return res;
    }
    return pathition(g, req, lim);
}

VerifyResult verify_path_system(const Graph& g, const EndpointRequest& req, const PathSystem& s,
                                bool spanning) {
    VerifyResult out;
    auto fail = [&](const std::string& r) {
        out.ok = false;
        out.reasons.push_back(r);
    };
    if (s.paths.size() != req.pairs.size()) fail("path count differs from request");
    std::vector<char> seen(g.n, 0);
    for (size_t i = 0; i < s.paths.size(); ++i) {
        const auto& p = s.paths[i];
        if (p.empty()) {
            fail("path " + std::to_string(i) + " is empty");
            continue;
        }
        if (i < req.pairs.size()) {
            if (p.front() != req.pairs[i].first || p.back() != req.pairs[i].second)
                fail("path " + std::to_string(i) + " endpoints differ from request");
        }
        for (size_t k = 0; k < p.size(); ++k) {
            int v = p[k];
            if (v < 0 || v >= g.n) {
                fail("vertex out of range");
                break;
            }
            if (seen[v]) fail("disjointness violated at vertex " + std::to_string(v));
            seen[v] = 1;
            if (k > 0 && !g.has_edge(p[k - 1], v))
                fail("non-edge " + std::to_string(p[k - 1]) + "-" + std::to_string(v));
        }
    }
    if (spanning)
        for (int v = 0; v < g.n; ++v)
            if (!seen[v]) {
                fail("coverage: vertex " + std::to_string(v) + " missed");
                break;
            }
    return out;
}

VerifyResult is_extension(const PathSystem& s, const PathSystem& s_prime) {
    VerifyResult out;
    auto fail = [&](const std::string& r) {
        out.ok = false;
        out.reasons.push_back(r);
    };
    if (s.paths.size() != s_prime.paths.size()) {
        fail("path count mismatch");
        return out;
    }
    std::set<int> seen;
    for (size_t i = 0; i < s.paths.size(); ++i) {
        const auto& p = s.paths[i];
        const auto& q = s_prime.paths[i];
        if (p.empty() || q.empty()) {
            fail("empty path at index " + std::to_string(i));
            continue;
        }
        if (p.front() != q.front() || p.back() != q.back())
            fail("endpoints differ at index " + std::to_string(i));
        std::set<int> qset(q.begin(), q.end());
        for (int v : p)
            if (!qset.count(v)) {
                fail("containment fails at index " + std::to_string(i));
                break;
            }
        for (int v : q)
            if (!seen.insert(v).second) {
                fail("extension paths are not disjoint at vertex " + std::to_string(v));
                break;
            }
    }
    return out;
}

}  // namespace vth
