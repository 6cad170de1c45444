#include "vth/robustness.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace vth {

namespace {

// First-word adjacency masks; all exact oracles here cap n well below 64.
std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> m(g.n);
    for (int v = 0; v < g.n; ++v) m[v] = g.adj_bits[v].mask();
    return m;
}

// Max degree of the bipartite graph between xmask and ymask, with early exit
// above the threshold (returns threshold+1 in that case).
int crossing_max_degree_masked(const std::vector<std::uint64_t>& adj, std::uint64_t xmask,
                               std::uint64_t ymask, int threshold) {
    int best = 0;
    for (std::uint64_t rest = xmask; rest;) {
        int v = __builtin_ctzll(rest);
        rest &= rest - 1;
        int d = __builtin_popcountll(adj[v] & ymask);
        if (d > best) {
            best = d;
            if (best > threshold) return best;
        }
    }
    for (std::uint64_t rest = ymask; rest;) {
        int v = __builtin_ctzll(rest);
        rest &= rest - 1;
        int d = __builtin_popcountll(adj[v] & xmask);
        if (d > best) {
            best = d;
            if (best > threshold) return best;
        }
    }
    return best;
}

CutWitness make_cut(int n, std::uint64_t removed, std::uint64_t xmask, std::uint64_t ymask,
                    int crossing) {
    CutWitness w;
    w.removed = VertexSet::from_mask(n, removed);
    w.x = VertexSet::from_mask(n, xmask);
    w.y = VertexSet::from_mask(n, ymask);
    w.crossing_max_degree = crossing;
    return w;
}

// Searches for a bipartition of `alive` with crossing max degree <= l; the
// lowest alive vertex is pinned to the X side.
std::optional<CutWitness> find_weak_cut(const std::vector<std::uint64_t>& adj, int n,
                                        std::uint64_t alive, std::uint64_t removed, int l) {
    if (__builtin_popcountll(alive) <= 1) return std::nullopt;
    std::uint64_t low = alive & (~alive + 1);
    std::uint64_t rest = alive ^ low;
    // Nonempty submasks of rest as the Y side.
    for (std::uint64_t ym = rest; ym; ym = (ym - 1) & rest) {
        std::uint64_t xm = alive ^ ym;
        int d = crossing_max_degree_masked(adj, xm, ym, l);
        if (d <= l) return make_cut(n, removed, xm, ym, d);
    }
    return std::nullopt;
}

}  // namespace

int IslandPartition::block_of(int v) const {
    for (size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].contains(v)) return (int)i;
    return -1;
}

RobustnessReport is_l_robust(const Graph& g, int l, const RobustLimits& lim) {
    if (g.n > lim.robust_exact_limit)
        throw std::invalid_argument("robustness check beyond exact limit (n=" +
                                    std::to_string(g.n) + ")");
    RobustnessReport rep;
    if (g.n <= 1) {
        rep.robust = true;
        return rep;
    }
    auto adj = adjacency_masks(g);
    std::uint64_t all = (g.n == 64) ? ~0ull : ((1ull << g.n) - 1);
    auto cut = find_weak_cut(adj, g.n, all, 0, l);
    rep.robust = !cut.has_value();
    rep.cut = std::move(cut);
    return rep;
}

RobustnessReport is_l_iron(const Graph& g, int l, const RobustLimits& lim) {
    if (g.n > lim.iron_exact_limit)
        throw std::invalid_argument("iron check beyond exact limit (n=" + std::to_string(g.n) +
                                    ")");
    RobustnessReport rep;
    rep.robust = true;
    if (g.n <= 1) return rep;
    auto adj = adjacency_masks(g);
    std::uint64_t all = (g.n == 64) ? ~0ull : ((1ull << g.n) - 1);
    for (std::uint64_t u = 0; u <= all; ++u) {
        if (__builtin_popcountll(u) > l) continue;
        auto cut = find_weak_cut(adj, g.n, all ^ u, u, l);
        if (cut) {
            rep.robust = false;
            rep.cut = std::move(cut);
            return rep;
        }
    }
    return rep;
}

IslandPartition islands(const Graph& g, int l, const RobustLimits& lim) {
    if (g.n > lim.robust_exact_limit)
        throw std::invalid_argument("island computation beyond exact limit (n=" +
                                    std::to_string(g.n) + ")");
    IslandPartition part;
    part.level = l;
    if (g.n == 0) return part;
    if (g.n == 1) {
        part.blocks.push_back(VertexSet::full(1));
        return part;
    }
    auto adj = adjacency_masks(g);
    std::uint64_t all = (g.n == 64) ? ~0ull : ((1ull << g.n) - 1);
    std::vector<std::uint64_t> separable(g.n, 0);
    std::uint64_t rest = all ^ 1ull;  // vertex 0 pinned to X
    for (std::uint64_t ym = rest; ym; ym = (ym - 1) & rest) {
        std::uint64_t xm = all ^ ym;
        if (crossing_max_degree_masked(adj, xm, ym, l) <= l) {
            for (std::uint64_t r = xm; r;) {
                int v = __builtin_ctzll(r);
                r &= r - 1;
                separable[v] |= ym;
            }
            for (std::uint64_t r = ym; r;) {
                int v = __builtin_ctzll(r);
                r &= r - 1;
                separable[v] |= xm;
            }
        }
    }
    // Islands are components of the inseparability relation (an equivalence).
    std::vector<int> block_id(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (block_id[s] != -1) continue;
        int id = (int)part.blocks.size();
        part.blocks.emplace_back(g.n);
        std::queue<int> q;
        q.push(s);
        block_id[s] = id;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            part.blocks[id].add(v);
            std::uint64_t insep = all & ~separable[v] & ~(1ull << v);
            while (insep) {
                int u = __builtin_ctzll(insep);
                insep &= insep - 1;
                if (block_id[u] == -1) {
                    block_id[u] = id;
                    q.push(u);
                }
            }
        }
    }
    return part;
}

CodegComponents codeg_components(const Graph& g, const Rat& alpha, int max_components) {
    if (alpha <= Rat(0) || alpha > Rat(1))
        throw std::invalid_argument("codeg candidates: alpha must be in (0, 1]");
    CodegComponents out;
    out.codeg_threshold = (int)(Rat(19) * alpha * alpha * Rat(g.n) / Rat(20)).ceil();
    Graph f = codeg_graph(g, out.codeg_threshold);
    auto comp = f.components();
    int comp_count = g.n == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    long long comp_bound = (Rat(20) / (alpha * alpha)).floor();
    if (comp_count > max_components || comp_count > comp_bound)
        throw std::invalid_argument("codeg candidates: " + std::to_string(comp_count) +
                                    " components exceed the cap");
    out.components.assign(comp_count, VertexSet(g.n));
    for (int v = 0; v < g.n; ++v) out.components[comp[v]].add(v);
    return out;
}

void for_each_component_grouping(const std::vector<VertexSet>& components,
                                 const std::function<bool(const std::vector<VertexSet>&)>& cb) {
    const int k = (int)components.size();
    if (k == 0) return;
    const int n = components[0].n;
    std::vector<int> rgs(k, 0);
    bool stop = false;
    // Restricted growth strings with exactly `blocks` blocks, lexicographic;
    // prune branches that can no longer reach the last block index.
    auto rec = [&](auto&& self, int i, int maxb, int blocks) -> void {
        if (stop) return;
        if (maxb + (k - i) < blocks - 1) return;
        if (i == k) {
            if (maxb != blocks - 1) return;
            std::vector<VertexSet> bs(blocks, VertexSet(n));
            for (int c = 0; c < k; ++c) bs[rgs[c]] = bs[rgs[c]] | components[c];
            if (!cb(bs)) stop = true;
            return;
        }
        for (int b = 0; b <= std::min(maxb + 1, blocks - 1) && !stop; ++b) {
            rgs[i] = b;
            self(self, i + 1, std::max(maxb, b), blocks);
        }
    };
    for (int blocks = 1; blocks <= k && !stop; ++blocks) rec(rec, 1, 0, blocks);
}

long long count_set_partitions(int k) {
    // Bell triangle.
    std::vector<std::vector<long long>> tri{{1}};
    for (int i = 1; i <= k; ++i) {
        std::vector<long long> row{tri.back().back()};
        for (long long x : tri.back()) row.push_back(row.back() + x);
        tri.push_back(std::move(row));
    }
    return tri[k][0];
}

CodegCandidates codeg_island_candidates(const Graph& g, const Rat& alpha, int max_components) {
    auto comps = codeg_components(g, alpha, max_components);
    CodegCandidates out;
    out.codeg_threshold = comps.codeg_threshold;
    out.components = comps.components;
    for_each_component_grouping(out.components, [&](const std::vector<VertexSet>& blocks) {
        out.partitions.push_back(blocks);
        return true;
    });
    return out;
}

namespace {

bool graphs_isomorphic_exhaustive(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.m() != b.m()) return false;
    std::vector<int> da(a.n), db(b.n);
    for (int v = 0; v < a.n; ++v) da[v] = a.degree(v);
    for (int v = 0; v < b.n; ++v) db[v] = b.degree(v);
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> map(a.n, -1);
    std::vector<char> used(b.n, 0);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == a.n) return true;
        for (int w = 0; w < b.n; ++w) {
            if (used[w] || da[v] != db[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (a.has_edge(u, v) != b.has_edge(map[u], w)) ok = false;
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (self(self, v + 1)) return true;
            used[w] = 0;
            map[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

std::pair<std::vector<int>, std::vector<int>> graph_fingerprint(const Graph& g) {
    std::vector<int> degs(g.n);
    for (int v = 0; v < g.n; ++v) degs[v] = g.degree(v);
    std::sort(degs.begin(), degs.end());
    std::vector<int> codegs;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            codegs.push_back((g.adj_bits[u] & g.adj_bits[v]).count());
    std::sort(codegs.begin(), codegs.end());
    return {degs, codegs};
}

}  // namespace

bool graphs_isomorphic(const Graph& a, const Graph& b, int exhaustive_limit,
                       bool* fingerprint_only) {
    if (fingerprint_only) *fingerprint_only = false;
    if (a.n != b.n || a.m() != b.m()) return false;
    if (a.n <= exhaustive_limit) return graphs_isomorphic_exhaustive(a, b);
    if (fingerprint_only) *fingerprint_only = true;
    return graph_fingerprint(a) == graph_fingerprint(b);
}

RobustDecomposition robust_decomposition(const Graph& g, const Rat& alpha,
                                         const RobustLimits& lim) {
    if (alpha <= Rat(0) || alpha > Rat(1))
        throw std::invalid_argument("decomposition: alpha must be in (0, 1]");
    int val = g.valency();
    if (val < 0 || Rat(val) < alpha * Rat(g.n))
        throw std::invalid_argument("decomposition: input valency below alpha * n");

    RobustDecomposition out;
    auto describe = [](const VertexSet& s) {
        std::string d = "{";
        for (int v : s.to_vector()) d += std::to_string(v) + ",";
        if (d.size() > 1) d.pop_back();
        return d + "}";
    };

    auto rec = [&](auto&& self, const VertexSet& block, Rat a) -> void {
        if (!out.failure.empty()) return;
        auto ind = induced(g, block);
        int ni = ind.graph.n;
        long long level = (a * a * a * a * Rat(ni) / Rat(40)).floor();
        if (level < 1) level = 1;
        if (ni == 1 || is_l_robust(ind.graph, (int)level, lim).robust) {
            out.blocks.push_back({block, (int)level});
            return;
        }
        // About to split: the iteration is only justified while the block
        // keeps valency >= a * n_i.
        int bval = ind.graph.valency();
        if (bval < 0 || Rat(bval) < a * Rat(ni)) {
            out.failure = "block " + describe(block) + " fails the valency check (alpha=" +
                          a.str() + ")";
            return;
        }
        auto isl = islands(ind.graph, (int)level, lim);
        Rat next_a = a * Rat(4, 3);
        for (const auto& b : isl.blocks) {
            VertexSet parent_block(g.n);
            for (int v : b.to_vector()) parent_block.add(ind.to_parent[v]);
            self(self, parent_block, next_a);
        }
    };
    rec(rec, VertexSet::full(g.n), alpha);
    if (!out.failure.empty()) return out;

    // Vertex-transitive inputs decompose into pairwise isomorphic blocks.
    out.isomorphic = true;
    auto g0 = induced(g, out.blocks[0].vertices).graph;
    for (size_t i = 1; i < out.blocks.size() && out.isomorphic; ++i) {
        bool fp = false;
        out.isomorphic =
            graphs_isomorphic(g0, induced(g, out.blocks[i].vertices).graph, 10, &fp);
        out.fingerprint_only = out.fingerprint_only || fp;
    }
    return out;
}

bool non_iron_witness_check(const Graph& r, const VertexSet& l1, const VertexSet& l2,
                            const VertexSet& w1, const VertexSet& w2, const Rat& rho) {
    const long long k = r.n;
    auto sq_le = [](long long x, const Rat& bound_sq) {
        return Rat(x * x) <= bound_sq;  // x <= sqrt(bound_sq) for x >= 0
    };
    Rat rho_k2 = rho * Rat(k * k);
    Rat four_rho_k2 = Rat(4) * rho_k2;

    if (!sq_le(l1.count(), rho_k2))
        throw std::invalid_argument("hypothesis violated: |L1| > sqrt(rho) k'");
    VertexSet inside = l1 | l2;
    VertexSet outside = inside.complement();
    if (Rat(r.edges_between(l2, outside.minus(l2))) > rho_k2)
        throw std::invalid_argument("hypothesis violated: e(L2, outside) > rho k'^2");
    if (!w1.subset_of(outside) || !w2.subset_of(outside))
        throw std::invalid_argument("hypothesis violated: W1, W2 must avoid L1 u L2");
    if (w1.intersects(w2)) throw std::invalid_argument("hypothesis violated: W1, W2 overlap");
    long long wmin = std::min(w1.count(), w2.count());
    if (sq_le(wmin, four_rho_k2))
        throw std::invalid_argument("hypothesis violated: min(|W1|,|W2|) <= 2 sqrt(rho) k'");
    for (int v : w2.to_vector())
        if (!r.adj_bits[v].subset_of(inside))
            throw std::invalid_argument("hypothesis violated: N(W2) leaves L1 u L2");

    // Construction: drop the high-degree ends (deg >= 2 sqrt(rho) k'), cut
    // what remains.
    auto sq_ge = [](long long x, const Rat& bound_sq) { return Rat(x * x) >= bound_sq; };
    VertexSet big_l(r.n), big_p(r.n);
    for (int v : l2.to_vector())
        if (sq_ge(r.deg_in(v, outside.minus(l2)), four_rho_k2)) big_l.add(v);
    for (int v : outside.to_vector())
        if (sq_ge(r.deg_in(v, l2), four_rho_k2)) big_p.add(v);
    VertexSet removed = l1 | big_l | big_p;
    VertexSet cut_a = l2.minus(big_l).minus(removed);
    VertexSet cut_b = outside.minus(big_p).minus(removed);

    if (!sq_le(removed.count(), four_rho_k2))
        throw std::logic_error("witness construction: |U| exceeds 2 sqrt(rho) k'");

    // Residual graph without `removed` and without the edges between the two
    // cut sides; its disconnection certifies non-ironness.
    std::vector<std::vector<int>> residual(r.n);
    int max_cut_deg = 0;
    std::vector<int> cut_deg(r.n, 0);
    for (auto [u, v] : r.edges) {
        if (removed.contains(u) || removed.contains(v)) continue;
        bool crossing = (cut_a.contains(u) && cut_b.contains(v)) ||
                        (cut_a.contains(v) && cut_b.contains(u));
        if (crossing) {
            ++cut_deg[u];
            ++cut_deg[v];
            continue;
        }
        residual[u].push_back(v);
        residual[v].push_back(u);
    }
    for (int v = 0; v < r.n; ++v) max_cut_deg = std::max(max_cut_deg, cut_deg[v]);
    if (!sq_le(max_cut_deg, four_rho_k2))
        throw std::logic_error("witness construction: cut degree exceeds 2 sqrt(rho) k'");

    VertexSet alive = removed.complement();
    auto alive_list = alive.to_vector();
    if (alive_list.empty()) throw std::logic_error("witness construction: no vertices left");
    std::vector<char> seen(r.n, 0);
    std::queue<int> q;
    q.push(alive_list[0]);
    seen[alive_list[0]] = 1;
    int reached = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        ++reached;
        for (int u : residual[v])
            if (!seen[u]) {
                seen[u] = 1;
                q.push(u);
            }
    }
    if (reached == (int)alive_list.size())
        throw std::logic_error("witness construction: cut does not disconnect");
    return true;
}

namespace {

bool strongly_connected_masked(const Digraph& d, std::uint64_t alive) {
    int cnt = __builtin_popcountll(alive);
    if (cnt <= 1) return true;
    int s = __builtin_ctzll(alive);
    auto bfs = [&](bool forward) {
        std::uint64_t seen = 1ull << s;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : forward ? d.out_adj[v] : d.in_adj[v]) {
                std::uint64_t bit = 1ull << u;
                if ((alive & bit) && !(seen & bit)) {
                    seen |= bit;
                    stack.push_back(u);
                }
            }
        }
        return seen == alive;
    };
    return bfs(true) && bfs(false);
}

}  // namespace

bool is_l_strongly_connected(const Digraph& d, int l, int exact_limit) {
    if (l > 0 && d.n > exact_limit)
        throw std::invalid_argument("strong connectivity check beyond exact limit");
    if (d.n > 63) throw std::invalid_argument("strong connectivity: digraph too large");
    std::uint64_t all = (1ull << d.n) - 1;
    if (l == 0) return strongly_connected_masked(d, all);
    for (std::uint64_t u = 0; u <= all; ++u) {
        if (__builtin_popcountll(u) > l) continue;
        if (!strongly_connected_masked(d, all ^ u)) return false;
    }
    return true;
}

std::vector<int> short_path(const Digraph& d, int h, int x, int y) {
    if (h < 1) throw std::invalid_argument("short path: h must be >= 1");
    if (x == y) throw std::invalid_argument("short path: endpoints coincide");
    std::vector<int> parent(d.n, -1);
    std::queue<int> q;
    q.push(x);
    parent[x] = x;
    while (!q.empty() && parent[y] == -1) {
        int v = q.front();
        q.pop();
        for (int u : d.out_adj[v])
            if (parent[u] == -1) {
                parent[u] = v;
                q.push(u);
            }
    }
    if (parent[y] == -1)
        throw std::invalid_argument("short path: no directed path (precondition violated)");
    std::vector<int> path;
    for (int v = y; v != x; v = parent[v]) path.push_back(v);
    path.push_back(x);
    std::reverse(path.begin(), path.end());
    long long length = (long long)path.size() - 1;
    if (length > d.n / h + 1)
        throw std::logic_error("short path: length bound n/h + 1 violated");
    return path;
}

}  // namespace vth
