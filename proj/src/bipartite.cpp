#include "vth/bipartite.hpp"

#include <algorithm>
#include <stdexcept>

namespace vth {

Bipartition make_bipartition(const Graph& g, const VertexSet& a) {
    Bipartition p;
    p.a = a;
    p.b = a.complement();
    p.internal_edges = g.edges_within(p.a) + g.edges_within(p.b);
    p.cut_edges = g.m() - p.internal_edges;
    return p;
}

BipartitenessDistance bipartiteness_distance(const Graph& g, int exact_limit) {
    if (g.n > exact_limit)
        throw std::invalid_argument("bipartiteness distance beyond exact limit (n=" +
                                    std::to_string(g.n) + ")");
    BipartitenessDistance out;
    if (g.n == 0) {
        out.partition = make_bipartition(g, VertexSet(0));
        return out;
    }
    // e_in[mask] = edges inside mask, by peeling the lowest vertex.
    std::uint64_t total = 1ull << g.n;
    std::vector<int> e_in(total, 0);
    std::vector<std::uint64_t> adj(g.n);
    for (int v = 0; v < g.n; ++v) adj[v] = g.adj_bits[v].mask();
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        int v = __builtin_ctzll(mask);
        std::uint64_t rest = mask & (mask - 1);
        e_in[mask] = e_in[rest] + __builtin_popcountll(adj[v] & rest);
    }
    std::uint64_t all = total - 1;
    int best = g.m() + 1;
    std::uint64_t best_mask = 0;
    // Vertex 0 pinned to side A; ties keep the smallest A mask.
    for (std::uint64_t bmask = 0; bmask < total; bmask += 2) {
        std::uint64_t amask = all ^ bmask;
        int internal = e_in[amask] + e_in[bmask];
        if (internal < best) {
            best = internal;
            best_mask = amask;
        }
    }
    out.distance = best;
    out.partition = make_bipartition(g, VertexSet::from_mask(g.n, best_mask));
    return out;
}

Bipartition local_search_bipartition(const Graph& g, const Bipartition& start) {
    VertexSet a = start.a;
    VertexSet b = start.b;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int v = 0; v < g.n && !moved; ++v) {
            bool in_a = a.contains(v);
            const VertexSet& own = in_a ? a : b;
            const VertexSet& other = in_a ? b : a;
            if (g.deg_in(v, own) > g.deg_in(v, other)) {
                if (in_a) {
                    a.remove(v);
                    b.add(v);
                } else {
                    b.remove(v);
                    a.add(v);
                }
                moved = true;
            }
        }
    }
    return make_bipartition(g, a);
}

BalancedBipartitionReport verify_balanced_bipartition(const Graph& g,
                                                      const AutomorphismWitness& w,
                                                      const Bipartition& p, const Rat& c) {
    if (c <= Rat(0) || c >= Rat(1, 17))
        throw std::invalid_argument("balanced bipartition check: c must be in (0, 1/17)");
    BalancedBipartitionReport rep;
    rep.sides_balanced = p.a.count() == p.b.count();
    rep.degree_threshold = (Rat(6) * c * c * Rat(g.n)).floor();
    rep.max_internal_degree = 0;
    for (int v : p.a.to_vector())
        rep.max_internal_degree = std::max(rep.max_internal_degree, g.deg_in(v, p.a));
    for (int v : p.b.to_vector())
        rep.max_internal_degree = std::max(rep.max_internal_degree, g.deg_in(v, p.b));
    rep.degrees_ok = rep.max_internal_degree <= rep.degree_threshold;
    rep.automorphisms_respect = true;
    for (const auto& gen : w.generators) {
        VertexSet image(g.n);
        for (int v : p.a.to_vector()) image.add(gen(v));
        if (!(image == p.a) && !(image == p.b)) {
            rep.automorphisms_respect = false;
            break;
        }
    }
    return rep;
}

Graph cross_subgraph(const Graph& g, const Bipartition& p) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges)
        if (p.a.contains(u) != p.a.contains(v)) edges.emplace_back(u, v);
    return Graph(g.n, std::move(edges));
}

}  // namespace vth
