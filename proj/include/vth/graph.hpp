#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace vth {

// Subset of the vertices 0..n-1 of some host graph, as a word-array bitset.
// All exact oracles in the library enumerate subsets and need O(1) membership.
struct VertexSet {
    int n = 0;
    std::vector<std::uint64_t> words;

    VertexSet() = default;
    explicit VertexSet(int n_) : n(n_), words((n_ + 63) / 64, 0) {}

    static VertexSet full(int n) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v) s.add(v);
        return s;
    }
    static VertexSet of(int n, std::initializer_list<int> vs) {
        VertexSet s(n);
        for (int v : vs) s.add(v);
        return s;
    }
    static VertexSet from_vector(int n, const std::vector<int>& vs) {
        VertexSet s(n);
        for (int v : vs) s.add(v);
        return s;
    }
    // Low 64 bits as a mask; only valid while n <= 64.
    static VertexSet from_mask(int n, std::uint64_t mask) {
        VertexSet s(n);
        if (!s.words.empty()) s.words[0] = mask;
        return s;
    }

    void add(int v) { words[v >> 6] |= std::uint64_t(1) << (v & 63); }
    void remove(int v) { words[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }
    bool contains(int v) const { return (words[v >> 6] >> (v & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto w : words) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (auto w : words)
            if (w) return false;
        return true;
    }
    std::uint64_t mask() const { return words.empty() ? 0 : words[0]; }

    VertexSet operator&(const VertexSet& o) const {
        VertexSet r(n);
        for (size_t i = 0; i < words.size(); ++i) r.words[i] = words[i] & o.words[i];
        return r;
    }
    VertexSet operator|(const VertexSet& o) const {
        VertexSet r(n);
        for (size_t i = 0; i < words.size(); ++i) r.words[i] = words[i] | o.words[i];
        return r;
    }
    // Set difference: elements of *this not in o.
    VertexSet minus(const VertexSet& o) const {
        VertexSet r(n);
        for (size_t i = 0; i < words.size(); ++i) r.words[i] = words[i] & ~o.words[i];
        return r;
    }
    VertexSet complement() const { return full(n).minus(*this); }
    bool intersects(const VertexSet& o) const {
        for (size_t i = 0; i < words.size(); ++i)
            if (words[i] & o.words[i]) return true;
        return false;
    }
    bool subset_of(const VertexSet& o) const {
        for (size_t i = 0; i < words.size(); ++i)
            if (words[i] & ~o.words[i]) return false;
        return true;
    }
    bool operator==(const VertexSet& o) const { return n == o.n && words == o.words; }
    bool operator<(const VertexSet& o) const { return words < o.words; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = 0; v < n; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }
};

// Simple undirected graph on dense integer vertices 0..n-1.
// Immutable after construction; adjacency is kept both as sorted neighbor
// lists (deterministic ascending iteration everywhere) and as bitset rows.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted
    std::vector<std::vector<int>> adj;       // sorted neighbor lists
    std::vector<VertexSet> adj_bits;

    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int m() const { return (int)edges.size(); }
    bool has_edge(int u, int v) const { return u != v && adj_bits[u].contains(v); }
    int degree(int v) const { return (int)adj[v].size(); }
    int max_degree() const;
    int min_degree() const;
    // Valency if the graph is regular, -1 otherwise.
    int valency() const;
    bool connected() const;
    int deg_in(int v, const VertexSet& s) const { return (adj_bits[v] & s).count(); }
    // Edges with both ends in s.
    int edges_within(const VertexSet& s) const;
    // Edges with one end in a, other in b (a, b disjoint).
    int edges_between(const VertexSet& a, const VertexSet& b) const;
    std::vector<int> components() const;  // component id per vertex
};

// Digraph on 0..n-1. Antiparallel arc pairs allowed, no loops, no duplicates.
struct Digraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;  // sorted, distinct
    std::vector<std::vector<int>> out_adj;  // sorted
    std::vector<std::vector<int>> in_adj;

    Digraph() = default;
    Digraph(int n, std::vector<std::pair<int, int>> arc_list);

    bool has_arc(int u, int v) const;
};

// The l-blow-up: each vertex becomes an independent class of size l, each edge
// a complete bipartite graph between classes. Vertex v of the output lies in
// class v / l; the copies of class c are c*l .. c*l+l-1.
Graph blow_up(const Graph& g, int l);

// Auxiliary graph joining distinct u,v iff they have >= k common neighbors.
Graph codeg_graph(const Graph& g, int k);

// Maximum degree of the bipartite graph between disjoint sets a and b.
// Throws if a and b overlap.
int max_cross_degree(const Graph& g, const VertexSet& a, const VertexSet& b);

// Induced subgraph together with the map from new labels back to old ones.
struct InducedGraph {
    Graph graph;
    std::vector<int> to_parent;  // new label -> old label
};
InducedGraph induced(const Graph& g, const VertexSet& s);

// Text format: line "n m" then m lines "u v" with 0 <= u < v < n.
// Rejects loops and duplicates with line-numbered messages.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);
std::string to_dot(const Graph& g, const std::vector<int>* vertex_color = nullptr,
                   const std::vector<std::pair<int, int>>* highlight_edges = nullptr);

}  // namespace vth
