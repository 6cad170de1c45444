#include "vth/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace vth {

Graph::Graph(int n_, std::vector<std::pair<int, int>> edge_list) : n(n_) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edge_list) {
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edge_list.begin(), edge_list.end());
    for (size_t i = 1; i < edge_list.size(); ++i)
        if (edge_list[i] == edge_list[i - 1])
            throw std::invalid_argument("duplicate edge " + std::to_string(edge_list[i].first) +
                                        "-" + std::to_string(edge_list[i].second));
    edges = std::move(edge_list);
    adj.assign(n, {});
    adj_bits.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
        adj_bits[u].add(v);
        adj_bits[v].add(u);
    }
    for (auto& l : adj) std::sort(l.begin(), l.end());
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::valency() const {
    if (n == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n; ++v)
        if (degree(v) != d) return -1;
    return d;
}

std::vector<int> Graph::components() const {
    std::vector<int> comp(n, -1);
    int c = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::queue<int> q;
        q.push(s);
        comp[s] = c;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : adj[v])
                if (comp[u] == -1) {
                    comp[u] = c;
                    q.push(u);
                }
        }
        ++c;
    }
    return comp;
}

bool Graph::connected() const {
    if (n <= 1) return true;
    auto comp = components();
    return *std::max_element(comp.begin(), comp.end()) == 0;
}

int Graph::edges_within(const VertexSet& s) const {
    int c = 0;
    for (auto [u, v] : edges)
        if (s.contains(u) && s.contains(v)) ++c;
    return c;
}

int Graph::edges_between(const VertexSet& a, const VertexSet& b) const {
    int c = 0;
    for (auto [u, v] : edges)
        if ((a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u))) ++c;
    return c;
}

Digraph::Digraph(int n_, std::vector<std::pair<int, int>> arc_list) : n(n_) {
    for (auto [u, v] : arc_list) {
        if (u == v) throw std::invalid_argument("self-loop arc at " + std::to_string(u));
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("arc endpoint out of range");
    }
    std::sort(arc_list.begin(), arc_list.end());
    for (size_t i = 1; i < arc_list.size(); ++i)
        if (arc_list[i] == arc_list[i - 1]) throw std::invalid_argument("duplicate arc");
    arcs = std::move(arc_list);
    out_adj.assign(n, {});
    in_adj.assign(n, {});
    for (auto [u, v] : arcs) {
        out_adj[u].push_back(v);
        in_adj[v].push_back(u);
    }
}

bool Digraph::has_arc(int u, int v) const {
    return std::binary_search(out_adj[u].begin(), out_adj[u].end(), v);
}

Graph blow_up(const Graph& g, int l) {
    if (l < 1) throw std::invalid_argument("blow-up factor must be >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve((size_t)g.m() * l * l);
    for (auto [u, v] : g.edges)
        for (int s = 0; s < l; ++s)
            for (int t = 0; t < l; ++t) edges.emplace_back(u * l + s, v * l + t);
    return Graph(g.n * l, std::move(edges));
}

Graph codeg_graph(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("codegree threshold must be >= 0");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if ((g.adj_bits[u] & g.adj_bits[v]).count() >= k) edges.emplace_back(u, v);
    return Graph(g.n, std::move(edges));
}

int max_cross_degree(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.intersects(b)) throw std::invalid_argument("cut sides overlap");
    int d = 0;
    for (int v : a.to_vector()) d = std::max(d, g.deg_in(v, b));
    for (int v : b.to_vector()) d = std::max(d, g.deg_in(v, a));
    return d;
}

InducedGraph induced(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("induced subgraph of empty set");
    InducedGraph out;
    out.to_parent = s.to_vector();
    std::vector<int> to_child(g.n, -1);
    for (size_t i = 0; i < out.to_parent.size(); ++i) to_child[out.to_parent[i]] = (int)i;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges)
        if (to_child[u] >= 0 && to_child[v] >= 0) edges.emplace_back(to_child[u], to_child[v]);
    out.graph = Graph((int)out.to_parent.size(), std::move(edges));
    return out;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw std::invalid_argument("empty graph file");
    std::istringstream hdr(line);
    long long n, m;
    if (!(hdr >> n >> m) || n < 0 || m < 0)
        throw std::invalid_argument("line 1: expected header 'n m'");
    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < m; ++i) {
        if (!next_line())
            throw std::invalid_argument("unexpected end of file: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(i));
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v))
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'u v'");
        if (u == v)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": self-loop");
        if (u >= v)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": require u < v");
        if (u < 0 || v >= n)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": endpoint out of range");
        edges.emplace_back((int)u, (int)v);
    }
    std::sort(edges.begin(), edges.end());
    for (size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1]) throw std::invalid_argument("duplicate edge in input");
    return Graph((int)n, std::move(edges));
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n << " " << g.m() << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

std::string to_dot(const Graph& g, const std::vector<int>* vertex_color,
                   const std::vector<std::pair<int, int>>* highlight_edges) {
    static const char* palette[] = {"lightblue",  "lightsalmon", "palegreen", "khaki",
                                    "plum",       "lightcyan",   "wheat",     "mistyrose",
                                    "honeydew",   "lavender"};
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.n; ++v) {
        out << "  " << v;
        if (vertex_color)
            out << " [style=filled,fillcolor=" << palette[(*vertex_color)[v] % 10] << "]";
        out << ";\n";
    }
    auto highlighted = [&](int u, int v) {
        if (!highlight_edges) return false;
        for (auto [a, b] : *highlight_edges)
            if ((a == u && b == v) || (a == v && b == u)) return true;
        return false;
    };
    for (auto [u, v] : g.edges) {
        out << "  " << u << " -- " << v;
        if (highlighted(u, v)) out << " [color=red,penwidth=2]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace vth
