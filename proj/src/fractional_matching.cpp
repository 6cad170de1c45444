#include "vth/fractional_matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace vth {

Rat FractionalMatching::total() const {
    Rat t(0);
    for (const auto& [e, w] : weights) t = t + w;
    return t;
}

Rat FractionalMatching::vertex_load(int v) const {
    Rat t(0);
    for (const auto& [e, w] : weights)
        if (e.first == v || e.second == v) t = t + w;
    return t;
}

bool FractionalMatching::feasible_on(const Graph& g) const {
    for (const auto& [e, w] : weights) {
        if (w < Rat(0) || w > Rat(1)) return false;
        if (!g.has_edge(e.first, e.second)) return false;
    }
    for (int v = 0; v < n; ++v)
        if (vertex_load(v) > Rat(1)) return false;
    return true;
}

bool FractionalMatching::half_integral() const {
    for (const auto& [e, w] : weights)
        if (w != Rat(0) && w != Rat(1, 2) && w != Rat(1)) return false;
    return true;
}

long long FractionalMatching::doubled(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = weights.find({u, v});
    if (it == weights.end()) return 0;
    Rat d = it->second * Rat(2);
    if (d.den != 1) throw std::logic_error("doubled weight of non-half-integral matching");
    return d.num;
}

Rat FractionalCover::total() const {
    Rat t(0);
    for (const auto& v : values) t = t + v;
    return t;
}

bool FractionalCover::covers(const Graph& g) const {
    for (auto [u, v] : g.edges)
        if (values[u] + values[v] < Rat(1)) return false;
    return true;
}

namespace {

// Bipartite double cover of g: left vertex v is v', right vertex v is v''.
// Maximum matching by augmenting paths in ascending left-vertex order; the
// matching size equals twice the maximum fractional matching weight of g.
struct DoubleCover {
    int n;
    const Graph& g;
    std::vector<int> match_left;   // left v -> right partner or -1
    std::vector<int> match_right;  // right v -> left partner or -1

    explicit DoubleCover(const Graph& g_) : n(g_.n), g(g_) {
        match_left.assign(n, -1);
        match_right.assign(n, -1);
        std::vector<char> visited(n);
        for (int v = 0; v < n; ++v) {
            std::fill(visited.begin(), visited.end(), 0);
            augment(v, visited);
        }
    }

    bool augment(int left, std::vector<char>& visited_right) {
        for (int u : g.adj[left]) {  // ascending
            if (visited_right[u]) continue;
            visited_right[u] = 1;
            if (match_right[u] == -1 || augment(match_right[u], visited_right)) {
                match_left[left] = u;
                match_right[u] = left;
                return true;
            }
        }
        return false;
    }

    int size() const {
        int s = 0;
        for (int v = 0; v < n; ++v)
            if (match_left[v] != -1) ++s;
        return s;
    }

    // Minimum vertex cover via Konig: alternating reachability from
    // unmatched left vertices; cover = (L not reached) union (R reached).
    void min_cover(std::vector<char>& left_in, std::vector<char>& right_in) const {
        std::vector<char> reach_left(n, 0), reach_right(n, 0);
        std::vector<int> stack;
        for (int v = 0; v < n; ++v)
            if (match_left[v] == -1) {
                reach_left[v] = 1;
                stack.push_back(v);
            }
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.adj[v]) {
                if (reach_right[u]) continue;
                reach_right[u] = 1;
                int w = match_right[u];
                if (w != -1 && !reach_left[w]) {
                    reach_left[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        left_in.assign(n, 0);
        right_in.assign(n, 0);
        for (int v = 0; v < n; ++v) {
            if (!reach_left[v]) left_in[v] = 1;
            if (reach_right[v]) right_in[v] = 1;
        }
    }
};

}  // namespace

NuStarResult nu_star(const Graph& g) {
    DoubleCover dc(g);
    NuStarResult res;
    res.value = Rat(dc.size(), 2);
    res.witness.n = g.n;
    for (auto [u, v] : g.edges) {
        int doubled = (dc.match_left[u] == v ? 1 : 0) + (dc.match_left[v] == u ? 1 : 0);
        if (doubled > 0) res.witness.weights[{u, v}] = Rat(doubled, 2);
    }
    return res;
}

FvcResult fvc(const Graph& g) {
    DoubleCover dc(g);
    std::vector<char> left_in, right_in;
    dc.min_cover(left_in, right_in);
    FvcResult res;
    res.value = Rat(dc.size(), 2);
    res.witness.values.assign(g.n, Rat(0));
    for (int v = 0; v < g.n; ++v) res.witness.values[v] = Rat(left_in[v] + right_in[v], 2);
    return res;
}

std::vector<std::pair<int, int>> lift_blowup_matching(const Graph& h, const FractionalMatching& m) {
    if (!m.half_integral()) throw std::invalid_argument("lift: matching is not half-integral");
    if (m.n != h.n || !m.feasible_on(h)) throw std::invalid_argument("lift: matching infeasible on h");
    auto copy1 = [](int v) { return 2 * v; };
    auto copy2 = [](int v) { return 2 * v + 1; };
    std::vector<std::pair<int, int>> out;

    // Half-weight support: union of paths and cycles (max degree 2, and no
    // vertex carries both a weight-1 edge and half edges, by feasibility).
    std::vector<std::vector<int>> half_adj(h.n);
    std::vector<char> has_full(h.n, 0);
    for (const auto& [e, w] : m.weights) {
        if (w == Rat(1)) {
            out.emplace_back(copy1(e.first), copy1(e.second));
            out.emplace_back(copy2(e.first), copy2(e.second));
            has_full[e.first] = has_full[e.second] = 1;
        } else if (w == Rat(1, 2)) {
            half_adj[e.first].push_back(e.second);
            half_adj[e.second].push_back(e.first);
        }
    }
    for (int v = 0; v < h.n; ++v) {
        std::sort(half_adj[v].begin(), half_adj[v].end());
        if (half_adj[v].size() > 2 || (has_full[v] && !half_adj[v].empty()))
            throw std::invalid_argument("lift: half-weight degree violates feasibility");
    }

    // 1-based component sequence v_1..v_r; edge j joins v_j v_{j+1} and gets
    // superscript 1 when j is odd, 2 when j is even (the j+s even rule).
    auto emit_path_edges = [&](const std::vector<int>& seq) {
        for (size_t j = 1; j < seq.size(); ++j) {
            int a = seq[j - 1], b = seq[j];
            if (j % 2 == 1)
                out.emplace_back(copy1(a), copy1(b));
            else
                out.emplace_back(copy2(a), copy2(b));
        }
    };

    // Components in order of their smallest vertex (the loop index).
    std::vector<char> used(h.n, 0);
    for (int start = 0; start < h.n; ++start) {
        if (used[start] || half_adj[start].empty()) continue;
        std::vector<int> comp{start};
        used[start] = 1;
        for (size_t head = 0; head < comp.size(); ++head)
            for (int u : half_adj[comp[head]])
                if (!used[u]) {
                    used[u] = 1;
                    comp.push_back(u);
                }
        std::vector<int> endpoints;
        for (int v : comp)
            if (half_adj[v].size() == 1) endpoints.push_back(v);

        auto walk = [&](int from, int first) {
            std::vector<int> seq{from};
            int prev = from, cur = first;
            while (cur != from && half_adj[cur].size() == 2) {
                seq.push_back(cur);
                int nxt = half_adj[cur][0] == prev ? half_adj[cur][1] : half_adj[cur][0];
                prev = cur;
                cur = nxt;
            }
            if (cur != from) seq.push_back(cur);  // path: stop at the far endpoint
            return seq;
        };

        std::vector<int> seq;
        if (!endpoints.empty()) {
            int from = *std::min_element(endpoints.begin(), endpoints.end());
            seq = walk(from, half_adj[from][0]);
            emit_path_edges(seq);
        } else {
            int from = *std::min_element(comp.begin(), comp.end());
            seq = walk(from, half_adj[from][0]);  // smaller neighbor first
            emit_path_edges(seq);
            int r = (int)seq.size();
            if (r % 2 == 1)
                out.emplace_back(copy1(seq[r - 1]), copy2(seq[0]));
            else
                out.emplace_back(copy2(seq[r - 1]), copy2(seq[0]));
        }
    }

    // The construction guarantees a matching; fail loudly if it ever is not.
    std::vector<char> seen(2 * h.n, 0);
    for (auto [u, v] : out) {
        if (seen[u] || seen[v]) throw std::logic_error("lift: produced overlapping edges");
        seen[u] = seen[v] = 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

FractionalMatching project_matching(const Graph& g_tilde, const Graph& r_tilde,
                                    const std::vector<int>& class_of, int m_size,
                                    const FractionalMatching& m) {
    if ((int)class_of.size() != g_tilde.n)
        throw std::invalid_argument("project: class map size mismatch");
    std::vector<int> class_size(r_tilde.n, 0);
    for (int v = 0; v < g_tilde.n; ++v) {
        if (class_of[v] < 0 || class_of[v] >= r_tilde.n)
            throw std::invalid_argument("project: class id out of range");
        ++class_size[class_of[v]];
    }
    for (int c = 0; c < r_tilde.n; ++c)
        if (class_size[c] > m_size)
            throw std::invalid_argument("project: class larger than blow-up size");
    for (auto [u, v] : g_tilde.edges) {
        int a = class_of[u], b = class_of[v];
        if (a == b || !r_tilde.has_edge(a, b))
            throw std::invalid_argument("project: edge does not respect base adjacency");
    }
    FractionalMatching out;
    out.n = r_tilde.n;
    for (const auto& [e, w] : m.weights) {
        int a = class_of[e.first], b = class_of[e.second];
        if (a > b) std::swap(a, b);
        auto key = std::make_pair(a, b);
        auto it = out.weights.find(key);
        Rat add = w / Rat(m_size);
        if (it == out.weights.end())
            out.weights[key] = add;
        else
            it->second = it->second + add;
    }
    for (auto it = out.weights.begin(); it != out.weights.end();)
        it = it->second == Rat(0) ? out.weights.erase(it) : std::next(it);
    return out;
}

bool cover_after_deletion_check(const Graph& g, const AutomorphismWitness& w,
                                const Graph& g_prime, const Rat& delta) {
    if (g_prime.n != g.n) throw std::invalid_argument("cover check: vertex count mismatch");
    for (auto [u, v] : g_prime.edges)
        if (!g.has_edge(u, v))
            throw std::invalid_argument("cover check: g' is not a spanning subgraph of g");
    if (Rat(g_prime.m()) < (Rat(1) - delta) * Rat(g.m()))
        throw std::invalid_argument("cover check: edge retention below 1 - delta");
    if (verify_witness(g, w).kind != WitnessVerdict::transitive)
        throw std::invalid_argument("cover check: witness is not transitive");
    return fvc(g_prime).value >= (Rat(1) - delta) * fvc(g).value;
}

}  // namespace vth
