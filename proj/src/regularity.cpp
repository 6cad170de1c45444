#include "vth/regularity.hpp"

#include <algorithm>
#include <stdexcept>

namespace vth {

ClusterPartition make_cluster_partition(int n, const std::vector<VertexSet>& clusters) {
    ClusterPartition p;
    p.exceptional = VertexSet(n);
    if (clusters.empty()) throw std::invalid_argument("cluster partition: no clusters");
    p.cluster_size = clusters[0].count();
    VertexSet seen(n);
    for (const auto& c : clusters) {
        if (c.count() != p.cluster_size)
            throw std::invalid_argument("cluster partition: unequal cluster sizes");
        if (seen.intersects(c)) throw std::invalid_argument("cluster partition: clusters overlap");
        seen = seen | c;
    }
    p.clusters = clusters;
    p.exceptional = seen.complement();
    return p;
}

PairCertificate pair_certificate(const Graph& g, const VertexSet& a, const VertexSet& b,
                                 const Rat& eps, const Rat& d, int exact_limit) {
    if (a.intersects(b)) throw std::invalid_argument("pair certificate: sides overlap");
    if (eps <= Rat(0) || eps >= Rat(1))
        throw std::invalid_argument("pair certificate: eps must be in (0, 1)");
    auto av = a.to_vector();
    auto bv = b.to_vector();
    const int na = (int)av.size(), nb = (int)bv.size();
    if (na > exact_limit || nb > exact_limit)
        throw std::invalid_argument("pair certificate: side exceeds exact enumeration limit");

    PairCertificate cert;
    cert.a = a;
    cert.b = b;
    cert.epsilon = eps;
    cert.d = d;
    if (na == 0 || nb == 0) {
        cert.density = Rat(0);
        cert.regular = true;
        cert.super_regular = false;
        return cert;
    }
    long long e_ab = g.edges_between(a, b);
    cert.density = Rat(e_ab, (long long)na * nb);

    // cross_deg[j] under the current X mask, folded into e(X, Y) for every Y
    // by a subset DP. All comparisons stay in exact integers:
    // |e_XY * |A||B| - e_AB * |X||Y|| * eps_den < eps_num * |X||Y| * |A||B|.
    std::vector<long long> deg_in_x(nb);
    std::vector<long long> e_xy((size_t)1 << nb);
    long long min_x = (eps * Rat(na)).ceil();
    long long min_y = (eps * Rat(nb)).ceil();
    // |X| >= eps|A| with |X| integer means |X| >= ceil(eps |A|); exact
    // equality eps|A| itself qualifies, and ceil preserves it.
    cert.regular = true;
    Rat worst_dev(0);
    for (std::uint32_t xm = 1; xm < (1u << na); ++xm) {
        int xc = __builtin_popcount(xm);
        if (xc < min_x) continue;
        for (int j = 0; j < nb; ++j) {
            long long c = 0;
            for (std::uint32_t r = xm; r;) {
                int i = __builtin_ctz(r);
                r &= r - 1;
                if (g.has_edge(av[i], bv[j])) ++c;
            }
            deg_in_x[j] = c;
        }
        e_xy[0] = 0;
        for (std::uint32_t ym = 1; ym < (1u << nb); ++ym) {
            int j = __builtin_ctz(ym);
            e_xy[ym] = e_xy[ym & (ym - 1)] + deg_in_x[j];
            int yc = __builtin_popcount(ym);
            if (yc < min_y) continue;
            long long xy = (long long)xc * yc;
            long long lhs = e_xy[ym] * na * nb - e_ab * xy;
            if (lhs < 0) lhs = -lhs;
            // Violation: |d(X,Y) - d(A,B)| >= eps.
            if (lhs * eps.den >= eps.num * xy * na * nb) {
                cert.regular = false;
                Rat dev(lhs, xy * na * nb);
                if (!cert.worst_witness || dev > worst_dev) {
                    worst_dev = dev;
                    PairWitness w;
                    w.x = VertexSet(g.n);
                    w.y = VertexSet(g.n);
                    for (int i = 0; i < na; ++i)
                        if (xm >> i & 1) w.x.add(av[i]);
                    for (int j = 0; j < nb; ++j)
                        if (ym >> j & 1) w.y.add(bv[j]);
                    w.density_xy = Rat(e_xy[ym], xy);
                    cert.worst_witness = std::move(w);
                }
            }
        }
    }
    cert.super_regular = cert.regular;
    for (int v : av)
        if (Rat(g.deg_in(v, b)) < d * Rat(nb)) cert.super_regular = false;
    for (int v : bv)
        if (Rat(g.deg_in(v, a)) < d * Rat(na)) cert.super_regular = false;
    return cert;
}

bool slice_check(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& a_sub,
                 const VertexSet& b_sub, const Rat& eps, const Rat& d, int exact_limit) {
    if (!a_sub.subset_of(a) || !b_sub.subset_of(b))
        throw std::invalid_argument("slice check: subsets do not nest");
    if (Rat(3 * (long long)a_sub.count()) < Rat(a.count()) ||
        Rat(3 * (long long)b_sub.count()) < Rat(b.count()))
        throw std::invalid_argument("slice check: subsets below a third of their side");
    if (eps > d / Rat(2)) throw std::invalid_argument("slice check: requires eps <= d/2");
    auto base = pair_certificate(g, a, b, eps, d, exact_limit);
    if (!base.regular || base.density < d)
        throw std::invalid_argument("slice check: base pair is not (eps,d)-regular");
    auto sub = pair_certificate(g, a_sub, b_sub, Rat(3) * eps, d / Rat(2), exact_limit);
    return sub.regular && sub.density >= d / Rat(2);
}

SuperRegularizeResult super_regularize(const Graph& g, const ClusterPartition& p,
                                       const std::vector<std::pair<int, int>>& matching,
                                       const Rat& eps, const Rat& d, int exact_limit) {
    const int k = (int)p.clusters.size();
    std::vector<int> partner(k, -1);
    for (auto [i, j] : matching) {
        if (i < 0 || j < 0 || i >= k || j >= k || i == j || partner[i] != -1 || partner[j] != -1)
            throw std::invalid_argument("super-regularize: invalid matching on clusters");
        partner[i] = j;
        partner[j] = i;
    }
    long long move = (eps * Rat(p.cluster_size)).ceil();
    if (move >= p.cluster_size)
        throw std::invalid_argument("super-regularize: eps m as large as the cluster");

    SuperRegularizeResult out;
    out.partition.exceptional = p.exceptional;
    out.partition.cluster_size = p.cluster_size - (int)move;
    for (int i = 0; i < k; ++i) {
        auto members = p.clusters[i].to_vector();
        std::vector<std::pair<int, int>> keyed;  // (degree into partner, label)
        for (int v : members) {
            int key = partner[i] >= 0 ? g.deg_in(v, p.clusters[partner[i]]) : 0;
            keyed.emplace_back(key, v);
        }
        std::sort(keyed.begin(), keyed.end());
        VertexSet kept(g.n);
        for (size_t t = 0; t < keyed.size(); ++t) {
            if ((long long)t < move)
                out.partition.exceptional.add(keyed[t].second);
            else
                kept.add(keyed[t].second);
        }
        out.partition.clusters.push_back(kept);
    }
    for (auto [i, j] : matching) {
        auto cert = pair_certificate(g, out.partition.clusters[i], out.partition.clusters[j],
                                     Rat(2) * eps, d / Rat(2), exact_limit);
        if (!cert.super_regular)
            out.alarms.push_back("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") failed the (2eps, d/2)-super-regularity assertion");
        out.pair_certificates.push_back(std::move(cert));
    }
    return out;
}

namespace {

// One greedy pass: grow `chosen` inside `side` until every opposite vertex
// has degree >= target into it. Unhappiness is kept as integers scaled by
// 2^target.
void ideal_pass(const Graph& g, const VertexSet& side, const VertexSet& opposite,
                long long steps, long long target, VertexSet& chosen,
                std::vector<long long>& trace, std::vector<std::string>& alarms,
                const char* side_name) {
    auto opp = opposite.to_vector();
    auto weight = [&](int deg) -> long long {
        if (deg >= target) return 0;
        return (1ll << (target - deg)) - 1;
    };
    for (long long step = 0; step < steps; ++step) {
        long long best_w = -1;
        int best_v = -1;
        for (int v : side.to_vector()) {
            if (chosen.contains(v)) continue;
            long long w = 0;
            for (int b : opp)
                if (g.has_edge(v, b)) w += weight(g.deg_in(b, chosen));
            if (w > best_w) {
                best_w = w;
                best_v = v;
            }
        }
        if (best_v < 0) break;  // side exhausted
        chosen.add(best_v);
        long long total = 0;
        for (int b : opp) total += weight(g.deg_in(b, chosen));
        trace.push_back(total);
    }
    for (int b : opp)
        if (g.deg_in(b, chosen) < target) {
            alarms.push_back(std::string("ideal post-condition failed on side ") + side_name +
                             ": vertex " + std::to_string(b) + " has degree " +
                             std::to_string(g.deg_in(b, chosen)) + " < " + std::to_string(target));
            break;
        }
}

}  // namespace

IdealResult build_ideal(const Graph& g, const VertexSet& a, const VertexSet& b, const Rat& theta,
                        const Rat& d) {
    if (a.count() != b.count()) throw std::invalid_argument("ideal: sides must have equal size");
    const long long m = a.count();
    if (theta <= Rat(0) || theta > Rat(1)) throw std::invalid_argument("ideal: theta in (0, 1]");
    if (theta * Rat(m) < Rat(1)) throw std::invalid_argument("ideal: requires theta m >= 1");
    IdealResult out;
    out.a_star = VertexSet(g.n);
    out.b_star = VertexSet(g.n);
    out.target_degree = (theta * d * Rat(m) / Rat(4)).ceil();
    long long steps = (theta * Rat(m)).ceil();
    ideal_pass(g, a, b, steps, out.target_degree, out.a_star, out.unhappiness_trace_a, out.alarms,
               "A");
    ideal_pass(g, b, a, steps, out.target_degree, out.b_star, out.unhappiness_trace_b, out.alarms,
               "B");
    return out;
}

bool ideal_containment_check(const Graph& g, const VertexSet& a, const VertexSet& b,
                             const VertexSet& a_star, const VertexSet& b_star,
                             const VertexSet& a_sub, const VertexSet& b_sub, const Rat& eps_star,
                             const Rat& d_star, int exact_limit) {
    if (!a_star.subset_of(a_sub) || !a_sub.subset_of(a) || !b_star.subset_of(b_sub) ||
        !b_sub.subset_of(b))
        throw std::invalid_argument("ideal containment: sandwich violated");
    auto cert = pair_certificate(g, a_sub, b_sub, eps_star, d_star, exact_limit);
    return cert.super_regular;
}

ReducedGraphResult reduced_graph(const Graph& g, const ClusterPartition& p, const Rat& eps,
                                 const Rat& d, bool density_only, int exact_limit) {
    const int k = (int)p.clusters.size();
    if (!density_only && p.cluster_size > exact_limit)
        throw std::invalid_argument("reduced graph: clusters too large for exact certification");
    ReducedGraphResult out;
    out.density_only = density_only;
    std::vector<std::pair<int, int>> edges;
    long long m2 = (long long)p.cluster_size * p.cluster_size;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            long long e = g.edges_between(p.clusters[i], p.clusters[j]);
            if (Rat(e, m2 == 0 ? 1 : m2) >= d) edges.emplace_back(i, j);
            if (!density_only) {
                auto cert = pair_certificate(g, p.clusters[i], p.clusters[j], eps, d, exact_limit);
                if (!cert.regular) out.irregular_pairs.emplace_back(i, j);
            }
        }
    out.graph = Graph(k, std::move(edges));
    return out;
}

PathitionResult hamilton_path_in_pair(const Graph& g, const VertexSet& a, const VertexSet& b,
                                      int x, int y) {
    if (a.count() != b.count())
        throw std::invalid_argument("hamilton pair: sides must have equal size");
    if (!a.contains(x) || !b.contains(y))
        throw std::invalid_argument("hamilton pair: endpoints must lie on opposite sides");
    // Restrict to the cross edges of the pair and search there.
    VertexSet both = a | b;
    auto ind = induced(g, both);
    std::vector<int> to_child(g.n, -1);
    for (size_t i = 0; i < ind.to_parent.size(); ++i) to_child[ind.to_parent[i]] = (int)i;
    std::vector<std::pair<int, int>> cross;
    for (auto [u, v] : ind.graph.edges) {
        int pu = ind.to_parent[u], pv = ind.to_parent[v];
        if (a.contains(pu) != a.contains(pv)) cross.emplace_back(u, v);
    }
    Graph cross_graph(ind.graph.n, std::move(cross));
    EndpointRequest req;
    req.pairs = {{to_child[x], to_child[y]}};
    req.exceptional = VertexSet(cross_graph.n);
    PathitionLimits lim;
    lim.dp_limit = 24;  // sides are capped at 12, so the DP stays complete
    auto res = pathition(cross_graph, req, lim);
    if (res.system) {
        for (auto& path : res.system->paths)
            for (int& v : path) v = ind.to_parent[v];
        for (auto& [px, py] : res.system->endpoints) {
            px = ind.to_parent[px];
            py = ind.to_parent[py];
        }
    }
    return res;
}

ShiftedDigraph shifted_digraph(const Graph& r2, const std::vector<std::pair<int, int>>& matching) {
    ShiftedDigraph sd;
    sd.matching = matching;
    sd.partner.assign(r2.n, -1);
    for (auto [ai, bi] : matching) {
        if (ai < 0 || bi < 0 || ai >= r2.n || bi >= r2.n || ai == bi || sd.partner[ai] != -1 ||
            sd.partner[bi] != -1)
            throw std::invalid_argument("shifted digraph: matching is not a perfect matching");
        sd.partner[ai] = bi;
        sd.partner[bi] = ai;
    }
    for (int v = 0; v < r2.n; ++v)
        if (sd.partner[v] == -1)
            throw std::invalid_argument("shifted digraph: matching is not perfect");
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : r2.edges) {
        if (sd.partner[u] == v) continue;  // matched pairs contribute no arcs
        arcs.emplace_back(sd.partner[v], u);
        arcs.emplace_back(sd.partner[u], v);
    }
    sd.digraph = Digraph(r2.n, std::move(arcs));
    return sd;
}

std::vector<int> zigzag_lift(const std::vector<int>& r_star_path, const ShiftedDigraph& sd,
                             const Graph& r2) {
    if (r_star_path.empty()) throw std::invalid_argument("zigzag: empty path");
    for (size_t i = 0; i + 1 < r_star_path.size(); ++i)
        if (!sd.digraph.has_arc(r_star_path[i], r_star_path[i + 1]))
            throw std::invalid_argument("zigzag: input is not a directed path of the digraph");
    std::vector<int> walk;
    for (int x : r_star_path) {
        walk.push_back(x);
        walk.push_back(sd.partner[x]);
    }
    // By construction, partner(X_i) is adjacent to X_{i+1} in the source
    // reduced graph; anything else is an internal inconsistency.
    for (size_t i = 1; i + 1 < walk.size(); i += 2)
        if (!r2.has_edge(walk[i], walk[i + 1]))
            throw std::logic_error("zigzag: lifted walk leaves the reduced graph");
    return walk;
}

}  // namespace vth
