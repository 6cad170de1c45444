#pragma once

#include <map>
#include <utility>
#include <vector>

#include "vth/graph.hpp"
#include "vth/rational.hpp"
#include "vth/vt_instances.hpp"

namespace vth {

// Fractional matching with exact weights. Optimal witnesses produced by
// nu_star are always half-integral ({0, 1/2, 1}); the reduced-graph
// projection can produce other rationals.
struct FractionalMatching {
    int n = 0;
    std::map<std::pair<int, int>, Rat> weights;  // key u < v, value > 0

    Rat total() const;
    Rat vertex_load(int v) const;
    bool feasible_on(const Graph& g) const;  // support in E, loads <= 1
    bool half_integral() const;
    // Doubled weight of an edge (0, 1 or 2 for half-integral matchings).
    long long doubled(int u, int v) const;
};

// Fractional vertex cover with exact values; witnesses from fvc() are
// half-integral.
struct FractionalCover {
    std::vector<Rat> values;

    Rat total() const;
    bool covers(const Graph& g) const;  // f(x) + f(y) >= 1 per edge
};

// Maximum weight of a fractional matching, with a half-integral optimal
// witness. Computed via a maximum matching of the bipartite double cover
// (vertices v', v''; edges u'v'' and v'u'' per edge uv) folded back by
// w(uv) = (matched(u'v'') + matched(v'u''))/2.
struct NuStarResult {
    Rat value;
    FractionalMatching witness;
};
NuStarResult nu_star(const Graph& g);

// Minimum weight of a fractional vertex cover, with a half-integral witness
// folded from the double cover's minimum vertex cover (Konig). The value
// always equals nu_star(g).value exactly.
struct FvcResult {
    Rat value;
    FractionalCover witness;
};
FvcResult fvc(const Graph& g);

// Lifts a half-integral matching m of h to an integral matching of the
// 2-blow-up of h with exactly twice the weight. Weight-1 edges duplicate into
// both copies; the half-weight support decomposes into paths and cycles,
// components ordered by smallest vertex, paths oriented from their smaller
// endpoint, and edges v_j^s v_{j+1}^s are taken when j+s is even (1-based),
// cycles closing with v_r^1 v_1^2 for odd r and v_r^2 v_1^2 for even r.
// Throws if m is not half-integral or not feasible on h.
std::vector<std::pair<int, int>> lift_blowup_matching(const Graph& h, const FractionalMatching& m);

// Folds a fractional matching on a subgraph of a blow-up down to the base
// graph: M_R(AB) = sum of M over the A-B copies, divided by the class size.
// class_of maps each vertex of g_tilde to its class in r_tilde; every class
// must have size <= m_size and edges of g_tilde must respect r_tilde
// adjacency.
FractionalMatching project_matching(const Graph& g_tilde, const Graph& r_tilde,
                                    const std::vector<int>& class_of, int m_size,
                                    const FractionalMatching& m);

// Checks fvc(g') >= (1 - delta) * fvc(g) for a spanning subgraph g' with
// e(g') >= (1 - delta) e(g); the witness must verify transitive. Exact
// rational comparison, no tolerance.
bool cover_after_deletion_check(const Graph& g, const AutomorphismWitness& w,
                                const Graph& g_prime, const Rat& delta);

}  // namespace vth
