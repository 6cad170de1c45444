#pragma once

#include <string>
#include <vector>

#include "vth/graph.hpp"
#include "vth/rational.hpp"
#include "vth/vt_instances.hpp"

namespace vth {

struct Bipartition {
    VertexSet a, b;
    int internal_edges = 0;  // e(A) + e(B)
    int cut_edges = 0;       // e(A, B)
};

Bipartition make_bipartition(const Graph& g, const VertexSet& a);

// Minimum of e(A)+e(B) over all bipartitions (the max-cut complement),
// realized exactly by enumeration; vertex 0 goes to side A and ties resolve
// to the smallest A-side mask. Exact mode requires n <= 22.
struct BipartitenessDistance {
    int distance = 0;
    Bipartition partition;
};
BipartitenessDistance bipartiteness_distance(const Graph& g, int exact_limit = 22);

// Moves any vertex with strictly more same-side than cross-side neighbors to
// the other side (lowest label first) until none exists. The cut strictly
// grows per move, so this terminates within e(g) moves; the result satisfies
// deg(v, own side) <= deg(v, other side) for every vertex.
Bipartition local_search_bipartition(const Graph& g, const Bipartition& start);

// Checks the three conclusions of the balanced-bipartition lemma for
// almost-bipartite vertex-transitive graphs: |A| = |B|; every internal degree
// is at most floor(6 c^2 n); every witness generator maps A to A or to B.
// Requires c in (0, 1/17).
struct BalancedBipartitionReport {
    bool sides_balanced = false;
    bool degrees_ok = false;
    bool automorphisms_respect = false;
    long long degree_threshold = 0;  // floor(6 c^2 n)
    int max_internal_degree = 0;     // raw value, reported alongside
    bool all_pass() const { return sides_balanced && degrees_ok && automorphisms_respect; }
};
BalancedBipartitionReport verify_balanced_bipartition(const Graph& g,
                                                      const AutomorphismWitness& w,
                                                      const Bipartition& p, const Rat& c);

// g with all edges internal to A and to B removed; bipartite by construction.
Graph cross_subgraph(const Graph& g, const Bipartition& p);

}  // namespace vth
