#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vth/graph.hpp"
#include "vth/rational.hpp"

namespace vth {

// A certified disconnection: removing the vertices `removed` and then the
// edges between X and Y (whose bipartite max degree is crossing_max_degree)
// disconnects the graph.
struct CutWitness {
    VertexSet removed;
    VertexSet x, y;
    int crossing_max_degree = 0;
};

struct RobustnessReport {
    bool robust = false;
    std::optional<CutWitness> cut;  // present when not robust
};

// Level-l blocks of the inseparability relation: u and v share a block iff no
// vertex bipartition with crossing max degree <= l separates them.
struct IslandPartition {
    int level = 0;
    std::vector<VertexSet> blocks;

    int block_of(int v) const;
};

struct RobustLimits {
    int robust_exact_limit = 20;  // bipartition enumeration cap
    int iron_exact_limit = 16;    // bipartitions x vertex removals cap
};

// A graph is l-robust iff it stays connected after removing any edge set
// whose induced subgraph has max degree <= l; equivalently, iff no vertex
// bipartition has crossing max degree <= l. Decided exactly by enumerating
// the 2^(n-1) canonical bipartitions. Throws on capacity overflow.
RobustnessReport is_l_robust(const Graph& g, int l, const RobustLimits& lim = {});

// l-iron: connected after removing any such edge set together with any
// vertex set of size <= l. Exact over all removal sets and bipartitions.
RobustnessReport is_l_iron(const Graph& g, int l, const RobustLimits& lim = {});

// Exact island partition at level l.
IslandPartition islands(const Graph& g, int l, const RobustLimits& lim = {});

// Components of the ceil(19 alpha^2 n / 20)-codeg graph; the building blocks
// of every candidate continent partition.
struct CodegComponents {
    int codeg_threshold = 0;
    std::vector<VertexSet> components;
};
CodegComponents codeg_components(const Graph& g, const Rat& alpha, int max_components = 12);

// Lazily enumerates all groupings of the components into partitions, fewest
// blocks first and then lexicographically by restricted-growth assignment.
// The callback returns false to stop the enumeration.
void for_each_component_grouping(const std::vector<VertexSet>& components,
                                 const std::function<bool(const std::vector<VertexSet>&)>& cb);

// Number of set partitions of k elements (Bell number).
long long count_set_partitions(int k);

// Candidate continent partitions from the codegree surrogate: components of
// the codeg graph grouped in all possible ways, in enumeration order.
struct CodegCandidates {
    int codeg_threshold = 0;
    std::vector<VertexSet> components;
    std::vector<std::vector<VertexSet>> partitions;
};
CodegCandidates codeg_island_candidates(const Graph& g, const Rat& alpha,
                                        int max_components = 12);

// Iterated island decomposition: split at threshold alpha_i^4 n_i / 40
// (clamped to >= 1) until each block is robust at its level, re-verifying the
// valency guarantee (>= alpha_{i+1} n') before every further split with
// alpha_{i+1} = (4/3) alpha_i. Blocks of a vertex-transitive input come out
// pairwise isomorphic; verified exhaustively for block size <= 10 and by
// degree/codegree fingerprint above.
struct DecompositionBlock {
    VertexSet vertices;
    int verified_level = 0;  // robustness level the block was verified at
};
struct RobustDecomposition {
    std::vector<DecompositionBlock> blocks;
    bool isomorphic = false;
    bool fingerprint_only = false;  // isomorphism checked by fingerprint only
    std::string failure;            // nonempty when a valency re-check failed
};
RobustDecomposition robust_decomposition(const Graph& g, const Rat& alpha,
                                         const RobustLimits& lim = {});

// Pairwise isomorphism of small graphs: exhaustive backtracking for
// n <= exhaustive_limit, degree-sequence + codegree-multiset fingerprint
// beyond (sets *fingerprint_only when provided).
bool graphs_isomorphic(const Graph& a, const Graph& b, int exhaustive_limit = 10,
                       bool* fingerprint_only = nullptr);

// Builds the standard witness that r is not (2 sqrt(rho) k')-iron from sets
// satisfying the hypotheses: |l1| <= sqrt(rho) k', few edges from l2 to the
// outside, and disjoint outside sets w1, w2 with N(w2) inside l1 u l2 and
// min size > 2 sqrt(rho) k'. All comparisons against sqrt(rho) are done on
// squares. Returns true after validating the constructed cut; throws naming
// the violated hypothesis otherwise.
bool non_iron_witness_check(const Graph& r, const VertexSet& l1, const VertexSet& l2,
                            const VertexSet& w1, const VertexSet& w2, const Rat& rho);

// Strong connectivity after removal of any <= l vertices (a single surviving
// vertex counts as connected).
bool is_l_strongly_connected(const Digraph& d, int l, int exact_limit = 20);

// Shortest directed path from x to y; asserts the h-strong-connectivity
// length bound floor(n/h) + 1 and throws on violation or if no path exists.
std::vector<int> short_path(const Digraph& d, int h, int x, int y);

}  // namespace vth
