#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vth/bipartite.hpp"
#include "vth/graph.hpp"
#include "vth/pathition.hpp"
#include "vth/rational.hpp"
#include "vth/robustness.hpp"
#include "vth/vt_instances.hpp"

namespace vth {

// Equal-size blocks covering V; the units the gluing schemes operate on.
struct ContinentPartition {
    std::vector<VertexSet> blocks;
    int block_size = 0;
};
ContinentPartition make_continents(int n, const std::vector<VertexSet>& blocks);

// Block-pair analysis: a pair is fat when its crossing matching reaches
// ceil(m/r); pairs with crossing edges but a smaller matching are thin.
struct FatPairsResult {
    Graph h;  // on block indices, edges = fat pairs
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> matchings;
    std::vector<std::pair<int, int>> thin_pairs;
    int threshold = 0;
};
FatPairsResult fat_pairs(const Graph& g, const ContinentPartition& p);

// True iff no thin pair exists (a regression invariant for vertex-transitive
// inputs that passed decomposition).
bool thin_pair_audit(const Graph& g, const ContinentPartition& p);

// Maximum bipartite matching between two disjoint vertex sets of g, by
// augmenting paths in ascending label order.
std::vector<std::pair<int, int>> max_bipartite_matching(const Graph& g, const VertexSet& left,
                                                        const VertexSet& right);

// Two connector edges per spanning-tree edge, picked greedily (tree edges in
// BFS order, matching edges ascending) so the union is a matching avoiding
// the exceptional sets. x endpoints lie in the child block, y in the parent.
struct TreeConnector {
    int child = -1, parent = -1;
    std::pair<int, int> minus_edge;  // (x-, y-)
    std::pair<int, int> plus_edge;   // (x+, y+)
};
struct ConnectorSelection {
    std::vector<TreeConnector> connectors;
    std::string failure;  // names the starved tree edge on failure
};
ConnectorSelection select_connectors_case1(const Graph& g, const ContinentPartition& p,
                                           const std::vector<int>& tree_parent,
                                           const FatPairsResult& fat,
                                           const VertexSet& exceptional);

// Gluing along a spanning tree: one pathition request per block in one of
// three shapes (root cycles through its children's connector ends, leaves
// take a Hamilton path between their two connector ends, internal blocks
// chain parent and children ends), then concatenation with the connectors.
struct AssemblyResult {
    std::optional<std::vector<int>> cycle;
    std::vector<std::pair<int, int>> connector_edges;  // on the cycle, on success
    std::string failure_stage;   // empty on success
    std::string failure_detail;
    std::vector<std::string> notes;
};
AssemblyResult assemble_case1(const Graph& g, const ContinentPartition& p,
                              const std::vector<int>& tree_parent,
                              const std::vector<TreeConnector>& connectors,
                              const VertexSet& exceptional, const PathitionLimits& lim);

// Bicontinents, bifat graph, doubled multigraph, Eulerian circuit.
struct BifatStructure {
    std::vector<VertexSet> bicontinents;  // 2i = A_i, 2i+1 = B_i
    Graph h;                              // on bicontinent indices
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> matchings;
    std::vector<std::pair<int, int>> bithin_pairs;
    std::vector<int> circuit;  // closed Eulerian walk on H', front() == back()
    bool degree_parity_ok = false;  // deg_{H'}(A_i) == deg_{H'}(B_i) for all i
    int threshold = 0;
    std::string failure;
};
BifatStructure bifat_structure(const Graph& g, const ContinentPartition& p,
                               const std::vector<Bipartition>& block_bipartitions);

// Gluing along the Eulerian circuit: one connector edge per circuit step (two
// distinct edges per bifat edge), one bipathition request per block holding
// one endpoint pair per visit of each of its bicontinents.
AssemblyResult assemble_case2(const Graph& g, const ContinentPartition& p,
                              BifatStructure& structure, const VertexSet& exceptional,
                              const PathitionLimits& lim);

// True iff the sequence visits every vertex exactly once and consecutive
// vertices (cyclically) are adjacent.
bool verify_hamilton_cycle(const Graph& g, const std::vector<int>& cycle);

struct PipelineConfig {
    Rat alpha{1, 2};
    Rat c{1, 18};
    PathitionLimits path_limits;
    RobustLimits robust_limits;
    int bipartite_exact_limit = 22;
    int max_components = 12;
    VertexSet exceptional;  // protected vertices; empty by default
};

struct CandidateRecord {
    std::vector<std::vector<int>> blocks;
    std::string stage;    // furthest stage reached
    std::string outcome;  // "success" or the rejection reason
    std::vector<std::string> notes;
    std::vector<std::pair<int, int>> connectors;  // filled on gluing success
};

struct PipelineReport {
    int n = 0, m = 0;
    std::string alpha, c;
    std::vector<std::string> advisories;
    int codeg_threshold = -1;
    std::vector<std::vector<int>> codeg_components;
    std::vector<CandidateRecord> candidates;  // evaluated candidates, in order
    long long candidates_not_evaluated = 0;   // enumeration stopped after success
    bool success = false;
    int winning_candidate = -1;
    std::vector<int> cycle;
    std::string failure_stage, failure_reason;
};

// End-to-end pipeline: codeg component groupings as continent candidates
// (fewest blocks first), per-candidate structural checks, bipartite verdicts,
// then the r = 1 shortcut or one of the two gluing schemes. First candidate
// to produce a verified Hamilton cycle wins; the report records every
// candidate either way.
PipelineReport find_hamilton_cycle(const Graph& g, const AutomorphismWitness& w,
                                   const PipelineConfig& config = {});

}  // namespace vth
