#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vth/bipartite.hpp"
#include "vth/graph.hpp"

namespace vth {

// Prescribed terminals for a spanning path system: the 2l' endpoints are
// distinct and avoid the exceptional set. Interior vertices may enter the
// exceptional set; the system must still cover every vertex of the graph.
struct EndpointRequest {
    std::vector<std::pair<int, int>> pairs;
    VertexSet exceptional;
};

// Vertex-disjoint paths; path i runs from pairs[i].first to pairs[i].second.
struct PathSystem {
    std::vector<std::vector<int>> paths;
    std::vector<std::pair<int, int>> endpoints;
};

enum class PathitionVerdict { feasible, infeasible, parity_violation, unknown };

struct PathitionResult {
    PathitionVerdict verdict;
    std::optional<PathSystem> system;
    std::string note;            // engine and budget information
    long long nodes_explored = 0;
};

struct PathitionLimits {
    int dp_limit = 18;               // complete subset-DP engine
    int backtrack_limit = 24;        // budgeted backtracking engine
    long long node_budget = 2000000; // backtracking node cap
};

// Spanning system of vertex-disjoint paths with the prescribed endpoints, or
// a definitive infeasibility verdict. The DP engine is complete; the
// backtracking engine returns unknown on budget exhaustion. Invalid requests
// (duplicate endpoints, endpoint inside the exceptional set, no pairs) throw.
PathitionResult pathition(const Graph& g, const EndpointRequest& req,
                          const PathitionLimits& lim = {});

// Same search, but the terminals must balance across the bipartition
// (|endpoints in A| = |endpoints in B|); imbalance short-circuits to
// parity_violation without searching. Paths may use any edges of g.
PathitionResult bipathition(const Graph& g, const Bipartition& p, const EndpointRequest& req,
                            const PathitionLimits& lim = {});

// Checks the path-system invariants against a request: per-index endpoints,
// disjointness, adjacency, and coverage of V when spanning is demanded.
// Interior vertices are allowed inside the exceptional set.
struct VerifyResult {
    bool ok = true;
    std::vector<std::string> reasons;
};
VerifyResult verify_path_system(const Graph& g, const EndpointRequest& req, const PathSystem& s,
                                bool spanning);

// s' extends s: per-index vertex-set containment, identical ordered
// endpoints, and s' pairwise disjoint.
VerifyResult is_extension(const PathSystem& s, const PathSystem& s_prime);

}  // namespace vth
