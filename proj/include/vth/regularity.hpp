#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vth/graph.hpp"
#include "vth/pathition.hpp"
#include "vth/rational.hpp"

namespace vth {

// Exceptional set V0 plus equal-size clusters V1..Vk. Supplied by callers and
// generators; never computed by a regularity algorithm here.
struct ClusterPartition {
    VertexSet exceptional;
    std::vector<VertexSet> clusters;
    int cluster_size = 0;
};
ClusterPartition make_cluster_partition(int n, const std::vector<VertexSet>& clusters);

// Exact regularity verdict for a bipartite pair, by enumerating every
// sub-pair (X, Y) with |X| >= eps|A|, |Y| >= eps|B|. regular means the
// eps-regularity subset condition holds; super_regular adds the per-vertex
// degree floors deg(a, B) >= d|B| and deg(b, A) >= d|A|.
struct PairWitness {
    VertexSet x, y;
    Rat density_xy;
};
struct PairCertificate {
    VertexSet a, b;
    Rat density;
    Rat epsilon;
    Rat d;
    bool regular = false;
    bool super_regular = false;
    std::optional<PairWitness> worst_witness;  // max deviation, when irregular
};
PairCertificate pair_certificate(const Graph& g, const VertexSet& a, const VertexSet& b,
                                 const Rat& eps, const Rat& d, int exact_limit = 12);

// Verifies the slicing property: a certified (eps,d)-regular pair with
// eps <= d/2 restricted to subsets of at least a third of each side is
// (3 eps, d/2)-regular. A false return is an internal-consistency alarm.
bool slice_check(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& a_sub,
                 const VertexSet& b_sub, const Rat& eps, const Rat& d, int exact_limit = 12);

// Moves exactly ceil(eps m) vertices from every cluster into V0; matched
// clusters lose their vertices of smallest degree into the partner (ties by
// label), unmatched ones lose their smallest labels. Asserts each matched
// pair is (2 eps, d/2)-super-regular afterwards; failed assertions are
// reported as alarms, not thrown.
struct SuperRegularizeResult {
    ClusterPartition partition;
    std::vector<PairCertificate> pair_certificates;  // one per matching edge
    std::vector<std::string> alarms;
};
SuperRegularizeResult super_regularize(const Graph& g, const ClusterPartition& p,
                                       const std::vector<std::pair<int, int>>& matching,
                                       const Rat& eps, const Rat& d, int exact_limit = 12);

// Constructive ideal builder. Grows a* one vertex at a time, always taking
// the vertex of A \ a* with the largest total unhappiness weight over its
// unhappy neighbors, where a vertex of B with k < ceil(theta d m / 4)
// neighbors in a* has unhappiness sum_{r=k+1}^{T} 2^-r (exact dyadics). After
// ceil(theta m) steps every b must have deg(b, a*) >= T; a symmetric pass
// builds b*. Post-condition failures are reported as alarms.
struct IdealResult {
    VertexSet a_star, b_star;
    long long target_degree = 0;  // T = ceil(theta d m / 4)
    // Total unhappiness per step, scaled by 2^T (integers; non-increasing).
    std::vector<long long> unhappiness_trace_a, unhappiness_trace_b;
    std::vector<std::string> alarms;
};
IdealResult build_ideal(const Graph& g, const VertexSet& a, const VertexSet& b, const Rat& theta,
                        const Rat& d);

// Verifies that (a', b') is (eps*, d*)-super-regular for the given sandwich
// a* <= a' <= a, b* <= b' <= b. Containment violations throw.
bool ideal_containment_check(const Graph& g, const VertexSet& a, const VertexSet& b,
                             const VertexSet& a_star, const VertexSet& b_star,
                             const VertexSet& a_sub, const VertexSet& b_sub, const Rat& eps_star,
                             const Rat& d_star, int exact_limit = 12);

// Cluster graph: V_i V_j is an edge precisely when the pair has density at
// least d. In exact mode every pair is also certified at eps and irregular
// pairs are reported; density-only mode skips certification and flags itself.
struct ReducedGraphResult {
    Graph graph;  // on cluster indices
    bool density_only = false;
    std::vector<std::pair<int, int>> irregular_pairs;
};
ReducedGraphResult reduced_graph(const Graph& g, const ClusterPartition& p, const Rat& eps,
                                 const Rat& d, bool density_only = false, int exact_limit = 12);

// Hamilton path from x in a to y in b inside the bipartite cross graph of the
// pair (sides must balance; the path alternates sides). Desk-scale failures
// are legitimate verdicts, not errors.
PathitionResult hamilton_path_in_pair(const Graph& g, const VertexSet& a, const VertexSet& b,
                                      int x, int y);

// Shifted digraph over clusters: for every base edge uv that is not a
// matching pair, arcs partner(v) -> u and partner(u) -> v. Equivalently, the
// three arc families {B_j A_i, B_i A_j : A_i A_j}, {A_j B_i, A_i B_j :
// B_i B_j} and {A_j A_i, B_i B_j : A_i B_j, i != j}.
struct ShiftedDigraph {
    Digraph digraph;
    std::vector<std::pair<int, int>> matching;  // (A_i, B_i) orientation
    std::vector<int> partner;                   // partner per cluster
};
ShiftedDigraph shifted_digraph(const Graph& r2, const std::vector<std::pair<int, int>>& matching);

// Interleaves the partners into a directed path of the shifted digraph:
// X1..Xt becomes X1 Y1 X2 Y2 .. Xt Yt. Asserts that consecutive clusters of
// the output walk are adjacent in the source reduced graph (partner pairs
// excepted, which are matching edges).
std::vector<int> zigzag_lift(const std::vector<int>& r_star_path, const ShiftedDigraph& sd,
                             const Graph& r2);

}  // namespace vth
