#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vth/graph.hpp"

namespace vth {

// A bijection on 0..n-1.
struct Permutation {
    std::vector<int> image;

    Permutation() = default;
    explicit Permutation(std::vector<int> img);
    static Permutation identity(int n);

    int n() const { return (int)image.size(); }
    int operator()(int v) const { return image[v]; }
    // this composed-after other: (a*b)(v) = a(b(v)).
    Permutation operator*(const Permutation& o) const;
    Permutation inverse() const;
    bool operator==(const Permutation& o) const { return image == o.image; }
    bool operator<(const Permutation& o) const { return image < o.image; }
};

// Generators of a permutation group acting on the vertices of a target graph.
// Certifies vertex-transitivity via orbit closure; the full group is never
// materialized.
struct AutomorphismWitness {
    std::vector<Permutation> generators;
};

struct WitnessVerdict {
    enum Kind { transitive, intransitive, not_automorphism } kind;
    std::vector<std::vector<int>> orbits;  // filled for intransitive
    int bad_generator = -1;                // filled for not_automorphism
};

// Checks each generator is an automorphism of g, then computes orbits of the
// generated group by BFS closure. Throws if a generator length mismatches n.
WitnessVerdict verify_witness(const Graph& g, const AutomorphismWitness& w);

// Orbit partition of 0..n-1 under the group generated by the permutations.
std::vector<std::vector<int>> orbit_partition(int n, const std::vector<Permutation>& gens);

// A finite group together with a connection set, describing a Cayley graph.
// The group is given either as a full multiplication table on 0..order-1 or
// as permutation generators (elements are then indexed in BFS-closure order,
// identity first, products explored by ascending generator).
struct CayleySpec {
    int order = 0;
    std::vector<std::vector<int>> table;      // empty if perm form
    std::vector<Permutation> perm_generators; // empty if table form
    std::vector<int> connection_ids;          // table form: element ids
    std::vector<Permutation> connection_perms;// perm form: explicit elements

    static CayleySpec from_table(std::vector<std::vector<int>> table,
                                 std::vector<int> connection_ids);
    static CayleySpec from_permutations(std::vector<Permutation> gens,
                                        std::vector<Permutation> connection);
    static CayleySpec cyclic(int n, std::vector<int> offsets);
};

struct GeneratedInstance {
    Graph graph;
    AutomorphismWitness witness;
};

// Vertices = group elements, g adjacent to g*s for s in the connection set.
// Witness = left translations by a generating set of the group. Validates the
// group axioms, inverse-closure of S and identity not in S; throws a
// structured invalid_argument otherwise.
GeneratedInstance cayley_graph(const CayleySpec& spec);

// Circulant graph on Z_n with the given offsets (closed under negation
// automatically). Witness: the rotation. Requires n >= 3.
GeneratedInstance circulant(int n, const std::vector<int>& offsets);

// Two disjoint cliques of order n/2 joined by the perfect matching
// i <-> i + n/2. Requires n even, n >= 4.
GeneratedInstance double_clique(int n);

// Witness for an l-blow-up, lifted from a witness of the base graph plus a
// cyclic shift inside class 0.
AutomorphismWitness blow_up_witness(const AutomorphismWitness& base, int l);

// Named fixtures: petersen, coxeter, k_n, k_nn, c_n, q3. The parameter feeds
// the parameterized families (k_n(5) = K5, k_nn(3) = K_{3,3}, c_n(7) = C7).
// Witness present for every fixture except coxeter.
struct Fixture {
    Graph graph;
    std::optional<AutomorphismWitness> witness;
};
Fixture fixture(const std::string& name, int param = 0);

}  // namespace vth
