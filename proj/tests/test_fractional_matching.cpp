#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vth/fractional_matching.hpp"
#include "vth/graph.hpp"
#include "vth/vt_instances.hpp"

using namespace vth;

namespace {

Graph cyc(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

}  // namespace

TEST_CASE("nu_star on basic graphs") {
    auto c5 = nu_star(cyc(5));
    CHECK(c5.value == Rat(5, 2));
    CHECK(c5.witness.half_integral());
    CHECK(c5.witness.feasible_on(cyc(5)));
    CHECK(c5.witness.total() == Rat(5, 2));

    CHECK(nu_star(complete(4)).value == Rat(2));

    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(nu_star(star).value == Rat(1));
}

TEST_CASE("fvc on basic graphs") {
    auto pet = fixture("petersen").graph;
    auto cover = fvc(pet);
    CHECK(cover.value == Rat(5));
    CHECK(cover.witness.covers(pet));
    CHECK(cover.witness.total() == Rat(5));

    CHECK(fvc(complete(2)).value == Rat(1));

    Graph empty(5, {});
    auto e = fvc(empty);
    CHECK(e.value == Rat(0));
    for (const auto& v : e.witness.values) CHECK(v == Rat(0));
}

TEST_CASE("duality holds exactly on random graphs") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + (int)(rng() % 13);
        auto g = oracle::random_graph(rng, n, 0.4);
        auto m = nu_star(g);
        auto c = fvc(g);
        REQUIRE(m.value == c.value);
        CHECK(m.witness.half_integral());
        CHECK(m.witness.feasible_on(g));
        CHECK(c.witness.covers(g));
        CHECK(m.witness.total() == m.value);
        CHECK(c.witness.total() == c.value);
    }
}

TEST_CASE("nu_star agrees with the shape-enumeration oracle") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 25; ++t) {
        int n = 3 + (int)(rng() % 7);
        auto g = oracle::random_graph(rng, n, 0.35);
        Rat expect(oracle::nu_star_doubled(g), 2);
        CHECK(nu_star(g).value == expect);
    }
    CHECK(nu_star(fixture("petersen").graph).value ==
          Rat(oracle::nu_star_doubled(fixture("petersen").graph), 2));
}

TEST_CASE("fvc is n/2 on vertex-transitive fixtures") {
    auto check_half = [](const Graph& g) { CHECK(fvc(g).value == Rat(g.n, 2)); };
    check_half(fixture("petersen").graph);
    check_half(fixture("q3").graph);
    check_half(double_clique(8).graph);
    check_half(circulant(9, {1, 2}).graph);
    check_half(blow_up(cyc(5), 2));
}

TEST_CASE("blow-up matching lift") {
    // All-half weights on C5 lift to a matching of size 5.
    Graph c5 = cyc(5);
    auto m = nu_star(c5);
    auto lifted = lift_blowup_matching(c5, m.witness);
    CHECK(lifted.size() == 5);
    Graph b = blow_up(c5, 2);
    for (auto [u, v] : lifted) CHECK(b.has_edge(u, v));

    // A single weight-1 edge doubles into the two parallel copies.
    Graph k2 = complete(2);
    FractionalMatching one;
    one.n = 2;
    one.weights[{0, 1}] = Rat(1);
    auto l2 = lift_blowup_matching(k2, one);
    CHECK(l2 == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});

    // Path a-b-c with both edges at weight 1/2, the j+s parity rule.
    Graph p3(3, {{0, 1}, {1, 2}});
    FractionalMatching halves;
    halves.n = 3;
    halves.weights[{0, 1}] = Rat(1, 2);
    halves.weights[{1, 2}] = Rat(1, 2);
    auto l3 = lift_blowup_matching(p3, halves);
    CHECK(l3.size() == 2);
    CHECK(l3 == std::vector<std::pair<int, int>>{{0, 2}, {3, 5}});

    // Infeasible and non-half-integral inputs are rejected.
    FractionalMatching bad;
    bad.n = 3;
    bad.weights[{0, 1}] = Rat(1);
    bad.weights[{1, 2}] = Rat(1);
    CHECK_THROWS(lift_blowup_matching(p3, bad));
    FractionalMatching third;
    third.n = 3;
    third.weights[{0, 1}] = Rat(1, 3);
    CHECK_THROWS(lift_blowup_matching(p3, third));
}

TEST_CASE("lift weight is exactly doubled on optimal witnesses") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 30; ++t) {
        int n = 3 + (int)(rng() % 8);
        auto g = oracle::random_graph(rng, n, 0.4);
        auto m = nu_star(g);
        auto lifted = lift_blowup_matching(g, m.witness);
        CHECK(Rat((long long)lifted.size()) == Rat(2) * m.value);
        // Valid matching in the 2-blow-up.
        Graph b = blow_up(g, 2);
        std::vector<char> used(b.n, 0);
        for (auto [u, v] : lifted) {
            CHECK(b.has_edge(u, v));
            CHECK(!used[u]);
            CHECK(!used[v]);
            used[u] = used[v] = 1;
        }
    }
}

TEST_CASE("projection folds a blow-up matching back") {
    Graph c5 = cyc(5);
    auto m = nu_star(c5);
    auto lifted = lift_blowup_matching(c5, m.witness);
    Graph b = blow_up(c5, 2);
    FractionalMatching lifted_fm;
    lifted_fm.n = b.n;
    for (auto [u, v] : lifted) lifted_fm.weights[{u, v}] = Rat(1);
    std::vector<int> class_of(b.n);
    for (int v = 0; v < b.n; ++v) class_of[v] = v / 2;
    auto folded = project_matching(b, c5, class_of, 2, lifted_fm);
    CHECK(folded.total() == Rat(5, 2));
    for (const auto& [e, w] : folded.weights) CHECK(w == Rat(1, 2));
    CHECK(folded.feasible_on(c5));

    // Zero matching folds to zero.
    FractionalMatching zero;
    zero.n = b.n;
    CHECK(project_matching(b, c5, class_of, 2, zero).total() == Rat(0));

    // Identity embedding with class size 1 is a no-op.
    std::vector<int> ident(c5.n);
    for (int v = 0; v < c5.n; ++v) ident[v] = v;
    auto same = project_matching(c5, c5, ident, 1, m.witness);
    CHECK(same.total() == m.value);
    CHECK(same.weights == m.witness.weights);

    // Edges that ignore base adjacency are rejected.
    Graph bad(4, {{0, 1}, {2, 3}, {0, 2}});
    std::vector<int> cls{0, 0, 1, 1};
    FractionalMatching fm;
    fm.n = 4;
    CHECK_THROWS(project_matching(bad, complete(2), cls, 2, fm));
}

TEST_CASE("projection feasibility and weight on random instances") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 20; ++t) {
        int n = 3 + (int)(rng() % 5);
        auto base = oracle::random_graph(rng, n, 0.5);
        int l = 2 + (int)(rng() % 2);
        Graph b = blow_up(base, l);
        auto m = nu_star(b);
        std::vector<int> class_of(b.n);
        for (int v = 0; v < b.n; ++v) class_of[v] = v / l;
        auto folded = project_matching(b, base, class_of, l, m.witness);
        CHECK(folded.feasible_on(base));
        CHECK(folded.total() == m.value / Rat(l));
    }
}

TEST_CASE("cover bound under edge deletion") {
    auto c5 = circulant(5, {1});
    Graph c5_minus(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(cover_after_deletion_check(c5.graph, c5.witness, c5_minus, Rat(1, 5)));

    auto k4 = fixture("k_n", 4);
    CHECK(cover_after_deletion_check(k4.graph, *k4.witness, k4.graph, Rat(0)));

    // Petersen minus its spoke matching keeps both 5-cycles.
    auto pet = fixture("petersen");
    std::vector<std::pair<int, int>> kept;
    for (auto [u, v] : pet.graph.edges)
        if (v != u + 5) kept.emplace_back(u, v);
    Graph pruned(10, std::move(kept));
    CHECK(cover_after_deletion_check(pet.graph, *pet.witness, pruned, Rat(1, 3)));

    // Not a spanning subgraph.
    Graph other(5, {{0, 2}});
    CHECK_THROWS(cover_after_deletion_check(c5.graph, c5.witness, other, Rat(1, 2)));
}

TEST_CASE("cover bound holds across random vertex-transitive instances") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 15; ++t) {
        int n = 6 + (int)(rng() % 7);
        auto inst = circulant(n, {1, 2});
        // Delete a random sample of at most a fifth of the edges.
        std::vector<std::pair<int, int>> kept;
        int allowance = inst.graph.m() / 5;
        for (auto e : inst.graph.edges) {
            if (allowance > 0 && rng() % 5 == 0) {
                --allowance;
                continue;
            }
            kept.push_back(e);
        }
        Graph pruned(n, std::move(kept));
        CHECK(cover_after_deletion_check(inst.graph, inst.witness, pruned, Rat(1, 5)));
    }
}
