#include <doctest.h>

#include "oracles.hpp"
#include "vth/assembly.hpp"
#include "vth/graph.hpp"
#include "vth/io.hpp"
#include "vth/vt_instances.hpp"

using namespace vth;

namespace {

Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

VertexSet range_set(int n, int from, int to) {
    VertexSet s(n);
    for (int v = from; v < to; ++v) s.add(v);
    return s;
}

// Three K4 blocks chained by consecutive perfect matchings.
Graph three_chain() {
    std::vector<std::pair<int, int>> e;
    for (int b = 0; b < 3; ++b)
        for (int u = 4 * b; u < 4 * b + 4; ++u)
            for (int v = u + 1; v < 4 * b + 4; ++v) e.emplace_back(u, v);
    for (int i = 0; i < 4; ++i) {
        e.emplace_back(i, i + 4);
        e.emplace_back(i + 4, i + 8);
    }
    return Graph(12, std::move(e));
}

// Two K_{6,6} blocks joined by two parity-respecting 4-matchings; bipartite,
// with blocks rich enough for the circuit gluing.
struct CrossedPair {
    Graph g;
    AutomorphismWitness witness;
    ContinentPartition continents;
    std::vector<Bipartition> bips;
};
CrossedPair crossed_k66_pair() {
    std::vector<std::pair<int, int>> e;
    for (int b = 0; b < 2; ++b)
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) e.emplace_back(12 * b + i, 12 * b + 6 + j);
    for (int i = 0; i < 4; ++i) {
        e.emplace_back(i, 18 + i);      // A1 -> B2
        e.emplace_back(6 + i, 12 + i);  // B1 -> A2
    }
    CrossedPair out{Graph(24, std::move(e)), {}, {}, {}};
    std::vector<int> swap_img(24);
    for (int v = 0; v < 24; ++v) swap_img[v] = (v + 12) % 24;
    out.witness.generators.emplace_back(std::move(swap_img));
    out.continents = make_continents(24, {range_set(24, 0, 12), range_set(24, 12, 24)});
    for (int b = 0; b < 2; ++b) {
        Bipartition bip;
        bip.a = range_set(24, 12 * b, 12 * b + 6);
        bip.b = range_set(24, 12 * b + 6, 12 * b + 12);
        out.bips.push_back(bip);
    }
    return out;
}

}  // namespace

TEST_CASE("continent partition validation") {
    CHECK_THROWS(make_continents(4, {}));
    CHECK_THROWS(make_continents(4, {VertexSet::of(4, {0, 1}), VertexSet::of(4, {2})}));
    CHECK_THROWS(make_continents(4, {VertexSet::of(4, {0, 1}), VertexSet::of(4, {1, 2})}));
    auto p = make_continents(4, {VertexSet::of(4, {0, 1}), VertexSet::of(4, {2, 3})});
    CHECK(p.block_size == 2);
}

TEST_CASE("maximum bipartite matching between vertex sets") {
    auto dc = double_clique(8).graph;
    auto m = max_bipartite_matching(dc, range_set(8, 0, 4), range_set(8, 4, 8));
    CHECK(m.size() == 4);

    // A star from one vertex has matching number 1 however many edges cross.
    Graph star(8, {{0, 4}, {0, 5}, {0, 6}, {1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
    CHECK(max_bipartite_matching(star, range_set(8, 0, 4), range_set(8, 4, 8)).size() == 1);
}

TEST_CASE("fat and thin pairs") {
    auto dc = double_clique(8).graph;
    auto p = make_continents(8, {range_set(8, 0, 4), range_set(8, 4, 8)});
    auto fat = fat_pairs(dc, p);
    CHECK(fat.threshold == 2);
    CHECK(fat.h.m() == 1);
    CHECK(fat.matchings.at({0, 1}).size() == 4);
    CHECK(fat.thin_pairs.empty());
    CHECK(thin_pair_audit(dc, p));

    // Blocks with no crossing edges contribute nothing.
    Graph two_k4(8, [] {
        std::vector<std::pair<int, int>> e;
        for (int b = 0; b < 2; ++b)
            for (int u = 4 * b; u < 4 * b + 4; ++u)
                for (int v = u + 1; v < 4 * b + 4; ++v) e.emplace_back(u, v);
        return e;
    }());
    auto fat2 = fat_pairs(two_k4, p);
    CHECK(fat2.h.m() == 0);
    CHECK(fat2.thin_pairs.empty());
    CHECK(thin_pair_audit(two_k4, p));

    // Star-joined blocks: crossing edges exist but only a size-1 matching.
    Graph star(8, [] {
        std::vector<std::pair<int, int>> e;
        for (int b = 0; b < 2; ++b)
            for (int u = 4 * b; u < 4 * b + 4; ++u)
                for (int v = u + 1; v < 4 * b + 4; ++v) e.emplace_back(u, v);
        e.emplace_back(0, 4);
        e.emplace_back(0, 5);
        e.emplace_back(0, 6);
        return e;
    }());
    auto fat3 = fat_pairs(star, p);
    CHECK(fat3.h.m() == 0);
    CHECK(fat3.thin_pairs == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(!thin_pair_audit(star, p));
}

TEST_CASE("connector selection for the tree gluing") {
    auto dc = double_clique(12).graph;
    auto p = make_continents(12, {range_set(12, 0, 6), range_set(12, 6, 12)});
    auto fat = fat_pairs(dc, p);
    std::vector<int> tree{-1, 0};
    auto sel = select_connectors_case1(dc, p, tree, fat, VertexSet(12));
    REQUIRE(sel.failure.empty());
    REQUIRE(sel.connectors.size() == 1);
    CHECK(sel.connectors[0].minus_edge == std::pair<int, int>{6, 0});
    CHECK(sel.connectors[0].plus_edge == std::pair<int, int>{7, 1});

    // An exceptional endpoint pushes the greedy to the next matching edge.
    VertexSet except(12);
    except.add(0);
    auto sel2 = select_connectors_case1(dc, p, tree, fat, except);
    REQUIRE(sel2.failure.empty());
    CHECK(sel2.connectors[0].minus_edge == std::pair<int, int>{7, 1});
    CHECK(sel2.connectors[0].plus_edge == std::pair<int, int>{8, 2});

    // Tiny matchings starve the greedy selection.
    Graph thin(8, [] {
        std::vector<std::pair<int, int>> e;
        for (int b = 0; b < 2; ++b)
            for (int u = 4 * b; u < 4 * b + 4; ++u)
                for (int v = u + 1; v < 4 * b + 4; ++v) e.emplace_back(u, v);
        e.emplace_back(0, 4);
        return e;
    }());
    auto p8 = make_continents(8, {range_set(8, 0, 4), range_set(8, 4, 8)});
    FatPairsResult fake;
    fake.threshold = 1;
    fake.h = Graph(2, {{0, 1}});
    fake.matchings[{0, 1}] = {{0, 4}};
    auto sel3 = select_connectors_case1(thin, p8, tree, fake, VertexSet(8));
    CHECK(!sel3.failure.empty());
    CHECK(sel3.failure.find("starvation") != std::string::npos);
}

TEST_CASE("connectors form a matching avoiding the exceptional set") {
    auto g = three_chain();
    auto p = make_continents(
        12, {range_set(12, 0, 4), range_set(12, 4, 8), range_set(12, 8, 12)});
    auto fat = fat_pairs(g, p);
    std::vector<int> tree{-1, 0, 1};
    VertexSet except(12);
    except.add(3);
    auto sel = select_connectors_case1(g, p, tree, fat, except);
    REQUIRE(sel.failure.empty());
    std::vector<char> used(12, 0);
    for (const auto& tc : sel.connectors)
        for (auto [x, y] : {tc.minus_edge, tc.plus_edge}) {
            CHECK(!except.contains(x));
            CHECK(!except.contains(y));
            CHECK(!used[x]);
            CHECK(!used[y]);
            used[x] = used[y] = 1;
            CHECK(g.has_edge(x, y));
        }
}

TEST_CASE("tree gluing produces verified cycles") {
    for (int n : {8, 12}) {
        auto dc = double_clique(n).graph;
        auto p = make_continents(n, {range_set(n, 0, n / 2), range_set(n, n / 2, n)});
        auto fat = fat_pairs(dc, p);
        std::vector<int> tree{-1, 0};
        auto sel = select_connectors_case1(dc, p, tree, fat, VertexSet(n));
        REQUIRE(sel.failure.empty());
        auto res = assemble_case1(dc, p, tree, sel.connectors, VertexSet(n), {});
        REQUIRE(res.cycle.has_value());
        CHECK(verify_hamilton_cycle(dc, *res.cycle));
    }
}

TEST_CASE("tree gluing exercises the internal-block role") {
    auto g = three_chain();
    auto p = make_continents(
        12, {range_set(12, 0, 4), range_set(12, 4, 8), range_set(12, 8, 12)});
    auto fat = fat_pairs(g, p);
    CHECK(fat.h.m() == 2);  // a path of fat edges
    std::vector<int> tree{-1, 0, 1};
    auto sel = select_connectors_case1(g, p, tree, fat, VertexSet(12));
    REQUIRE(sel.failure.empty());
    auto res = assemble_case1(g, p, tree, sel.connectors, VertexSet(12), {});
    REQUIRE(res.cycle.has_value());
    CHECK(verify_hamilton_cycle(g, *res.cycle));
}

TEST_CASE("bifat structure") {
    auto fixture = crossed_k66_pair();
    auto st = bifat_structure(fixture.g, fixture.continents, fixture.bips);
    REQUIRE(st.failure.empty());
    CHECK(st.bicontinents.size() == 4);
    CHECK(st.threshold == 3);
    CHECK(st.h.m() == 4);  // the 4-cycle A1-B1-A2-B2
    CHECK(st.degree_parity_ok);
    CHECK(st.circuit.size() == 2 * st.h.m() + 1);
    CHECK(st.circuit.front() == st.circuit.back());
    for (size_t i = 0; i + 1 < st.circuit.size(); ++i)
        CHECK(st.h.has_edge(st.circuit[i], st.circuit[i + 1]));
    // Visit counts sum to the circuit length, and the doubled degrees are
    // all even by construction.
    std::vector<int> visits(st.bicontinents.size(), 0);
    for (size_t i = 0; i + 1 < st.circuit.size(); ++i) ++visits[st.circuit[i]];
    int total = 0;
    for (size_t x = 0; x < visits.size(); ++x) {
        CHECK(visits[x] == st.h.degree((int)x));  // = deg_{H'}(x) / 2
        total += visits[x];
    }
    CHECK(total == (int)st.circuit.size() - 1);

    // Single bipartite block: the doubled pairing edge alone.
    Graph k44(8, [] {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) e.emplace_back(i, 4 + j);
        return e;
    }());
    auto p1 = make_continents(8, {range_set(8, 0, 8)});
    Bipartition bip;
    bip.a = range_set(8, 0, 4);
    bip.b = range_set(8, 4, 8);
    auto st1 = bifat_structure(k44, p1, {bip});
    REQUIRE(st1.failure.empty());
    CHECK(st1.h.m() == 1);
    CHECK(st1.circuit == std::vector<int>{0, 1, 0});

    // Bicontinents with no bifat edges disconnect the structure graph.
    Graph sparse(8, {{0, 4}, {0, 5}, {0, 6}});
    auto st2 = bifat_structure(sparse, p1, {bip});
    CHECK(st2.failure == "bifat_connectivity");
}

TEST_CASE("circuit gluing on a single bipartite block") {
    Graph k44(8, [] {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) e.emplace_back(i, 4 + j);
        return e;
    }());
    auto p = make_continents(8, {range_set(8, 0, 8)});
    Bipartition bip;
    bip.a = range_set(8, 0, 4);
    bip.b = range_set(8, 4, 8);
    auto st = bifat_structure(k44, p, {bip});
    REQUIRE(st.failure.empty());
    auto res = assemble_case2(k44, p, st, VertexSet(8), {});
    REQUIRE(res.cycle.has_value());
    CHECK(verify_hamilton_cycle(k44, *res.cycle));
}

TEST_CASE("circuit gluing across two bipartite blocks") {
    auto fixture = crossed_k66_pair();
    auto st = bifat_structure(fixture.g, fixture.continents, fixture.bips);
    REQUIRE(st.failure.empty());
    auto res = assemble_case2(fixture.g, fixture.continents, st, VertexSet(24), {});
    REQUIRE(res.cycle.has_value());
    CHECK(verify_hamilton_cycle(fixture.g, *res.cycle));
}

TEST_CASE("tree gluing with a branching root") {
    // Root K4 with two leaf children; the root template cycles through both.
    std::vector<std::pair<int, int>> e;
    for (int b = 0; b < 3; ++b)
        for (int u = 4 * b; u < 4 * b + 4; ++u)
            for (int v = u + 1; v < 4 * b + 4; ++v) e.emplace_back(u, v);
    for (int i = 0; i < 4; ++i) {
        e.emplace_back(i, i + 4);
        e.emplace_back(i, i + 8);
    }
    Graph g(12, std::move(e));
    auto p = make_continents(
        12, {range_set(12, 0, 4), range_set(12, 4, 8), range_set(12, 8, 12)});
    auto fat = fat_pairs(g, p);
    REQUIRE(fat.h.has_edge(0, 1));
    REQUIRE(fat.h.has_edge(0, 2));
    std::vector<int> tree{-1, 0, 0};
    auto sel = select_connectors_case1(g, p, tree, fat, VertexSet(12));
    REQUIRE(sel.failure.empty());
    REQUIRE(sel.connectors.size() == 2);
    auto res = assemble_case1(g, p, tree, sel.connectors, VertexSet(12), {});
    REQUIRE(res.cycle.has_value());
    CHECK(verify_hamilton_cycle(g, *res.cycle));
}

TEST_CASE("tree gluing reports infeasible blocks") {
    // Leaf block is a 4-cycle whose two connector ends land on opposite
    // corners; no Hamilton path joins them, and the failure names the stage.
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) e.emplace_back(u, v);
    e.insert(e.end(), {{4, 5}, {5, 6}, {6, 7}, {4, 7}});
    e.emplace_back(0, 4);
    e.emplace_back(1, 6);
    Graph g(8, std::move(e));
    auto p = make_continents(8, {range_set(8, 0, 4), range_set(8, 4, 8)});
    auto fat = fat_pairs(g, p);
    REQUIRE(fat.h.m() == 1);
    std::vector<int> tree{-1, 0};
    auto sel = select_connectors_case1(g, p, tree, fat, VertexSet(8));
    REQUIRE(sel.failure.empty());
    auto res = assemble_case1(g, p, tree, sel.connectors, VertexSet(8), {});
    CHECK(!res.cycle.has_value());
    CHECK(res.failure_stage == "pathition");
    CHECK(res.failure_detail.find("block 1") != std::string::npos);
}

TEST_CASE("circuit gluing across three bipartite blocks") {
    // Three K_{6,6} blocks whose crossed matchings close a 6-cycle of
    // bicontinents; every bicontinent is visited twice.
    std::vector<std::pair<int, int>> e;
    for (int b = 0; b < 3; ++b)
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) e.emplace_back(12 * b + i, 12 * b + 6 + j);
    for (int k = 0; k < 4; ++k) {
        e.emplace_back(k, 18 + k);       // A1 -> B2
        e.emplace_back(12 + k, 30 + k);  // A2 -> B3
        e.emplace_back(24 + k, 6 + k);   // A3 -> B1
    }
    Graph g(36, std::move(e));
    std::vector<VertexSet> blocks{range_set(36, 0, 12), range_set(36, 12, 24),
                                  range_set(36, 24, 36)};
    auto p = make_continents(36, blocks);
    std::vector<Bipartition> bips;
    for (int b = 0; b < 3; ++b) {
        Bipartition bip;
        bip.a = range_set(36, 12 * b, 12 * b + 6);
        bip.b = range_set(36, 12 * b + 6, 12 * b + 12);
        bips.push_back(bip);
    }
    auto st = bifat_structure(g, p, bips);
    REQUIRE(st.failure.empty());
    CHECK(st.h.m() == 6);
    CHECK(st.degree_parity_ok);
    auto res = assemble_case2(g, p, st, VertexSet(36), {});
    REQUIRE(res.cycle.has_value());
    CHECK(verify_hamilton_cycle(g, *res.cycle));
    CHECK(res.connector_edges.size() == 12);  // one per circuit step
}

TEST_CASE("hamilton cycle verification") {
    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(verify_hamilton_cycle(c5, {0, 1, 2, 3, 4}));
    CHECK(!verify_hamilton_cycle(c5, {0, 2, 4, 1, 3}));
    CHECK(!verify_hamilton_cycle(complete(4), {0, 1, 2}));
    CHECK(!verify_hamilton_cycle(c5, {0, 1, 2, 3, 3}));
}

TEST_CASE("pipeline finds cycles on circulants") {
    auto inst = circulant(12, {1, 2, 3});
    auto rep = find_hamilton_cycle(inst.graph, inst.witness);
    REQUIRE(rep.success);
    CHECK(verify_hamilton_cycle(inst.graph, rep.cycle));
    CHECK(rep.winning_candidate >= 0);
}

TEST_CASE("pipeline finds cycles on double cliques") {
    auto inst = double_clique(12);
    auto rep = find_hamilton_cycle(inst.graph, inst.witness);
    REQUIRE(rep.success);
    CHECK(verify_hamilton_cycle(inst.graph, rep.cycle));
}

TEST_CASE("pipeline reports failure on the Petersen graph") {
    auto pet = fixture("petersen");
    auto rep = find_hamilton_cycle(pet.graph, *pet.witness);
    CHECK(!rep.success);
    CHECK(!rep.failure_stage.empty());
    // Independent confirmation: the instance really has no Hamilton cycle.
    CHECK(!oracle::hamilton_cycle_exists(pet.graph));
}

TEST_CASE("pipeline runs the tree gluing when the r=1 shortcut is out of reach") {
    auto inst = double_clique(12);
    PipelineConfig cfg;
    cfg.path_limits.dp_limit = 8;
    cfg.path_limits.backtrack_limit = 8;
    auto rep = find_hamilton_cycle(inst.graph, inst.witness, cfg);
    REQUIRE(rep.success);
    CHECK(verify_hamilton_cycle(inst.graph, rep.cycle));
    CHECK(rep.candidates[rep.winning_candidate].stage == "case1");
    CHECK(rep.candidates[0].outcome.find("capacity") != std::string::npos);
    // No thin pair on a winning vertex-transitive candidate.
    for (const auto& note : rep.candidates[rep.winning_candidate].notes)
        CHECK(note.find("thin") == std::string::npos);
    // Two connector edges per tree edge, all on the cycle.
    const auto& conns = rep.candidates[rep.winning_candidate].connectors;
    CHECK(conns.size() == 2);
    for (auto [u, v] : conns) {
        bool on_cycle = false;
        for (size_t i = 0; i < rep.cycle.size(); ++i) {
            int a = rep.cycle[i], b = rep.cycle[(i + 1) % rep.cycle.size()];
            if ((a == u && b == v) || (a == v && b == u)) on_cycle = true;
        }
        CHECK(on_cycle);
    }
}

TEST_CASE("pipeline runs the circuit gluing on bipartite blocks") {
    auto fixture = crossed_k66_pair();
    PipelineConfig cfg;
    cfg.alpha = Rat(1, 2);
    cfg.path_limits.dp_limit = 12;
    cfg.path_limits.backtrack_limit = 12;
    auto rep = find_hamilton_cycle(fixture.g, fixture.witness, cfg);
    REQUIRE(rep.success);
    CHECK(verify_hamilton_cycle(fixture.g, rep.cycle));
    CHECK(rep.candidates[rep.winning_candidate].stage == "case2");
}

TEST_CASE("pipeline handles the backtracking range") {
    // The 2-blow-up of the Petersen graph is Hamiltonian even though the
    // base graph is not; at n = 20 only the budgeted engine is in range.
    auto pet = fixture("petersen");
    auto g = blow_up(pet.graph, 2);
    auto w = blow_up_witness(*pet.witness, 2);
    PipelineConfig cfg;
    cfg.alpha = Rat(1, 4);
    auto rep = find_hamilton_cycle(g, w, cfg);
    REQUIRE(rep.success);
    CHECK(verify_hamilton_cycle(g, rep.cycle));
}

TEST_CASE("pipeline reports capacity failures beyond every engine") {
    // The Coxeter graph is out of reach for the exact engines at n = 28;
    // the verdict is a structured failure, never a guess.
    auto cox = fixture("coxeter");
    AutomorphismWitness w{{Permutation::identity(28)}};
    PipelineConfig cfg;
    cfg.alpha = Rat(1, 10);
    cfg.path_limits.node_budget = 20000;
    auto rep = find_hamilton_cycle(cox.graph, w, cfg);
    CHECK(!rep.success);
    CHECK(rep.failure_stage == "candidates");
    REQUIRE(!rep.candidates.empty());
    CHECK(rep.candidates[0].outcome.find("beyond exact bipartiteness") != std::string::npos);
}

TEST_CASE("pipeline reports are deterministic") {
    auto inst = circulant(10, {1, 2, 3});
    auto a = pipeline_report_to_json(find_hamilton_cycle(inst.graph, inst.witness)).dump(2);
    auto b = pipeline_report_to_json(find_hamilton_cycle(inst.graph, inst.witness)).dump(2);
    CHECK(a == b);
}

TEST_CASE("pipeline rejects disconnected and tiny inputs") {
    Graph two(4, {{0, 1}, {2, 3}});
    AutomorphismWitness w{{Permutation::identity(4)}};
    auto rep = find_hamilton_cycle(two, w);
    CHECK(!rep.success);
    CHECK(rep.failure_stage == "input");

    Graph k2(2, {{0, 1}});
    AutomorphismWitness w2{{Permutation::identity(2)}};
    CHECK(find_hamilton_cycle(k2, w2).failure_stage == "input");
}
