#include "vth/vt_instances.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace vth {

Permutation::Permutation(std::vector<int> img) : image(std::move(img)) {
    std::vector<char> seen(image.size(), 0);
    for (int v : image) {
        if (v < 0 || v >= (int)image.size() || seen[v])
            throw std::invalid_argument("permutation image is not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& o) const {
    std::vector<int> img(image.size());
    for (size_t v = 0; v < image.size(); ++v) img[v] = image[o.image[v]];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(image.size());
    for (size_t v = 0; v < image.size(); ++v) img[image[v]] = (int)v;
    return Permutation(std::move(img));
}

std::vector<std::vector<int>> orbit_partition(int n, const std::vector<Permutation>& gens) {
    // Generators of a finite group: closure under application alone reaches
    // the full group orbit (inverses are powers).
    std::vector<int> orbit_id(n, -1);
    std::vector<std::vector<int>> orbits;
    for (int s = 0; s < n; ++s) {
        if (orbit_id[s] != -1) continue;
        int id = (int)orbits.size();
        orbits.push_back({});
        std::queue<int> q;
        q.push(s);
        orbit_id[s] = id;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            orbits[id].push_back(v);
            for (const auto& g : gens) {
                int u = g(v);
                if (orbit_id[u] == -1) {
                    orbit_id[u] = id;
                    q.push(u);
                }
            }
        }
        std::sort(orbits[id].begin(), orbits[id].end());
    }
    return orbits;
}

WitnessVerdict verify_witness(const Graph& g, const AutomorphismWitness& w) {
    for (size_t i = 0; i < w.generators.size(); ++i) {
        const auto& p = w.generators[i];
        if (p.n() != g.n) throw std::invalid_argument("witness permutation length mismatch");
        // A bijection mapping edges into edges is onto the edge set, so
        // non-edges map to non-edges automatically.
        for (auto [u, v] : g.edges) {
            if (!g.has_edge(p(u), p(v))) {
                WitnessVerdict verdict;
                verdict.kind = WitnessVerdict::not_automorphism;
                verdict.bad_generator = (int)i;
                return verdict;
            }
        }
    }
    auto orbits = orbit_partition(g.n, w.generators);
    WitnessVerdict verdict;
    if (orbits.size() == 1 && g.n > 0) {
        verdict.kind = WitnessVerdict::transitive;
    } else if (g.n == 0) {
        verdict.kind = WitnessVerdict::transitive;
    } else {
        verdict.kind = WitnessVerdict::intransitive;
        verdict.orbits = std::move(orbits);
    }
    return verdict;
}

CayleySpec CayleySpec::from_table(std::vector<std::vector<int>> table,
                                  std::vector<int> connection_ids) {
    CayleySpec s;
    s.order = (int)table.size();
    s.table = std::move(table);
    s.connection_ids = std::move(connection_ids);
    return s;
}

CayleySpec CayleySpec::from_permutations(std::vector<Permutation> gens,
                                         std::vector<Permutation> connection) {
    CayleySpec s;
    s.perm_generators = std::move(gens);
    s.connection_perms = std::move(connection);
    s.order = 0;  // determined by closure
    return s;
}

CayleySpec CayleySpec::cyclic(int n, std::vector<int> offsets) {
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    std::set<int> conn;
    for (int d : offsets) {
        int r = ((d % n) + n) % n;
        conn.insert(r);
        conn.insert((n - r) % n);
    }
    return from_table(std::move(table), std::vector<int>(conn.begin(), conn.end()));
}

namespace {

struct GroupModel {
    int n = 0;
    std::vector<std::vector<int>> mul;  // mul[a][b] = a*b
    int identity = -1;
    std::vector<int> inv;
};

GroupModel validate_table(const std::vector<std::vector<int>>& table) {
    GroupModel gm;
    gm.n = (int)table.size();
    if (gm.n == 0) throw std::invalid_argument("cayley: empty multiplication table");
    for (const auto& row : table) {
        if ((int)row.size() != gm.n) throw std::invalid_argument("cayley: table is not square");
        for (int x : row)
            if (x < 0 || x >= gm.n)
                throw std::invalid_argument("cayley: table entry out of range");
    }
    gm.mul = table;
    for (int e = 0; e < gm.n; ++e) {
        bool ok = true;
        for (int x = 0; x < gm.n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
        if (ok) {
            gm.identity = e;
            break;
        }
    }
    if (gm.identity < 0) throw std::invalid_argument("cayley: table has no identity element");
    gm.inv.assign(gm.n, -1);
    for (int x = 0; x < gm.n; ++x) {
        for (int y = 0; y < gm.n; ++y)
            if (table[x][y] == gm.identity && table[y][x] == gm.identity) {
                gm.inv[x] = y;
                break;
            }
        if (gm.inv[x] < 0)
            throw std::invalid_argument("cayley: element " + std::to_string(x) + " has no inverse");
    }
    for (int a = 0; a < gm.n; ++a)
        for (int b = 0; b < gm.n; ++b)
            for (int c = 0; c < gm.n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw std::invalid_argument("cayley: table is not associative");
    return gm;
}

GroupModel close_permutation_group(const std::vector<Permutation>& gens,
                                   const std::vector<Permutation>& connection,
                                   std::vector<int>& connection_ids) {
    if (gens.empty()) throw std::invalid_argument("cayley: no permutation generators");
    const int deg = gens[0].n();
    for (const auto& g : gens)
        if (g.n() != deg) throw std::invalid_argument("cayley: generator degree mismatch");
    // The multiplication table is materialized, so the group order stays
    // desk-scale; witness orbit closure elsewhere never builds the group.
    constexpr int kMaxOrder = 4096;
    std::vector<Permutation> elements{Permutation::identity(deg)};
    std::map<std::vector<int>, int> index{{elements[0].image, 0}};
    for (size_t head = 0; head < elements.size(); ++head) {
        for (const auto& g : gens) {
            Permutation prod = g * elements[head];
            auto [it, inserted] = index.emplace(prod.image, (int)elements.size());
            if (inserted) {
                elements.push_back(prod);
                if ((int)elements.size() > kMaxOrder)
                    throw std::invalid_argument("cayley: group closure exceeds cap");
            }
            (void)it;
        }
    }
    GroupModel gm;
    gm.n = (int)elements.size();
    gm.identity = 0;
    gm.mul.assign(gm.n, std::vector<int>(gm.n));
    for (int a = 0; a < gm.n; ++a)
        for (int b = 0; b < gm.n; ++b) {
            Permutation prod = elements[a] * elements[b];
            gm.mul[a][b] = index.at(prod.image);
        }
    gm.inv.assign(gm.n, -1);
    for (int x = 0; x < gm.n; ++x) gm.inv[x] = index.at(elements[x].inverse().image);
    connection_ids.clear();
    for (const auto& c : connection) {
        auto it = index.find(c.image);
        if (it == index.end())
            throw std::invalid_argument("cayley: connection permutation not in generated group");
        connection_ids.push_back(it->second);
    }
    return gm;
}

// Greedy generating set by ascending element id; used for the left-translation
// witness so that it is transitive even when the connection set is not
// generating (disconnected Cayley graphs are still vertex-transitive).
std::vector<int> greedy_generating_set(const GroupModel& gm) {
    std::vector<int> gens;
    std::vector<char> reached(gm.n, 0);
    reached[gm.identity] = 1;
    int reached_count = 1;
    while (reached_count < gm.n) {
        int pick = -1;
        for (int x = 0; x < gm.n; ++x)
            if (!reached[x]) {
                pick = x;
                break;
            }
        gens.push_back(pick);
        std::queue<int> q;
        for (int x = 0; x < gm.n; ++x)
            if (reached[x]) q.push(x);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int s : gens) {
                int y = gm.mul[x][s];
                if (!reached[y]) {
                    reached[y] = 1;
                    ++reached_count;
                    q.push(y);
                }
            }
        }
    }
    return gens;
}

}  // namespace

GeneratedInstance cayley_graph(const CayleySpec& spec) {
    GroupModel gm;
    std::vector<int> conn = spec.connection_ids;
    if (!spec.table.empty()) {
        gm = validate_table(spec.table);
        if (spec.order != 0 && spec.order != gm.n)
            throw std::invalid_argument("cayley: declared order disagrees with table size");
    } else {
        gm = close_permutation_group(spec.perm_generators, spec.connection_perms, conn);
        if (spec.order != 0 && spec.order != gm.n)
            throw std::invalid_argument("cayley: declared order disagrees with group closure");
    }
    std::set<int> s(conn.begin(), conn.end());
    if (s.empty()) throw std::invalid_argument("cayley: empty connection set");
    for (int x : s) {
        if (x < 0 || x >= gm.n) throw std::invalid_argument("cayley: connection element out of range");
        if (x == gm.identity) throw std::invalid_argument("cayley: identity in connection set");
        if (!s.count(gm.inv[x]))
            throw std::invalid_argument("cayley: connection set not closed under inverse");
    }
    std::set<std::pair<int, int>> edge_set;
    for (int g = 0; g < gm.n; ++g)
        for (int x : s) {
            int h = gm.mul[g][x];
            edge_set.emplace(std::min(g, h), std::max(g, h));
        }
    Graph graph(gm.n, std::vector<std::pair<int, int>>(edge_set.begin(), edge_set.end()));

    AutomorphismWitness w;
    for (int a : greedy_generating_set(gm)) {
        std::vector<int> img(gm.n);
        for (int x = 0; x < gm.n; ++x) img[x] = gm.mul[a][x];
        w.generators.emplace_back(std::move(img));
    }
    if (w.generators.empty()) w.generators.push_back(Permutation::identity(gm.n));
    return {std::move(graph), std::move(w)};
}

GeneratedInstance circulant(int n, const std::vector<int>& offsets) {
    if (n < 3) throw std::invalid_argument("circulant: need n >= 3");
    if (offsets.empty()) throw std::invalid_argument("circulant: empty offset set");
    std::set<int> offs;
    for (int d : offsets) {
        int r = ((d % n) + n) % n;
        if (r == 0) throw std::invalid_argument("circulant: offset 0 mod n");
        offs.insert(r);
        offs.insert(n - r);
    }
    std::set<std::pair<int, int>> edge_set;
    for (int v = 0; v < n; ++v)
        for (int d : offs) {
            int u = (v + d) % n;
            edge_set.emplace(std::min(v, u), std::max(v, u));
        }
    Graph graph(n, std::vector<std::pair<int, int>>(edge_set.begin(), edge_set.end()));
    std::vector<int> rot(n);
    for (int v = 0; v < n; ++v) rot[v] = (v + 1) % n;
    AutomorphismWitness w;
    w.generators.emplace_back(std::move(rot));
    return {std::move(graph), std::move(w)};
}

GeneratedInstance double_clique(int n) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("double_clique: need even n >= 4");
    int h = n / 2;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < h; ++u)
        for (int v = u + 1; v < h; ++v) {
            edges.emplace_back(u, v);
            edges.emplace_back(h + u, h + v);
        }
    for (int i = 0; i < h; ++i) edges.emplace_back(i, h + i);
    Graph graph(n, std::move(edges));
    std::vector<int> swap_img(n), rot_img(n);
    for (int i = 0; i < h; ++i) {
        swap_img[i] = h + i;
        swap_img[h + i] = i;
        rot_img[i] = (i + 1) % h;
        rot_img[h + i] = h + (i + 1) % h;
    }
    AutomorphismWitness w;
    w.generators.emplace_back(std::move(swap_img));
    w.generators.emplace_back(std::move(rot_img));
    return {std::move(graph), std::move(w)};
}

AutomorphismWitness blow_up_witness(const AutomorphismWitness& base, int l) {
    if (l < 1) throw std::invalid_argument("blow-up factor must be >= 1");
    AutomorphismWitness w;
    for (const auto& g : base.generators) {
        std::vector<int> img(g.n() * l);
        for (int v = 0; v < g.n(); ++v)
            for (int s = 0; s < l; ++s) img[v * l + s] = g(v) * l + s;
        w.generators.emplace_back(std::move(img));
    }
    if (l >= 2 && !base.generators.empty()) {
        int n = base.generators[0].n() * l;
        std::vector<int> shift(n);
        std::iota(shift.begin(), shift.end(), 0);
        for (int s = 0; s < l; ++s) shift[s] = (s + 1) % l;
        w.generators.emplace_back(std::move(shift));
    }
    return w;
}

namespace {

Fixture petersen_fixture() {
    // Outer 5-cycle 0..4, inner pentagram 5..9 (step 2), spokes i -- 5+i.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    Graph g(10, std::move(edges));
    AutomorphismWitness w;
    w.generators.emplace_back(std::vector<int>{1, 2, 3, 4, 0, 6, 7, 8, 9, 5});
    // Induced by a point transposition in the Kneser model; exchanges part of
    // the outer cycle with the inner one, which makes the action transitive.
    w.generators.emplace_back(std::vector<int>{0, 1, 6, 9, 4, 5, 2, 8, 7, 3});
    return {std::move(g), std::move(w)};
}

Fixture coxeter_fixture() {
    // Three 7-gons with steps 1, 2, 3 plus seven hub vertices with one spoke
    // into each 7-gon. 28 vertices, 3-regular.
    std::vector<std::pair<int, int>> edges;
    auto a = [](int i) { return i % 7; };
    auto b = [](int i) { return 7 + i % 7; };
    auto c = [](int i) { return 14 + i % 7; };
    auto d = [](int i) { return 21 + i % 7; };
    for (int i = 0; i < 7; ++i) {
        edges.emplace_back(a(i), a(i + 1));
        edges.emplace_back(b(i), b(i + 2));
        edges.emplace_back(c(i), c(i + 3));
        edges.emplace_back(a(i), d(i));
        edges.emplace_back(b(i), d(i));
        edges.emplace_back(c(i), d(i));
    }
    return {Graph(28, std::move(edges)), std::nullopt};
}

Fixture q3_fixture() {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 8; ++v)
        for (int bit : {1, 2, 4})
            if (v < (v ^ bit)) edges.emplace_back(v, v ^ bit);
    Graph g(8, std::move(edges));
    AutomorphismWitness w;
    for (int bit : {1, 2, 4}) {
        std::vector<int> img(8);
        for (int v = 0; v < 8; ++v) img[v] = v ^ bit;
        w.generators.emplace_back(std::move(img));
    }
    return {std::move(g), std::move(w)};
}

}  // namespace

Fixture fixture(const std::string& name, int param) {
    if (name == "petersen") return petersen_fixture();
    if (name == "coxeter") return coxeter_fixture();
    if (name == "q3") return q3_fixture();
    if (name == "k_n") {
        if (param < 1) throw std::invalid_argument("k_n needs a size parameter >= 1");
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < param; ++u)
            for (int v = u + 1; v < param; ++v) edges.emplace_back(u, v);
        Graph g(param, std::move(edges));
        std::vector<int> rot(param);
        for (int v = 0; v < param; ++v) rot[v] = (v + 1) % param;
        AutomorphismWitness w;
        w.generators.emplace_back(std::move(rot));
        return {std::move(g), std::move(w)};
    }
    if (name == "k_nn") {
        if (param < 1) throw std::invalid_argument("k_nn needs a size parameter >= 1");
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < param; ++u)
            for (int v = 0; v < param; ++v) edges.emplace_back(u, param + v);
        Graph g(2 * param, std::move(edges));
        std::vector<int> rot(2 * param), swp(2 * param);
        for (int v = 0; v < param; ++v) {
            rot[v] = (v + 1) % param;
            rot[param + v] = param + (v + 1) % param;
            swp[v] = param + v;
            swp[param + v] = v;
        }
        AutomorphismWitness w;
        w.generators.emplace_back(std::move(rot));
        w.generators.emplace_back(std::move(swp));
        return {std::move(g), std::move(w)};
    }
    if (name == "c_n") {
        if (param < 3) throw std::invalid_argument("c_n needs a size parameter >= 3");
        auto inst = circulant(param, {1});
        return {std::move(inst.graph), std::move(inst.witness)};
    }
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace vth
