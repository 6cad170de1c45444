#include "vth/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vth {

namespace {

ojson set_to_json(const VertexSet& s) { return ojson(s.to_vector()); }

}  // namespace

ojson witness_to_json(const AutomorphismWitness& w) {
    ojson j;
    j["generators"] = ojson::array();
    for (const auto& g : w.generators) j["generators"].push_back(g.image);
    return j;
}

AutomorphismWitness witness_from_json(const ojson& j) {
    AutomorphismWitness w;
    if (!j.contains("generators") || !j["generators"].is_array())
        throw std::invalid_argument("witness json: missing generators array");
    for (const auto& g : j["generators"]) w.generators.emplace_back(g.get<std::vector<int>>());
    return w;
}

CayleySpec cayley_spec_from_json(const ojson& j) {
    CayleySpec spec;
    if (j.contains("order")) spec.order = j["order"].get<int>();
    if (j.contains("table")) {
        spec.table = j["table"].get<std::vector<std::vector<int>>>();
        if (!j.contains("connection_set"))
            throw std::invalid_argument("cayley json: missing connection_set");
        spec.connection_ids = j["connection_set"].get<std::vector<int>>();
    } else if (j.contains("perm_generators")) {
        for (const auto& p : j["perm_generators"])
            spec.perm_generators.emplace_back(p.get<std::vector<int>>());
        if (!j.contains("connection_set"))
            throw std::invalid_argument("cayley json: missing connection_set");
        for (const auto& p : j["connection_set"])
            spec.connection_perms.emplace_back(p.get<std::vector<int>>());
    } else {
        throw std::invalid_argument("cayley json: need table or perm_generators");
    }
    return spec;
}

ojson matching_to_json(const FractionalMatching& m) {
    ojson j;
    j["edges"] = ojson::array();
    long long total = 0;
    for (const auto& [e, w] : m.weights) {
        long long doubled = m.doubled(e.first, e.second);
        j["edges"].push_back(ojson::array({e.first, e.second, doubled}));
        total += doubled;
    }
    j["total_doubled"] = total;
    return j;
}

FractionalMatching matching_from_json(const ojson& j, int n) {
    FractionalMatching m;
    m.n = n;
    for (const auto& e : j.at("edges")) {
        int u = e.at(0).get<int>(), v = e.at(1).get<int>();
        long long d = e.at(2).get<long long>();
        if (u > v) std::swap(u, v);
        if (d != 0) m.weights[{u, v}] = Rat(d, 2);
    }
    return m;
}

ojson bipartition_to_json(const Bipartition& p) {
    ojson j;
    j["A"] = set_to_json(p.a);
    j["B"] = set_to_json(p.b);
    j["internal"] = p.internal_edges;
    j["cut"] = p.cut_edges;
    return j;
}

ojson cut_witness_to_json(const CutWitness& w) {
    ojson j;
    j["removed"] = set_to_json(w.removed);
    j["X"] = set_to_json(w.x);
    j["Y"] = set_to_json(w.y);
    j["crossing_max_degree"] = w.crossing_max_degree;
    return j;
}

ojson island_partition_to_json(const IslandPartition& p) {
    ojson j;
    j["level"] = p.level;
    j["blocks"] = ojson::array();
    for (const auto& b : p.blocks) j["blocks"].push_back(b.to_vector());
    return j;
}

ojson pair_certificate_to_json(const PairCertificate& c) {
    ojson j;
    j["A"] = set_to_json(c.a);
    j["B"] = set_to_json(c.b);
    j["density"] = c.density.str();
    j["epsilon"] = c.epsilon.str();
    j["d"] = c.d.str();
    j["regular"] = c.regular;
    j["super_regular"] = c.super_regular;
    if (c.worst_witness) {
        j["worst_witness"] = ojson{{"X", set_to_json(c.worst_witness->x)},
                                   {"Y", set_to_json(c.worst_witness->y)},
                                   {"density", c.worst_witness->density_xy.str()}};
    }
    return j;
}

ojson path_system_to_json(const PathSystem& s) {
    ojson j;
    j["paths"] = s.paths;
    j["endpoints"] = ojson::array();
    for (auto [x, y] : s.endpoints) j["endpoints"].push_back(ojson::array({x, y}));
    return j;
}

ojson pipeline_report_to_json(const PipelineReport& r) {
    ojson j;
    j["schema"] = "vth-report-v1";
    j["n"] = r.n;
    j["m"] = r.m;
    j["alpha"] = r.alpha;
    j["c"] = r.c;
    j["advisories"] = r.advisories;
    j["codeg_threshold"] = r.codeg_threshold;
    j["codeg_components"] = r.codeg_components;
    j["candidates"] = ojson::array();
    for (const auto& c : r.candidates) {
        ojson cj;
        cj["blocks"] = c.blocks;
        cj["stage"] = c.stage;
        cj["outcome"] = c.outcome;
        cj["notes"] = c.notes;
        if (!c.connectors.empty()) {
            cj["connectors"] = ojson::array();
            for (auto [u, v] : c.connectors) cj["connectors"].push_back(ojson::array({u, v}));
        }
        j["candidates"].push_back(std::move(cj));
    }
    j["candidates_not_evaluated"] = r.candidates_not_evaluated;
    j["success"] = r.success;
    if (r.success) {
        j["winning_candidate"] = r.winning_candidate;
        j["cycle"] = r.cycle;
    } else {
        j["failure"] = ojson{{"stage", r.failure_stage}, {"reason", r.failure_reason}};
    }
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

}  // namespace vth
