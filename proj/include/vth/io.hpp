#pragma once

#include <string>

#include <json.hpp>

#include "vth/assembly.hpp"
#include "vth/bipartite.hpp"
#include "vth/fractional_matching.hpp"
#include "vth/pathition.hpp"
#include "vth/regularity.hpp"
#include "vth/robustness.hpp"
#include "vth/vt_instances.hpp"

namespace vth {

using ojson = nlohmann::ordered_json;

ojson witness_to_json(const AutomorphismWitness& w);
AutomorphismWitness witness_from_json(const ojson& j);

// {"order": n, "table": [[...]] | "perm_generators": [[...]],
//  "connection_set": [ids] | [[perm], ...]}
CayleySpec cayley_spec_from_json(const ojson& j);

ojson matching_to_json(const FractionalMatching& m);
FractionalMatching matching_from_json(const ojson& j, int n);

ojson bipartition_to_json(const Bipartition& p);
ojson cut_witness_to_json(const CutWitness& w);
ojson island_partition_to_json(const IslandPartition& p);
ojson pair_certificate_to_json(const PairCertificate& c);
ojson path_system_to_json(const PathSystem& s);
ojson pipeline_report_to_json(const PipelineReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace vth
