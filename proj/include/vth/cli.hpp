#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vth {

// Full command-line surface; returns the process exit code. Contract:
// 0 = success / positive verdict, 1 = structured negative verdict,
// 2 = usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vth
