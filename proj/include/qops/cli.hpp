#pragma once

// Command-line driver. Exit codes: 0 success, 1 completed with
// mismatches, 2 usage or domain error.

#include <iosfwd>
#include <string>
#include <vector>

namespace qops {

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qops
