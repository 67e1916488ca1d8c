#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pme {

// Runs the pme command line given argv-style arguments (program name
// excluded). Returns the process exit code: 0 success / verified pass,
// 1 verified fail, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pme
