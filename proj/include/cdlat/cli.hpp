#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cdlat::cli {

// Runs the cdlat command line. Exit status contract: 0 success or all checks
// pass, 1 verification failure, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cdlat::cli
