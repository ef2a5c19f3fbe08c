#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oligo::cli {

// Parses and runs one command line (without the program name), writing the
// report to `out` and diagnostics to `err`. Returns 0 on success, 2 on a
// usage or input error (the message names the failing field), 3 when an
// iterative solver fails to converge. Output is byte-stable for identical
// arguments and input files.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace oligo::cli
