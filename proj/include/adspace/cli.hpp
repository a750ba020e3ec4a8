#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adspace {

/// Command line front end. Subcommands: solve, verify, gen, bench.
/// Returns the process exit code: 0 success (and, for verify, a feasible
/// schedule), 1 a schedule failed verification, 2 usage/parse/validation
/// errors, 3 a work budget was exceeded. The ADSPACE_BUDGET environment
/// variable supplies the default enumeration budget when --budget is absent.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace adspace
