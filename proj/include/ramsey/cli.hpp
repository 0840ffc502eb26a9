#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsey {

enum ExitCode : int {
    kExitProven = 0,
    kExitCounterexample = 1,
    kExitInconclusive = 2,
    kExitUsage = 3,
    kExitMalformed = 4,
    kExitOrderMismatch = 5,
    kExitClaimMismatch = 6,
};

/// Runs one command line (without the program name). Subcommands: bounds,
/// compute, decide, witness, saturate, verify.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramsey
