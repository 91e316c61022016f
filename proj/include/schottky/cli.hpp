#pragma once

#include "schottky/certify.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace schottky {

// Exit codes of schottky-gauge.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,  // computation failed (budget exhausted, numerical breakdown)
    kExitUsage = 2,
    kExitValidation = 3,
    kExitViolated = 4,
    kExitUndecided = 5,
};

// Exit code of a certify run: Violated beats Undecided; exempt families
// never fail the run.
int certify_exit_code(const std::vector<CertReport>& reports);

// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace schottky
