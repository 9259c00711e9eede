#pragma once

#include <iosfwd>

namespace stetris {

/// Exit codes of the stetris command.
enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitMajorization = 2,
    kExitUsage = 64,
    kExitInternal = 70,
};

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stetris
