#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eqseq::cli {

/// Process exit codes. These are a stable contract for scripts.
enum ExitCode : int {
    kSuccess = 0,
    kUsage = 1,
    kInapplicable = 2,
    kMismatch = 3,
    kIo = 4,
};

/// Runs the command line `args` (without the program name). Output that would
/// go to stdout is written to `out`, messages to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqseq::cli
