#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ks::cli {

enum ExitCode : int {
    kOk = 0,
    /// No valuation, no certificate, or no noncontextual model.
    kNegative = 1,
    kInputError = 2,
};

/// Runs one kstool subcommand. `args` excludes the program name. Always
/// returns one of the ExitCode values.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ks::cli
