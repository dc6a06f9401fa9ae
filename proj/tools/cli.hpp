#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qkloc::cli {

enum ExitCode { ok = 0, verification_failed = 1, usage_error = 2 };

// args excludes the program name. The report goes to out (or --out), diagnostics to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qkloc::cli
