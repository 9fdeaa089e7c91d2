#pragma once

#include <iosfwd>

namespace equifacet::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace equifacet::cli
