#pragma once

#include <ostream>

namespace adsvol::cli {

/// Runs the command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace adsvol::cli
