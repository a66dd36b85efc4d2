#pragma once

#include <ostream>

namespace hdet {

enum ExitCode : int {
  exit_ok = 0,
  exit_failure = 1,
  exit_parse = 2,
  exit_not_boundary = 3,
  exit_shape = 4,
};

/// Entry point of the `hyperdet` tool; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hdet
