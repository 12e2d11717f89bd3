#pragma once

#include <ostream>

namespace wheelsym {

enum ExitCode { exit_pass = 0, exit_failure = 1, exit_usage = 2, exit_fault = 3 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace wheelsym
