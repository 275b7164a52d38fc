#pragma once

#include <string>
#include <vector>

namespace liepic {

// Runs one CLI invocation (arguments without the program name). Returns 0 on
// success, 1 on usage or I/O errors, 2 when `check` reports failures.
int run_cli(const std::vector<std::string>& args);

int run_cli(int argc, const char* const* argv);

}  // namespace liepic
