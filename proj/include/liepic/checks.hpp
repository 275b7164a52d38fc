#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liepic/rootsys.hpp"

namespace liepic {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The full verification suite: every numeric claim the portraits reproduce,
// with fixed tolerances. Restricting to one group runs the checks that
// involve it. Used by both the `check` CLI command and the acceptance test.
std::vector<CheckResult> run_acceptance_checks(std::optional<GroupType> group);

// Formats one result as a "PASS ..."/"FAIL ..." line.
std::string format_check_line(const CheckResult& r);

}  // namespace liepic
