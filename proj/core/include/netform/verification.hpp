// The verification suite: every check pits simulation against a closed form
// or an independent recomputation, with the scenario and tolerance pinned
// here in code. A check either passes, or reports exactly which number came
// out wrong.
#pragma once

#include <string>
#include <vector>

namespace netform {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;    // observed vs expected, one line
  double seconds = 0.0;  // wall clock
};

const std::vector<std::string>& verification_names();
bool is_verification_name(const std::string& name);

// Runs one named check. parallelism 0 = hardware count. Unknown name throws
// std::invalid_argument.
CheckResult run_verification(const std::string& name, unsigned parallelism = 0);

std::vector<CheckResult> run_all_verifications(unsigned parallelism = 0);

}  // namespace netform
