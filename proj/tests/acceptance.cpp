// Acceptance gate: every release-blocking property of the simulator gets one
// PASS/FAIL line, with the observed numbers against the pinned tolerance.
// With no arguments all checks run; otherwise only the named ones (that is
// how ctest registers them individually). Exit 0 iff everything passed.
#include <cstdio>
#include <string>
#include <vector>

#include "netform/verification.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string>& names = netform::verification_names();
  std::vector<std::string> wanted(argv + 1, argv + argc);
  if (wanted.empty()) wanted = names;

  for (const std::string& name : wanted)
    if (!netform::is_verification_name(name)) {
      std::fprintf(stderr, "unknown check '%s'; valid names:\n", name.c_str());
      for (const std::string& known : names)
        std::fprintf(stderr, "  %s\n", known.c_str());
      return 2;
    }

  int failures = 0;
  for (const std::string& name : wanted) {
    std::size_t idx = 0;
    while (names[idx] != name) ++idx;
    const netform::CheckResult r = netform::run_verification(name);
    std::printf("[%2zu/%zu] %-19s %s (%.1fs)  %s\n", idx + 1, names.size(),
                name.c_str(), r.passed ? "PASS" : "FAIL", r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    failures += r.passed ? 0 : 1;
  }
  if (wanted.size() > 1)
    std::printf("%zu/%zu checks passed\n", wanted.size() - failures, wanted.size());
  return failures ? 1 : 0;
}
