// Runs the fixed acceptance list end to end and prints one line per
// criterion.  Exit code 0 iff every criterion passes.

#include <cstdio>

#include "ptrig/verify.hpp"

int main() {
  const auto crits = ptrig::verify::run_acceptance();
  int failed = 0;
  for (const auto& c : crits) {
    std::printf("[criterion %2d] %-28s %s  %s\n", c.index, c.name.c_str(),
                c.pass ? "PASS" : "FAIL", c.detail.c_str());
    if (!c.pass) ++failed;
  }
  std::printf("summary: %zu criteria, %zu passed, %d failed\n", crits.size(),
              crits.size() - failed, failed);
  return failed ? 1 : 0;
}
