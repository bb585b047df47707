#include <cstdio>

#include "grq/checks/checks.hpp"

int main() {
  int failed = 0;
  for (const auto& r : grq::run_suite("all", 3)) {
    std::printf("AC%d %s %s (%s) [%.1fs]\n", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str(),
                r.seconds);
    std::fflush(stdout);
    failed += !r.pass;
  }
  return failed == 0 ? 0 : 1;
}
