#include "orbw/workbench.hpp"
#include <cstdio>
int main() {
  auto checks = orbw::run_acceptance("all", 1);
  bool all = true;
  for (const auto& c : checks) {
    std::printf("[%s] %s (%.2fs)%s%s\n", c.pass ? "PASS" : "FAIL", c.id.c_str(), c.seconds,
                c.detail.empty() ? "" : " -- ", c.detail.c_str());
    all = all && c.pass;
  }
  std::printf("%s\n", all ? "acceptance: all criteria pass" : "acceptance: FAILURES present");
  return all ? 0 : 1;
}
