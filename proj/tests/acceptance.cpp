#include <cstdio>
#include <cstring>

#include "torsig/acceptance.hpp"

int main(int argc, char** argv) {
  torsig::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--perm7") == 0) options.permutohedron7 = true;

  const auto report = torsig::run_acceptance(options);
  for (const auto& c : report.criteria)
    std::printf("%s criterion %d (%s): %s\n", c.passed ? "PASS" : "FAIL", c.id, c.name.c_str(), c.detail.c_str());
  std::printf("%s\n", report.passed() ? "all criteria passed" : "some criteria failed");
  return report.passed() ? 0 : 1;
}
