// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run all criteria
//   acceptance --criterion N   run criterion N only
//   acceptance --quick         skip the m = 4 full diagram
//
// Exit status is 0 only if every selected criterion passes.

#include <cutbetti/selftest.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <string_view>
#include <vector>

int main(int argc, char** argv) {
  cutbetti::SelftestOptions opt{CUTBETTI_FIXTURE_DIR, false, {}};
  std::vector<int> ids;
  for (int a = 1; a < argc; ++a) {
    const std::string_view arg = argv[a];
    if (arg == "--quick") {
      opt.quick = true;
    } else if (arg == "--criterion" && a + 1 < argc) {
      const int id = std::atoi(argv[++a]);
      if (id < 1 || id > cutbetti::kCriterionCount) {
        std::cerr << "criterion must be in 1.." << cutbetti::kCriterionCount << '\n';
        return 2;
      }
      ids.push_back(id);
    } else if (arg == "--fixtures" && a + 1 < argc) {
      opt.fixture_dir = argv[++a];
    } else {
      std::cerr << "usage: acceptance [--quick] [--fixtures DIR] [--criterion N]...\n";
      return 2;
    }
  }
  if (ids.empty())
    for (int id = 1; id <= cutbetti::kCriterionCount; ++id) ids.push_back(id);

  bool all = true;
  for (int id : ids) {
    const auto r = cutbetti::run_criterion(id, opt);
    all = all && r.passed;
    std::printf("%s  criterion %d: %s  (%.3f s", r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds);
    if (r.time_limit > 0) std::printf(", limit %.0f s", r.time_limit);
    std::printf(")\n");
    if (!r.passed) std::printf("      %s\n", r.detail.c_str());
  }
  return all ? 0 : 1;
}
