// Runs every acceptance criterion, prints one PASS/FAIL line per criterion
// and exits nonzero if any fails.
#include <cstring>
#include <fstream>
#include <iostream>

#include "holecap/validate.hpp"

int main(int argc, char** argv) {
  holecap::ValidateOptions opts;
  const char* json_path = nullptr;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--full")) opts.full = true;
    else if (!std::strcmp(argv[i], "--json") && i + 1 < argc) json_path = argv[++i];
  }
  bool all = true;
  std::vector<holecap::CriterionResult> results;
  for (int id = 1; id <= holecap::kCriterionCount; ++id) {
    results.push_back(holecap::run_criterion(id, opts));
    std::cout << results.back().summary_line() << std::endl;
    all = all && results.back().pass();
  }
  if (json_path) std::ofstream(json_path) << holecap::results_to_json(results).dump(2) << '\n';
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return all ? 0 : 1;
}
