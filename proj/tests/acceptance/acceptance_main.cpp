#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

#include "starfree/acceptance.hpp"

int main(int argc, char** argv) {
  starfree::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      options.only = argv[++i];
    } else if (arg == "--seed" && i + 1 < argc) {
      options.seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::cerr << "usage: acceptance [--only <group|tag|id>] [--seed <n>]\n";
      return 2;
    }
  }
  const auto results = starfree::run_acceptance(options);
  std::cout << starfree::format_acceptance_table(results, options);
  const bool ok = !results.empty() &&
                  std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  return ok ? 0 : 1;
}
