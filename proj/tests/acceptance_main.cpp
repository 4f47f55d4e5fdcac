// Acceptance suite runner: prints one PASS/FAIL line per criterion and exits
// nonzero if any requested criterion fails.  `--criterion N` runs one of them.
#include <cstring>
#include <iostream>
#include <optional>
#include <string>

#include "demazure/verify.hpp"

int main(int argc, char** argv) {
  std::optional<int> only;
  for (int k = 1; k < argc; ++k) {
    if (std::strcmp(argv[k], "--criterion") == 0 && k + 1 < argc) {
      only = std::stoi(argv[k + 1]);
      ++k;
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  auto results = demazure::run_acceptance(std::cout, only);
  if (results.empty()) {
    std::cerr << "no such criterion\n";
    return 2;
  }
  return demazure::all_passed(results) ? 0 : 1;
}
