#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace demazure {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs the acceptance suite, printing one PASS/FAIL line per criterion.
// With `only` set, runs just that criterion.
std::vector<CriterionResult> run_acceptance(std::ostream& log,
                                            std::optional<int> only = {});

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace demazure
