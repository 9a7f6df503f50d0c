#ifndef CHRONOPLAN_CHECK_SUITE_HPP
#define CHRONOPLAN_CHECK_SUITE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace chronoplan::checks {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

// Runs every acceptance criterion, printing one "criterion <id>: PASS|FAIL"
// line per criterion to `out`.
std::vector<CriterionResult> run_all(std::ostream& out);

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace chronoplan::checks

#endif
