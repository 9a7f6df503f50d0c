#include <iostream>

#include "chronoplan/check_suite.hpp"

int main() {
  auto results = chronoplan::checks::run_all(std::cout);
  bool ok = chronoplan::checks::all_pass(results);
  std::cout << (ok ? "all criteria passed" : "criteria failed") << "\n";
  return ok ? 0 : 1;
}
