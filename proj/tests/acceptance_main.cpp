// Runs the acceptance criteria and prints one line per criterion.
// Exit status is 0 only if every selected criterion passes.

#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

#include "tspec/acceptance.hpp"

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failed = 0;
  tspec::run_acceptance(only, [&](const tspec::CriterionResult& r) {
    std::cout << tspec::format_result(r) << std::endl;
    if (!r.passed) ++failed;
  });
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion(s) failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
