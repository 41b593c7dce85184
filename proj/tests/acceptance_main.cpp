// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <iostream>

#include "polysieve/acceptance.hpp"

int main() {
  const auto results = polysieve::acceptance::run_all(&std::cout);
  int failed = 0;
  for (const auto& r : results) failed += !r.ok;
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
