#include "mzv/acceptance.hpp"

#include <iostream>

int main() {
  auto results = mzv::run_acceptance(std::cout);
  int failed = 0;
  for (auto &r : results)
    if (!r.pass) ++failed;
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
