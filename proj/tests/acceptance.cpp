// Acceptance gate: runs the eight criteria and prints one pass/fail line
// per criterion.  Exit 0 only if every criterion passes.
#include <iostream>

#include "parhyp/selftest.hpp"

int main() {
  parhyp::selftest::Report rep = parhyp::selftest::run(&std::cout);
  std::cout << (rep.passed ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL")
            << std::endl;
  return rep.passed ? 0 : 1;
}
