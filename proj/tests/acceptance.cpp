// Acceptance suite: one pass/fail line per criterion.

#include <iostream>

#include "qsorep/suite.hpp"

int main() {
  bool all_pass = true;
  for (const auto& res : qsorep::suite::run_all()) {
    std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << "criterion " << res.id
              << ": " << res.name << " — " << res.detail << std::endl;
    all_pass = all_pass && res.pass;
  }
  return all_pass ? 0 : 1;
}
