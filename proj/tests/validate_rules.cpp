// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0
//
// Build-time check: exits nonzero unless every conjugation rule instance
// used for up to `n` strands is proved by the equality oracle.

#include <iostream>
#include <string>

#include "rule_check.hpp"

int main(int argc, char** argv) {
  int const n = argc > 1 ? std::stoi(argv[1]) : 4;
  vbraid::testing::RuleCheck r = vbraid::testing::check_rules(n, 1'000'000);
  std::cout << "n=" << n << ": " << r.proved << "/" << r.rules
            << " conjugation rules proved (max " << r.max_nodes << " nodes)\n";
  for (std::string const& u : r.unknown) {
    std::cerr << "unproved rule: " << u << "\n";
  }
  return r.unknown.empty() ? 0 : 1;
}
