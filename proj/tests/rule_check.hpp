// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0
//
// Proves each conjugation rule instance x^-1 t x = result with the equality
// oracle over the sub-presentation of VP_n on the indices involved.

#ifndef VBRAID_TESTS_RULE_CHECK_HPP_
#define VBRAID_TESTS_RULE_CHECK_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "vbraid/oracle.hpp"
#include "vbraid/presentations.hpp"
#include "vbraid/vp_normalize.hpp"

namespace vbraid::testing {

  struct RuleCheck {
    std::size_t              rules   = 0;
    std::size_t              proved  = 0;
    std::size_t              max_nodes = 0;
    std::vector<std::string> unknown;
  };

  inline RuleCheck check_rules(int n, std::size_t budget) {
    RuleCheck out;
    for (ConjugationRule const& rule : conjugation_rules(n)) {
      Word x{n, Group::VP, {rule.conjugator}};
      Word lhs = concat(concat(invert(x), flatten(rule.target, n)), x);
      Word rhs = flatten(rule.result, n);
      std::set<int> idx;
      for (Word const* w : {&lhs, &rhs}) {
        for (Letter const& l : w->letters) {
          idx.insert(l.i);
          idx.insert(l.j);
        }
      }
      Presentation p =
          restricted_presentation(Group::VP, n, {idx.begin(), idx.end()});
      OracleVerdict v = bounded_equal(p, lhs, rhs, budget);
      ++out.rules;
      out.max_nodes = std::max(out.max_nodes, v.nodes);
      if (v.equal()) {
        ++out.proved;
      } else {
        out.unknown.push_back(format(rule.target) + " ^ "
                              + format(rule.conjugator) + " = "
                              + format(rule.result));
      }
    }
    return out;
  }

}  // namespace vbraid::testing

#endif  // VBRAID_TESTS_RULE_CHECK_HPP_
