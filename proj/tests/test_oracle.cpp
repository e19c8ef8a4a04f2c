// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "vbraid/oracle.hpp"
#include "vbraid/vp_normalize.hpp"

namespace vbraid {
  namespace {

    TEST(BoundedEqual, BraidRelation) {
      Presentation  p = presentation(Group::VB, 3);
      OracleVerdict v = bounded_equal(p, parse("s1 s2 s1", Group::VB, 3),
                                      parse("s2 s1 s2", Group::VB, 3), 100'000);
      EXPECT_TRUE(v.equal());
      EXPECT_EQ(v.witness.size(), 1U);
    }

    TEST(BoundedEqual, IdenticalWordsNeedNoWitness) {
      Presentation  p = presentation(Group::VB, 3);
      Word          w = parse("s1 r2 s1^-1 r1", Group::VB, 3);
      OracleVerdict v = bounded_equal(p, w, w, 1);
      EXPECT_TRUE(v.equal());
      EXPECT_TRUE(v.witness.empty());
    }

    TEST(BoundedEqual, RuleTableValidationPath) {
      Presentation p = presentation(Group::VP, 3);
      Word lhs = parse("l[1,2]^-1 l[1,3] l[1,2]", Group::VP, 3);
      Word rhs = parse("l[1,2]^-1 l[3,2] l[1,2] l[1,3] l[3,2]^-1", Group::VP, 3);
      OracleVerdict v = bounded_equal(p, lhs, rhs, 1'000'000);
      ASSERT_TRUE(v.equal());
      EXPECT_TRUE(replay(lhs, rhs, v.witness));
    }

    TEST(BoundedEqual, ForbiddenRelationStaysUnknown) {
      Presentation  p = presentation(Group::VB, 3);
      OracleVerdict v = bounded_equal(p, parse("r1 s2 s1", Group::VB, 3),
                                      parse("s2 s1 r2", Group::VB, 3), 2'000);
      EXPECT_FALSE(v.equal());
      EXPECT_EQ(v.nodes, 2'000U);
    }

    TEST(BoundedEqual, MonotoneInBudget) {
      Presentation  p  = presentation(Group::VB, 3);
      Word          w1 = parse("s1 s2 s1 r1", Group::VB, 3);
      Word          w2 = parse("s2 s1 s2 r1", Group::VB, 3);
      OracleVerdict a  = bounded_equal(p, w1, w2, 50);
      ASSERT_TRUE(a.equal());
      for (std::size_t b : {100U, 1'000U, 10'000U}) {
        OracleVerdict v = bounded_equal(p, w1, w2, b);
        EXPECT_TRUE(v.equal());
        EXPECT_EQ(v.witness.size(), a.witness.size());
      }
    }

    TEST(Replay, RejectsBogusWitness) {
      Word w1 = parse("s1", Group::VB, 3);
      Word w2 = parse("s2", Group::VB, 3);
      EXPECT_FALSE(replay(w1, w2, {}));
      EXPECT_FALSE(replay(w1, w2, {{0, parse("r1 r1", Group::VB, 3)}}));
    }

    TEST(RandomRelatorProduct, ZeroCountIsEmpty) {
      EXPECT_TRUE(
          random_relator_product(presentation(Group::VB, 3), 42, 0).empty());
    }

    TEST(RandomRelatorProduct, Deterministic) {
      Presentation p = presentation(Group::VB, 4);
      EXPECT_EQ(random_relator_product(p, 7, 3), random_relator_product(p, 7, 3));
      EXPECT_EQ(random_word(p, 7, 9), random_word(p, 7, 9));
    }

    TEST(RandomRelatorProduct, NormalizesToIdentity) {
      for (int n = 2; n <= 3; ++n) {
        Presentation p = presentation(Group::VB, n);
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
          Word r = random_relator_product(p, seed, 2);
          EXPECT_TRUE(normalize(r).is_identity()) << format(r);
        }
      }
    }

  }  // namespace
}  // namespace vbraid
