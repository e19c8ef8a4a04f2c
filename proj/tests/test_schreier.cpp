// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "vbraid/free_auto.hpp"
#include "vbraid/oracle.hpp"
#include "vbraid/presentations.hpp"
#include "vbraid/schreier.hpp"

namespace vbraid {
  namespace {

    std::string rewrite(char const* text, int n) {
      auto [v, rep] = rewrite_to_vp(parse(text, Group::VB, n));
      return format_or_e(v) + " | " + format_or_e(canonical_word(rep));
    }

    TEST(RewriteToVp, SingleSigma) {
      EXPECT_EQ(rewrite("s1", 2), "l[1,2]^-1 | r1");
    }

    TEST(RewriteToVp, BraidRelator) {
      EXPECT_EQ(rewrite("s1 s2 s1 s2^-1 s1^-1 s2^-1", 3),
                "l[1,2]^-1 l[1,3]^-1 l[2,3]^-1 l[1,2] l[1,3] l[2,3] | e");
    }

    TEST(RewriteToVp, FarCommutationRelator) {
      EXPECT_EQ(rewrite("s1 s3 s1^-1 s3^-1", 4),
                "l[1,2]^-1 l[3,4]^-1 l[1,2] l[3,4] | e");
    }

    TEST(RewriteToVp, RhoRelatorEmitsNothing) {
      EXPECT_EQ(rewrite("r1 r2 r1 r2^-1 r1^-1 r2^-1", 3), "e | e");
    }

    TEST(RewriteToVp, SigmaSquared) {
      EXPECT_EQ(rewrite("s1^2", 2), "l[1,2]^-1 l[2,1]^-1 | e");
    }

    TEST(RewriteToVp, LambdaWordsAreFixedPoints) {
      for (int n = 2; n <= 5; ++n) {
        for (int i = 1; i <= n; ++i) {
          for (int j = 1; j <= n; ++j) {
            if (i == j) {
              continue;
            }
            auto [v, rep] = rewrite_to_vp(lambda_word(i, j, n));
            EXPECT_EQ(format(v), format(Word{n, Group::VP,
                                             {gen::lambda(i, j)}}));
            EXPECT_TRUE(canonical_word(rep).empty());
          }
        }
      }
    }

    // The rewritten word times the coset word must define the same element
    // of WB_n as the input; the automorphism representation sees this.
    TEST(RewriteToVp, PreservesTheWeldedImage) {
      Presentation p = presentation(Group::VB, 4);
      for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        Word w        = random_word(p, seed, 10);
        auto [v, rep] = rewrite_to_vp(w);
        Word back     = concat(flatten_vp(v), canonical_word(rep));
        EXPECT_EQ(wb_image(back), wb_image(w)) << format(w);
        EXPECT_EQ(nu(canonical_word(rep)), nu(w)) << format(w);
      }
    }

    // Independent check in VB_n itself: g = flatten(v) * coset word for
    // every generator letter g.
    TEST(RewriteToVp, OracleConfirmsGenerators) {
      for (int n = 3; n <= 4; ++n) {
        Presentation p = presentation(Group::VB, n);
        for (int i = 1; i < n; ++i) {
          for (Letter g : {gen::sigma(i), gen::rho(i), gen::sigma(i, -1),
                           gen::rho(i, -1)}) {
            Word w{n, Group::VB, {g}};
            auto [v, rep] = rewrite_to_vp(w);
            Word back     = concat(flatten_vp(v), canonical_word(rep));
            EXPECT_TRUE(bounded_equal(p, w, back, 20'000).equal()) << format(w);
          }
        }
      }
    }

    TEST(LambdaWord, AdjacentDefinitions) {
      EXPECT_EQ(format(lambda_word(1, 2, 3)), "r1 s1^-1");
      EXPECT_EQ(format(lambda_word(2, 1, 3)), "s1^-1 r1");
    }

  }  // namespace
}  // namespace vbraid
