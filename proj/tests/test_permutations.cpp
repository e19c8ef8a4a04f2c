// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include "vbraid/error.hpp"
#include "vbraid/permutations.hpp"

namespace vbraid {
  namespace {

    TEST(Nu, LambdaGeneratorIsPure) {
      EXPECT_TRUE(nu(parse("s1 r1", Group::VB, 2)).is_identity());
      EXPECT_TRUE(nu(parse("r1 s1^-1", Group::VB, 2)).is_identity());
    }

    TEST(Nu, EmptyWordIsIdentity) {
      EXPECT_TRUE(nu(Word{4, Group::VB, {}}).is_identity());
    }

    TEST(Nu, ComposesLeftToRight) {
      Permutation p = nu(parse("r1 r2", Group::VB, 3));
      EXPECT_EQ(format(p), "(2 3 1)");
      EXPECT_EQ(p(1), 2);
      EXPECT_EQ(p(2), 3);
      EXPECT_EQ(p(3), 1);
    }

    TEST(Nu, IgnoresEvenExponents) {
      EXPECT_TRUE(nu(parse("s1^2 r2^-2", Group::VB, 3)).is_identity());
    }

    TEST(Nu, RejectsLambdaLetters) {
      EXPECT_THROW((void)nu(parse("l[1,2]", Group::VP, 3)), AlphabetError);
    }

    TEST(Permutation, InverseAndComposition) {
      Permutation p = nu(parse("r1 r2", Group::VB, 3));
      EXPECT_TRUE(compose(p, p.inverse()).is_identity());
      EXPECT_TRUE(compose(p.inverse(), p).is_identity());
      EXPECT_THROW((void)Permutation(std::vector<int>{1, 1, 3}), Error);
    }

    TEST(CosetRep, IdentityHasTrivialRow) {
      SchreierRep rep = coset_rep(Permutation::identity(4));
      EXPECT_EQ(rep.row, (std::vector<int>{2, 3, 4}));
      EXPECT_TRUE(canonical_word(rep).empty());
    }

    TEST(CosetRep, TranspositionAtTwoStrands) {
      SchreierRep rep = coset_rep(Permutation::transposition(2, 1));
      EXPECT_EQ(rep.row, (std::vector<int>{1}));
      EXPECT_EQ(format(canonical_word(rep)), "r1");
    }

    TEST(CosetRep, ProjectsBackExhaustively) {
      for (int n = 2; n <= 5; ++n) {
        std::set<std::vector<int>> seen;
        for (SchreierRep const& rep : all_coset_reps(n)) {
          Permutation p = nu(canonical_word(rep));
          EXPECT_EQ(coset_rep(p), rep);
          seen.insert(p.images());
        }
        std::size_t fact = 1;
        for (int k = 2; k <= n; ++k) {
          fact *= static_cast<std::size_t>(k);
        }
        EXPECT_EQ(seen.size(), fact) << "n = " << n;
      }
    }

    TEST(CosetRep, TransversalIsPrefixClosed) {
      for (SchreierRep const& rep : all_coset_reps(4)) {
        Word w = canonical_word(rep);
        for (std::size_t k = 0; k <= w.size(); ++k) {
          Word prefix{4, Group::VB,
                      {w.letters.begin(),
                       w.letters.begin() + static_cast<std::ptrdiff_t>(k)}};
          EXPECT_EQ(canonical_word(coset_rep(nu(prefix))), prefix)
              << format(w) << " prefix " << k;
        }
      }
    }

    TEST(ActOnLambda, RhoJMovesSecondIndex) {
      int const n = 5;
      for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          EXPECT_EQ(act_on_lambda(Permutation::transposition(n, j), {i, j}),
                    std::make_pair(i, j + 1));
        }
      }
    }

    TEST(ActOnLambda, IdentityFixes) {
      EXPECT_EQ(act_on_lambda(Permutation::identity(3), {1, 3}),
                std::make_pair(1, 3));
    }

    TEST(ActOnLambda, RhoIMinusOneMovesFirstIndex) {
      EXPECT_EQ(act_on_lambda(Permutation::transposition(4, 1), {2, 4}),
                std::make_pair(1, 4));
      EXPECT_EQ(act_on_lambda(Permutation::transposition(4, 2), {3, 1}),
                std::make_pair(2, 1));
    }

  }  // namespace
}  // namespace vbraid
