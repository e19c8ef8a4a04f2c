// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include "vbraid/error.hpp"
#include "vbraid/free_auto.hpp"
#include "vbraid/oracle.hpp"
#include "vbraid/presentations.hpp"
#include "vbraid/schreier.hpp"
#include "vbraid/vp_normalize.hpp"

namespace vbraid {
  namespace {

    Word vp(char const* text, int n) {
      return parse(text, Group::VP, n);
    }

    Word vb(char const* text, int n) {
      return parse(text, Group::VB, n);
    }

    std::string conj(int i, int j, char const* x, int n) {
      Word w = vp(x, n);
      return format(conjugate_letter(layer_letter(i, j), w.letters.front()));
    }

    // Proves u^-1 t u = result in VP_n with the equality oracle, restricted
    // to the relators whose indices occur in the words.
    bool oracle_confirms(Word const& lhs, Word const& rhs, int n) {
      std::set<int> idx;
      for (Word const* w : {&lhs, &rhs}) {
        for (Letter const& l : w->letters) {
          idx.insert(l.i);
          idx.insert(l.j);
        }
      }
      Presentation p =
          restricted_presentation(Group::VP, n, {idx.begin(), idx.end()});
      return bounded_equal(p, lhs, rhs, 1'000'000).equal();
    }

    TEST(ConjugateLetter, TopIndexRule) {
      EXPECT_EQ(conj(1, 3, "l[1,2]", 3), "l[3,2]{l[1,2]} l[1,3] l[3,2]^-1");
    }

    TEST(ConjugateLetter, DisjointIndicesCommute) {
      EXPECT_EQ(conj(1, 3, "l[4,5]", 5), "l[1,3]");
    }

    TEST(ConjugateLetter, SecondLambdaRule) {
      EXPECT_EQ(conj(2, 3, "l[2,1]", 3), "l[3,1]{l[2,1]} l[2,3] l[3,1]^-1");
    }

    TEST(ConjugateLetter, DownLetterAbsorbsAdmissiblePower) {
      EXPECT_EQ(conj(3, 2, "l[1,2]", 3), "l[3,2]{l[1,2]}");
    }

    TEST(ConjugateLetter, RejectsHigherLayerConjugator) {
      EXPECT_THROW((void)conj(1, 3, "l[1,4]", 4), LayerError);
    }

    TEST(ConjugateByWord, EmptyConjugator) {
      EXPECT_EQ(format(conjugate_by_word(layer_letter(1, 3), Word{3, Group::VP, {}})),
                "l[1,3]");
    }

    TEST(ConjugateByWord, InverseConjugator) {
      EXPECT_EQ(
          format(conjugate_by_word(layer_letter(1, 3), vp("l[2,1]^-1", 3))),
          "l[3,1]{l[2,1]^-1}^-1 l[2,3]^-1 l[3,1] l[1,3] l[2,3]");
    }

    // The identity l[1,2]^-2 l[2,3] l[1,2]^2 = flatten(r) is proved as a
    // chain of oracle proofs: the first conjugation, then each letter of
    // the intermediate word conjugated once more, then free reduction.
    TEST(ConjugateByWord, SquaredConjugatorAgreesWithOracle) {
      Word const x  = vp("l[1,2]", 3);
      Word const xi = invert(x);
      LayerLetter const t     = layer_letter(2, 3);
      LayerWord const   once  = conjugate_by_word(t, x);
      LayerWord const   twice = conjugate_by_word(t, vp("l[1,2] l[1,2]", 3));
      ASSERT_TRUE(oracle_confirms(concat(concat(xi, flatten(t, 3)), x),
                                  flatten(once, 3), 3));
      Word product{3, Group::VP, {}};
      for (LayerLetter const& y : once) {
        LayerWord yx = conjugate_letter(y, x.letters.front());
        ASSERT_TRUE(oracle_confirms(concat(concat(xi, flatten(y, 3)), x),
                                    flatten(yx, 3), 3))
            << format(y);
        product = concat(product, flatten(yx, 3));
      }
      EXPECT_TRUE(oracle_confirms(product, flatten(twice, 3), 3));
      EXPECT_EQ(free_reduce(concat(concat(xi, xi), concat(flatten(t, 3),
                                                         concat(x, x)))),
                vp("l[1,2]^-2 l[2,3] l[1,2]^2", 3));
    }

    TEST(ConjugationRules, EveryInstanceAtThreeStrandsIsProved) {
      for (ConjugationRule const& rule : conjugation_rules(3)) {
        Word x{3, Group::VP, {rule.conjugator}};
        Word lhs = concat(concat(invert(x), flatten(rule.target, 3)), x);
        EXPECT_TRUE(oracle_confirms(lhs, flatten(rule.result, 3), 3))
            << format(rule.target) << " ^ " << format(rule.conjugator);
      }
    }

    TEST(NormalizeVp, AlreadyLayered) {
      EXPECT_EQ(format(normalize_vp(vp("l[1,2] l[1,3]", 3))),
                "NF(n=3; L1: l[1,2]; L2: l[1,3]; coset: e)");
    }

    TEST(NormalizeVp, MovesLowerLayerLeft) {
      EXPECT_EQ(format(normalize_vp(vp("l[1,3] l[1,2]", 3))),
                "NF(n=3; L1: l[1,2]; L2: l[3,2]{l[1,2]} l[1,3] l[3,2]^-1; "
                "coset: e)");
    }

    TEST(NormalizeVp, TriangleRelatorIsTrivial) {
      Word r = vp("l[1,2]^-1 l[1,3]^-1 l[2,3]^-1 l[1,2] l[1,3] l[2,3]", 3);
      EXPECT_TRUE(normalize_vp(r).is_identity());
      EXPECT_TRUE(bounded_equal(presentation(Group::VP, 3), r,
                                Word{3, Group::VP, {}}, 100'000)
                      .equal());
    }

    TEST(NormalizeVp, EveryVpRelatorIsTrivial) {
      for (int n = 2; n <= 5; ++n) {
        for (Relator const& r : presentation(Group::VP, n).relators) {
          EXPECT_TRUE(normalize_vp(r.word).is_identity())
              << n << " " << format(r.word);
        }
      }
    }

    // For four strands the reduced powers are not a free basis: with
    // u = l[2,1] l[3,1](l[2,1]) l[2,3] l[3,1]^-1 = l[2,3] l[2,1] and l[2,3]
    // commuting with l[4,1], the letters l[4,1](u) and l[4,1](l[2,1]) are
    // the same element but distinct normal forms.
    TEST(NormalizeVp, KnownNonUniquenessAtFourStrands) {
      NormalForm u = normalize_vp(vp("l[3,1] l[2,1] l[2,3] l[3,1]^-1", 3));
      ASSERT_EQ(format(u),
                "NF(n=3; L1: l[2,1]; L2: l[3,1]{l[2,1]} l[2,3] l[3,1]^-1; "
                "coset: e)");
      EXPECT_TRUE(oracle_confirms(flatten(u), vp("l[2,3] l[2,1]", 3), 3));
      EXPECT_TRUE(oracle_confirms(vp("l[2,3]^-1 l[4,1] l[2,3]", 4),
                                  vp("l[4,1]", 4), 4));

      LayerLetter big = layer_letter(4, 1);
      big.power       = u.layers;
      Word lhs        = flatten(big, 4);
      Word rhs        = vp("l[2,1]^-1 l[4,1] l[2,1]", 4);
      EXPECT_EQ(epsilon_image(lhs), epsilon_image(rhs));
      EXPECT_NE(normalize_vp(lhs), normalize_vp(rhs));
    }

    TEST(Normalize, SingleSigma) {
      EXPECT_EQ(format(normalize(vb("s1", 2))),
                "NF(n=2; L1: l[1,2]^-1; coset: r1)");
    }

    TEST(Normalize, SigmaSquared) {
      NormalForm f = normalize(vb("s1^2", 2));
      EXPECT_EQ(format(f), "NF(n=2; L1: l[1,2]^-1 l[2,1]^-1; coset: e)");
      EXPECT_EQ(wb_image(vb("s1^2", 2)),
                epsilon_image(vp("l[1,2]^-1 l[2,1]^-1", 2)));
    }

    TEST(Normalize, RelatorsOfThreeStrandsAreTrivial) {
      for (Relator const& r : presentation(Group::VB, 3).relators) {
        NormalForm f = normalize(r.word);
        EXPECT_TRUE(f.is_identity()) << format(r.word) << " -> " << format(f);
      }
    }

    TEST(Normalize, RespectsBudget) {
      NormalizeOptions tiny;
      tiny.budget = 1;
      Word w = vb("s1 s2 s1 s2 s1 s2 s1 s2^-1 r1 s2 s1^-1", 3);
      EXPECT_THROW((void)normalize(w, tiny), BudgetExceeded);
    }

    TEST(Equal, BraidRelation) {
      EXPECT_TRUE(equal(vb("s1 s2 s1", 3), vb("s2 s1 s2", 3)));
    }

    TEST(Equal, ForbiddenRelationFails) {
      EXPECT_FALSE(equal(vb("r1 s2 s1", 3), vb("s2 s1 r2", 3)));
    }

    TEST(Equal, Reflexive) {
      Word w = vb("s1 r2 s1^-1 r1 s2^3", 3);
      EXPECT_TRUE(equal(w, w));
    }

    TEST(NfToWord, Identity) {
      EXPECT_TRUE(nf_to_word(normalize(Word{3, Group::VB, {}})).empty());
    }

    TEST(NfToWord, AdjacentLambda) {
      NormalForm f = normalize_vp(vp("l[1,2]", 3));
      EXPECT_EQ(format(nf_to_word(f)), "r1 s1^-1");
    }

    TEST(NfToWord, ReducedPowerExpandsToConjugate) {
      LayerLetter t = layer_letter(3, 2);
      t.power       = {LayerWord{layer_letter(1, 2)}};
      Word expected = free_reduce(concat(
          concat(invert(lambda_word(1, 2, 3)), lambda_word(3, 2, 3)),
          lambda_word(1, 2, 3)));
      EXPECT_EQ(free_reduce(flatten_vp(flatten(t, 3))), expected);
    }

    TEST(NfToWord, RoundTrip) {
      Presentation p = presentation(Group::VB, 3);
      for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        Word       w = random_word(p, seed, 8);
        NormalForm f = normalize(w);
        EXPECT_EQ(normalize(nf_to_word(f)), f) << format(w);
      }
    }

  }  // namespace
}  // namespace vbraid
