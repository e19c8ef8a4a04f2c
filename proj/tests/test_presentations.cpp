// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <map>
#include <string>

#include "vbraid/error.hpp"
#include "vbraid/presentations.hpp"

namespace vbraid {
  namespace {

    std::map<std::string, int> counts(Group g, int n) {
      std::map<std::string, int> out;
      for (Relator const& r : presentation(g, n).relators) {
        ++out[r.family];
      }
      return out;
    }

    int at_least_zero(int v) {
      return v < 0 ? 0 : v;
    }

    TEST(Presentation, VirtualBraidThreeStrands) {
      std::map<std::string, int> expected{{"braid", 1},
                                          {"rho-braid", 1},
                                          {"rho-involution", 2},
                                          {"mixed", 1}};
      EXPECT_EQ(counts(Group::VB, 3), expected);
      EXPECT_EQ(presentation(Group::VB, 3).relators.size(), 5U);
    }

    TEST(Presentation, VirtualPureThreeStrands) {
      Presentation p = presentation(Group::VP, 3);
      ASSERT_EQ(p.relators.size(), 6U);
      bool found = false;
      for (Relator const& r : p.relators) {
        EXPECT_EQ(r.family, "triangle");
        found = found
                || format(r.word)
                       == "l[1,2] l[1,3] l[2,3] l[1,2]^-1 l[1,3]^-1 l[2,3]^-1";
      }
      EXPECT_TRUE(found);
    }

    TEST(Presentation, UniversalTwoStrandsIsFree) {
      EXPECT_TRUE(presentation(Group::UB, 2).relators.empty());
    }

    TEST(Presentation, ClosedFormCounts) {
      for (int n = 2; n <= 8; ++n) {
        int const braid = at_least_zero(n - 2);
        int const far   = at_least_zero((n - 2) * (n - 3) / 2);
        int const mixed_far = at_least_zero((n - 2) * (n - 3));
        int const inv   = n - 1;
        int const tri   = n * (n - 1) * (n - 2);
        int const disj  = n * (n - 1) * (n - 2) * (n - 3) / 2;
        auto      drop0 = [](std::map<std::string, int> m) {
          std::erase_if(m, [](auto const& kv) { return kv.second == 0; });
          return m;
        };
        EXPECT_EQ(counts(Group::B, n),
                  drop0({{"braid", braid}, {"far-commute", far}}));
        EXPECT_EQ(counts(Group::S, n),
                  drop0({{"braid", braid}, {"far-commute", far},
                         {"involution", inv}}));
        EXPECT_EQ(counts(Group::VB, n),
                  drop0({{"braid", braid}, {"far-commute", far},
                         {"rho-braid", braid}, {"rho-far-commute", far},
                         {"rho-involution", inv},
                         {"mixed-far-commute", mixed_far}, {"mixed", braid}}));
        EXPECT_EQ(counts(Group::WB, n),
                  drop0({{"braid", braid}, {"far-commute", far},
                         {"alpha-braid", braid}, {"alpha-far-commute", far},
                         {"alpha-involution", inv},
                         {"mixed-far-commute", mixed_far}, {"mixed", braid},
                         {"welded", braid}}));
        EXPECT_EQ(counts(Group::SG, n),
                  drop0({{"braid", braid}, {"far-commute", far},
                         {"tau-far-commute", far},
                         {"mixed-far-commute", mixed_far},
                         {"tau-sigma-commute", inv}, {"mixed", braid},
                         {"mixed-reverse", braid}}));
        EXPECT_EQ(counts(Group::UB, n),
                  drop0({{"braid", braid}, {"far-commute", far},
                         {"c-far-commute", far},
                         {"mixed-far-commute", mixed_far}}));
        EXPECT_EQ(counts(Group::VP, n),
                  drop0({{"triangle", tri}, {"disjoint-commute", disj}}));
        EXPECT_EQ(counts(Group::Cb, n),
                  drop0({{"triangle", tri}, {"disjoint-commute", disj},
                         {"shared-target-commute", tri / 2}}));
      }
    }

    TEST(Presentation, RejectsTooFewStrands) {
      EXPECT_THROW((void)presentation(Group::VB, 1), Error);
    }

    TEST(MapWord, UbToBraidDropsC) {
      Word w = parse("s1 c1 s1", Group::UB, 3);
      EXPECT_EQ(format(map_word(Hom::phi_UB, w)), "s1^2");
      EXPECT_EQ(format(map_word(Hom::psi, w)), "s1^2");
    }

    TEST(MapWord, UbToVirtualKeepsExponents) {
      Word w = parse("c1 c1", Group::UB, 3);
      EXPECT_EQ(format(map_word(Hom::phi_UV, w)), "r1^2");
    }

    TEST(MapWord, UbToSingular) {
      Word w = parse("s1 c2", Group::UB, 3);
      EXPECT_EQ(format(map_word(Hom::phi_US, w)), "s1 t2");
    }

    TEST(MapWord, RejectsForeignAlphabet) {
      EXPECT_THROW((void)map_word(Hom::phi_US, parse("r1", Group::VB, 3)),
                   AlphabetError);
    }

    TEST(Verify, VirtualToWeldedAtFourStrands) {
      EXPECT_TRUE(verify_homomorphism(Hom::phi_VW, 4, Backend::AUT).passed());
    }

    TEST(Verify, UniversalToBraidAtFourStrands) {
      EXPECT_TRUE(verify_homomorphism(Hom::phi_UB, 4, Backend::AUT).passed());
    }

    TEST(Verify, UniversalToSingularIsSyntactic) {
      HomReport r = verify_homomorphism(Hom::phi_US, 4, Backend::SYNTACTIC);
      EXPECT_TRUE(r.passed());
      EXPECT_EQ(r.verdicts.size(), presentation(Group::UB, 4).relators.size());
    }

    TEST(Verify, UniversalToVirtualByNormalForm) {
      for (int n = 2; n <= 4; ++n) {
        EXPECT_TRUE(verify_homomorphism(Hom::phi_UV, n, Backend::NF).passed());
      }
    }

    TEST(Verify, NuByPermutations) {
      for (int n = 2; n <= 6; ++n) {
        EXPECT_TRUE(verify_homomorphism(Hom::nu, n, Backend::PERM).passed());
      }
    }

    TEST(Verify, BackendMismatchThrows) {
      EXPECT_THROW((void)verify_homomorphism(Hom::phi_US, 3, Backend::AUT),
                   BackendError);
      EXPECT_FALSE(backend_supports(Backend::NF, Group::WB));
    }

    TEST(Verify, EveryPresentationUnderItsBestBackend) {
      for (int n = 2; n <= 5; ++n) {
        EXPECT_TRUE(verify_presentation(Group::B, n, Backend::AUT).passed());
        EXPECT_TRUE(verify_presentation(Group::S, n, Backend::PERM).passed());
        EXPECT_TRUE(verify_presentation(Group::VB, n, Backend::NF).passed());
        EXPECT_TRUE(verify_presentation(Group::WB, n, Backend::AUT).passed());
        EXPECT_TRUE(verify_presentation(Group::VP, n, Backend::NF).passed());
        EXPECT_TRUE(verify_presentation(Group::Cb, n, Backend::AUT).passed());
      }
    }

    TEST(IsTrivial, SyntacticAcceptsRotationsAndInverses) {
      EXPECT_TRUE(is_trivial(parse("s2 s1 s2^-1 s1^-1 s2^-1 s1", Group::SG, 3),
                             Backend::SYNTACTIC));
      std::string detail;
      EXPECT_FALSE(is_trivial(parse("s1 s2", Group::SG, 3), Backend::SYNTACTIC,
                              &detail));
      EXPECT_FALSE(detail.empty());
    }

    TEST(Restricted, KeepsOnlyListedIndices) {
      Presentation p = restricted_presentation(Group::VP, 4, {1, 2, 3});
      EXPECT_EQ(p.relators.size(), 6U);
    }

  }  // namespace
}  // namespace vbraid
