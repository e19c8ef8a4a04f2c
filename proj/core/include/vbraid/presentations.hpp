// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0
//
// Presentations of B_n, S_n, VB_n, WB_n, SG_n, VP_n, UB_n and Cb_n, the
// homomorphisms between them, and relator-by-relator verification that a
// homomorphism is well defined.
//
// Commutation families are instantiated for |i - j| >= 2 (sigma, rho, alpha,
// tau and c indices) and for pairwise distinct indices (lambda and epsilon
// relations).  Each relation u = v is stored as the relator u v^-1.

#ifndef VBRAID_PRESENTATIONS_HPP_
#define VBRAID_PRESENTATIONS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "vbraid/words.hpp"

namespace vbraid {

  /// A relator together with the label of the relation family it belongs to
  /// (for example "braid", "far-commute", "mixed").
  struct Relator {
    std::string family;
    Word        word;
  };

  struct Presentation {
    Group                group = Group::VB;
    int                  n     = 2;
    std::vector<Family>  generators;
    std::vector<Relator> relators;

    /// Relator words without their family labels.
    [[nodiscard]] std::vector<Word> words() const;
  };

  /// Full presentation of `group` on n strands.  Throws `Error` for n < 2 or
  /// for the F tag.
  [[nodiscard]] Presentation presentation(Group group, int n);

  /// Sub-presentation of VP_n or Cb_n keeping only the relators whose
  /// indices all lie in `indices`.
  [[nodiscard]] Presentation restricted_presentation(
      Group group, int n, std::vector<int> const& indices);

  /// Homomorphism identifiers.
  enum class Hom : std::uint8_t { phi_VW, phi_US, phi_UV, phi_UB, psi, nu };

  [[nodiscard]] std::string hom_name(Hom h);
  [[nodiscard]] Hom         parse_hom(std::string_view name);

  struct HomSpec {
    Hom   id;
    Group source;
    Group target;
  };

  [[nodiscard]] HomSpec hom_spec(Hom h);

  /// Letter-wise substitution followed by free reduction.  Throws
  /// `AlphabetError` if `w` is not over the source alphabet.
  [[nodiscard]] Word map_word(Hom h, Word const& w);

  /// Decision procedures for triviality of a word in the target group.
  enum class Backend : std::uint8_t { NF, AUT, SYNTACTIC, PERM };

  [[nodiscard]] std::string backend_name(Backend b);
  [[nodiscard]] Backend     parse_backend(std::string_view name);

  /// True if `b` can decide triviality in `target`.
  [[nodiscard]] bool backend_supports(Backend b, Group target) noexcept;

  struct RelatorVerdict {
    Relator     relator;
    Word        image;
    bool        trivial = false;
    std::string detail;
  };

  struct HomReport {
    std::string                 subject;
    int                         n = 2;
    Backend                     backend;
    std::vector<RelatorVerdict> verdicts;

    [[nodiscard]] bool passed() const noexcept;
  };

  /// Maps every relator of the source presentation and checks that the
  /// image is trivial with `backend`.  Throws `BackendError` if the backend
  /// cannot decide triviality in the target group.
  [[nodiscard]] HomReport verify_homomorphism(Hom h, int n, Backend backend);

  /// Checks every relator of `presentation(group, n)` for triviality in the
  /// group itself.
  [[nodiscard]] HomReport verify_presentation(Group group, int n,
                                              Backend backend);

  /// Triviality of `w` in its own group decided by `backend`.  The detail
  /// string explains a negative verdict.
  [[nodiscard]] bool is_trivial(Word const& w, Backend backend,
                                std::string* detail = nullptr);

}  // namespace vbraid

#endif  // VBRAID_PRESENTATIONS_HPP_
