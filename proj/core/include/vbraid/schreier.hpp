// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0
//
// Rewriting of virtual braid words into words over the lambda generators of
// the virtual pure braid group followed by a Schreier coset representative.

#ifndef VBRAID_SCHREIER_HPP_
#define VBRAID_SCHREIER_HPP_

#include <utility>

#include "vbraid/permutations.hpp"
#include "vbraid/words.hpp"

namespace vbraid {

  /// Returns (v, rep) with v a freely reduced VP word such that
  /// v * canonical_word(rep) equals w in VB_n and rep = coset_rep(nu(w)).
  /// Throws `AlphabetError` unless w is a VB word.
  [[nodiscard]] std::pair<Word, SchreierRep> rewrite_to_vp(Word const& w);

  /// The sigma/rho word of a single lambda generator:
  ///   l[i,i+1] = r_i s_i^-1,  l[i+1,i] = s_i^-1 r_i,
  ///   l[i,j] = r_{j-1} ... r_{i+1} l[i,i+1] r_{i+1} ... r_{j-1}  (i < j),
  ///   l[j,i] = r_{j-1} ... r_{i+1} l[i+1,i] r_{i+1} ... r_{j-1}  (i < j).
  [[nodiscard]] Word lambda_word(int i, int j, int n);

  /// Replaces every lambda letter of a VP word by its sigma/rho word.  The
  /// result is not reduced.
  [[nodiscard]] Word flatten_vp(Word const& v);

}  // namespace vbraid

#endif  // VBRAID_SCHREIER_HPP_
