// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0
//
// Layered normal forms in the virtual pure braid group VP_n and in VB_n.
//
// VP_n splits as V_{n-1}* x| (V_{n-2}* x| ( ... x| V_1*)).  The alphabet of
// layer m (top strand K = m + 1) is the "up" letters l[i,K] together with
// the reduced powers l[K,k](u) = u^-1 l[K,k] u of the "down" letters, u a
// normal-form word over lower layers that is empty or begins with a letter
// whose base has second index k.  An element is written w_1 w_2 ... w_{n-1}
// with w_m a freely reduced word over layer m; a VB_n element additionally
// carries a Schreier coset representative.  For n <= 3 the alphabet is a
// free basis and the form is unique.  For n >= 4 it is not: l[4,1](u) with
// u = l[2,1] l[3,1](l[2,1]) l[2,3] l[3,1]^-1 equals l[4,1](l[2,1]), so
// distinct normal forms can denote the same element.
//
// Moving a lower letter x leftwards past a layer letter t replaces t by
// x^-1 t x, which is rewritten over the layer alphabet by the conjugation
// rules below (K is the top strand, {i, j, K} distinct):
//
//   l[a,b] with {a,b} disjoint from {i,j}     unchanged
//   l[K,j](u) by l[i,j]^e                      l[K,j](u l[i,j]^e)
//   l[i,K] by l[i,j]                           l[K,j](l[i,j]) l[i,K] l[K,j]^-1
//   l[i,K] by l[i,j]^-1                        l[K,j]^-1 l[i,K] l[K,j](l[i,j]^-1)
//   l[K,i] by l[i,j]                           l[K,j] l[K,i] l[K,j](l[i,j])^-1
//   l[K,i] by l[i,j]^-1                        l[K,j](l[i,j]^-1)^-1 l[K,i] l[K,j]
//   l[j,K] by l[i,j]                           l[i,K] l[j,K] l[K,j] l[i,K]^-1
//                                                l[K,j](l[i,j])^-1
//   l[j,K] by l[i,j]^-1                        l[K,j](l[i,j]^-1)^-1 l[i,K]^-1
//                                                l[K,j] l[j,K] l[i,K]
//
// When the extended power of a down letter is no longer admissible the
// letter is re-expanded as the plain generator conjugated by the power.
// The recursion runs under a step budget with cycle detection; exhausting
// the budget or revisiting a state raises `BudgetExceeded`.

#ifndef VBRAID_VP_NORMALIZE_HPP_
#define VBRAID_VP_NORMALIZE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "vbraid/permutations.hpp"
#include "vbraid/words.hpp"

namespace vbraid {

  struct LayerLetter;

  /// A word over the alphabet of one layer.
  using LayerWord = std::vector<LayerLetter>;

  /// A letter of layer `layer` (top strand K = layer + 1).  An up letter is
  /// l[index, K]; a down letter is l[K, index](power).  `power` holds the
  /// layer words 1..layer-1 of the conjugator and is all-empty for up
  /// letters.
  struct LayerLetter {
    int                    layer    = 1;
    bool                   up       = true;
    int                    index    = 1;
    std::vector<LayerWord> power;
    int                    exponent = 1;

    [[nodiscard]] bool has_power() const noexcept;

    friend bool operator==(LayerLetter const&, LayerLetter const&) = default;
  };

  /// Normal form w_1 ... w_{n-1} * coset.  `layers[m - 1]` is w_m.
  struct NormalForm {
    int                    n = 2;
    std::vector<LayerWord> layers;
    SchreierRep            coset;

    [[nodiscard]] bool is_identity() const noexcept;

    friend bool operator==(NormalForm const&, NormalForm const&) = default;
  };

  /// Tuning for the normal form computation.
  struct NormalizeOptions {
    /// Maximum number of elementary conjugation steps per call.
    std::uint64_t budget = 1'000'000;
  };

  /// Text form, for example
  /// `NF(n=3; L1: l[1,2]; L2: l[3,2]{l[1,2]} l[1,3] l[3,2]^-1; coset: r1)`.
  [[nodiscard]] std::string format(NormalForm const& f);

  /// Text form of a single layer letter, for example `l[3,2]{l[1,2]}^-1`.
  [[nodiscard]] std::string format(LayerLetter const& t);

  /// Text form of a layer word; the empty word prints as `e`.
  [[nodiscard]] std::string format(LayerWord const& w);

  /// A layer letter for the plain generator l[i,j], placed in layer
  /// max(i, j) - 1 with an empty power.
  [[nodiscard]] LayerLetter layer_letter(int i, int j, int exponent = 1);

  /// The VP word obtained by writing every reduced power as u^-1 l u.
  [[nodiscard]] Word flatten(LayerLetter const& t, int n);
  [[nodiscard]] Word flatten(LayerWord const& w, int n);
  [[nodiscard]] Word flatten(NormalForm const& f);

  /// Rewrites x^-1 t x over the alphabet of t's layer.  `x` must be a lambda
  /// letter of exponent +-1 whose indices are at most t.layer, or, when t
  /// carries no power, any lambda letter whose indices are disjoint from
  /// those of t (t is then returned unchanged).  Throws `LayerError`
  /// otherwise.
  [[nodiscard]] LayerWord conjugate_letter(LayerLetter const& t,
                                           Letter const&      x,
                                           NormalizeOptions   opts = {});

  /// Rewrites u^-1 t u over the alphabet of t's layer for a VP word u whose
  /// indices are at most t.layer; the result is freely reduced.
  [[nodiscard]] LayerWord conjugate_by_word(LayerLetter const& t,
                                            Word const&        u,
                                            NormalizeOptions   opts = {});

  /// Normal form of a VP word (identity coset).
  [[nodiscard]] NormalForm normalize_vp(Word const& v,
                                        NormalizeOptions opts = {});

  /// Normal form of a VB word: Schreier rewriting followed by
  /// `normalize_vp`.
  [[nodiscard]] NormalForm normalize(Word const& w, NormalizeOptions opts = {});

  /// True iff the two VB words have the same normal form.
  [[nodiscard]] bool equal(Word const& w1, Word const& w2,
                           NormalizeOptions opts = {});

  /// A VB word representing the normal form: flattened layers followed by
  /// the canonical coset word, freely reduced.
  [[nodiscard]] Word nf_to_word(NormalForm const& f);

  /// One instance of the conjugation rule table: `target` (a plain
  /// generator of layer top - 1) conjugated by `conjugator` equals `result`.
  struct ConjugationRule {
    int         top = 3;
    LayerLetter target;
    Letter      conjugator;
    LayerWord   result;
  };

  /// Every rule instance used for layers with top strand 3..n.  Built once
  /// per n and cached.
  [[nodiscard]] std::vector<ConjugationRule> const& conjugation_rules(int n);

}  // namespace vbraid

#endif  // VBRAID_VP_NORMALIZE_HPP_
