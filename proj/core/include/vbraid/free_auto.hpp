// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0
//
// Endomorphisms of the free group F_n = <x_1, ..., x_n>, the Artin
// representation of B_n, the permutation automorphisms a_i, the
// basis-conjugating automorphisms e_ij, and the image of virtual and welded
// braid words under the quotient onto conjugating automorphisms.
//
// Composition applies earlier letters first: compose(f, g) sends x_k to the
// result of applying g to f(x_k).  Under this convention e_{i,i+1} is the
// image of the word a_i s_i^-1.

#ifndef VBRAID_FREE_AUTO_HPP_
#define VBRAID_FREE_AUTO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "vbraid/permutations.hpp"
#include "vbraid/words.hpp"

namespace vbraid {

  /// Free group word as signed generator numbers: k means x_k, -k its
  /// inverse.
  using FreeWord = std::vector<int>;

  /// Cancels adjacent inverse pairs.
  [[nodiscard]] FreeWord reduce(FreeWord const& w);

  /// Inverse of a free word.
  [[nodiscard]] FreeWord inverse(FreeWord const& w);

  /// Conversion between `FreeWord` and `Word` over the F alphabet.
  [[nodiscard]] Word     to_word(FreeWord const& w, int n);
  [[nodiscard]] FreeWord to_free_word(Word const& w);

  /// An endomorphism of F_n given by the reduced images of x_1..x_n.
  class GeneratorMap {
   public:
    GeneratorMap() = default;

    /// Throws `IndexError` if an image uses a generator outside 1..n.
    GeneratorMap(int n, std::vector<FreeWord> images);

    [[nodiscard]] static GeneratorMap identity(int n);

    [[nodiscard]] int n() const noexcept {
      return _n;
    }

    [[nodiscard]] FreeWord const& image(int k) const {
      return _images[k - 1];
    }

    [[nodiscard]] std::vector<FreeWord> const& images() const noexcept {
      return _images;
    }

    [[nodiscard]] bool is_identity() const noexcept;

    friend bool operator==(GeneratorMap const&, GeneratorMap const&) = default;

   private:
    int                   _n = 0;
    std::vector<FreeWord> _images;
  };

  /// `x1 -> w1; x2 -> w2; ...` in the word grammar.
  [[nodiscard]] std::string format(GeneratorMap const& f);

  /// The Artin automorphism s_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i.
  [[nodiscard]] GeneratorMap artin_sigma(int i, int n);

  /// Inverse of `artin_sigma(i, n)`: x_i -> x_{i+1},
  /// x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}.
  [[nodiscard]] GeneratorMap artin_sigma_inverse(int i, int n);

  /// The permutation automorphism a_i swapping x_i and x_{i+1}.
  [[nodiscard]] GeneratorMap alpha(int i, int n);

  /// The basis-conjugating automorphism e_ij: x_i -> x_j^-1 x_i x_j.
  [[nodiscard]] GeneratorMap epsilon(int i, int j, int n);

  /// Inverse of `epsilon(i, j, n)`: x_i -> x_j x_i x_j^-1.
  [[nodiscard]] GeneratorMap epsilon_inverse(int i, int j, int n);

  /// Applies f first and g second.  Throws `Error` on mismatched n.
  [[nodiscard]] GeneratorMap compose(GeneratorMap const& f,
                                     GeneratorMap const& g);

  /// Substitutes the images of f into w and reduces.
  [[nodiscard]] FreeWord apply(GeneratorMap const& f, FreeWord const& w);

  /// Image of a word under s_i -> artin_sigma, r_i and a_i -> alpha,
  /// composed in word order.  Accepts B, S, VB and WB words.
  [[nodiscard]] GeneratorMap wb_image(Word const& w);

  /// Image of a word over the `l[i,j]` alphabet (VP or Cb) under
  /// l[i,j] -> epsilon(i, j), composed in word order.
  [[nodiscard]] GeneratorMap epsilon_image(Word const& w);

  /// Result of testing Artin's conditions on a map.
  struct ArtinReport {
    /// Every image is a reduced conjugate a_k^-1 x_{pi(k)} a_k with pi a
    /// permutation.
    bool conjugating = false;
    /// `conjugating` holds and the product x_1 ... x_n is fixed.
    bool braid = false;
    /// The extracted pi when `conjugating` holds.
    std::optional<Permutation> pi;
    /// The extracted conjugators a_1..a_n when `conjugating` holds.
    std::vector<FreeWord> conjugators;
  };

  [[nodiscard]] ArtinReport check_artin_conditions(GeneratorMap const& f);

  /// The three expressions of the pure braid generator a_ij.
  struct PureBraidForms {
    /// s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1 (B word).
    Word sigma_form;
    /// First expression over e letters (Cb word, e_ij written l[i,j]).
    Word epsilon_form_1;
    /// Second expression over e letters (Cb word).
    Word epsilon_form_2;
  };

  /// Throws `IndexError` unless 1 <= i < j <= n.
  [[nodiscard]] PureBraidForms pure_braid_aij(int i, int j, int n);

  /// A WB word whose image is e_ij, built from e_{i,i+1} = a_i s_i^-1 by
  /// conjugation with a-letters.  For i < j:
  ///   e_ij = a_{j-1} ... a_{i+1} e_{i,i+1} a_{i+1} ... a_{j-1},
  ///   e_ji = a_{j-1} ... a_{i+1} a_i e_{i,i+1} a_i a_{i+1} ... a_{j-1}.
  [[nodiscard]] Word epsilon_alpha_form(int i, int j, int n);

}  // namespace vbraid

#endif  // VBRAID_FREE_AUTO_HPP_
