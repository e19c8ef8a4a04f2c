// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0
//
// The symmetric group S_n, the projection nu of braid-like words onto it, the
// Schreier transversal of the pure subgroup, and the index action of S_n on
// lambda generators.
//
// Conventions.  `compose(p, q)` is the permutation with images p(q(k)); with
// this product nu is a homomorphism, nu(u v) = compose(nu(u), nu(v)), and the
// one-line tuple of nu(w) lists the strand labels in the order they occupy
// after w.  A rho-word w with nu(w) = p satisfies
//   w^-1 l[a,b] w = l[p^-1(a), p^-1(b)],
// which is what `act_on_lambda` returns.

#ifndef VBRAID_PERMUTATIONS_HPP_
#define VBRAID_PERMUTATIONS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "vbraid/words.hpp"

namespace vbraid {

  /// A bijection of {1..n}; `images[k - 1]` is the image of k.
  class Permutation {
   public:
    Permutation() = default;

    /// Throws `Error` unless `images` is a bijection of {1..n}.
    explicit Permutation(std::vector<int> images);

    [[nodiscard]] static Permutation identity(int n);

    /// The transposition (i, i+1) on n points.
    [[nodiscard]] static Permutation transposition(int n, int i);

    [[nodiscard]] int degree() const noexcept {
      return static_cast<int>(_images.size());
    }

    [[nodiscard]] int operator()(int k) const {
      return _images[k - 1];
    }

    [[nodiscard]] std::vector<int> const& images() const noexcept {
      return _images;
    }

    [[nodiscard]] bool is_identity() const noexcept;

    [[nodiscard]] Permutation inverse() const;

    friend bool operator==(Permutation const&, Permutation const&) = default;

   private:
    std::vector<int> _images;
  };

  /// The permutation with images p(q(k)).
  [[nodiscard]] Permutation compose(Permutation const& p,
                                    Permutation const& q);

  /// One-line form `(p1 p2 ... pn)`.
  [[nodiscard]] std::string format(Permutation const& p);

  /// Image under nu of a word whose letters are sigma, rho, alpha, tau or c:
  /// each letter with odd exponent contributes the transposition (i, i+1).
  /// Throws `AlphabetError` for lambda or x letters.
  [[nodiscard]] Permutation nu(Word const& w);

  /// A coset representative of the pure subgroup: the row j_2..j_n with
  /// 1 <= j_k <= k, whose canonical word is m_{2,j_2} ... m_{n,j_n} with
  /// m_{k,l} = r_{k-1} r_{k-2} ... r_l for l < k and empty for l = k.
  struct SchreierRep {
    int              n = 1;
    std::vector<int> row;  // row[k - 2] = j_k

    friend bool operator==(SchreierRep const&, SchreierRep const&) = default;
  };

  /// The canonical rho-word of a representative.
  [[nodiscard]] Word canonical_word(SchreierRep const& rep);

  /// The unique representative whose canonical word projects to `p`.
  [[nodiscard]] SchreierRep coset_rep(Permutation const& p);

  /// All n! representatives in lexicographic order of their rows.
  [[nodiscard]] std::vector<SchreierRep> all_coset_reps(int n);

  /// Index pair of w^-1 l[i,j] w for any rho-word w with nu(w) = p.
  [[nodiscard]] std::pair<int, int> act_on_lambda(Permutation const&   p,
                                                  std::pair<int, int> ij);

}  // namespace vbraid

#endif  // VBRAID_PERMUTATIONS_HPP_
