// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0
//
// Signed letters and words over the generator alphabets of the braid-like
// groups handled by the library, together with free reduction and the token
// grammar used for all text input and output.

#ifndef VBRAID_WORDS_HPP_
#define VBRAID_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vbraid {

  /// Generator families.  Token prefixes are `s r a t c x l` respectively.
  enum class Family : std::uint8_t { sigma, rho, alpha, tau, c, x, lambda };

  /// Group tags.  `Cb` words use the `l[i,j]` token for the basis-conjugating
  /// automorphism with indices (i, j).
  enum class Group : std::uint8_t { B, S, VB, WB, SG, UB, VP, Cb, F };

  /// A generator raised to a nonzero power.  `j` is used by lambda letters
  /// only and is 0 otherwise.
  struct Letter {
    Family family   = Family::sigma;
    int    i        = 1;
    int    j        = 0;
    int    exponent = 1;

    /// True if both letters denote the same generator (exponents ignored).
    [[nodiscard]] bool same_generator(Letter const& other) const noexcept {
      return family == other.family && i == other.i && j == other.j;
    }

    friend auto operator<=>(Letter const&, Letter const&) = default;
  };

  /// A word together with the group whose alphabet it uses and the strand
  /// count that bounds its indices.
  struct Word {
    int                 n     = 2;
    Group               group = Group::VB;
    std::vector<Letter> letters;

    [[nodiscard]] bool empty() const noexcept {
      return letters.empty();
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return letters.size();
    }

    friend bool operator==(Word const&, Word const&) = default;
  };

  /// Name of a group tag as used on the command line ("VB", "Cb", ...).
  [[nodiscard]] std::string group_name(Group g);

  /// Inverse of `group_name`; throws `Error` on an unknown name.
  [[nodiscard]] Group parse_group(std::string_view name);

  /// True if letters of `f` may occur in words of group `g`.
  [[nodiscard]] bool family_allowed(Group g, Family f) noexcept;

  /// Throws `AlphabetError` or `IndexError` unless `l` is a legal letter of
  /// group `g` on `n` strands.
  void check_letter(Letter const& l, Group g, int n);

  /// Throws unless every letter of `w` is legal for its group and strand
  /// count.
  void check_word(Word const& w);

  /// Parses whitespace separated tokens.  The result is exactly the written
  /// sequence of letters with no reduction.  The single token `e` denotes the
  /// empty word.  Throws `ParseError`, `IndexError` or `AlphabetError`.
  [[nodiscard]] Word parse(std::string_view text, Group g, int n);

  /// Token text of a single letter, for instance `l[1,3]^-2`.
  [[nodiscard]] std::string format(Letter const& l);

  /// Token text of a word; the empty word formats as the empty string.
  [[nodiscard]] std::string format(Word const& w);

  /// Like `format` but prints the empty word as `e`.
  [[nodiscard]] std::string format_or_e(Word const& w);

  /// Cancels inverse pairs and merges runs of equal generators.
  [[nodiscard]] Word free_reduce(Word const& w);

  /// Reverses the letters and negates the exponents.
  [[nodiscard]] Word invert(Word const& w);

  /// Concatenation; the strand count of the result is the larger one.
  [[nodiscard]] Word concat(Word const& u, Word const& v);

  /// Sum of the absolute values of the exponents.
  [[nodiscard]] std::size_t length(Word const& w) noexcept;

  /// Rewrites every letter as a run of exponent +-1 letters.
  [[nodiscard]] Word expand_powers(Word const& w);

  /// Letter constructors, e.g. `gen::lambda(1, 3, -1)` for l[1,3]^-1.
  namespace gen {
    [[nodiscard]] inline Letter sigma(int i, int e = 1) {
      return {Family::sigma, i, 0, e};
    }
    [[nodiscard]] inline Letter rho(int i, int e = 1) {
      return {Family::rho, i, 0, e};
    }
    [[nodiscard]] inline Letter alpha(int i, int e = 1) {
      return {Family::alpha, i, 0, e};
    }
    [[nodiscard]] inline Letter tau(int i, int e = 1) {
      return {Family::tau, i, 0, e};
    }
    [[nodiscard]] inline Letter c(int i, int e = 1) {
      return {Family::c, i, 0, e};
    }
    [[nodiscard]] inline Letter x(int i, int e = 1) {
      return {Family::x, i, 0, e};
    }
    [[nodiscard]] inline Letter lambda(int i, int j, int e = 1) {
      return {Family::lambda, i, j, e};
    }
  }  // namespace gen

}  // namespace vbraid

#endif  // VBRAID_WORDS_HPP_
