// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0
//
// A presentation-agnostic semi-decision procedure for equality of words:
// breadth-first search from the reduced word w1 w2^-1 in which every move
// inserts a cyclic rotation of a relator or of its inverse at some position
// and freely reduces.  Reaching the empty word proves equality; running out
// of budget proves nothing.

#ifndef VBRAID_ORACLE_HPP_
#define VBRAID_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vbraid/presentations.hpp"
#include "vbraid/words.hpp"

namespace vbraid {

  /// One search move: insert `inserted` before unit position `position` of
  /// the current word (after expanding exponents) and freely reduce.
  struct OracleMove {
    std::size_t position = 0;
    Word        inserted;
  };

  struct OracleVerdict {
    enum class Kind : std::uint8_t { Equal, Unknown };

    Kind                    kind = Kind::Unknown;
    /// Moves leading from the reduced start word to the empty word.
    std::vector<OracleMove> witness;
    /// Number of expanded search nodes.
    std::size_t             nodes = 0;

    [[nodiscard]] bool equal() const noexcept {
      return kind == Kind::Equal;
    }
  };

  /// Searches for a proof that w1 = w2 in the group presented by `p`,
  /// expanding at most `budget` nodes.  Every Equal verdict has had its
  /// witness replayed before it is returned.
  [[nodiscard]] OracleVerdict bounded_equal(Presentation const& p,
                                            Word const& w1, Word const& w2,
                                            std::size_t budget = 100'000);

  /// Applies the witness moves to free_reduce(w1 w2^-1) and reports whether
  /// the empty word is reached.
  [[nodiscard]] bool replay(Word const& w1, Word const& w2,
                            std::vector<OracleMove> const& witness);

  /// Product of `count` conjugates g^-1 r^{+-1} g with r a uniformly chosen
  /// relator of `p` and g a random word of length at most
  /// `max_conjugator_length`.  Deterministic for a given seed.
  [[nodiscard]] Word random_relator_product(Presentation const& p,
                                            std::uint64_t seed, int count,
                                            int max_conjugator_length = 4);

  /// A uniformly random freely reduced word of the given length over the
  /// generators of `p` (exponents +-1).  Deterministic for a given seed.
  [[nodiscard]] Word random_word(Presentation const& p, std::uint64_t seed,
                                 int length);

}  // namespace vbraid

#endif  // VBRAID_ORACLE_HPP_
