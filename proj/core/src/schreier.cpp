// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0

#include "vbraid/schreier.hpp"

#include <algorithm>
#include <cstdlib>

#include "vbraid/error.hpp"

namespace vbraid {

  std::pair<Word, SchreierRep> rewrite_to_vp(Word const& w) {
    if (w.group != Group::VB && w.group != Group::B && w.group != Group::S) {
      throw AlphabetError("rewrite_to_vp expects a VB word, got "
                          + group_name(w.group));
    }
    check_word(w);
    Word        v{w.n, Group::VP, {}};
    Permutation prefix = Permutation::identity(w.n);
    for (Letter const& l : w.letters) {
      for (int k = 0; k < std::abs(l.exponent); ++k) {
        Permutation next = compose(prefix, Permutation::transposition(w.n, l.i));
        if (l.family == Family::sigma) {
          // s_{K,s_i} = K s_i r_i K^-1 = K l[i,i+1]^-1 K^-1, where K is the
          // representative of the prefix before the letter for s_i and of
          // the prefix including the letter for s_i^-1.
          Permutation const& rep = l.exponent > 0 ? prefix : next;
          v.letters.push_back(
              gen::lambda(rep(l.i), rep(l.i + 1), l.exponent > 0 ? -1 : 1));
        }
        prefix = std::move(next);
      }
    }
    return {free_reduce(v), coset_rep(prefix)};
  }

  Word lambda_word(int i, int j, int n) {
    if (i < 1 || j < 1 || i > n || j > n || i == j) {
      throw IndexError("lambda index pair out of range");
    }
    Word w{n, Group::VB, {}};
    int  lo = std::min(i, j);
    int  hi = std::max(i, j);
    for (int t = hi - 1; t > lo; --t) {
      w.letters.push_back(gen::rho(t));
    }
    if (i < j) {
      w.letters.push_back(gen::rho(lo));
      w.letters.push_back(gen::sigma(lo, -1));
    } else {
      w.letters.push_back(gen::sigma(lo, -1));
      w.letters.push_back(gen::rho(lo));
    }
    for (int t = lo + 1; t < hi; ++t) {
      w.letters.push_back(gen::rho(t));
    }
    return w;
  }

  Word flatten_vp(Word const& v) {
    Word out{v.n, Group::VB, {}};
    for (Letter const& l : v.letters) {
      if (l.family != Family::lambda) {
        throw AlphabetError("flatten_vp expects lambda letters, got "
                            + format(l));
      }
      Word base = lambda_word(l.i, l.j, v.n);
      if (l.exponent < 0) {
        base = invert(base);
      }
      for (int k = 0; k < std::abs(l.exponent); ++k) {
        out.letters.insert(out.letters.end(), base.letters.begin(),
                           base.letters.end());
      }
    }
    return out;
  }

}  // namespace vbraid
