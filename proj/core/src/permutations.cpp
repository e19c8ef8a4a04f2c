// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0

#include "vbraid/permutations.hpp"

#include <algorithm>
#include <numeric>

#include "vbraid/error.hpp"

namespace vbraid {

  Permutation::Permutation(std::vector<int> images)
      : _images(std::move(images)) {
    std::vector<bool> seen(_images.size() + 1, false);
    for (int v : _images) {
      if (v < 1 || v > static_cast<int>(_images.size()) || seen[v]) {
        throw Error("not a permutation of {1.."
                    + std::to_string(_images.size()) + "}");
      }
      seen[v] = true;
    }
  }

  Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
  }

  Permutation Permutation::transposition(int n, int i) {
    if (i < 1 || i >= n) {
      throw IndexError("transposition (" + std::to_string(i) + ","
                       + std::to_string(i + 1) + ") out of range for n = "
                       + std::to_string(n));
    }
    Permutation p = identity(n);
    std::swap(p._images[i - 1], p._images[i]);
    return p;
  }

  bool Permutation::is_identity() const noexcept {
    for (std::size_t k = 0; k < _images.size(); ++k) {
      if (_images[k] != static_cast<int>(k) + 1) {
        return false;
      }
    }
    return true;
  }

  Permutation Permutation::inverse() const {
    std::vector<int> img(_images.size());
    for (std::size_t k = 0; k < _images.size(); ++k) {
      img[_images[k] - 1] = static_cast<int>(k) + 1;
    }
    return Permutation(std::move(img));
  }

  Permutation compose(Permutation const& p, Permutation const& q) {
    if (p.degree() != q.degree()) {
      throw Error("cannot compose permutations of different degree");
    }
    std::vector<int> img(static_cast<std::size_t>(p.degree()));
    for (int k = 1; k <= p.degree(); ++k) {
      img[k - 1] = p(q(k));
    }
    return Permutation(std::move(img));
  }

  std::string format(Permutation const& p) {
    std::string s = "(";
    for (int k = 1; k <= p.degree(); ++k) {
      if (k > 1) {
        s += ' ';
      }
      s += std::to_string(p(k));
    }
    return s + ")";
  }

  Permutation nu(Word const& w) {
    std::vector<int> img(static_cast<std::size_t>(w.n));
    std::iota(img.begin(), img.end(), 1);
    for (Letter const& l : w.letters) {
      if (l.family == Family::lambda || l.family == Family::x) {
        throw AlphabetError("nu is undefined on letter " + format(l));
      }
      if (l.i < 1 || l.i >= w.n) {
        throw IndexError("index out of range: " + format(l));
      }
      // Right multiplication by (i, i+1) swaps the images of i and i+1.
      if (l.exponent % 2 != 0) {
        std::swap(img[l.i - 1], img[l.i]);
      }
    }
    return Permutation(std::move(img));
  }

  Word canonical_word(SchreierRep const& rep) {
    Word w{std::max(rep.n, 2), Group::VB, {}};
    for (int k = 2; k <= rep.n; ++k) {
      int jk = rep.row[k - 2];
      for (int t = k - 1; t >= jk; --t) {
        w.letters.push_back(gen::rho(t));
      }
    }
    return w;
  }

  SchreierRep coset_rep(Permutation const& p) {
    int const   n = p.degree();
    SchreierRep rep{n, std::vector<int>(n > 1 ? n - 1 : 0)};
    // Peel m_{n,j_n}, then m_{n-1,j_{n-1}}, ...  If p = P m_k with P fixing
    // every point above k - 1, then j_k = p^-1(k).
    std::vector<int> cur = p.images();
    for (int k = n; k >= 2; --k) {
      int jk = 0;
      for (int t = 1; t <= k; ++t) {
        if (cur[t - 1] == k) {
          jk = t;
        }
      }
      rep.row[k - 2] = jk;
      // cur := cur * m_k^-1 where m_k^-1 = r_l r_{l+1} ... r_{k-1}.
      for (int t = jk; t <= k - 1; ++t) {
        std::swap(cur[t - 1], cur[t]);
      }
    }
    return rep;
  }

  std::vector<SchreierRep> all_coset_reps(int n) {
    std::vector<SchreierRep> out;
    SchreierRep              rep{n, std::vector<int>(n > 1 ? n - 1 : 0, 1)};
    while (true) {
      out.push_back(rep);
      int k = n;
      while (k >= 2 && rep.row[k - 2] == k) {
        rep.row[k - 2] = 1;
        --k;
      }
      if (k < 2) {
        break;
      }
      ++rep.row[k - 2];
    }
    return out;
  }

  std::pair<int, int> act_on_lambda(Permutation const&   p,
                                    std::pair<int, int> ij) {
    if (ij.first == ij.second) {
      throw IndexError("lambda indices must differ");
    }
    Permutation inv = p.inverse();
    return {inv(ij.first), inv(ij.second)};
  }

}  // namespace vbraid
