// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0

#include "vbraid/free_auto.hpp"

#include <cstdlib>

#include "vbraid/error.hpp"

namespace vbraid {

  FreeWord reduce(FreeWord const& w) {
    FreeWord out;
    out.reserve(w.size());
    for (int a : w) {
      if (!out.empty() && out.back() == -a) {
        out.pop_back();
      } else {
        out.push_back(a);
      }
    }
    return out;
  }

  FreeWord inverse(FreeWord const& w) {
    FreeWord out(w.rbegin(), w.rend());
    for (int& a : out) {
      a = -a;
    }
    return out;
  }

  Word to_word(FreeWord const& w, int n) {
    Word out{n, Group::F, {}};
    for (int a : w) {
      out.letters.push_back(gen::x(std::abs(a), a > 0 ? 1 : -1));
    }
    return free_reduce(out);
  }

  FreeWord to_free_word(Word const& w) {
    FreeWord out;
    for (Letter const& l : w.letters) {
      if (l.family != Family::x) {
        throw AlphabetError("expected an F word, got letter " + format(l));
      }
      for (int k = 0; k < std::abs(l.exponent); ++k) {
        out.push_back(l.exponent > 0 ? l.i : -l.i);
      }
    }
    return reduce(out);
  }

  GeneratorMap::GeneratorMap(int n, std::vector<FreeWord> images)
      : _n(n), _images(std::move(images)) {
    if (static_cast<int>(_images.size()) != n) {
      throw Error("a map of F_" + std::to_string(n) + " needs "
                  + std::to_string(n) + " images");
    }
    for (FreeWord& w : _images) {
      for (int a : w) {
        if (a == 0 || std::abs(a) > n) {
          throw IndexError("generator x" + std::to_string(std::abs(a))
                           + " out of range for n = " + std::to_string(n));
        }
      }
      w = reduce(w);
    }
  }

  GeneratorMap GeneratorMap::identity(int n) {
    std::vector<FreeWord> img;
    for (int k = 1; k <= n; ++k) {
      img.push_back({k});
    }
    return GeneratorMap(n, std::move(img));
  }

  bool GeneratorMap::is_identity() const noexcept {
    for (int k = 1; k <= _n; ++k) {
      FreeWord const& w = _images[k - 1];
      if (w.size() != 1 || w[0] != k) {
        return false;
      }
    }
    return true;
  }

  std::string format(GeneratorMap const& f) {
    std::string s;
    for (int k = 1; k <= f.n(); ++k) {
      if (k > 1) {
        s += "; ";
      }
      s += "x" + std::to_string(k) + " -> "
           + format_or_e(to_word(f.image(k), f.n()));
    }
    return s;
  }

  namespace {

    void check_pair(int i, int n) {
      if (i < 1 || i >= n) {
        throw IndexError("generator index " + std::to_string(i)
                         + " out of range for n = " + std::to_string(n));
      }
    }

    std::vector<FreeWord> identity_images(int n) {
      std::vector<FreeWord> img;
      for (int k = 1; k <= n; ++k) {
        img.push_back({k});
      }
      return img;
    }

    void check_distinct(int i, int j, int n) {
      if (i < 1 || j < 1 || i > n || j > n || i == j) {
        throw IndexError("index pair (" + std::to_string(i) + ","
                         + std::to_string(j) + ") out of range for n = "
                         + std::to_string(n));
      }
    }

  }  // namespace

  GeneratorMap artin_sigma(int i, int n) {
    check_pair(i, n);
    auto img     = identity_images(n);
    img[i - 1]   = {i, i + 1, -i};
    img[i]       = {i};
    return GeneratorMap(n, std::move(img));
  }

  GeneratorMap artin_sigma_inverse(int i, int n) {
    check_pair(i, n);
    auto img   = identity_images(n);
    img[i - 1] = {i + 1};
    img[i]     = {-(i + 1), i, i + 1};
    return GeneratorMap(n, std::move(img));
  }

  GeneratorMap alpha(int i, int n) {
    check_pair(i, n);
    auto img   = identity_images(n);
    img[i - 1] = {i + 1};
    img[i]     = {i};
    return GeneratorMap(n, std::move(img));
  }

  GeneratorMap epsilon(int i, int j, int n) {
    check_distinct(i, j, n);
    auto img   = identity_images(n);
    img[i - 1] = {-j, i, j};
    return GeneratorMap(n, std::move(img));
  }

  GeneratorMap epsilon_inverse(int i, int j, int n) {
    check_distinct(i, j, n);
    auto img   = identity_images(n);
    img[i - 1] = {j, i, -j};
    return GeneratorMap(n, std::move(img));
  }

  FreeWord apply(GeneratorMap const& f, FreeWord const& w) {
    FreeWord out;
    for (int a : w) {
      if (a == 0 || std::abs(a) > f.n()) {
        throw IndexError("generator out of range in apply");
      }
      FreeWord const& img = f.image(std::abs(a));
      if (a > 0) {
        out.insert(out.end(), img.begin(), img.end());
      } else {
        for (auto it = img.rbegin(); it != img.rend(); ++it) {
          out.push_back(-*it);
        }
      }
    }
    return reduce(out);
  }

  GeneratorMap compose(GeneratorMap const& f, GeneratorMap const& g) {
    if (f.n() != g.n()) {
      throw Error("cannot compose maps of F_" + std::to_string(f.n())
                  + " and F_" + std::to_string(g.n()));
    }
    std::vector<FreeWord> img;
    img.reserve(static_cast<std::size_t>(f.n()));
    for (int k = 1; k <= f.n(); ++k) {
      img.push_back(apply(g, f.image(k)));
    }
    return GeneratorMap(f.n(), std::move(img));
  }

  GeneratorMap wb_image(Word const& w) {
    if (w.group != Group::VB && w.group != Group::WB && w.group != Group::B
        && w.group != Group::S) {
      throw AlphabetError("wb_image expects a B, S, VB or WB word, got "
                          + group_name(w.group));
    }
    GeneratorMap f = GeneratorMap::identity(w.n);
    for (Letter const& l : w.letters) {
      GeneratorMap g;
      switch (l.family) {
        case Family::sigma:
          g = l.exponent > 0 ? artin_sigma(l.i, w.n)
                             : artin_sigma_inverse(l.i, w.n);
          break;
        case Family::rho:
        case Family::alpha:
          g = alpha(l.i, w.n);
          break;
        default:
          throw AlphabetError("wb_image is undefined on letter " + format(l));
      }
      int reps = std::abs(l.exponent);
      if (l.family != Family::sigma) {
        reps %= 2;
      }
      for (int k = 0; k < reps; ++k) {
        f = compose(f, g);
      }
    }
    return f;
  }

  GeneratorMap epsilon_image(Word const& w) {
    GeneratorMap f = GeneratorMap::identity(w.n);
    for (Letter const& l : w.letters) {
      if (l.family != Family::lambda) {
        throw AlphabetError("epsilon_image is undefined on letter "
                            + format(l));
      }
      GeneratorMap g = l.exponent > 0 ? epsilon(l.i, l.j, w.n)
                                      : epsilon_inverse(l.i, l.j, w.n);
      for (int k = 0; k < std::abs(l.exponent); ++k) {
        f = compose(f, g);
      }
    }
    return f;
  }

  ArtinReport check_artin_conditions(GeneratorMap const& f) {
    ArtinReport      report;
    int const        n = f.n();
    std::vector<int> pi(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    std::vector<FreeWord> conj;
    for (int k = 1; k <= n; ++k) {
      FreeWord const& w = f.image(k);
      if (w.size() % 2 == 0) {
        return report;
      }
      std::size_t mid = w.size() / 2;
      int         c   = w[mid];
      if (c <= 0 || used[c]) {
        return report;
      }
      FreeWord a(w.begin() + static_cast<std::ptrdiff_t>(mid) + 1, w.end());
      FreeWord left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(mid));
      if (left != inverse(a)) {
        return report;
      }
      used[c]   = true;
      pi[k - 1] = c;
      conj.push_back(std::move(a));
    }
    report.conjugating = true;
    report.pi          = Permutation(pi);
    report.conjugators = std::move(conj);
    FreeWord product;
    for (int k = 1; k <= n; ++k) {
      product.push_back(k);
    }
    report.braid = apply(f, product) == product;
    return report;
  }

  PureBraidForms pure_braid_aij(int i, int j, int n) {
    if (i < 1 || j > n || i >= j) {
      throw IndexError("pure braid generator a_ij needs 1 <= i < j <= n");
    }
    PureBraidForms forms{{n, Group::B, {}}, {n, Group::Cb, {}},
                         {n, Group::Cb, {}}};
    auto&          s = forms.sigma_form.letters;
    for (int t = j - 1; t > i; --t) {
      s.push_back(gen::sigma(t));
    }
    s.push_back(gen::sigma(i, 2));
    for (int t = i + 1; t < j; ++t) {
      s.push_back(gen::sigma(t, -1));
    }

    auto& e1 = forms.epsilon_form_1.letters;
    for (int t = j - 1; t > i; --t) {
      e1.push_back(gen::lambda(t, i));
    }
    e1.push_back(gen::lambda(i, j, -1));
    e1.push_back(gen::lambda(j, i, -1));
    for (int t = i + 1; t < j; ++t) {
      e1.push_back(gen::lambda(t, i, -1));
    }

    auto& e2 = forms.epsilon_form_2.letters;
    for (int t = j - 1; t > i; --t) {
      e2.push_back(gen::lambda(t, j, -1));
    }
    e2.push_back(gen::lambda(i, j, -1));
    e2.push_back(gen::lambda(j, i, -1));
    for (int t = i + 1; t < j; ++t) {
      e2.push_back(gen::lambda(t, j));
    }
    return forms;
  }

  Word epsilon_alpha_form(int i, int j, int n) {
    check_distinct(i, j, n);
    int  lo = std::min(i, j);
    int  hi = std::max(i, j);
    Word w{n, Group::WB, {}};
    for (int t = hi - 1; t > lo; --t) {
      w.letters.push_back(gen::alpha(t));
    }
    if (i > j) {
      w.letters.push_back(gen::alpha(lo));
    }
    w.letters.push_back(gen::alpha(lo));
    w.letters.push_back(gen::sigma(lo, -1));
    if (i > j) {
      w.letters.push_back(gen::alpha(lo));
    }
    for (int t = lo + 1; t < hi; ++t) {
      w.letters.push_back(vbraid::gen::alpha(t));
    }
    return w;
  }

}  // namespace vbraid
