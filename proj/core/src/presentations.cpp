// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0

#include "vbraid/presentations.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "vbraid/error.hpp"
#include "vbraid/free_auto.hpp"
#include "vbraid/permutations.hpp"
#include "vbraid/vp_normalize.hpp"

namespace vbraid {

  namespace {

    using LetterFn = std::function<Letter(int, int)>;

    // Relator u v^-1 for the relation u = v.
    Word relation(Group g, int n, std::vector<Letter> const& u,
                  std::vector<Letter> const& v) {
      Word w{n, g, u};
      Word rhs{n, g, v};
      Word inv = invert(rhs);
      w.letters.insert(w.letters.end(), inv.letters.begin(), inv.letters.end());
      return w;
    }

    void add(Presentation& p, std::string family, Word w) {
      p.relators.push_back({std::move(family), std::move(w)});
    }

    void add_braid_family(Presentation& p, LetterFn const& g,
                          std::string const& prefix) {
      int const n = p.n;
      for (int i = 1; i <= n - 2; ++i) {
        add(p, prefix + "braid",
            relation(p.group, n, {g(i, 1), g(i + 1, 1), g(i, 1)},
                     {g(i + 1, 1), g(i, 1), g(i + 1, 1)}));
      }
      for (int i = 1; i <= n - 1; ++i) {
        for (int j = i + 2; j <= n - 1; ++j) {
          add(p, prefix + "far-commute",
              relation(p.group, n, {g(i, 1), g(j, 1)}, {g(j, 1), g(i, 1)}));
        }
      }
    }

    void add_involutions(Presentation& p, LetterFn const& g,
                         std::string const& prefix) {
      for (int i = 1; i <= p.n - 1; ++i) {
        add(p, prefix + "involution", Word{p.n, p.group, {g(i, 2)}});
      }
    }

    // x_i y_j = y_j x_i for every ordered pair with |i - j| >= 2.
    void add_mixed_far_commute(Presentation& p, LetterFn const& x,
                               LetterFn const& y, std::string const& family) {
      int const n = p.n;
      for (int i = 1; i <= n - 1; ++i) {
        for (int j = 1; j <= n - 1; ++j) {
          if (std::abs(i - j) >= 2) {
            add(p, family,
                relation(p.group, n, {x(i, 1), y(j, 1)}, {y(j, 1), x(i, 1)}));
          }
        }
      }
    }

    Letter s(int i, int e) {
      return gen::sigma(i, e);
    }
    Letter r(int i, int e) {
      return gen::rho(i, e);
    }
    Letter a(int i, int e) {
      return gen::alpha(i, e);
    }
    Letter t(int i, int e) {
      return gen::tau(i, e);
    }
    Letter c(int i, int e) {
      return gen::c(i, e);
    }

    void add_vp(Presentation& p) {
      int const n = p.n;
      auto      l = [](int i, int j, int e = 1) { return gen::lambda(i, j, e); };
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          for (int k = 1; k <= n; ++k) {
            if (i == j || j == k || i == k) {
              continue;
            }
            add(p, "triangle",
                relation(p.group, n, {l(k, i), l(k, j), l(i, j)},
                         {l(i, j), l(k, j), l(k, i)}));
          }
        }
      }
      std::vector<std::pair<int, int>> pairs;
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i != j) {
            pairs.emplace_back(i, j);
          }
        }
      }
      for (std::size_t u = 0; u < pairs.size(); ++u) {
        for (std::size_t v = u + 1; v < pairs.size(); ++v) {
          auto [i, j] = pairs[u];
          auto [k, m] = pairs[v];
          if (i == k || i == m || j == k || j == m) {
            continue;
          }
          add(p, "disjoint-commute",
              relation(p.group, n, {l(i, j), l(k, m)}, {l(k, m), l(i, j)}));
        }
      }
    }

    void add_cb(Presentation& p) {
      int const n = p.n;
      auto      e = [](int i, int j) { return gen::lambda(i, j, 1); };
      std::vector<std::pair<int, int>> pairs;
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i != j) {
            pairs.emplace_back(i, j);
          }
        }
      }
      for (std::size_t u = 0; u < pairs.size(); ++u) {
        for (std::size_t v = u + 1; v < pairs.size(); ++v) {
          auto [i, j] = pairs[u];
          auto [k, m] = pairs[v];
          if (i == k || i == m || j == k || j == m) {
            continue;
          }
          add(p, "disjoint-commute",
              relation(p.group, n, {e(i, j), e(k, m)}, {e(k, m), e(i, j)}));
        }
      }
      for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= n; ++i) {
          for (int k = i + 1; k <= n; ++k) {
            if (i == j || k == j) {
              continue;
            }
            add(p, "shared-target-commute",
                relation(p.group, n, {e(i, j), e(k, j)}, {e(k, j), e(i, j)}));
          }
        }
      }
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          for (int k = 1; k <= n; ++k) {
            if (i == j || j == k || i == k) {
              continue;
            }
            add(p, "triangle",
                relation(p.group, n, {e(i, j), e(k, j), e(i, k)},
                         {e(i, k), e(i, j), e(k, j)}));
          }
        }
      }
    }

    std::vector<Word> expanded_rotations(Word const& w) {
      Word              unit = expand_powers(free_reduce(w));
      std::vector<Word> out;
      for (Word const& base : {unit, invert(unit)}) {
        for (std::size_t k = 0; k < base.letters.size(); ++k) {
          Word rot{base.n, base.group, {}};
          rot.letters.insert(rot.letters.end(),
                             base.letters.begin()
                                 + static_cast<std::ptrdiff_t>(k),
                             base.letters.end());
          rot.letters.insert(rot.letters.end(), base.letters.begin(),
                             base.letters.begin()
                                 + static_cast<std::ptrdiff_t>(k));
          out.push_back(free_reduce(rot));
        }
      }
      return out;
    }

  }  // namespace

  std::vector<Word> Presentation::words() const {
    std::vector<Word> out;
    out.reserve(relators.size());
    for (Relator const& r : relators) {
      out.push_back(r.word);
    }
    return out;
  }

  Presentation presentation(Group group, int n) {
    if (n < 2) {
      throw Error("presentations need n >= 2");
    }
    Presentation p{group, n, {}, {}};
    switch (group) {
      case Group::B:
        p.generators = {Family::sigma};
        add_braid_family(p, s, "");
        break;
      case Group::S:
        p.generators = {Family::rho};
        add_braid_family(p, r, "");
        add_involutions(p, r, "");
        break;
      case Group::VB:
        p.generators = {Family::sigma, Family::rho};
        add_braid_family(p, s, "");
        add_braid_family(p, r, "rho-");
        add_involutions(p, r, "rho-");
        add_mixed_far_commute(p, s, r, "mixed-far-commute");
        for (int i = 1; i <= n - 2; ++i) {
          add(p, "mixed",
              relation(group, n, {r(i, 1), r(i + 1, 1), s(i, 1)},
                       {s(i + 1, 1), r(i, 1), r(i + 1, 1)}));
        }
        break;
      case Group::WB:
        p.generators = {Family::sigma, Family::alpha};
        add_braid_family(p, s, "");
        add_braid_family(p, a, "alpha-");
        add_involutions(p, a, "alpha-");
        add_mixed_far_commute(p, a, s, "mixed-far-commute");
        for (int i = 1; i <= n - 2; ++i) {
          add(p, "mixed",
              relation(group, n, {s(i, 1), a(i + 1, 1), a(i, 1)},
                       {a(i + 1, 1), a(i, 1), s(i + 1, 1)}));
        }
        for (int i = 1; i <= n - 2; ++i) {
          add(p, "welded",
              relation(group, n, {s(i + 1, 1), s(i, 1), a(i + 1, 1)},
                       {a(i, 1), s(i + 1, 1), s(i, 1)}));
        }
        break;
      case Group::SG:
        p.generators = {Family::sigma, Family::tau};
        add_braid_family(p, s, "");
        for (int i = 1; i <= n - 1; ++i) {
          for (int j = i + 2; j <= n - 1; ++j) {
            add(p, "tau-far-commute",
                relation(group, n, {t(i, 1), t(j, 1)}, {t(j, 1), t(i, 1)}));
          }
        }
        add_mixed_far_commute(p, t, s, "mixed-far-commute");
        for (int i = 1; i <= n - 1; ++i) {
          add(p, "tau-sigma-commute",
              relation(group, n, {t(i, 1), s(i, 1)}, {s(i, 1), t(i, 1)}));
        }
        for (int i = 1; i <= n - 2; ++i) {
          add(p, "mixed",
              relation(group, n, {s(i, 1), s(i + 1, 1), t(i, 1)},
                       {t(i + 1, 1), s(i, 1), s(i + 1, 1)}));
        }
        for (int i = 1; i <= n - 2; ++i) {
          add(p, "mixed-reverse",
              relation(group, n, {s(i + 1, 1), s(i, 1), t(i + 1, 1)},
                       {t(i, 1), s(i + 1, 1), s(i, 1)}));
        }
        break;
      case Group::UB:
        p.generators = {Family::sigma, Family::c};
        add_braid_family(p, s, "");
        for (int i = 1; i <= n - 1; ++i) {
          for (int j = i + 2; j <= n - 1; ++j) {
            add(p, "c-far-commute",
                relation(group, n, {c(i, 1), c(j, 1)}, {c(j, 1), c(i, 1)}));
          }
        }
        add_mixed_far_commute(p, c, s, "mixed-far-commute");
        break;
      case Group::VP:
        p.generators = {Family::lambda};
        add_vp(p);
        break;
      case Group::Cb:
        p.generators = {Family::lambda};
        add_cb(p);
        break;
      case Group::F:
        throw Error("the free group has no relators to present");
    }
    return p;
  }

  Presentation restricted_presentation(Group group, int n,
                                       std::vector<int> const& indices) {
    if (group != Group::VP && group != Group::Cb) {
      throw Error("restricted presentations exist for VP and Cb only");
    }
    Presentation full = presentation(group, n);
    Presentation out{group, n, full.generators, {}};
    auto         in   = [&](int k) {
      return std::find(indices.begin(), indices.end(), k) != indices.end();
    };
    for (Relator const& rel : full.relators) {
      bool keep = true;
      for (Letter const& l : rel.word.letters) {
        keep = keep && in(l.i) && in(l.j);
      }
      if (keep) {
        out.relators.push_back(rel);
      }
    }
    return out;
  }

  std::string hom_name(Hom h) {
    switch (h) {
      case Hom::phi_VW:
        return "phi_VW";
      case Hom::phi_US:
        return "phi_US";
      case Hom::phi_UV:
        return "phi_UV";
      case Hom::phi_UB:
        return "phi_UB";
      case Hom::psi:
        return "psi";
      case Hom::nu:
        return "nu";
    }
    return "?";
  }

  Hom parse_hom(std::string_view name) {
    for (Hom h : {Hom::phi_VW, Hom::phi_US, Hom::phi_UV, Hom::phi_UB, Hom::psi,
                  Hom::nu}) {
      if (hom_name(h) == name) {
        return h;
      }
    }
    throw Error("unknown homomorphism '" + std::string(name) + "'");
  }

  HomSpec hom_spec(Hom h) {
    switch (h) {
      case Hom::phi_VW:
        return {h, Group::VB, Group::WB};
      case Hom::phi_US:
        return {h, Group::UB, Group::SG};
      case Hom::phi_UV:
        return {h, Group::UB, Group::VB};
      case Hom::phi_UB:
      case Hom::psi:
        return {h, Group::UB, Group::B};
      case Hom::nu:
        return {h, Group::VB, Group::S};
    }
    throw Error("unknown homomorphism");
  }

  Word map_word(Hom h, Word const& w) {
    HomSpec sig = hom_spec(h);
    for (Letter const& l : w.letters) {
      if (!family_allowed(sig.source, l.family)) {
        throw AlphabetError("letter " + format(l) + " is not in the alphabet of "
                            + group_name(sig.source));
      }
    }
    Word out{w.n, sig.target, {}};
    for (Letter const& l : w.letters) {
      Letter m = l;
      switch (h) {
        case Hom::phi_VW:
          if (l.family == Family::rho) {
            m.family = Family::alpha;
          }
          break;
        case Hom::phi_US:
          if (l.family == Family::c) {
            m.family = Family::tau;
          }
          break;
        case Hom::phi_UV:
          if (l.family == Family::c) {
            m.family = Family::rho;
          }
          break;
        case Hom::phi_UB:
        case Hom::psi:
          if (l.family == Family::c) {
            continue;
          }
          break;
        case Hom::nu:
          m.family = Family::rho;
          break;
      }
      out.letters.push_back(m);
    }
    return free_reduce(out);
  }

  std::string backend_name(Backend b) {
    switch (b) {
      case Backend::NF:
        return "NF";
      case Backend::AUT:
        return "AUT";
      case Backend::SYNTACTIC:
        return "SYNTACTIC";
      case Backend::PERM:
        return "PERM";
    }
    return "?";
  }

  Backend parse_backend(std::string_view name) {
    for (Backend b :
         {Backend::NF, Backend::AUT, Backend::SYNTACTIC, Backend::PERM}) {
      if (backend_name(b) == name) {
        return b;
      }
    }
    throw Error("unknown backend '" + std::string(name) + "'");
  }

  bool backend_supports(Backend b, Group target) noexcept {
    switch (b) {
      case Backend::NF:
        return target == Group::VB || target == Group::VP;
      case Backend::AUT:
        return target == Group::B || target == Group::WB
               || target == Group::Cb;
      case Backend::SYNTACTIC:
        return target != Group::F;
      case Backend::PERM:
        return target == Group::S;
    }
    return false;
  }

  bool HomReport::passed() const noexcept {
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](RelatorVerdict const& v) { return v.trivial; });
  }

  bool is_trivial(Word const& w, Backend backend, std::string* detail) {
    if (!backend_supports(backend, w.group)) {
      throw BackendError("backend " + backend_name(backend)
                         + " cannot decide triviality in "
                         + group_name(w.group));
    }
    auto note = [&](std::string text) {
      if (detail != nullptr) {
        *detail = std::move(text);
      }
    };
    switch (backend) {
      case Backend::NF: {
        NormalForm f = w.group == Group::VP ? normalize_vp(w) : normalize(w);
        note(format(f));
        return f.is_identity();
      }
      case Backend::AUT: {
        GeneratorMap f = w.group == Group::Cb ? epsilon_image(w) : wb_image(w);
        note(format(f));
        return f.is_identity();
      }
      case Backend::PERM: {
        Permutation p = nu(w);
        note(format(p));
        return p.is_identity();
      }
      case Backend::SYNTACTIC: {
        Word reduced = expand_powers(free_reduce(w));
        if (reduced.empty()) {
          note("empty word");
          return true;
        }
        for (Relator const& rel : presentation(w.group, w.n).relators) {
          for (Word const& rot : expanded_rotations(rel.word)) {
            if (expand_powers(rot).letters == reduced.letters) {
              note("matches " + rel.family + " relator " + format(rel.word));
              return true;
            }
          }
        }
        note("no relator of " + group_name(w.group) + " matches");
        return false;
      }
    }
    return false;
  }

  HomReport verify_homomorphism(Hom h, int n, Backend backend) {
    HomSpec sig = hom_spec(h);
    if (!backend_supports(backend, sig.target)) {
      throw BackendError("backend " + backend_name(backend)
                         + " cannot decide triviality in "
                         + group_name(sig.target));
    }
    HomReport report{hom_name(h), n, backend, {}};
    for (Relator const& rel : presentation(sig.source, n).relators) {
      RelatorVerdict v{rel, map_word(h, rel.word), false, {}};
      try {
        v.trivial = is_trivial(v.image, backend, &v.detail);
      } catch (BudgetExceeded const& e) {
        v.trivial = false;
        v.detail  = e.what();
      }
      report.verdicts.push_back(std::move(v));
    }
    return report;
  }

  HomReport verify_presentation(Group group, int n, Backend backend) {
    if (!backend_supports(backend, group)) {
      throw BackendError("backend " + backend_name(backend)
                         + " cannot decide triviality in "
                         + group_name(group));
    }
    HomReport report{group_name(group), n, backend, {}};
    for (Relator const& rel : presentation(group, n).relators) {
      RelatorVerdict v{rel, rel.word, false, {}};
      try {
        v.trivial = is_trivial(rel.word, backend, &v.detail);
      } catch (BudgetExceeded const& e) {
        v.trivial = false;
        v.detail  = e.what();
      }
      report.verdicts.push_back(std::move(v));
    }
    return report;
  }

}  // namespace vbraid
