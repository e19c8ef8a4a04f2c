// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0

#include "vbraid/vp_normalize.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "vbraid/error.hpp"
#include "vbraid/schreier.hpp"

namespace vbraid {

  namespace {

    ////////////////////////////////////////////////////////////////////////
    // Rule table
    ////////////////////////////////////////////////////////////////////////

    // One letter of a rule right-hand side.  A down letter with
    // `power_a != 0` carries the power l[power_a, power_b]^power_e.
    struct RuleAtom {
      bool up;
      int  index;
      int  power_a;
      int  power_b;
      int  power_e;
      int  exponent;
    };

    using RuleRhs = std::vector<RuleAtom>;

    RuleAtom up_atom(int i, int e) {
      return {true, i, 0, 0, 0, e};
    }

    RuleAtom down_atom(int k, int e) {
      return {false, k, 0, 0, 0, e};
    }

    RuleAtom power_atom(int k, int a, int b, int pe, int e) {
      return {false, k, a, b, pe, e};
    }

    // Conjugation of the plain generator (up ? l[idx,K] : l[K,idx]) by
    // l[a,b]^s, s = +-1, a and b below K.
    RuleRhs base_rule(bool up, int idx, int a, int b, int s) {
      if (up) {
        int const i = idx;
        if (i == a) {
          int const j = b;
          if (s > 0) {
            return {power_atom(j, i, j, 1, 1), up_atom(i, 1),
                    down_atom(j, -1)};
          }
          return {down_atom(j, -1), up_atom(i, 1),
                  power_atom(j, i, j, -1, 1)};
        }
        if (i == b) {
          if (s > 0) {
            return {up_atom(a, 1), up_atom(i, 1), down_atom(i, 1),
                    up_atom(a, -1), power_atom(i, a, i, 1, -1)};
          }
          return {power_atom(i, a, i, -1, -1), up_atom(a, -1),
                  down_atom(i, 1), up_atom(i, 1), up_atom(a, 1)};
        }
        return {up_atom(i, 1)};
      }
      int const k = idx;
      if (b == k) {
        return {power_atom(k, a, b, s, 1)};
      }
      if (a == k) {
        int const j = b;
        if (s > 0) {
          return {down_atom(j, 1), down_atom(k, 1),
                  power_atom(j, k, j, 1, -1)};
        }
        return {power_atom(j, k, j, -1, -1), down_atom(k, 1),
                down_atom(j, 1)};
      }
      return {down_atom(k, 1)};
    }

    // Lazily built per-top tables keyed by (up, idx, a, b, s).
    class RuleTable {
     public:
      RuleRhs const& get(int top, bool up, int idx, int a, int b, int s) {
        std::lock_guard<std::mutex> lock(_mutex);
        auto&                       table = _tables[top];
        if (table.empty()) {
          build(top, table);
        }
        return table.at(key(up, idx, a, b, s));
      }

     private:
      static int key(bool up, int idx, int a, int b, int s) {
        return (((up ? 1 : 0) * 128 + idx) * 128 + a) * 256 + b * 2
               + (s > 0 ? 1 : 0);
      }

      static void build(int top, std::unordered_map<int, RuleRhs>& table) {
        for (int up = 0; up <= 1; ++up) {
          for (int idx = 1; idx < top; ++idx) {
            for (int a = 1; a < top; ++a) {
              for (int b = 1; b < top; ++b) {
                if (a == b) {
                  continue;
                }
                for (int s : {1, -1}) {
                  table.emplace(key(up == 1, idx, a, b, s),
                                base_rule(up == 1, idx, a, b, s));
                }
              }
            }
          }
        }
      }

      std::mutex                                            _mutex;
      std::map<int, std::unordered_map<int, RuleRhs>>       _tables;
    };

    RuleTable& rule_table() {
      static RuleTable table;
      return table;
    }

    ////////////////////////////////////////////////////////////////////////
    // Engine
    ////////////////////////////////////////////////////////////////////////

    // l[a,b]^s with s = +-1.
    struct Gen {
      int a;
      int b;
      int s;
    };

    using Flat = std::vector<Gen>;

    Flat flat_reduce(Flat const& w) {
      Flat out;
      out.reserve(w.size());
      for (Gen const& x : w) {
        if (!out.empty() && out.back().a == x.a && out.back().b == x.b
            && out.back().s == -x.s) {
          out.pop_back();
        } else {
          out.push_back(x);
        }
      }
      return out;
    }

    void append_inverse(Flat& out, Flat const& w) {
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        out.push_back({it->a, it->b, -it->s});
      }
    }

    // Engine letter; `power` is an interned normal form over top - 1 strands
    // (the empty one for up letters).
    struct ELetter {
      bool up;
      int  idx;
      int  power;
      int  exp;

      bool same_base(ELetter const& o) const noexcept {
        return up == o.up && idx == o.idx && power == o.power;
      }
    };

    using EWord = std::vector<ELetter>;

    struct ENF {
      int                n;
      std::vector<EWord> layers;  // layers[m - 1] has top strand m + 1
    };

    struct VecHash {
      std::size_t operator()(std::vector<int> const& v) const noexcept {
        std::size_t h = v.size();
        for (int x : v) {
          h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6)
               + (h >> 2);
        }
        return h;
      }
    };

    void letter_reduce(EWord& w) {
      EWord out;
      out.reserve(w.size());
      for (ELetter const& l : w) {
        if (!out.empty() && out.back().same_base(l)) {
          out.back().exp += l.exp;
          if (out.back().exp == 0) {
            out.pop_back();
          }
        } else {
          out.push_back(l);
        }
      }
      w = std::move(out);
    }

    EWord letter_inverse(EWord const& w) {
      EWord out(w.rbegin(), w.rend());
      for (ELetter& l : out) {
        l.exp = -l.exp;
      }
      return out;
    }

    int gen_code(Gen const& x) {
      return (x.a * 128 + x.b) * 2 + (x.s > 0 ? 1 : 0);
    }

    class Engine {
     public:
      void start(std::uint64_t budget) {
        if (_nfs.size() > kMaxInterned) {
          clear();
        }
        _budget = budget;
        _steps  = 0;
        _depth  = 0;
      }

      ENF const& get(int id) const {
        return _nfs[static_cast<std::size_t>(id)];
      }

      int empty(int n) {
        if (n < 1) {
          n = 1;
        }
        while (static_cast<int>(_empty.size()) <= n) {
          _empty.push_back(-1);
        }
        if (_empty[n] < 0) {
          ENF e{n, std::vector<EWord>(static_cast<std::size_t>(n - 1))};
          _empty[n] = intern(std::move(e));
        }
        return _empty[n];
      }

      bool is_empty(int id) const {
        for (EWord const& w : get(id).layers) {
          if (!w.empty()) {
            return false;
          }
        }
        return true;
      }

      int intern(ENF nf) {
        std::vector<int> key{nf.n};
        for (EWord const& w : nf.layers) {
          key.push_back(static_cast<int>(w.size()));
          for (ELetter const& l : w) {
            key.push_back(l.up ? 1 : 0);
            key.push_back(l.idx);
            key.push_back(l.power);
            key.push_back(l.exp);
          }
        }
        auto it = _index.find(key);
        if (it != _index.end()) {
          return it->second;
        }
        int id = static_cast<int>(_nfs.size());
        _nfs.push_back(std::move(nf));
        _index.emplace(std::move(key), id);
        return id;
      }

      // Normal form over n strands containing the single letter l[a,b]^e.
      int single(int n, int a, int b, int e) {
        ENF nf{n, std::vector<EWord>(static_cast<std::size_t>(n - 1))};
        int top = std::max(a, b);
        nf.layers[top - 2].push_back(
            b == top ? ELetter{true, a, empty(top - 1), e}
                     : ELetter{false, b, empty(top - 1), e});
        return intern(std::move(nf));
      }

      Flat flat_layer(int top, EWord const& w) {
        Flat out;
        for (ELetter const& l : w) {
          int s = l.exp > 0 ? 1 : -1;
          if (l.up) {
            for (int k = 0; k < std::abs(l.exp); ++k) {
              out.push_back({l.idx, top, s});
            }
          } else {
            Flat const& f = flat(l.power);
            append_inverse(out, f);
            for (int k = 0; k < std::abs(l.exp); ++k) {
              out.push_back({top, l.idx, s});
            }
            out.insert(out.end(), f.begin(), f.end());
          }
        }
        return out;
      }

      Flat flat_layers(std::vector<EWord> const& layers) {
        Flat out;
        for (std::size_t m = 0; m < layers.size(); ++m) {
          Flat part = flat_layer(static_cast<int>(m) + 2, layers[m]);
          out.insert(out.end(), part.begin(), part.end());
        }
        return out;
      }

      Flat const& flat(int id) {
        auto it = _flat.find(id);
        if (it != _flat.end()) {
          return it->second;
        }
        Flat f = flat_layers(get(id).layers);
        return _flat.emplace(id, std::move(f)).first->second;
      }

      // Second index of the base of the first letter of q, or 0 when q is
      // empty.
      int leading_second_index(int id) const {
        ENF const& q = get(id);
        for (std::size_t m = 0; m < q.layers.size(); ++m) {
          if (!q.layers[m].empty()) {
            ELetter const& l = q.layers[m].front();
            return l.up ? static_cast<int>(m) + 2 : l.idx;
          }
        }
        return 0;
      }

      bool admissible(int k, int id) const {
        int s = leading_second_index(id);
        return s == 0 || s == k;
      }

      EWord materialize(int top, RuleRhs const& rhs) {
        EWord out;
        out.reserve(rhs.size());
        for (RuleAtom const& r : rhs) {
          int power = r.power_a == 0
                          ? empty(top - 1)
                          : single(top - 1, r.power_a, r.power_b, r.power_e);
          out.push_back({r.up, r.index, power, r.exponent});
        }
        return out;
      }

      void step() {
        if (++_steps > _budget) {
          throw BudgetExceeded("normal form step budget of "
                               + std::to_string(_budget) + " exhausted");
        }
      }

      struct DepthGuard {
        explicit DepthGuard(Engine& e) : engine(e) {
          if (++engine._depth > kMaxDepth) {
            --engine._depth;
            throw BudgetExceeded("normal form recursion depth limit of "
                                 + std::to_string(kMaxDepth) + " reached");
          }
        }
        ~DepthGuard() {
          --engine._depth;
        }
        DepthGuard(DepthGuard const&)            = delete;
        DepthGuard& operator=(DepthGuard const&) = delete;
        Engine&     engine;
      };

      struct ActiveGuard {
        ActiveGuard(std::unordered_set<std::vector<int>, VecHash>& set,
                    std::vector<int>                                key,
                    char const*                                     what)
            : active(set), entry(std::move(key)) {
          if (!active.insert(entry).second) {
            throw BudgetExceeded(std::string("cycle detected in ") + what);
          }
        }
        ~ActiveGuard() {
          active.erase(entry);
        }
        ActiveGuard(ActiveGuard const&)            = delete;
        ActiveGuard& operator=(ActiveGuard const&) = delete;
        std::unordered_set<std::vector<int>, VecHash>& active;
        std::vector<int>                               entry;
      };

      // x^-1 l x for a letter with exponent +-1.
      EWord conj_gen(int top, ELetter l, Gen const& x) {
        if (l.exp < 0) {
          l.exp = 1;
          return letter_inverse(conj_gen(top, l, x));
        }
        std::vector<int> key{top, l.up ? 1 : 0, l.idx, l.power, gen_code(x)};
        auto             it = _conj.find(key);
        if (it != _conj.end()) {
          return it->second;
        }
        step();
        DepthGuard depth(*this);
        EWord      out;
        if (l.up || is_empty(l.power)) {
          out = materialize(top,
                            rule_table().get(top, l.up, l.idx, x.a, x.b, x.s));
        } else {
          Flat p = flat(l.power);
          p.push_back(x);
          int q = nf(top - 1, flat_reduce(p));
          if (admissible(l.idx, q)) {
            out = {ELetter{false, l.idx, q, 1}};
          } else {
            out = expand(top, l.idx, q);
          }
        }
        _conj.emplace(std::move(key), out);
        return out;
      }

      // l[top,k]^q for a nonempty inadmissible q, rewritten by conjugating
      // the plain generator by the letters of q one at a time.
      EWord expand(int top, int k, int q) {
        ActiveGuard guard(_active_expand, {top, k, q}, "reduced power expansion");
        ENF          rest = get(q);
        std::size_t  m    = 0;
        while (rest.layers[m].empty()) {
          ++m;
        }
        ELetter first = rest.layers[m].front();
        int     s     = first.exp > 0 ? 1 : -1;
        rest.layers[m].front().exp -= s;
        if (rest.layers[m].front().exp == 0) {
          rest.layers[m].erase(rest.layers[m].begin());
        }
        first.exp = s;
        Flat w    = flat_layer(static_cast<int>(m) + 2, {first});
        Flat tail = flat_layers(rest.layers);
        w.insert(w.end(), tail.begin(), tail.end());
        return conj_word(top, ELetter{false, k, empty(top - 1), 1},
                         flat_reduce(w));
      }

      EWord conj_word(int top, ELetter const& l, Flat const& w) {
        EWord cur{l};
        for (Gen const& x : w) {
          EWord out;
          for (ELetter const& t : cur) {
            ELetter unit = t;
            unit.exp     = 1;
            EWord c      = conj_gen(top, unit, x);
            if (t.exp < 0) {
              c = letter_inverse(c);
            }
            for (int k = 0; k < std::abs(t.exp); ++k) {
              out.insert(out.end(), c.begin(), c.end());
            }
          }
          letter_reduce(out);
          cur = std::move(out);
        }
        return cur;
      }

      // Normal form over n strands of a freely reduced flat word.
      int nf(int n, Flat const& gens) {
        std::vector<int> key{n};
        for (Gen const& x : gens) {
          key.push_back(gen_code(x));
        }
        auto it = _nf_memo.find(key);
        if (it != _nf_memo.end()) {
          return it->second;
        }
        if (n < 2) {
          return empty(std::max(n, 1));
        }
        ActiveGuard guard(_active_nf, key, "normal form recursion");
        DepthGuard  depth(*this);

        Flat lower;
        for (Gen const& x : gens) {
          if (std::max(x.a, x.b) < n) {
            lower.push_back(x);
          }
        }
        int low = nf(n - 1, flat_reduce(lower));

        std::vector<EWord> parts;
        Flat               suffix_rev;
        for (auto rit = gens.rbegin(); rit != gens.rend(); ++rit) {
          Gen const& x = *rit;
          if (std::max(x.a, x.b) == n) {
            ELetter l = x.b == n ? ELetter{true, x.a, empty(n - 1), x.s}
                                 : ELetter{false, x.b, empty(n - 1), x.s};
            Flat suffix(suffix_rev.rbegin(), suffix_rev.rend());
            int  s = nf(n - 1, flat_reduce(suffix));
            parts.push_back(conj_word(n, l, flat_reduce(flat(s))));
          } else {
            suffix_rev.push_back(x);
          }
        }
        EWord top;
        for (auto pit = parts.rbegin(); pit != parts.rend(); ++pit) {
          top.insert(top.end(), pit->begin(), pit->end());
        }
        letter_reduce(top);

        ENF result{n, get(low).layers};
        result.layers.push_back(std::move(top));
        int id = intern(std::move(result));
        _nf_memo.emplace(std::move(key), id);
        return id;
      }

     private:
      void clear() {
        _nfs.clear();
        _index.clear();
        _empty.clear();
        _flat.clear();
        _conj.clear();
        _nf_memo.clear();
      }

      static constexpr std::size_t kMaxInterned = 2'000'000;
      static constexpr int         kMaxDepth    = 4000;

      std::vector<ENF>                                        _nfs;
      std::unordered_map<std::vector<int>, int, VecHash>      _index;
      std::vector<int>                                        _empty;
      std::unordered_map<int, Flat>                           _flat;
      std::unordered_map<std::vector<int>, EWord, VecHash>    _conj;
      std::unordered_map<std::vector<int>, int, VecHash>      _nf_memo;
      std::unordered_set<std::vector<int>, VecHash>           _active_expand;
      std::unordered_set<std::vector<int>, VecHash>           _active_nf;
      std::uint64_t                                           _budget = 0;
      std::uint64_t                                           _steps  = 0;
      int                                                     _depth  = 0;
    };

    Engine& engine(std::uint64_t budget) {
      thread_local Engine e;
      e.start(budget);
      return e;
    }

    ////////////////////////////////////////////////////////////////////////
    // Conversions between public and engine representations
    ////////////////////////////////////////////////////////////////////////

    std::vector<LayerWord> to_public_layers(Engine& e, int id);

    LayerWord to_public_word(Engine& e, int top, EWord const& w) {
      LayerWord out;
      out.reserve(w.size());
      for (ELetter const& l : w) {
        LayerLetter t;
        t.layer    = top - 1;
        t.up       = l.up;
        t.index    = l.idx;
        t.power    = to_public_layers(e, l.power);
        t.exponent = l.exp;
        out.push_back(std::move(t));
      }
      return out;
    }

    std::vector<LayerWord> to_public_layers(Engine& e, int id) {
      std::vector<LayerWord> out;
      ENF const              nf = e.get(id);
      for (std::size_t m = 0; m < nf.layers.size(); ++m) {
        out.push_back(to_public_word(e, static_cast<int>(m) + 2, nf.layers[m]));
      }
      return out;
    }

    int to_engine_nf(Engine& e, int n, std::vector<LayerWord> const& layers);

    ELetter to_engine_letter(Engine& e, LayerLetter const& t) {
      int top = t.layer + 1;
      if (t.up && t.has_power()) {
        throw LayerError("an up letter cannot carry a power");
      }
      if (static_cast<int>(t.power.size()) != std::max(t.layer - 1, 0)
          && !(t.power.empty())) {
        throw LayerError("power of a layer " + std::to_string(t.layer)
                         + " letter must have " + std::to_string(t.layer - 1)
                         + " layers");
      }
      if (t.index < 1 || t.index >= top || t.exponent == 0) {
        throw LayerError("malformed layer letter");
      }
      int power = t.power.empty() ? e.empty(top - 1)
                                  : to_engine_nf(e, top - 1, t.power);
      return {t.up, t.index, power, t.exponent};
    }

    int to_engine_nf(Engine& e, int n, std::vector<LayerWord> const& layers) {
      ENF nf{n, std::vector<EWord>(static_cast<std::size_t>(n - 1))};
      for (std::size_t m = 0; m < layers.size() && m < nf.layers.size(); ++m) {
        for (LayerLetter const& t : layers[m]) {
          if (t.layer != static_cast<int>(m) + 1) {
            throw LayerError("letter of layer " + std::to_string(t.layer)
                             + " stored in layer " + std::to_string(m + 1));
          }
          nf.layers[m].push_back(to_engine_letter(e, t));
        }
      }
      return e.intern(std::move(nf));
    }

    Flat to_flat(Word const& v) {
      Flat out;
      for (Letter const& l : v.letters) {
        if (l.family != Family::lambda) {
          throw AlphabetError("expected a lambda letter, got " + format(l));
        }
        for (int k = 0; k < std::abs(l.exponent); ++k) {
          out.push_back({l.i, l.j, l.exponent > 0 ? 1 : -1});
        }
      }
      return flat_reduce(out);
    }

    void append_flat(Word& out, LayerLetter const& t);

    void append_flat_layers(Word& out, std::vector<LayerWord> const& layers) {
      for (LayerWord const& w : layers) {
        for (LayerLetter const& t : w) {
          append_flat(out, t);
        }
      }
    }

    void append_flat(Word& out, LayerLetter const& t) {
      int const top = t.layer + 1;
      if (t.up) {
        out.letters.push_back(gen::lambda(t.index, top, t.exponent));
        return;
      }
      Word power{out.n, Group::VP, {}};
      append_flat_layers(power, t.power);
      Word inv = invert(power);
      out.letters.insert(out.letters.end(), inv.letters.begin(),
                         inv.letters.end());
      out.letters.push_back(gen::lambda(top, t.index, t.exponent));
      out.letters.insert(out.letters.end(), power.letters.begin(),
                         power.letters.end());
    }

    std::string format_power(std::vector<LayerWord> const& layers) {
      std::string s;
      for (LayerWord const& w : layers) {
        for (LayerLetter const& t : w) {
          if (!s.empty()) {
            s += ' ';
          }
          s += format(t);
        }
      }
      return s;
    }

  }  // namespace

  bool LayerLetter::has_power() const noexcept {
    for (LayerWord const& w : power) {
      if (!w.empty()) {
        return true;
      }
    }
    return false;
  }

  bool NormalForm::is_identity() const noexcept {
    for (LayerWord const& w : layers) {
      if (!w.empty()) {
        return false;
      }
    }
    return std::all_of(coset.row.begin(), coset.row.end(),
                       [k = 2](int j) mutable { return j == k++; });
  }

  std::string format(LayerLetter const& t) {
    int const   top = t.layer + 1;
    std::string s   = t.up ? "l[" + std::to_string(t.index) + ","
                                 + std::to_string(top) + "]"
                           : "l[" + std::to_string(top) + ","
                                 + std::to_string(t.index) + "]";
    if (t.has_power()) {
      s += "{" + format_power(t.power) + "}";
    }
    if (t.exponent != 1) {
      s += "^" + std::to_string(t.exponent);
    }
    return s;
  }

  std::string format(LayerWord const& w) {
    if (w.empty()) {
      return "e";
    }
    std::string s;
    for (LayerLetter const& t : w) {
      if (!s.empty()) {
        s += ' ';
      }
      s += format(t);
    }
    return s;
  }

  std::string format(NormalForm const& f) {
    std::string s = "NF(n=" + std::to_string(f.n);
    for (std::size_t m = 0; m < f.layers.size(); ++m) {
      s += "; L" + std::to_string(m + 1) + ": " + format(f.layers[m]);
    }
    s += "; coset: " + format_or_e(canonical_word(f.coset)) + ")";
    return s;
  }

  LayerLetter layer_letter(int i, int j, int exponent) {
    if (i < 1 || j < 1 || i == j || exponent == 0) {
      throw IndexError("malformed lambda generator");
    }
    int const   top = std::max(i, j);
    LayerLetter t;
    t.layer    = top - 1;
    t.up       = j == top;
    t.index    = t.up ? i : j;
    t.power    = std::vector<LayerWord>(static_cast<std::size_t>(top - 2));
    t.exponent = exponent;
    return t;
  }

  Word flatten(LayerLetter const& t, int n) {
    Word out{n, Group::VP, {}};
    append_flat(out, t);
    return out;
  }

  Word flatten(LayerWord const& w, int n) {
    Word out{n, Group::VP, {}};
    for (LayerLetter const& t : w) {
      append_flat(out, t);
    }
    return out;
  }

  Word flatten(NormalForm const& f) {
    Word out{f.n, Group::VP, {}};
    append_flat_layers(out, f.layers);
    return out;
  }

  LayerWord conjugate_letter(LayerLetter const& t, Letter const& x,
                             NormalizeOptions opts) {
    if (x.family != Family::lambda || std::abs(x.exponent) != 1) {
      throw LayerError("conjugator must be a lambda letter with exponent +-1");
    }
    int const k = t.layer + 1;
    if (!t.has_power() && x.i != x.j && x.i != k && x.j != k && x.i != t.index
        && x.j != t.index) {
      return {t};
    }
    if (std::max(x.i, x.j) > t.layer || x.i == x.j || std::min(x.i, x.j) < 1) {
      throw LayerError("conjugator " + format(x)
                       + " is not in a layer below " + std::to_string(t.layer));
    }
    Engine& e   = engine(opts.budget);
    int     top = t.layer + 1;
    ELetter l   = to_engine_letter(e, t);
    EWord   out = e.conj_word(top, l, Flat{{x.i, x.j, x.exponent}});
    return to_public_word(e, top, out);
  }

  LayerWord conjugate_by_word(LayerLetter const& t, Word const& u,
                              NormalizeOptions opts) {
    for (Letter const& x : u.letters) {
      if (x.family != Family::lambda || std::max(x.i, x.j) > t.layer) {
        throw LayerError("conjugator letter " + format(x)
                         + " is not in a layer below "
                         + std::to_string(t.layer));
      }
    }
    Engine& e   = engine(opts.budget);
    int     top = t.layer + 1;
    ELetter l   = to_engine_letter(e, t);
    EWord   out = e.conj_word(top, l, to_flat(u));
    return to_public_word(e, top, out);
  }

  NormalForm normalize_vp(Word const& v, NormalizeOptions opts) {
    if (v.group != Group::VP) {
      throw AlphabetError("normalize_vp expects a VP word, got "
                          + group_name(v.group));
    }
    check_word(v);
    Engine&    e  = engine(opts.budget);
    int        id = e.nf(v.n, to_flat(v));
    NormalForm f;
    f.n      = v.n;
    f.layers = to_public_layers(e, id);
    f.coset  = coset_rep(Permutation::identity(v.n));
    return f;
  }

  NormalForm normalize(Word const& w, NormalizeOptions opts) {
    auto [v, rep] = rewrite_to_vp(w);
    NormalForm f  = normalize_vp(v, opts);
    f.coset       = std::move(rep);
    return f;
  }

  bool equal(Word const& w1, Word const& w2, NormalizeOptions opts) {
    if (w1.n != w2.n) {
      throw Error("equal expects words on the same number of strands");
    }
    return normalize(w1, opts) == normalize(w2, opts);
  }

  Word nf_to_word(NormalForm const& f) {
    Word v   = flatten(f);
    Word out = flatten_vp(v);
    Word c   = canonical_word(f.coset);
    out.letters.insert(out.letters.end(), c.letters.begin(), c.letters.end());
    out.n = f.n;
    return free_reduce(out);
  }

  std::vector<ConjugationRule> const& conjugation_rules(int n) {
    static std::mutex                                    mutex;
    static std::map<int, std::vector<ConjugationRule>> cache;
    std::lock_guard<std::mutex>                          lock(mutex);
    auto                                                 it = cache.find(n);
    if (it != cache.end()) {
      return it->second;
    }
    std::vector<ConjugationRule> rules;
    for (int top = 3; top <= n; ++top) {
      for (int up = 1; up >= 0; --up) {
        for (int idx = 1; idx < top; ++idx) {
          for (int a = 1; a < top; ++a) {
            for (int b = 1; b < top; ++b) {
              if (a == b) {
                continue;
              }
              for (int s : {1, -1}) {
                ConjugationRule r;
                r.top        = top;
                r.target     = up == 1 ? layer_letter(idx, top)
                                       : layer_letter(top, idx);
                r.conjugator = gen::lambda(a, b, s);
                r.result     = conjugate_letter(r.target, r.conjugator);
                rules.push_back(std::move(r));
              }
            }
          }
        }
      }
    }
    return cache.emplace(n, std::move(rules)).first->second;
  }

}  // namespace vbraid
