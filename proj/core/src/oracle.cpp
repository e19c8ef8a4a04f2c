// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0

#include "vbraid/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <string>
#include <unordered_set>

#include "vbraid/error.hpp"

namespace vbraid {

  namespace {

    // Generators are numbered 1..G and a word is a string of signed codes,
    // code(g^+1) = g and code(g^-1) = -g, stored as chars.
    class Alphabet {
     public:
      Alphabet(Group group, int n) : _group(group), _n(n) {
        for (Family f : {Family::sigma, Family::rho, Family::alpha,
                         Family::tau, Family::c, Family::x, Family::lambda}) {
          if (!family_allowed(group, f)) {
            continue;
          }
          if (f == Family::lambda) {
            for (int i = 1; i <= n; ++i) {
              for (int j = 1; j <= n; ++j) {
                if (i != j) {
                  add({f, i, j, 1});
                }
              }
            }
          } else {
            int top = f == Family::x ? n : n - 1;
            for (int i = 1; i <= top; ++i) {
              add({f, i, 0, 1});
            }
          }
        }
        if (_letters.size() > 127) {
          throw Error("alphabet too large for the equality oracle");
        }
      }

      std::string encode(Word const& w) const {
        std::string out;
        for (Letter const& l : w.letters) {
          auto it = _codes.find({l.family, l.i, l.j});
          if (it == _codes.end()) {
            throw AlphabetError("letter " + format(l)
                                + " is not a generator of "
                                + group_name(_group));
          }
          char c = static_cast<char>(l.exponent > 0 ? it->second : -it->second);
          out.append(static_cast<std::size_t>(std::abs(l.exponent)), c);
        }
        return out;
      }

      Word decode(std::string const& s) const {
        Word w{_n, _group, {}};
        for (char c : s) {
          Letter l = _letters[static_cast<std::size_t>(std::abs(c)) - 1];
          l.exponent = c > 0 ? 1 : -1;
          w.letters.push_back(l);
        }
        return free_reduce(w);
      }

      [[nodiscard]] std::size_t size() const noexcept {
        return _letters.size();
      }

     private:
      void add(Letter l) {
        _letters.push_back(l);
        _codes.emplace(std::make_tuple(l.family, l.i, l.j),
                       static_cast<int>(_letters.size()));
      }

      Group                                          _group;
      int                                            _n;
      std::vector<Letter>                            _letters;
      std::map<std::tuple<Family, int, int>, int>    _codes;
    };

    std::string reduce(std::string const& w) {
      std::string out;
      out.reserve(w.size());
      for (char c : w) {
        if (!out.empty() && out.back() == -c) {
          out.pop_back();
        } else {
          out.push_back(c);
        }
      }
      return out;
    }

    std::string inverse(std::string const& w) {
      std::string out(w.rbegin(), w.rend());
      for (char& c : out) {
        c = static_cast<char>(-c);
      }
      return out;
    }

    std::vector<std::string> variants(Alphabet const&      alphabet,
                                      Presentation const& p) {
      std::set<std::string> seen;
      for (Relator const& rel : p.relators) {
        std::string r = reduce(alphabet.encode(rel.word));
        if (r.empty()) {
          continue;
        }
        for (std::string const& base : {r, inverse(r)}) {
          for (std::size_t k = 0; k < base.size(); ++k) {
            seen.insert(base.substr(k) + base.substr(0, k));
          }
        }
      }
      return {seen.begin(), seen.end()};
    }

    std::string apply_move(std::string const& w, std::size_t pos,
                           std::string const& ins) {
      std::string out;
      out.reserve(w.size() + ins.size());
      out.append(w, 0, pos);
      out.append(ins);
      out.append(w, pos, std::string::npos);
      return reduce(out);
    }

    struct Node {
      std::string word;
      std::size_t parent;
      std::size_t position;
      std::size_t variant;
    };

    constexpr std::size_t kMaxStoredNodes = 8'000'000;

  }  // namespace

  bool replay(Word const& w1, Word const& w2,
              std::vector<OracleMove> const& witness) {
    Word cur = expand_powers(free_reduce(concat(w1, invert(w2))));
    for (OracleMove const& m : witness) {
      if (m.position > cur.letters.size()) {
        return false;
      }
      Word ins = expand_powers(m.inserted);
      Word next{cur.n, cur.group, {}};
      next.letters.insert(next.letters.end(), cur.letters.begin(),
                          cur.letters.begin()
                              + static_cast<std::ptrdiff_t>(m.position));
      next.letters.insert(next.letters.end(), ins.letters.begin(),
                          ins.letters.end());
      next.letters.insert(next.letters.end(),
                          cur.letters.begin()
                              + static_cast<std::ptrdiff_t>(m.position),
                          cur.letters.end());
      cur = expand_powers(free_reduce(next));
    }
    return cur.empty();
  }

  OracleVerdict bounded_equal(Presentation const& p, Word const& w1,
                              Word const& w2, std::size_t budget) {
    Alphabet const alphabet(p.group, p.n);
    Word           w1g = w1;
    Word           w2g = w2;
    w1g.group          = p.group;
    w2g.group          = p.group;
    std::string start  = reduce(alphabet.encode(w1g) + inverse(alphabet.encode(w2g)));
    OracleVerdict verdict;
    if (start.empty()) {
      verdict.kind = OracleVerdict::Kind::Equal;
      return verdict;
    }
    std::vector<std::string> const vars = variants(alphabet, p);
    std::vector<Node>               nodes{{start, 0, 0, 0}};
    std::unordered_set<std::string> visited{start};
    std::size_t                     head = 0;

    auto witness_of = [&](std::size_t last, std::size_t pos, std::size_t var) {
      std::vector<OracleMove> moves{
          {pos, alphabet.decode(vars[var])}};
      for (std::size_t k = last; k != 0; k = nodes[k].parent) {
        moves.push_back({nodes[k].position,
                         alphabet.decode(vars[nodes[k].variant])});
      }
      std::reverse(moves.begin(), moves.end());
      return moves;
    };

    while (head < nodes.size() && verdict.nodes < budget) {
      std::size_t const current = head++;
      ++verdict.nodes;
      std::string const word = nodes[current].word;
      for (std::size_t pos = 0; pos <= word.size(); ++pos) {
        for (std::size_t v = 0; v < vars.size(); ++v) {
          std::string next = apply_move(word, pos, vars[v]);
          if (next.empty()) {
            verdict.witness = witness_of(current, pos, v);
            if (!replay(w1g, w2g, verdict.witness)) {
              throw Error("equality oracle produced a witness that does not "
                          "replay");
            }
            verdict.kind = OracleVerdict::Kind::Equal;
            return verdict;
          }
          if (nodes.size() < kMaxStoredNodes && visited.insert(next).second) {
            nodes.push_back({std::move(next), current, pos, v});
          }
        }
      }
    }
    return verdict;
  }

  Word random_word(Presentation const& p, std::uint64_t seed, int length) {
    Alphabet const alphabet(p.group, p.n);
    std::mt19937_64 rng(seed);
    std::string     s;
    auto const      g = static_cast<std::uint64_t>(alphabet.size());
    while (static_cast<int>(s.size()) < length) {
      std::uint64_t r = rng() % (2 * g);
      char c = static_cast<char>(r < g ? static_cast<int>(r) + 1
                                       : -static_cast<int>(r - g) - 1);
      if (!s.empty() && s.back() == -c) {
        continue;
      }
      s.push_back(c);
    }
    return alphabet.decode(s);
  }

  Word random_relator_product(Presentation const& p, std::uint64_t seed,
                              int count, int max_conjugator_length) {
    Word out{p.n, p.group, {}};
    if (count <= 0 || p.relators.empty()) {
      return out;
    }
    std::mt19937_64 rng(seed);
    for (int k = 0; k < count; ++k) {
      Word r = p.relators[rng() % p.relators.size()].word;
      if (rng() % 2 == 1) {
        r = invert(r);
      }
      int  len = static_cast<int>(
          rng() % static_cast<std::uint64_t>(max_conjugator_length + 1));
      Word g   = random_word(p, rng(), len);
      Word c   = concat(concat(invert(g), r), g);
      out.letters.insert(out.letters.end(), c.letters.begin(), c.letters.end());
    }
    return free_reduce(out);
  }

}  // namespace vbraid
