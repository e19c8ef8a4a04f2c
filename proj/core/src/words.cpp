// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0

#include "vbraid/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <string>

#include "vbraid/error.hpp"

namespace vbraid {

  namespace {

    char family_char(Family f) {
      switch (f) {
        case Family::sigma:
          return 's';
        case Family::rho:
          return 'r';
        case Family::alpha:
          return 'a';
        case Family::tau:
          return 't';
        case Family::c:
          return 'c';
        case Family::x:
          return 'x';
        case Family::lambda:
          return 'l';
      }
      return '?';
    }

    bool family_from_char(char ch, Family& out) {
      switch (ch) {
        case 's':
          out = Family::sigma;
          return true;
        case 'r':
          out = Family::rho;
          return true;
        case 'a':
          out = Family::alpha;
          return true;
        case 't':
          out = Family::tau;
          return true;
        case 'c':
          out = Family::c;
          return true;
        case 'x':
          out = Family::x;
          return true;
        case 'l':
          out = Family::lambda;
          return true;
        default:
          return false;
      }
    }

    // Reads an optionally signed decimal integer starting at `pos`.
    bool read_int(std::string_view text, std::size_t& pos, int& value,
                  bool allow_sign) {
      std::size_t start = pos;
      if (allow_sign && pos < text.size()
          && (text[pos] == '-' || text[pos] == '+')) {
        ++pos;
      }
      std::size_t digits = pos;
      while (pos < text.size()
             && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (digits == pos) {
        pos = start;
        return false;
      }
      std::string_view num = text.substr(start, pos - start);
      if (!num.empty() && num.front() == '+') {
        num.remove_prefix(1);
      }
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(),
                                       value);
      if (ec != std::errc() || ptr != num.data() + num.size()) {
        pos = start;
        return false;
      }
      return true;
    }

    Letter parse_token(std::string_view text, std::size_t begin,
                       std::size_t end) {
      std::string_view tok = text.substr(0, end);
      std::size_t      pos = begin;
      Letter           l;
      if (!family_from_char(tok[pos], l.family)) {
        throw ParseError("unknown generator '" + std::string(1, tok[pos])
                             + "'",
                         pos);
      }
      ++pos;
      if (l.family == Family::lambda) {
        if (pos >= end || tok[pos] != '[') {
          throw ParseError("expected '[' after 'l'", pos);
        }
        ++pos;
        if (!read_int(tok, pos, l.i, false)) {
          throw ParseError("expected first lambda index", pos);
        }
        if (pos >= end || tok[pos] != ',') {
          throw ParseError("expected ','", pos);
        }
        ++pos;
        if (!read_int(tok, pos, l.j, false)) {
          throw ParseError("expected second lambda index", pos);
        }
        if (pos >= end || tok[pos] != ']') {
          throw ParseError("expected ']'", pos);
        }
        ++pos;
      } else if (!read_int(tok, pos, l.i, false)) {
        throw ParseError("expected generator index", pos);
      }
      if (pos < end && tok[pos] == '^') {
        ++pos;
        if (!read_int(tok, pos, l.exponent, true)) {
          throw ParseError("expected integer exponent", pos);
        }
        if (l.exponent == 0) {
          throw ParseError("exponent must be nonzero", pos - 1);
        }
      }
      if (pos != end) {
        throw ParseError("unexpected character '" + std::string(1, tok[pos])
                             + "'",
                         pos);
      }
      return l;
    }

  }  // namespace

  std::string group_name(Group g) {
    switch (g) {
      case Group::B:
        return "B";
      case Group::S:
        return "S";
      case Group::VB:
        return "VB";
      case Group::WB:
        return "WB";
      case Group::SG:
        return "SG";
      case Group::UB:
        return "UB";
      case Group::VP:
        return "VP";
      case Group::Cb:
        return "Cb";
      case Group::F:
        return "F";
    }
    return "?";
  }

  Group parse_group(std::string_view name) {
    for (Group g : {Group::B, Group::S, Group::VB, Group::WB, Group::SG,
                    Group::UB, Group::VP, Group::Cb, Group::F}) {
      if (group_name(g) == name) {
        return g;
      }
    }
    throw Error("unknown group '" + std::string(name) + "'");
  }

  bool family_allowed(Group g, Family f) noexcept {
    switch (g) {
      case Group::B:
        return f == Family::sigma;
      case Group::S:
        return f == Family::rho;
      case Group::VB:
        return f == Family::sigma || f == Family::rho;
      case Group::WB:
        return f == Family::sigma || f == Family::alpha;
      case Group::SG:
        return f == Family::sigma || f == Family::tau;
      case Group::UB:
        return f == Family::sigma || f == Family::c;
      case Group::VP:
      case Group::Cb:
        return f == Family::lambda;
      case Group::F:
        return f == Family::x;
    }
    return false;
  }

  void check_letter(Letter const& l, Group g, int n) {
    if (!family_allowed(g, l.family)) {
      throw AlphabetError("generator '" + std::string(1, family_char(l.family))
                          + "' is not in the alphabet of " + group_name(g));
    }
    if (l.exponent == 0) {
      throw Error("letter " + format(l) + " has exponent 0");
    }
    if (l.family == Family::lambda) {
      if (l.i < 1 || l.i > n || l.j < 1 || l.j > n) {
        throw IndexError("index out of range: " + format(l) + " needs n >= "
                         + std::to_string(std::max(l.i, l.j)));
      }
      if (l.i == l.j) {
        throw IndexError("lambda indices must differ: " + format(l));
      }
      return;
    }
    int const top = l.family == Family::x ? n : n - 1;
    if (l.i < 1 || l.i > top) {
      int need = l.family == Family::x ? l.i : l.i + 1;
      throw IndexError("index out of range: " + format(l) + " needs n >= "
                       + std::to_string(need));
    }
  }

  void check_word(Word const& w) {
    for (Letter const& l : w.letters) {
      check_letter(l, w.group, w.n);
    }
  }

  Word parse(std::string_view text, Group g, int n) {
    Word        w{n, g, {}};
    std::size_t pos = 0;
    bool        saw_e = false;
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        continue;
      }
      std::size_t end = pos;
      while (end < text.size()
             && !std::isspace(static_cast<unsigned char>(text[end]))) {
        ++end;
      }
      if (text.substr(pos, end - pos) == "e") {
        saw_e = true;
        pos   = end;
        continue;
      }
      Letter l = parse_token(text, pos, end);
      try {
        check_letter(l, g, n);
      } catch (IndexError const& e) {
        throw ParseError(e.what(), pos);
      } catch (AlphabetError const& e) {
        throw ParseError(e.what(), pos);
      }
      w.letters.push_back(l);
      pos = end;
    }
    if (saw_e && !w.letters.empty()) {
      throw ParseError("'e' must be the only token of the empty word", 0);
    }
    return w;
  }

  std::string format(Letter const& l) {
    std::string s(1, family_char(l.family));
    if (l.family == Family::lambda) {
      s += '[' + std::to_string(l.i) + ',' + std::to_string(l.j) + ']';
    } else {
      s += std::to_string(l.i);
    }
    if (l.exponent != 1) {
      s += '^' + std::to_string(l.exponent);
    }
    return s;
  }

  std::string format(Word const& w) {
    std::string s;
    for (Letter const& l : w.letters) {
      if (!s.empty()) {
        s += ' ';
      }
      s += format(l);
    }
    return s;
  }

  std::string format_or_e(Word const& w) {
    return w.empty() ? std::string("e") : format(w);
  }

  Word free_reduce(Word const& w) {
    Word out{w.n, w.group, {}};
    out.letters.reserve(w.letters.size());
    for (Letter const& l : w.letters) {
      if (!out.letters.empty() && out.letters.back().same_generator(l)) {
        out.letters.back().exponent += l.exponent;
        if (out.letters.back().exponent == 0) {
          out.letters.pop_back();
        }
      } else {
        out.letters.push_back(l);
      }
    }
    return out;
  }

  Word invert(Word const& w) {
    Word out{w.n, w.group, {}};
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      Letter l = *it;
      l.exponent = -l.exponent;
      out.letters.push_back(l);
    }
    return out;
  }

  Word concat(Word const& u, Word const& v) {
    Word out{std::max(u.n, v.n), u.group, u.letters};
    out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
    return out;
  }

  std::size_t length(Word const& w) noexcept {
    std::size_t total = 0;
    for (Letter const& l : w.letters) {
      total += static_cast<std::size_t>(std::abs(l.exponent));
    }
    return total;
  }

  Word expand_powers(Word const& w) {
    Word out{w.n, w.group, {}};
    for (Letter const& l : w.letters) {
      Letter unit = l;
      unit.exponent = l.exponent > 0 ? 1 : -1;
      for (int k = 0; k < std::abs(l.exponent); ++k) {
        out.letters.push_back(unit);
      }
    }
    return out;
  }

}  // namespace vbraid
