// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "vbraid/error.hpp"
#include "vbraid/free_auto.hpp"
#include "vbraid/oracle.hpp"
#include "vbraid/permutations.hpp"
#include "vbraid/presentations.hpp"
#include "vbraid/schreier.hpp"
#include "vbraid/vp_normalize.hpp"
#include "vbraid/words.hpp"

namespace vbraid::cli {

  namespace {

    using json = nlohmann::ordered_json;

    struct Options {
      bool                     json_output = false;
      int                      n           = 0;
      std::vector<std::string> words;
      std::string              hom;
      std::string              backend;
      std::string              group;
      std::uint64_t            budget = 0;
      std::uint64_t            seed   = 1;
      int                      trials = 0;
    };

    // Result of a subcommand before printing.
    struct Outcome {
      int                      code = kTrue;
      std::string              text;
      json                     result;
      std::vector<std::string> diagnostics;
    };

    // A word argument could not be parsed; `argument` is its 0-based index.
    struct WordError {
      std::size_t argument;
      std::size_t position;
      std::string message;
    };

    std::set<Family> families_in(std::string const& text) {
      std::set<Family> out;
      std::istringstream in(text);
      std::string        tok;
      while (in >> tok) {
        switch (tok.front()) {
          case 's':
            out.insert(Family::sigma);
            break;
          case 'r':
            out.insert(Family::rho);
            break;
          case 'a':
            out.insert(Family::alpha);
            break;
          case 't':
            out.insert(Family::tau);
            break;
          case 'c':
            out.insert(Family::c);
            break;
          case 'x':
            out.insert(Family::x);
            break;
          case 'l':
            out.insert(Family::lambda);
            break;
          default:
            break;
        }
      }
      return out;
    }

    // The first candidate group whose alphabet contains every family used by
    // the arguments; the first candidate if none fits (parsing then reports
    // the offending letter).
    Group infer_group(std::vector<std::string> const& texts,
                      std::vector<Group> const&       candidates) {
      std::set<Family> used;
      for (std::string const& t : texts) {
        auto f = families_in(t);
        used.insert(f.begin(), f.end());
      }
      for (Group g : candidates) {
        if (std::all_of(used.begin(), used.end(),
                        [g](Family f) { return family_allowed(g, f); })) {
          return g;
        }
      }
      return candidates.front();
    }

    std::vector<Word> parse_words(Options const& o, Group g) {
      std::vector<Word> out;
      for (std::size_t k = 0; k < o.words.size(); ++k) {
        try {
          out.push_back(parse(o.words[k], g, o.n));
        } catch (ParseError const& e) {
          throw WordError{k, e.position(), e.what()};
        }
      }
      return out;
    }

    constexpr char const* kUniquenessNote =
        "for n >= 4 distinct normal forms may represent the same element";

    void check_n(Options const& o) {
      if (o.n < 2) {
        throw Error("strand count must be at least 2");
      }
    }

    Outcome cmd_nf(Options const& o) {
      check_n(o);
      Group            g = infer_group(o.words, {Group::VB, Group::VP});
      Word             w = parse_words(o, g).front();
      NormalizeOptions opts;
      if (o.budget > 0) {
        opts.budget = o.budget;
      }
      NormalForm f = g == Group::VP ? normalize_vp(w, opts) : normalize(w, opts);
      Outcome    out;
      out.text   = format(f);
      out.result = out.text;
      if (o.n >= 4) {
        out.diagnostics.emplace_back(kUniquenessNote);
      }
      return out;
    }

    Outcome cmd_eq(Options const& o) {
      check_n(o);
      auto             ws = parse_words(o, Group::VB);
      NormalizeOptions opts;
      if (o.budget > 0) {
        opts.budget = o.budget;
      }
      bool    same = equal(ws[0], ws[1], opts);
      Outcome out;
      out.code   = same ? kTrue : kFalse;
      out.text   = same ? "true" : "false";
      out.result = same;
      if (o.n >= 4) {
        out.diagnostics.emplace_back(kUniquenessNote);
      }
      return out;
    }

    Outcome cmd_perm(Options const& o) {
      check_n(o);
      Group g = infer_group(o.words,
                            {Group::VB, Group::WB, Group::UB, Group::SG});
      Word  w = parse_words(o, g).front();
      Outcome out;
      out.text   = format(nu(w));
      out.result = out.text;
      return out;
    }

    Outcome cmd_vp_rewrite(Options const& o) {
      check_n(o);
      Word w        = parse_words(o, Group::VB).front();
      auto [v, rep] = rewrite_to_vp(w);
      Outcome out;
      std::string vp    = format_or_e(v);
      std::string coset = format_or_e(canonical_word(rep));
      out.text          = "(" + vp + ", " + coset + ")";
      out.result        = {{"vp", vp}, {"coset", coset}};
      return out;
    }

    Outcome cmd_image(Options const& o) {
      check_n(o);
      if (o.hom.empty()) {
        throw Error("image needs --hom");
      }
      Hom     h = parse_hom(o.hom);
      Word    w = parse_words(o, hom_spec(h).source).front();
      Outcome out;
      out.text   = format_or_e(map_word(h, w));
      out.result = out.text;
      return out;
    }

    Outcome cmd_auto(Options const& o) {
      check_n(o);
      Group   g = infer_group(o.words, {Group::VB, Group::WB});
      Word    w = parse_words(o, g).front();
      Outcome out;
      out.text   = format(wb_image(w));
      out.result = out.text;
      return out;
    }

    Outcome report_outcome(HomReport const& report) {
      Outcome     out;
      std::size_t ok = 0;
      json        rows = json::array();
      std::string text;
      for (RelatorVerdict const& v : report.verdicts) {
        ok += v.trivial ? 1 : 0;
        text += std::string(v.trivial ? "ok   " : "FAIL ") + v.relator.family
                + ": " + format_or_e(v.relator.word) + " -> "
                + format_or_e(v.image) + " [" + v.detail + "]\n";
        rows.push_back({{"family", v.relator.family},
                        {"relator", format_or_e(v.relator.word)},
                        {"image", format_or_e(v.image)},
                        {"trivial", v.trivial},
                        {"detail", v.detail}});
      }
      text += "verify " + report.subject + " n=" + std::to_string(report.n)
              + " backend=" + backend_name(report.backend) + ": "
              + std::to_string(ok) + "/"
              + std::to_string(report.verdicts.size()) + " relators trivial";
      out.code   = report.passed() ? kTrue : kFalse;
      out.text   = text;
      out.result = {{"subject", report.subject},
                    {"backend", backend_name(report.backend)},
                    {"passed", report.passed()},
                    {"total", report.verdicts.size()},
                    {"trivial", ok},
                    {"relators", rows}};
      return out;
    }

    Backend default_backend(Group target) {
      switch (target) {
        case Group::VB:
        case Group::VP:
          return Backend::NF;
        case Group::B:
        case Group::WB:
        case Group::Cb:
          return Backend::AUT;
        case Group::S:
          return Backend::PERM;
        default:
          return Backend::SYNTACTIC;
      }
    }

    Outcome cmd_verify(Options const& o) {
      check_n(o);
      if (!o.hom.empty()) {
        Hom     h = parse_hom(o.hom);
        Backend b = o.backend.empty() ? default_backend(hom_spec(h).target)
                                      : parse_backend(o.backend);
        return report_outcome(verify_homomorphism(h, o.n, b));
      }
      Group   g = o.group.empty() ? Group::VB : parse_group(o.group);
      Backend b = o.backend.empty() ? default_backend(g)
                                    : parse_backend(o.backend);
      Outcome out = report_outcome(verify_presentation(g, o.n, b));
      if (o.trials > 0) {
        Presentation p = presentation(Group::VB, o.n);
        int          failures = 0;
        for (int t = 0; t < o.trials; ++t) {
          std::uint64_t s = o.seed * 1'000'003ULL + static_cast<std::uint64_t>(t);
          Word          w = random_word(p, s, 6);
          Word          r = random_relator_product(p, s + 7, 1);
          Word          w2 = free_reduce(concat(w, r));
          bool          same = false;
          try {
            same = normalize(w) == normalize(w2);
          } catch (BudgetExceeded const& e) {
            out.diagnostics.push_back(std::string("trial ")
                                      + std::to_string(t) + ": " + e.what());
          }
          if (!same) {
            ++failures;
            out.text += "\nFAIL invariance: " + format_or_e(w) + " vs "
                        + format_or_e(w2);
          }
        }
        out.text += "\ninvariance trials: " + std::to_string(o.trials - failures)
                    + "/" + std::to_string(o.trials) + " passed";
        out.result["invariance_trials"]   = o.trials;
        out.result["invariance_failures"] = failures;
        if (failures > 0) {
          out.code = kFalse;
        }
      }
      return out;
    }

    Outcome cmd_oracle_eq(Options const& o) {
      check_n(o);
      Group g = o.group.empty()
                    ? infer_group(o.words, {Group::VB, Group::VP, Group::WB,
                                            Group::UB, Group::SG, Group::Cb})
                    : parse_group(o.group);
      auto          ws     = parse_words(o, g);
      std::size_t   budget = o.budget > 0 ? o.budget : 100'000;
      OracleVerdict v = bounded_equal(presentation(g, o.n), ws[0], ws[1], budget);
      Outcome       out;
      json          moves = json::array();
      for (OracleMove const& m : v.witness) {
        moves.push_back({{"position", m.position},
                         {"insert", format_or_e(m.inserted)}});
      }
      if (v.equal()) {
        out.code = kTrue;
        out.text = "equal: witness length " + std::to_string(v.witness.size())
                   + ", nodes expanded " + std::to_string(v.nodes);
      } else {
        out.code = kUnknown;
        out.text = "unknown: nodes expanded " + std::to_string(v.nodes)
                   + ", budget " + std::to_string(budget);
      }
      out.result = {{"verdict", v.equal() ? "Equal" : "Unknown"},
                    {"nodes", v.nodes},
                    {"witness", moves}};
      return out;
    }

    void emit(std::ostream& out, Options const& o, Outcome const& r) {
      if (o.json_output) {
        json j = {{"input", o.words},
                  {"n", o.n},
                  {"result", r.result},
                  {"diagnostics", r.diagnostics}};
        out << j.dump(2) << "\n";
        return;
      }
      out << r.text << "\n";
      for (std::string const& d : r.diagnostics) {
        out << "note: " << d << "\n";
      }
    }

    int emit_error(std::ostream& out, std::ostream& err, Options const& o,
                   std::string const& message,
                   std::optional<WordError> const& where, int code) {
      std::string full = message;
      if (where) {
        full = "word " + std::to_string(where->argument + 1) + ", position "
               + std::to_string(where->position) + ": " + message;
      }
      if (o.json_output) {
        json j = {{"input", o.words},
                  {"n", o.n},
                  {"result", nullptr},
                  {"diagnostics", {full}}};
        out << j.dump(2) << "\n";
        return code;
      }
      err << "error: " << full << "\n";
      if (where) {
        err << "  " << o.words[where->argument] << "\n"
            << "  " << std::string(where->position, ' ') << "^\n";
      }
      return code;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err) {
    Options  o;
    CLI::App app{"Word problem and homomorphism toolkit for virtual braid "
                 "groups",
                 "vbraid"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json_output, "Print a JSON object");

    auto add_n = [&](CLI::App* sub) {
      sub->add_option("n", o.n, "Number of strands")->required();
    };
    auto add_words = [&](CLI::App* sub, int count) {
      sub->add_option("words", o.words, "Words in the token grammar")
          ->required()
          ->expected(count);
    };

    CLI::App* nf = app.add_subcommand("nf", "Print the normal form of a word");
    add_n(nf);
    add_words(nf, 1);
    nf->add_option("--budget", o.budget, "Normal form step budget");

    CLI::App* eq = app.add_subcommand("eq", "Decide equality of two VB words");
    add_n(eq);
    add_words(eq, 2);
    eq->add_option("--budget", o.budget, "Normal form step budget");

    CLI::App* perm = app.add_subcommand("perm", "Print the permutation nu(w)");
    add_n(perm);
    add_words(perm, 1);

    CLI::App* vpr = app.add_subcommand(
        "vp-rewrite", "Rewrite a VB word as a VP word times a coset word");
    add_n(vpr);
    add_words(vpr, 1);

    CLI::App* image = app.add_subcommand("image", "Apply a homomorphism");
    image->add_option("--hom", o.hom, "phi_VW, phi_US, phi_UV, phi_UB, psi, nu")
        ->required();
    add_n(image);
    add_words(image, 1);

    CLI::App* aut = app.add_subcommand(
        "auto", "Print the free group automorphism of a VB or WB word");
    add_n(aut);
    add_words(aut, 1);

    CLI::App* verify = app.add_subcommand(
        "verify", "Check relators of a presentation or a homomorphism");
    add_n(verify);
    verify->add_option("--hom", o.hom, "Homomorphism to verify");
    verify->add_option("--backend", o.backend, "NF, AUT, SYNTACTIC or PERM");
    verify->add_option("--group", o.group, "Presentation to check (default VB)");
    verify->add_option("--seed", o.seed, "Seed for random invariance trials");
    verify->add_option("--trials", o.trials,
                       "Number of random invariance trials");

    CLI::App* oracle = app.add_subcommand(
        "oracle-eq", "Search for a proof that two words are equal");
    add_n(oracle);
    add_words(oracle, 2);
    oracle->add_option("--budget", o.budget, "Node budget (default 100000)");
    oracle->add_option("--group", o.group, "Presentation to search in");

    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return kTrue;
    } catch (CLI::ParseError const& e) {
      if (e.get_exit_code() == 0) {
        out << app.help();
        return kTrue;
      }
      err << "error: " << e.what() << "\n";
      return kError;
    }

    try {
      Outcome r;
      if (*nf) {
        r = cmd_nf(o);
      } else if (*eq) {
        r = cmd_eq(o);
      } else if (*perm) {
        r = cmd_perm(o);
      } else if (*vpr) {
        r = cmd_vp_rewrite(o);
      } else if (*image) {
        r = cmd_image(o);
      } else if (*aut) {
        r = cmd_auto(o);
      } else if (*verify) {
        r = cmd_verify(o);
      } else {
        r = cmd_oracle_eq(o);
      }
      emit(out, o, r);
      return r.code;
    } catch (WordError const& e) {
      return emit_error(out, err, o, e.message, e, kError);
    } catch (BudgetExceeded const& e) {
      return emit_error(out, err, o, e.what(), std::nullopt, kUnknown);
    } catch (std::exception const& e) {
      return emit_error(out, err, o, e.what(), std::nullopt, kError);
    }
  }

}  // namespace vbraid::cli
