#pragma once

// Replays the desk-scale verifications as a list of named checks. Each
// check is a rerunnable call into the library with a fixed seed and a
// runtime limit; the report is consumed by the acceptance test binary and
// by the `verify-paper` command.

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "monvar/deduction.hpp"
#include "monvar/lattices.hpp"
#include "monvar/monoids.hpp"
#include "monvar/varieties.hpp"
#include "monvar/words.hpp"

namespace monvar::verification {

  enum class Status { pass, fail, unknown };

  inline std::string_view to_string(Status s) {
    switch (s) {
      case Status::pass:
        return "pass";
      case Status::fail:
        return "fail";
      case Status::unknown:
        return "unknown";
    }
    return "?";
  }

  struct Entry {
    std::string name;
    std::string anchor;
    Status      status = Status::unknown;
    std::string detail;
    double      seconds       = 0;
    double      limit_seconds = 0;
  };

  struct Report {
    std::vector<Entry> entries;

    std::size_t count(Status s) const {
      std::size_t n = 0;
      for (auto const& e : entries) {
        n += e.status == s ? 1 : 0;
      }
      return n;
    }

    bool all_pass() const {
      return count(Status::pass) == entries.size();
    }

    // Human lines, then the stable machine-readable "CHECK <name> <status>"
    // lines. Timings are printed only on request so that the output is
    // reproducible.
    void print(std::ostream& os, bool with_timings = false) const {
      for (std::size_t i = 0; i < entries.size(); ++i) {
        auto const& e = entries[i];
        os << (e.status == Status::pass ? "[PASS] " : e.status == Status::fail ? "[FAIL] " : "[UNKN] ")
           << (i + 1 < 10 ? "0" : "") << i + 1 << " " << e.name << " -- " << e.anchor << "\n";
        os << "       " << e.detail << "\n";
        if (with_timings) {
          os << "       time " << e.seconds << " s (limit " << e.limit_seconds << " s)\n";
        }
      }
      for (auto const& e : entries) {
        os << "CHECK " << e.name << " " << to_string(e.status) << "\n";
      }
      os << "SUMMARY pass=" << count(Status::pass) << " fail=" << count(Status::fail)
         << " unknown=" << count(Status::unknown) << "\n";
    }
  };

  namespace detail {

    using Rng = std::mt19937_64;

    inline constexpr std::uint64_t seed = 20201;

    inline Word random_word(Rng& rng, std::string_view alphabet, std::size_t max_len) {
      std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
      std::uniform_int_distribution<std::size_t> letter_dist(0, alphabet.size() - 1);
      std::string                                s;
      auto                                       len = len_dist(rng);
      for (std::size_t i = 0; i < len; ++i) {
        s += alphabet[letter_dist(rng)];
      }
      return Word::trusted(s);
    }

    // A random word with the given initial part and length ≤ max_len:
    // after each new letter, optionally repeat letters already seen.
    inline Word random_word_with_ini(Rng& rng, Word const& ini, std::size_t max_len) {
      std::string s;
      std::string seen;
      std::size_t budget = max_len - std::min(max_len, ini.size());
      std::uniform_int_distribution<std::size_t> coin(0, 2);
      for (Letter a : ini) {
        s += a;
        seen += a;
        while (budget > 0 && coin(rng) == 0) {
          std::uniform_int_distribution<std::size_t> pick(0, seen.size() - 1);
          s += seen[pick(rng)];
          --budget;
        }
      }
      return Word::trusted(s);
    }

    inline Word shuffled(Rng& rng, Word const& w) {
      std::string s = w.letters();
      std::shuffle(s.begin(), s.end(), rng);
      return Word::trusted(s);
    }

    // Inserts `count` copies of the letter a at random positions.
    inline Word insert_copies(Rng& rng, Word const& w, Letter a, std::size_t count) {
      std::string s = w.letters();
      for (std::size_t i = 0; i < count; ++i) {
        std::uniform_int_distribution<std::size_t> pos(0, s.size());
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos(rng)), a);
      }
      return Word::trusted(s);
    }

    template <typename F>
    Entry timed(std::string name, std::string anchor, double limit, F&& body) {
      Entry e;
      e.name          = std::move(name);
      e.anchor        = std::move(anchor);
      e.limit_seconds = limit;
      auto t0         = std::chrono::steady_clock::now();
      try {
        body(e);
      } catch (std::exception const& ex) {
        e.status = Status::fail;
        e.detail = std::string("exception: ") + ex.what();
      }
      e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (e.status == Status::pass && e.seconds > limit) {
        e.status = Status::fail;
        e.detail += "; exceeded the runtime limit";
      }
      return e;
    }

    inline std::string names_of(FiniteLattice const& l, std::array<std::size_t, 3> t) {
      return "(" + l.name(t[0]) + ", " + l.name(t[1]) + ", " + l.name(t[2]) + ")";
    }

  }  // namespace detail

  // 1. x and y cancellable, x∨y not.
  inline Entry fig1_cancellable() {
    return detail::timed(
        "fig1-cancellable", "cancellable elements whose join is not cancellable", 1.0, [](Entry& e) {
          auto l  = fixtures::fig1();
          auto x  = *l.find("x");
          auto y  = *l.find("y");
          auto xy = l.join(x, y);
          bool ok = is_cancellable_element(l, x) && is_cancellable_element(l, y)
                    && !is_cancellable_element(l, xy) && l.name(xy) == "xvy";
          auto w  = cancellable_element_witness(l, xy);
          e.detail = "x cancellable=" + std::to_string(is_cancellable_element(l, x))
                     + ", y cancellable=" + std::to_string(is_cancellable_element(l, y))
                     + ", x∨y=" + l.name(xy) + " cancellable="
                     + std::to_string(is_cancellable_element(l, xy))
                     + (w ? " (witness y=" + l.name(w->first) + ", z=" + l.name(w->second) + ")"
                          : "");
          e.status = ok ? Status::pass : Status::fail;
        });
  }

  // 2. fig2 modular, not distributive.
  inline Entry fig2_modular_not_distributive() {
    return detail::timed("fig2-modular-not-distributive",
                         "subvariety lattice of RvRop is modular but not distributive",
                         1.0,
                         [](Entry& e) {
                           auto l   = fixtures::fig2();
                           bool mod = is_modular_lattice(l);
                           auto w   = distributivity_witness(l);
                           e.detail = "elements=" + std::to_string(l.size())
                                      + ", modular=" + std::to_string(mod);
                           if (w) {
                             e.detail += ", distributivity fails at (x,y,z)="
                                         + detail::names_of(l, *w);
                           }
                           e.status = mod && w && l.size() == 11 ? Status::pass : Status::fail;
                         });
  }

  // 3. Partition modularity criterion vs exhaustive check.
  inline Entry partition_modular_elements() {
    return detail::timed(
        "partition-block-criterion",
        "a partition is modular iff at most one block is non-singleton",
        10.0,
        [](Entry& e) {
          std::size_t disagreements = 0, checked = 0, part4_modular = 0, part4_size = 0;
          for (std::size_t k = 3; k <= 5; ++k) {
            auto l     = partition_lattice(k);
            auto parts = all_partitions(k);
            for (std::size_t i = 0; i < l.size(); ++i) {
              bool exhaustive = is_modular_element(l, i);
              bool criterion  = one_block_modular(Partition::parse(l.name(i)));
              disagreements += exhaustive != criterion ? 1 : 0;
              ++checked;
              if (k == 4) {
                part4_modular += exhaustive ? 1 : 0;
              }
            }
            if (k == 4) {
              part4_size = l.size();
            }
          }
          e.detail = std::to_string(checked) + " partitions checked for k=3..5, "
                     + std::to_string(disagreements) + " disagreements; Part(4) modular "
                     + std::to_string(part4_modular) + "/" + std::to_string(part4_size);
          e.status = disagreements == 0 && part4_modular == 12 && part4_size == 15
                         ? Status::pass
                         : Status::fail;
        });
  }

  // 4. Initial-part rule vs the free LRB monoid on 3 generators.
  inline Entry lrb_initial_part_oracle() {
    return detail::timed(
        "lrb-initial-part-oracle",
        "LRB identities are decided by initial parts",
        30.0,
        [](Entry& e) {
          detail::Rng rng(detail::seed + 4);
          auto        model         = free_lrb_monoid(3);
          std::size_t disagreements = 0, holds = 0;
          for (int i = 0; i < 200; ++i) {
            Word u = detail::random_word(rng, "xyz", 8);
            Word v = i % 2 == 0 ? detail::random_word(rng, "xyz", 8)
                                : detail::random_word_with_ini(rng, initial_part(u), 8);
            bool rule  = initial_part(u) == initial_part(v);
            bool brute = satisfies_identity(model, Identity(u, v));
            disagreements += rule != brute ? 1 : 0;
            holds += brute ? 1 : 0;
          }
          e.detail = "200 identities, " + std::to_string(holds) + " hold, "
                     + std::to_string(disagreements) + " disagreements";
          e.status = disagreements == 0 ? Status::pass : Status::fail;
        });
  }

  // 5. Occurrences mod m vs cyclic groups of order 2 and 3.
  inline Entry abelian_group_oracle() {
    return detail::timed(
        "am-mod-occurrence-oracle",
        "A_m identities are decided by occurrence counts mod m",
        10.0,
        [](Entry& e) {
          detail::Rng rng(detail::seed + 5);
          std::size_t disagreements = 0, holds2 = 0, holds3 = 0;
          std::array<FiniteMonoid, 2> models{cyclic_group(2), cyclic_group(3)};
          for (int i = 0; i < 200; ++i) {
            Word u = detail::random_word(rng, "xyz", 8);
            Word v;
            switch (i % 3) {
              case 0:
                v = detail::random_word(rng, "xyz", 8);
                break;
              case 1:
                v = detail::insert_copies(rng, detail::shuffled(rng, u), "xyz"[i % 9 / 3], 2);
                break;
              default:
                v = detail::insert_copies(rng, detail::shuffled(rng, u), "xyz"[i % 9 / 3], 3);
                break;
            }
            for (std::size_t j = 0; j < 2; ++j) {
              std::size_t m    = j + 2;
              auto        ou   = occurrences(u), ov = occurrences(v);
              bool        rule = true;
              for (std::size_t a = 0; a < alphabet_size; ++a) {
                rule = rule && ou[a] % m == ov[a] % m;
              }
              bool brute = satisfies_identity(models[j], Identity(u, v));
              disagreements += rule != brute ? 1 : 0;
              (m == 2 ? holds2 : holds3) += brute ? 1 : 0;
            }
          }
          e.detail = "200 identities against Z2 and Z3 (" + std::to_string(holds2) + " and "
                     + std::to_string(holds3) + " hold), " + std::to_string(disagreements)
                     + " disagreements";
          e.status = disagreements == 0 ? Status::pass : Status::fail;
        });
  }

  // 6. D2 monoid and R × R^op against their bases.
  inline Entry finite_model_bases() {
    return detail::timed(
        "d2-and-rvrop-model-checks",
        "D2 and RvRop bases hold in their generating monoids",
        60.0,
        [](Entry& e) {
          auto const& d2  = monoids::d2();
          auto const& rr  = monoids::r_times_r_op();
          std::size_t ok1 = 0, ok2 = 0;
          for (auto const& id : bases::d2()) {
            ok1 += satisfies_identity(d2, id, {true}) ? 1 : 0;
          }
          for (auto const& id : bases::r_join_r_op()) {
            ok2 += satisfies_identity(rr, id, {true}) ? 1 : 0;
          }
          e.detail = "D2 monoid (" + std::to_string(d2.size()) + " elements) satisfies "
                     + std::to_string(ok1) + "/5; RxRop (" + std::to_string(rr.size())
                     + " elements) satisfies " + std::to_string(ok2) + "/5";
          e.status = d2.size() == 7 && rr.size() == 49 && ok1 == 5 && ok2 == 5 ? Status::pass
                                                                                : Status::fail;
        });
  }

  // Default bounds for the D-basis round trip.
  inline constexpr SearchBounds d_single_bounds{8, 4, 2'000'000};
  inline constexpr SearchBounds d_basis_bounds{24, 48, 2'000'000};

  // 7. D basis and the single identity x³yz ≈ yxzx derive each other.
  inline Entry d_single_identity() {
    return detail::timed(
        "d-single-identity-basis",
        "D is defined by the single identity x3yz = yxzx",
        30.0,
        [](Entry& e) {
          auto        single = bases::d_single();
          auto        basis  = bases::d();
          bool        ok     = true;
          std::string detail;
          for (auto const& id : basis) {
            auto r = derivable(id, single, d_single_bounds);
            bool good = r.answer == Derivability::yes && check_derivation(*r.derivation, single);
            ok        = ok && good;
            detail += id.to_string() + ": "
                      + (good ? std::to_string(r.derivation->length()) + " steps" : "not found")
                      + "; ";
          }
          for (auto const& id : single) {
            auto r = derivable(id, basis, d_basis_bounds);
            bool good = r.answer == Derivability::yes && check_derivation(*r.derivation, basis);
            ok        = ok && good;
            detail += id.to_string() + " from the D basis: "
                      + (good ? std::to_string(r.derivation->length()) + " steps" : "not found");
          }
          e.detail = detail;
          e.status = ok ? Status::pass : Status::fail;
        });
  }

  // The p → q chain through x³y⁴t⁴z⁴ using only x² ≈ x³ and x²y ≈ yx².
  inline std::vector<Word> p_to_q_chain() {
    std::vector<Word> chain;
    for (auto text : {"y2xt2z2y2t2xz2",
                      "xt2z2y4t2xz2",
                      "xz2y4t4xz2",
                      "xy4t4xz4",
                      "xy4xt4z4",
                      "x2y4t4z4",
                      "x3y4t4z4",
                      "x2y4xt4z4",
                      "x2y4t4xz4",
                      "xz2xy4t4xz2",
                      "xt2z2xy4t2xz2",
                      "y2xt2z2xy2t2xz2"}) {
      chain.push_back(Word::parse(text));
    }
    return chain;
  }

  inline IdentitySystem p_to_q_system() {
    return bases::parse_list({"x2 = x3", "x2y = yx2"}, "x2=x3, x2y=yx2");
  }

  // 8. Transcribed derivation of p ≈ q.
  inline Entry p_to_q_derivation() {
    return detail::timed("p-q-derivation-chain",
                         "p = q follows from x2 = x3 and x2y = yx2",
                         10.0,
                         [](Entry& e) {
                           auto sys   = p_to_q_system();
                           auto chain = p_to_q_chain();
                           auto d     = connect(chain, sys);
                           bool ok = d && check_derivation(*d, sys)
                                     && d->words.front() == bases::p()
                                     && d->words.back() == bases::q();
                           e.detail = std::to_string(chain.size() - 1) + "-step chain "
                                      + (ok ? "checks" : "does not check");
                           e.status = ok ? Status::pass : Status::fail;
                         });
  }

  // All 128 words of W with exponents in {2, 3}.
  inline std::vector<Word> w_words_23() {
    std::vector<Word> out;
    for (bool middle : {false, true}) {
      for (unsigned mask = 0; mask < 64; ++mask) {
        std::array<std::size_t, 6> r{};
        for (std::size_t i = 0; i < 6; ++i) {
          r[i] = (mask >> i & 1U) != 0 ? 3 : 2;
        }
        out.push_back(w_word(r, middle));
      }
    }
    return out;
  }

  // 9. One-step rewrites by p ≈ q stay inside W.
  inline Entry w_stability() {
    return detail::timed(
        "w-class-stability", "W is closed under rewriting by p = q", 120.0, [](Entry& e) {
          auto        sys     = bases::k();
          std::size_t escapes = 0, moves = 0, words = 0;
          std::string first_escape;
          for (auto const& u : w_words_23()) {
            ++words;
            for (auto const& v : one_step_rewrites(u, sys, 21)) {
              if (v == u) {
                continue;
              }
              ++moves;
              if (membership_in_W(v) == WClass::outside) {
                if (escapes++ == 0) {
                  first_escape = u.to_string() + " -> " + v.to_string();
                }
              }
            }
          }
          e.detail = std::to_string(words) + " words, " + std::to_string(moves)
                     + " nontrivial one-step rewrites, " + std::to_string(escapes) + " escapes"
                     + (escapes != 0 ? " (first: " + first_escape + ")" : "");
          e.status = escapes == 0 && words == 128 ? Status::pass : Status::fail;
        });
  }

  // 10. Isoterm powers vs exhaustive xⁿ ≈ x^{n+m} checks.
  inline Entry isoterm_powers() {
    return detail::timed(
        "isoterm-power-coherence",
        "x^n is an isoterm iff no x^n = x^(n+m) holds",
        5.0,
        [](Entry& e) {
          std::size_t disagreements = 0, cases = 0;
          auto        x             = Word::parse("x");
          for (std::size_t k = 2; k <= 5; ++k) {
            auto v = variety_c(k);
            for (std::size_t n = 1; n <= 4; ++n) {
              bool iso        = is_isoterm_power(v, n);
              bool none_holds = true;
              for (std::size_t m = 1; m <= 4; ++m) {
                none_holds = none_holds
                             && !satisfies_identity(*v.model->monoid,
                                                    Identity(x.power(n), x.power(n + m)));
              }
              // xⁿ is an isoterm for C_k exactly when C_{n+1} ⊆ C_k.
              bool containment = n + 1 <= k;
              disagreements += (iso != none_holds || iso != containment) ? 1 : 0;
              ++cases;
            }
          }
          e.detail = std::to_string(cases) + " (C_k, n) cases, " + std::to_string(disagreements)
                     + " disagreements";
          e.status = disagreements == 0 ? Status::pass : Status::fail;
        });
  }

  // 11. Randomized laws of the word operations.
  inline Entry word_laws() {
    return detail::timed(
        "word-operation-laws",
        "initial part, letter deletion and substitution laws",
        10.0,
        [](Entry& e) {
          detail::Rng rng(detail::seed + 11);
          std::size_t failures = 0;
          std::string const alpha = "xyztu";
          std::uniform_int_distribution<int> bit(0, 1);
          for (int i = 0; i < 1000; ++i) {
            Word w   = detail::random_word(rng, alpha, 14);
            Word ini = initial_part(w);
            bool distinct = occurrences(ini) == occurrences(Word::trusted([&] {
                              std::string s;
                              for (Letter a : content(w).letters()) {
                                s += a;
                              }
                              return s;
                            }()));
            if (initial_part(ini) != ini || content(ini) != content(w) || !distinct) {
              ++failures;
            }
          }
          for (int i = 0; i < 1000; ++i) {
            Word      w = detail::random_word(rng, alpha, 14);
            LetterSet xs, ys;
            for (Letter a : alpha) {
              if (bit(rng) != 0) {
                xs.insert(a);
              }
              if (bit(rng) != 0) {
                ys.insert(a);
              }
            }
            if (delete_letters(w, xs | ys) != delete_letters(delete_letters(w, xs), ys)) {
              ++failures;
            }
          }
          for (int i = 0; i < 1000; ++i) {
            Word         w = detail::random_word(rng, alpha, 10);
            Substitution xi;
            for (Letter a : alpha) {
              xi.set(a, detail::random_word(rng, alpha, 3));
            }
            Word image = apply_substitution(xi, w);
            for (Letter b : alpha) {
              std::size_t expected = 0;
              for (Letter a : alpha) {
                expected += occ(w, a) * occ(xi.image(a), b);
              }
              if (occ(image, b) != expected) {
                ++failures;
                break;
              }
            }
          }
          e.detail = "3 x 1000 randomized cases, " + std::to_string(failures) + " failures";
          e.status = failures == 0 ? Status::pass : Status::fail;
        });
  }

  inline std::vector<std::function<Entry()>> checks() {
    return {fig1_cancellable,
            fig2_modular_not_distributive,
            partition_modular_elements,
            lrb_initial_part_oracle,
            abelian_group_oracle,
            finite_model_bases,
            d_single_identity,
            p_to_q_derivation,
            w_stability,
            isoterm_powers,
            word_laws};
  }

  inline Report run_all() {
    Report r;
    for (auto const& check : checks()) {
      r.entries.push_back(check());
    }
    return r;
  }

}  // namespace monvar::verification
