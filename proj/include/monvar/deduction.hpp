#pragma once

// One-step equational rewriting over a finite identity system and bounded
// breadth-first derivation search.
//
// A rewrite step replaces a factor a·ξ(s)·b of a word by a·ξ(t)·b, where
// s ≈ t (or t ≈ s) belongs to the system and ξ is a monoid endomorphism
// (letters may be erased). Derivations are sequences of such steps and are
// checkable independently of the search that produced them.

#include <algorithm>
#include <array>
#include <cstddef>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "monvar/errors.hpp"
#include "monvar/words.hpp"

namespace monvar {

  ////////////////////////////////////////////////////////////////////////
  // IdentitySystem
  ////////////////////////////////////////////////////////////////////////

  class IdentitySystem {
   public:
    IdentitySystem() = default;

    IdentitySystem(std::initializer_list<Identity> ids, std::string name = "")
        : _name(std::move(name)) {
      for (auto const& id : ids) {
        add(id);
      }
    }

    explicit IdentitySystem(std::vector<Identity> const& ids, std::string name = "")
        : _name(std::move(name)) {
      for (auto const& id : ids) {
        add(id);
      }
    }

    // Set semantics up to swapping sides; returns false for a duplicate.
    bool add(Identity const& id) {
      if (contains(id)) {
        return false;
      }
      _identities.push_back(id);
      return true;
    }

    bool contains(Identity const& id) const {
      return std::any_of(_identities.begin(),
                         _identities.end(),
                         [&](Identity const& x) { return x.same_as(id); });
    }

    std::vector<Identity> const& identities() const noexcept {
      return _identities;
    }

    std::size_t size() const noexcept {
      return _identities.size();
    }

    bool empty() const noexcept {
      return _identities.empty();
    }

    auto begin() const noexcept {
      return _identities.begin();
    }

    auto end() const noexcept {
      return _identities.end();
    }

    std::string const& name() const noexcept {
      return _name;
    }

    void set_name(std::string name) {
      _name = std::move(name);
    }

    LetterSet content() const {
      LetterSet out;
      for (auto const& id : _identities) {
        out = out | monvar::content(id.lhs) | monvar::content(id.rhs);
      }
      return out;
    }

    std::string to_string() const {
      std::string out = "{";
      for (std::size_t i = 0; i < _identities.size(); ++i) {
        if (i != 0) {
          out += ", ";
        }
        out += _identities[i].to_string();
      }
      return out + "}";
    }

    // One identity (or chain u=v=w) per line, '#' comments, optional
    // "name: <label>" header line.
    static IdentitySystem parse(std::string_view text) {
      IdentitySystem     out;
      std::istringstream in{std::string(text)};
      std::string        line;
      std::size_t        lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
          line.erase(hash);
        }
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
          continue;
        }
        line = line.substr(first);
        if (line.rfind("name:", 0) == 0) {
          auto label = line.substr(5);
          auto b     = label.find_first_not_of(" \t");
          auto e     = label.find_last_not_of(" \t\r");
          out._name  = b == std::string::npos ? "" : label.substr(b, e - b + 1);
          continue;
        }
        try {
          for (auto const& id : parse_identity_chain(line)) {
            out.add(id);
          }
        } catch (ParseError const& e) {
          throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
      }
      return out;
    }

    static IdentitySystem load(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw ParseError("cannot open identity file " + path);
      }
      std::stringstream buf;
      buf << in.rdbuf();
      return parse(buf.str());
    }

   private:
    std::vector<Identity> _identities;
    std::string           _name;
  };

  ////////////////////////////////////////////////////////////////////////
  // RewriteStep and Derivation
  ////////////////////////////////////////////////////////////////////////

  enum class Direction { left_to_right, right_to_left };

  struct RewriteStep {
    Word         prefix;
    Substitution substitution{SubstitutionKind::monoid};
    Identity     identity;
    Direction    direction = Direction::left_to_right;
    Word         suffix;

    Word const& from_side() const {
      return direction == Direction::left_to_right ? identity.lhs : identity.rhs;
    }

    Word const& to_side() const {
      return direction == Direction::left_to_right ? identity.rhs : identity.lhs;
    }

    Word source() const {
      return prefix + apply_substitution(substitution, from_side()) + suffix;
    }

    Word target() const {
      return prefix + apply_substitution(substitution, to_side()) + suffix;
    }

    std::string to_string() const {
      return source().to_string() + " -> " + target().to_string() + "   [by "
             + from_side().to_string() + " -> " + to_side().to_string() + ", a="
             + prefix.to_string() + ", xi=" + substitution.to_string()
             + ", b=" + suffix.to_string() + "]";
    }
  };

  struct Derivation {
    std::vector<Word>        words;
    std::vector<RewriteStep> steps;

    std::size_t length() const noexcept {
      return steps.size();
    }
  };

  // Throws DerivationError carrying the index of the first bad step.
  inline void validate_derivation(Derivation const& d, IdentitySystem const& sys) {
    if (d.words.empty()) {
      throw DerivationError(0, "derivation has no words");
    }
    if (d.words.size() != d.steps.size() + 1) {
      throw DerivationError(d.steps.size(), "word count does not match step count");
    }
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
      auto const& step = d.steps[i];
      if (!sys.contains(step.identity)) {
        throw DerivationError(i,
                              "identity " + step.identity.to_string()
                                  + " is not in the system");
      }
      if (step.source() != d.words[i]) {
        throw DerivationError(i,
                              "a·ξ(s)·b = " + step.source().to_string()
                                  + " differs from " + d.words[i].to_string());
      }
      if (step.target() != d.words[i + 1]) {
        throw DerivationError(i,
                              "a·ξ(t)·b = " + step.target().to_string()
                                  + " differs from " + d.words[i + 1].to_string());
      }
    }
  }

  inline bool check_derivation(Derivation const& d, IdentitySystem const& sys) {
    try {
      validate_derivation(d, sys);
      return true;
    } catch (DerivationError const&) {
      return false;
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Matching
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    // One occurrence of ξ(from_side) in a word, with ξ given by spans into
    // the word (bound letters) and explicit images for letters that occur
    // only on the target side.
    struct RewriteMatch {
      std::size_t                     identity_index = 0;
      Direction                       direction      = Direction::left_to_right;
      std::size_t                     start          = 0;
      std::size_t                     end            = 0;
      std::array<Span, alphabet_size> spans{};
      std::array<std::string, alphabet_size> free_images{};
      LetterSet                       free_letters;
    };

    inline RewriteStep materialize(RewriteMatch const&   m,
                                   Word const&           w,
                                   IdentitySystem const& sys) {
      RewriteStep step;
      step.identity  = sys.identities()[m.identity_index];
      step.direction = m.direction;
      step.prefix    = w.substr(0, m.start);
      step.suffix    = w.substr(m.end);
      LetterSet used = content(step.from_side()) | content(step.to_side());
      for (Letter a : used.letters()) {
        auto i = letter_index(a);
        if (m.free_letters.contains(a)) {
          step.substitution.set(a, Word::trusted(m.free_images[i]));
        } else {
          step.substitution.set(a, w.substr(m.spans[i].start, m.spans[i].len));
        }
      }
      return step;
    }

    // Enumerates matches of pattern[k..] in text from pos, empty images
    // allowed. Image lengths are tried 1, 2, ..., then 0. Stops when
    // on_match returns true; returns whether it stopped.
    template <typename F>
    bool match_monoid(std::string_view                 pattern,
                      std::size_t                      k,
                      std::string_view                 text,
                      std::size_t                      pos,
                      std::array<Span, alphabet_size>& spans,
                      F&                               on_match) {
      if (k == pattern.size()) {
        return on_match(pos);
      }
      Span& s = spans[letter_index(pattern[k])];
      if (s.bound()) {
        if (pos + s.len > text.size()
            || text.compare(pos, s.len, text.substr(s.start, s.len)) != 0) {
          return false;
        }
        return match_monoid(pattern, k + 1, text, pos + s.len, spans, on_match);
      }
      for (std::size_t len = 1; pos + len <= text.size(); ++len) {
        s = Span{pos, len};
        if (match_monoid(pattern, k + 1, text, pos + len, spans, on_match)) {
          s = Span{};
          return true;
        }
      }
      s = Span{pos, 0};
      bool stopped = match_monoid(pattern, k + 1, text, pos, spans, on_match);
      s            = Span{};
      return stopped;
    }

    // All words over `alphabet` of length ≤ max_len, shortlex order.
    inline std::vector<std::string> words_up_to(std::vector<Letter> const& alphabet,
                                                std::size_t max_len) {
      std::vector<std::string> out{""};
      std::size_t              begin = 0;
      for (std::size_t len = 1; len <= max_len && !alphabet.empty(); ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
          for (Letter a : alphabet) {
            out.push_back(out[i] + a);
          }
        }
        begin = end;
      }
      return out;
    }

    struct EnumerationStatus {
      bool truncated = false;
      bool stopped   = false;
    };

    // Calls on_rewrite(match, target) for every one-step rewrite of w with
    // |target| ≤ max_len, in a fixed order: identities in system order,
    // left-to-right before right-to-left, start positions ascending, then
    // the matcher's order. Letters of the target side that do not occur on
    // the source side receive images over `alphabet`; those rewrites are
    // always reported as truncated since the alphabet is finite.
    template <typename F>
    EnumerationStatus for_each_rewrite(Word const&           w,
                                       IdentitySystem const& sys,
                                       std::size_t           max_len,
                                       LetterSet const&      alphabet,
                                       F&&                   on_rewrite) {
      EnumerationStatus status;
      std::string_view  text = w.letters();
      auto const        alpha = alphabet.letters();
      for (std::size_t idx = 0; idx < sys.size(); ++idx) {
        auto const& id = sys.identities()[idx];
        for (Direction dir : {Direction::left_to_right, Direction::right_to_left}) {
          Word const& from = dir == Direction::left_to_right ? id.lhs : id.rhs;
          Word const& to   = dir == Direction::left_to_right ? id.rhs : id.lhs;
          LetterSet   free = content(to) - content(from);
          auto        free_letters = free.letters();
          RewriteMatch m;
          m.identity_index = idx;
          m.direction      = dir;
          m.free_letters   = free;
          std::string target;

          auto emit = [&](std::size_t end) -> bool {
            m.end = end;
            // Length of the target without free-letter images.
            std::size_t fixed = m.start + (text.size() - end);
            for (Letter a : to) {
              if (!free.contains(a)) {
                fixed += m.spans[letter_index(a)].len;
              }
            }
            if (fixed > max_len) {
              status.truncated = true;
              return false;
            }
            auto build_and_emit = [&]() -> bool {
              target.assign(text.substr(0, m.start));
              for (Letter a : to) {
                auto i = letter_index(a);
                if (free.contains(a)) {
                  target += m.free_images[i];
                } else {
                  target += text.substr(m.spans[i].start, m.spans[i].len);
                }
              }
              target += text.substr(end);
              if (target.size() > max_len) {
                status.truncated = true;
                return false;
              }
              return on_rewrite(static_cast<RewriteMatch const&>(m),
                                std::string_view(target));
            };
            if (free_letters.empty()) {
              return build_and_emit();
            }
            status.truncated = true;
            // Assign free-letter images recursively.
            auto pool = words_up_to(alpha, max_len - fixed);
            std::function<bool(std::size_t)> assign = [&](std::size_t j) -> bool {
              if (j == free_letters.size()) {
                return build_and_emit();
              }
              for (auto const& img : pool) {
                m.free_images[letter_index(free_letters[j])] = img;
                if (assign(j + 1)) {
                  return true;
                }
              }
              return false;
            };
            return assign(0);
          };

          for (std::size_t start = 0; start <= text.size(); ++start) {
            m.start = start;
            m.spans = {};
            if (match_monoid(from.letters(), 0, text, start, m.spans, emit)) {
              status.stopped = true;
              return status;
            }
          }
        }
      }
      return status;
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  // Every w' with |w'| ≤ max_len reachable from w in one step over sys, in
  // both directions of every identity. May contain w itself.
  inline std::set<Word, ShortlexLess> one_step_rewrites(Word const&           w,
                                                        IdentitySystem const& sys,
                                                        std::size_t           max_len) {
    std::set<Word, ShortlexLess> out;
    detail::for_each_rewrite(w,
                             sys,
                             max_len,
                             content(w) | sys.content(),
                             [&](detail::RewriteMatch const&, std::string_view t) {
                               out.insert(Word::trusted(std::string(t)));
                               return false;
                             });
    return out;
  }

  // A single step from `from` to `to`, if one exists.
  inline std::optional<RewriteStep> find_step(Word const&           from,
                                              Word const&           to,
                                              IdentitySystem const& sys,
                                              LetterSet const&      alphabet) {
    std::optional<RewriteStep> out;
    detail::for_each_rewrite(from,
                             sys,
                             to.size(),
                             alphabet | content(from) | content(to),
                             [&](detail::RewriteMatch const& m, std::string_view t) {
                               if (t == to.letters()) {
                                 out = detail::materialize(m, from, sys);
                                 return true;
                               }
                               return false;
                             });
    return out;
  }

  inline std::optional<RewriteStep> find_step(Word const&           from,
                                              Word const&           to,
                                              IdentitySystem const& sys) {
    return find_step(from, to, sys, sys.content());
  }

  // Builds a derivation through the given words, finding a step for each
  // consecutive pair. Returns nullopt if some pair is not one step apart.
  inline std::optional<Derivation> connect(std::vector<Word> const& chain,
                                           IdentitySystem const&    sys) {
    Derivation d;
    if (chain.empty()) {
      return std::nullopt;
    }
    d.words = chain;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      auto step = find_step(chain[i], chain[i + 1], sys);
      if (!step) {
        return std::nullopt;
      }
      d.steps.push_back(std::move(*step));
    }
    return d;
  }

  struct SearchBounds {
    std::size_t max_len     = 24;
    std::size_t max_depth   = 48;
    std::size_t max_visited = 2'000'000;
  };

  enum class Derivability { yes, no_within_bounds, unknown };

  inline std::string_view to_string(Derivability d) {
    switch (d) {
      case Derivability::yes:
        return "yes";
      case Derivability::no_within_bounds:
        return "no-within-bounds";
      case Derivability::unknown:
        return "unknown";
    }
    return "?";
  }

  struct DerivabilityResult {
    Derivability              answer = Derivability::unknown;
    std::optional<Derivation> derivation;
    std::size_t               visited = 0;
    // Why the search could not be exhaustive, if it was not.
    bool length_truncated  = false;
    bool depth_truncated   = false;
    bool visited_truncated = false;
  };

  // Breadth-first closure of one-step rewrites, grown from both ends. The
  // rewrite relation is symmetric, so a word reached from u and from v
  // joins the two searches. The side with the smaller frontier is expanded
  // next (u's side on ties); each level is expanded in shortlex order, so
  // witnesses are reproducible.
  //
  // yes: a checkable derivation from u to v is returned;
  // no_within_bounds: one side's closure was exhausted without truncation;
  // unknown: a bound cut the search short. max_depth bounds the sum of the
  // two search depths, i.e. the derivation length.
  inline DerivabilityResult derivable(Word const&           u,
                                      Word const&           v,
                                      IdentitySystem const& sys,
                                      SearchBounds const&   bounds) {
    DerivabilityResult result;
    if (u == v) {
      result.answer     = Derivability::yes;
      result.derivation = Derivation{{u}, {}};
      result.visited    = 1;
      return result;
    }
    LetterSet alphabet = content(u) | content(v) | sys.content();

    struct Side {
      std::unordered_map<std::string, std::string> parent;
      std::vector<std::string>                     frontier;
      std::size_t                                  depth     = 0;
      bool                                         truncated = false;
    };
    std::array<Side, 2> sides;
    sides[0].parent.emplace(u.letters(), std::string());
    sides[0].frontier = {u.letters()};
    sides[1].parent.emplace(v.letters(), std::string());
    sides[1].frontier = {v.letters()};

    auto path_to_root = [](Side const& side, std::string const& root, std::string cur) {
      std::vector<Word> out{Word::trusted(cur)};
      while (cur != root) {
        cur = side.parent.at(cur);
        out.push_back(Word::trusted(cur));
      }
      return out;
    };

    auto reconstruct = [&](std::string const& meet) {
      // u ... meet
      auto forward = path_to_root(sides[0], u.letters(), meet);
      std::reverse(forward.begin(), forward.end());
      // meet ... v
      auto backward = path_to_root(sides[1], v.letters(), meet);
      Derivation d;
      d.words = forward;
      d.words.insert(d.words.end(), backward.begin() + 1, backward.end());
      for (std::size_t i = 0; i + 1 < d.words.size(); ++i) {
        auto step = find_step(d.words[i], d.words[i + 1], sys, alphabet);
        // Every consecutive pair was produced by one rewrite (or its
        // mirror image), found again by the same enumeration.
        d.steps.push_back(std::move(step.value()));
      }
      return d;
    };

    auto visited = [&] { return sides[0].parent.size() + sides[1].parent.size(); };

    while (sides[0].depth + sides[1].depth < bounds.max_depth) {
      std::size_t which = sides[1].frontier.size() < sides[0].frontier.size() ? 1 : 0;
      Side&       here  = sides[which];
      Side const& there = sides[1 - which];

      std::vector<std::string> next;
      std::string              meet;
      bool                     met = false;
      for (auto const& cur : here.frontier) {
        auto status = detail::for_each_rewrite(
            Word::trusted(cur),
            sys,
            bounds.max_len,
            alphabet,
            [&](detail::RewriteMatch const&, std::string_view t) {
              if (visited() >= bounds.max_visited) {
                result.visited_truncated = true;
                return true;
              }
              auto [it, inserted] = here.parent.try_emplace(std::string(t), cur);
              if (inserted) {
                next.push_back(it->first);
                if (there.parent.count(it->first) != 0) {
                  meet = it->first;
                  met  = true;
                  return true;
                }
              }
              return false;
            });
        here.truncated |= status.truncated;
        if (met || result.visited_truncated) {
          break;
        }
      }
      ++here.depth;
      result.visited          = visited();
      result.length_truncated = sides[0].truncated || sides[1].truncated;
      if (met) {
        result.answer     = Derivability::yes;
        result.derivation = reconstruct(meet);
        return result;
      }
      if (result.visited_truncated) {
        result.answer = Derivability::unknown;
        return result;
      }
      if (next.empty()) {
        // This side's closure is complete; if nothing was cut off, v (or u)
        // is not in it.
        result.answer = here.truncated ? Derivability::unknown
                                       : Derivability::no_within_bounds;
        return result;
      }
      std::sort(next.begin(), next.end(), [](auto const& a, auto const& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
      here.frontier = std::move(next);
    }
    result.visited         = visited();
    result.depth_truncated = true;
    result.answer          = Derivability::unknown;
    return result;
  }

  inline DerivabilityResult derivable(Identity const&       id,
                                      IdentitySystem const& sys,
                                      SearchBounds const&   bounds) {
    return derivable(id.lhs, id.rhs, sys, bounds);
  }

}  // namespace monvar
