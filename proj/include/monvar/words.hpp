#pragma once

// Words over a 26-letter alphabet, identities, substitutions, and the
// syntactic operations on them: content, occurrence counts, deletion of
// letters, initial parts, reversal, and the embedding quasi-order.

#include <algorithm>
#include <array>
#include <bitset>
#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monvar/errors.hpp"

namespace monvar {

  using Letter = char;

  inline constexpr std::size_t alphabet_size = 26;

  constexpr bool is_letter(char c) noexcept {
    return c >= 'a' && c <= 'z';
  }

  constexpr std::size_t letter_index(Letter a) noexcept {
    return static_cast<std::size_t>(a - 'a');
  }

  constexpr Letter letter_at(std::size_t i) noexcept {
    return static_cast<Letter>('a' + i);
  }

  // A subset of the alphabet, iterated in alphabetical order.
  class LetterSet {
   public:
    LetterSet() = default;

    LetterSet(std::initializer_list<Letter> letters) {
      for (Letter a : letters) {
        insert(a);
      }
    }

    void insert(Letter a) {
      _bits.set(letter_index(a));
    }

    void erase(Letter a) {
      _bits.reset(letter_index(a));
    }

    bool contains(Letter a) const {
      return is_letter(a) && _bits.test(letter_index(a));
    }

    std::size_t size() const noexcept {
      return _bits.count();
    }

    bool empty() const noexcept {
      return _bits.none();
    }

    std::vector<Letter> letters() const {
      std::vector<Letter> out;
      for (std::size_t i = 0; i < alphabet_size; ++i) {
        if (_bits.test(i)) {
          out.push_back(letter_at(i));
        }
      }
      return out;
    }

    LetterSet operator|(LetterSet const& that) const {
      LetterSet out;
      out._bits = _bits | that._bits;
      return out;
    }

    LetterSet operator&(LetterSet const& that) const {
      LetterSet out;
      out._bits = _bits & that._bits;
      return out;
    }

    // Set difference.
    LetterSet operator-(LetterSet const& that) const {
      LetterSet out;
      out._bits = _bits & ~that._bits;
      return out;
    }

    bool operator==(LetterSet const&) const = default;

    std::string to_string() const {
      std::string out = "{";
      for (Letter a : letters()) {
        if (out.size() > 1) {
          out += ',';
        }
        out += a;
      }
      return out + "}";
    }

   private:
    std::bitset<alphabet_size> _bits;
  };

  // An element of the free monoid. Structural equality; the empty word is
  // the identity of concatenation and prints as "1".
  class Word {
   public:
    Word() = default;

    // Raw letters, no exponents: Word("xyx").
    explicit Word(std::string_view letters) : _letters(letters) {
      for (char c : _letters) {
        if (!is_letter(c)) {
          throw ParseError(std::string("not a letter: '") + c + "'");
        }
      }
    }

    // No validation; for letters already known to be in range.
    static Word trusted(std::string letters) {
      Word out;
      out._letters = std::move(letters);
      return out;
    }

    static Word letter(Letter a) {
      return Word(std::string_view(&a, 1));
    }

    // Parses the canonical grammar  word := "1" | (letter digits?)+ ,
    // ignoring whitespace; an optional '^' may precede an exponent.
    static Word parse(std::string_view text);

    // Canonical form: maximal runs as letter followed by exponent (if > 1).
    std::string to_string() const;

    std::string const& letters() const noexcept {
      return _letters;
    }

    std::size_t size() const noexcept {
      return _letters.size();
    }

    bool empty() const noexcept {
      return _letters.empty();
    }

    Letter operator[](std::size_t i) const {
      return _letters[i];
    }

    auto begin() const noexcept {
      return _letters.begin();
    }

    auto end() const noexcept {
      return _letters.end();
    }

    Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
      Word out;
      out._letters = _letters.substr(pos, len);
      return out;
    }

    Word& operator+=(Word const& that) {
      _letters += that._letters;
      return *this;
    }

    friend Word operator+(Word lhs, Word const& rhs) {
      lhs += rhs;
      return lhs;
    }

    Word power(std::size_t n) const {
      Word out;
      out._letters.reserve(_letters.size() * n);
      for (std::size_t i = 0; i < n; ++i) {
        out._letters += _letters;
      }
      return out;
    }

    bool operator==(Word const&) const = default;
    // Plain lexicographic order; see shortlex_less for length-first order.
    std::strong_ordering operator<=>(Word const&) const = default;

   private:
    std::string _letters;
  };

  inline std::ostream& operator<<(std::ostream& os, Word const& w) {
    return os << w.to_string();
  }

  // Length first, then lexicographic.
  inline bool shortlex_less(Word const& u, Word const& v) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return u.letters() < v.letters();
  }

  struct ShortlexLess {
    bool operator()(Word const& u, Word const& v) const {
      return shortlex_less(u, v);
    }
  };

  inline Word Word::parse(std::string_view text) {
    std::string compact;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        compact += c;
      }
    }
    if (compact.empty()) {
      throw ParseError("empty word text (use 1 for the empty word)");
    }
    if (compact == "1") {
      return Word();
    }
    Word out;
    std::size_t i = 0;
    while (i < compact.size()) {
      char c = compact[i];
      if (!is_letter(c)) {
        throw ParseError("unexpected character '" + std::string(1, c)
                         + "' in word \"" + std::string(text) + "\"");
      }
      ++i;
      bool caret = false;
      if (i < compact.size() && compact[i] == '^') {
        caret = true;
        ++i;
      }
      std::size_t exponent = 1;
      if (i < compact.size() && std::isdigit(static_cast<unsigned char>(compact[i]))) {
        exponent = 0;
        while (i < compact.size()
               && std::isdigit(static_cast<unsigned char>(compact[i]))) {
          exponent = exponent * 10 + static_cast<std::size_t>(compact[i] - '0');
          if (exponent > 100000) {
            throw ParseError("exponent too large in \"" + std::string(text) + "\"");
          }
          ++i;
        }
        if (exponent == 0) {
          throw ParseError("exponent must be positive in \"" + std::string(text)
                           + "\"");
        }
      } else if (caret) {
        throw ParseError("'^' without exponent in \"" + std::string(text) + "\"");
      }
      out._letters.append(exponent, c);
    }
    return out;
  }

  inline std::string Word::to_string() const {
    if (_letters.empty()) {
      return "1";
    }
    std::string out;
    std::size_t i = 0;
    while (i < _letters.size()) {
      std::size_t j = i;
      while (j < _letters.size() && _letters[j] == _letters[i]) {
        ++j;
      }
      out += _letters[i];
      if (j - i > 1) {
        out += std::to_string(j - i);
      }
      i = j;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Identity
  ////////////////////////////////////////////////////////////////////////

  struct Identity {
    Word lhs;
    Word rhs;

    Identity() = default;
    Identity(Word l, Word r) : lhs(std::move(l)), rhs(std::move(r)) {}

    // "u = v"; "≈" is accepted in place of "=".
    static Identity parse(std::string_view text);

    bool is_trivial() const {
      return lhs == rhs;
    }

    Identity reversed_sides() const {
      return Identity(rhs, lhs);
    }

    // Same identity up to swapping sides.
    bool same_as(Identity const& that) const {
      return (lhs == that.lhs && rhs == that.rhs)
             || (lhs == that.rhs && rhs == that.lhs);
    }

    std::string to_string() const {
      return lhs.to_string() + "=" + rhs.to_string();
    }

    bool operator==(Identity const&) const = default;
  };

  inline std::ostream& operator<<(std::ostream& os, Identity const& id) {
    return os << id.to_string();
  }

  namespace detail {
    inline std::string replace_all(std::string s,
                                   std::string_view from,
                                   std::string_view to) {
      std::size_t pos = 0;
      while ((pos = s.find(from, pos)) != std::string::npos) {
        s.replace(pos, from.size(), to);
        pos += to.size();
      }
      return s;
    }

    inline std::vector<std::string> split(std::string_view s, char sep) {
      std::vector<std::string> out;
      std::string cur;
      for (char c : s) {
        if (c == sep) {
          out.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      out.push_back(cur);
      return out;
    }
  }  // namespace detail

  // Parses "u = v = w ..." into the consecutive identities u=v, v=w, ...
  inline std::vector<Identity> parse_identity_chain(std::string_view text) {
    std::string s = detail::replace_all(std::string(text), "≈", "=");
    auto parts    = detail::split(s, '=');
    if (parts.size() < 2) {
      throw ParseError("identity needs '=': \"" + std::string(text) + "\"");
    }
    std::vector<Word> words;
    for (auto const& p : parts) {
      words.push_back(Word::parse(p));
    }
    std::vector<Identity> out;
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
      out.emplace_back(words[i], words[i + 1]);
    }
    return out;
  }

  inline Identity Identity::parse(std::string_view text) {
    auto chain = parse_identity_chain(text);
    if (chain.size() != 1) {
      throw ParseError("expected exactly one '=' in \"" + std::string(text) + "\"");
    }
    return chain.front();
  }

  ////////////////////////////////////////////////////////////////////////
  // Substitution
  ////////////////////////////////////////////////////////////////////////

  // monoid: endomorphism of the free monoid, empty images allowed.
  // semigroup: endomorphism of the free semigroup, every used image nonempty.
  enum class SubstitutionKind { monoid, semigroup };

  class Substitution {
   public:
    explicit Substitution(SubstitutionKind kind = SubstitutionKind::monoid)
        : _kind(kind) {}

    Substitution& set(Letter a, Word image) {
      if (!is_letter(a)) {
        throw DomainError(std::string("not a letter: '") + a + "'");
      }
      _images[letter_index(a)] = std::move(image);
      return *this;
    }

    SubstitutionKind kind() const noexcept {
      return _kind;
    }

    // Letters without an explicit image map to themselves.
    Word image(Letter a) const {
      auto const& img = _images[letter_index(a)];
      return img ? *img : Word::letter(a);
    }

    bool is_explicit(Letter a) const {
      return _images[letter_index(a)].has_value();
    }

    std::string to_string() const {
      std::string out;
      for (std::size_t i = 0; i < alphabet_size; ++i) {
        if (_images[i]) {
          if (!out.empty()) {
            out += ", ";
          }
          out += letter_at(i);
          out += "->";
          out += _images[i]->to_string();
        }
      }
      return "{" + out + "}";
    }

    bool operator==(Substitution const&) const = default;

   private:
    std::array<std::optional<Word>, alphabet_size> _images;
    SubstitutionKind _kind;
  };

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  inline LetterSet content(Word const& w) {
    LetterSet out;
    for (Letter a : w) {
      out.insert(a);
    }
    return out;
  }

  inline std::size_t occ(Word const& w, Letter a) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), a));
  }

  // Occurrence vector indexed by letter.
  inline std::array<std::size_t, alphabet_size> occurrences(Word const& w) {
    std::array<std::size_t, alphabet_size> out{};
    for (Letter a : w) {
      ++out[letter_index(a)];
    }
    return out;
  }

  // The subsequence of w avoiding every letter of `letters`.
  inline Word delete_letters(Word const& w, LetterSet const& letters) {
    std::string out;
    for (Letter a : w) {
      if (!letters.contains(a)) {
        out += a;
      }
    }
    return Word::trusted(std::move(out));
  }

  // Keeps the first occurrence of each letter.
  inline Word initial_part(Word const& w) {
    LetterSet seen;
    std::string out;
    for (Letter a : w) {
      if (!seen.contains(a)) {
        seen.insert(a);
        out += a;
      }
    }
    return Word::trusted(std::move(out));
  }

  inline Word reverse(Word const& w) {
    return Word::trusted(std::string(w.letters().rbegin(), w.letters().rend()));
  }

  inline Identity reverse(Identity const& id) {
    return Identity(reverse(id.lhs), reverse(id.rhs));
  }

  inline Word apply_substitution(Substitution const& xi, Word const& w) {
    std::string out;
    for (Letter a : w) {
      Word img = xi.image(a);
      if (img.empty() && xi.kind() == SubstitutionKind::semigroup) {
        throw KindViolation(std::string("semigroup substitution maps used letter '")
                            + a + "' to the empty word");
      }
      out += img.letters();
    }
    return Word::trusted(std::move(out));
  }

  namespace detail {
    // Positions into the text word for each bound pattern letter.
    struct Span {
      std::size_t start = 0;
      std::size_t len   = std::string::npos;  // npos = unbound

      bool bound() const noexcept {
        return len != std::string::npos;
      }
    };

    // Matches pattern[k..] against text starting at pos; every letter image
    // nonempty. Any end position is accepted.
    inline bool embed_from(std::string_view pattern,
                           std::size_t      k,
                           std::string_view text,
                           std::size_t      pos,
                           std::array<Span, alphabet_size>& images) {
      if (k == pattern.size()) {
        return true;
      }
      Span& s = images[letter_index(pattern[k])];
      if (s.bound()) {
        if (pos + s.len > text.size()
            || text.compare(pos, s.len, text.substr(s.start, s.len)) != 0) {
          return false;
        }
        return embed_from(pattern, k + 1, text, pos + s.len, images);
      }
      for (std::size_t len = 1; pos + len <= text.size(); ++len) {
        s = Span{pos, len};
        if (embed_from(pattern, k + 1, text, pos + len, images)) {
          return true;
        }
      }
      s = Span{};
      return false;
    }
  }  // namespace detail

  // u ≼ v: v = a·ξ(u)·b for words a, b and a semigroup-kind substitution ξ.
  // Exhaustive backtracking over factorizations of v.
  inline bool embeds(Word const& u, Word const& v) {
    if (u.empty()) {
      throw DomainError("embeds: the left word must be nonempty");
    }
    if (u.size() > v.size()) {
      return false;
    }
    for (std::size_t start = 0; start + u.size() <= v.size(); ++start) {
      std::array<detail::Span, alphabet_size> images{};
      if (detail::embed_from(u.letters(), 0, v.letters(), start, images)) {
        return true;
      }
    }
    return false;
  }

}  // namespace monvar

template <>
struct std::hash<monvar::Word> {
  std::size_t operator()(monvar::Word const& w) const noexcept {
    return std::hash<std::string>{}(w.letters());
  }
};
