#pragma once

// Finite monoids given by Cayley tables: construction from zero
// presentations and tables, direct products, opposites, the free left
// regular band monoids, cyclic counters and cyclic groups, and brute-force
// identity checking.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "monvar/errors.hpp"
#include "monvar/words.hpp"

namespace monvar {

  class FiniteMonoid {
   public:
    using element_type = std::uint32_t;

    FiniteMonoid() = default;

    // Does not validate; see validate() and from_table().
    FiniteMonoid(std::vector<std::string>  names,
                 std::vector<element_type> table,
                 element_type              one,
                 std::optional<element_type> zero = std::nullopt)
        : _names(std::move(names)),
          _table(std::move(table)),
          _one(one),
          _zero(zero) {
      if (_table.size() != _names.size() * _names.size()) {
        throw InvalidTable("table has " + std::to_string(_table.size())
                           + " entries, expected "
                           + std::to_string(_names.size() * _names.size()));
      }
      for (auto e : _table) {
        if (e >= _names.size()) {
          throw InvalidTable("table entry out of range");
        }
      }
      if (_one >= _names.size() || (_zero && *_zero >= _names.size())) {
        throw InvalidTable("identity or zero out of range");
      }
      for (element_type i = 0; i < _names.size(); ++i) {
        if (!_index.emplace(_names[i], i).second) {
          throw InvalidTable("duplicate element name '" + _names[i] + "'");
        }
      }
    }

    std::size_t size() const noexcept {
      return _names.size();
    }

    element_type product(element_type a, element_type b) const {
      return _table[static_cast<std::size_t>(a) * _names.size() + b];
    }

    element_type one() const noexcept {
      return _one;
    }

    std::optional<element_type> zero() const noexcept {
      return _zero;
    }

    std::string const& name(element_type a) const {
      return _names.at(a);
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::vector<element_type> const& table() const noexcept {
      return _table;
    }

    std::optional<element_type> find(std::string const& name) const {
      auto it = _index.find(name);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    element_type power(element_type a, std::size_t n) const {
      element_type out = _one;
      for (std::size_t i = 0; i < n; ++i) {
        out = product(out, a);
      }
      return out;
    }

    // Throws InvalidTable naming a witness for the first failure of
    // associativity, neutrality of one, or absorption of zero.
    void validate() const {
      auto const n = static_cast<element_type>(size());
      for (element_type a = 0; a < n; ++a) {
        if (product(_one, a) != a || product(a, _one) != a) {
          throw InvalidTable("identity '" + name(_one) + "' is not neutral for '"
                             + name(a) + "'");
        }
        if (_zero && (product(*_zero, a) != *_zero || product(a, *_zero) != *_zero)) {
          throw InvalidTable("zero '" + name(*_zero) + "' does not absorb '" + name(a)
                             + "'");
        }
      }
      for (element_type a = 0; a < n; ++a) {
        for (element_type b = 0; b < n; ++b) {
          auto ab = product(a, b);
          for (element_type c = 0; c < n; ++c) {
            if (product(ab, c) != product(a, product(b, c))) {
              throw InvalidTable("associativity fails for (" + name(a) + ", " + name(b)
                                 + ", " + name(c) + ")");
            }
          }
        }
      }
    }

    bool operator==(FiniteMonoid const& that) const {
      return _names == that._names && _table == that._table && _one == that._one
             && _zero == that._zero;
    }

   private:
    std::vector<std::string>                      _names;
    std::vector<element_type>                     _table;
    element_type                                  _one = 0;
    std::optional<element_type>                   _zero;
    std::unordered_map<std::string, element_type> _index;
  };

  inline constexpr std::size_t default_element_cap = 10'000;

  ////////////////////////////////////////////////////////////////////////
  // Presentations
  ////////////////////////////////////////////////////////////////////////

  struct Relation {
    Word                lhs;
    std::optional<Word> rhs;  // nullopt: lhs = 0

    bool is_zero() const noexcept {
      return !rhs.has_value();
    }
  };

  struct Presentation {
    std::vector<Letter>   generators;
    std::vector<Relation> relations;

    bool has_zero() const {
      return std::any_of(relations.begin(), relations.end(), [](Relation const& r) {
        return r.is_zero();
      });
    }

    // Text form:
    //   gens: a b
    //   rel: a2 = b2 = bab = 0
    //   rel: ab = ba
    // A chain ending in 0 sets every word in it to zero; otherwise
    // consecutive words are equated.
    static Presentation parse(std::string_view text) {
      Presentation       out;
      bool               have_gens = false;
      std::istringstream in{std::string(text)};
      std::string        line;
      std::size_t        lineno = 0;
      auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r");
        auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
          line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
          continue;
        }
        auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
        if (line.rfind("gens:", 0) == 0) {
          std::istringstream gs(line.substr(5));
          std::string        g;
          while (gs >> g) {
            if (g.size() != 1 || !is_letter(g[0])) {
              throw ParseError(where() + "generator must be a single letter: " + g);
            }
            if (std::find(out.generators.begin(), out.generators.end(), g[0])
                != out.generators.end()) {
              throw ParseError(where() + "duplicate generator " + g);
            }
            out.generators.push_back(g[0]);
          }
          have_gens = true;
        } else if (line.rfind("rel:", 0) == 0) {
          auto parts = detail::split(line.substr(4), '=');
          if (parts.size() < 2) {
            throw ParseError(where() + "relation needs '='");
          }
          for (auto& p : parts) {
            p = trim(p);
          }
          bool to_zero = parts.back() == "0";
          if (to_zero) {
            parts.pop_back();
          }
          std::vector<Word> words;
          for (auto const& p : parts) {
            if (p == "0") {
              throw ParseError(where() + "0 may only end a relation chain");
            }
            words.push_back(Word::parse(p));
          }
          if (to_zero) {
            for (auto const& w : words) {
              out.relations.push_back({w, std::nullopt});
            }
          } else {
            for (std::size_t i = 0; i + 1 < words.size(); ++i) {
              out.relations.push_back({words[i], words[i + 1]});
            }
          }
        } else {
          throw ParseError(where() + "expected 'gens:' or 'rel:'");
        }
      }
      if (!have_gens) {
        throw ParseError("presentation has no 'gens:' line");
      }
      out.check();
      return out;
    }

    // Relation words may only use declared generators.
    void check() const {
      LetterSet gens;
      for (Letter g : generators) {
        gens.insert(g);
      }
      for (auto const& r : relations) {
        auto bad = content(r.lhs) - gens;
        if (r.rhs) {
          bad = bad | (content(*r.rhs) - gens);
        }
        if (!bad.empty()) {
          throw ParseError("relation uses undeclared generator(s) " + bad.to_string());
        }
      }
    }
  };

  namespace detail {
    inline bool contains_factor(std::string const& w, std::vector<std::string> const& fs) {
      return std::any_of(fs.begin(), fs.end(), [&](std::string const& f) {
        return w.find(f) != std::string::npos;
      });
    }
  }  // namespace detail

  // Elements are the words avoiding every zero relator and every left side
  // of the shortlex-oriented general relations, plus 1 (the empty word) and
  // 0 when some relation has zero right side. Products are re-normalized.
  inline FiniteMonoid from_presentation(Presentation const& p,
                                        std::size_t cap = default_element_cap) {
    if (cap < 1) {
      throw DomainError("element cap must be positive");
    }
    p.check();
    std::vector<std::string>                         zero_factors;
    std::vector<std::pair<std::string, std::string>> rules;
    for (auto const& r : p.relations) {
      if (r.is_zero()) {
        zero_factors.push_back(r.lhs.letters());
      } else if (r.lhs != *r.rhs) {
        Word big = r.lhs, small = *r.rhs;
        if (shortlex_less(big, small)) {
          std::swap(big, small);
        }
        rules.emplace_back(big.letters(), small.letters());
      }
    }
    if (std::any_of(zero_factors.begin(), zero_factors.end(), [](auto const& f) {
          return f.empty();
        })) {
      throw UnsupportedPresentation("relation 1 = 0 collapses the monoid");
    }
    std::vector<std::string> lhs_factors;
    for (auto const& r : rules) {
      lhs_factors.push_back(r.first);
    }

    // Shortlex-decreasing rewriting always terminates.
    auto normalize = [&](std::string w) -> std::optional<std::string> {
      while (true) {
        if (detail::contains_factor(w, zero_factors)) {
          return std::nullopt;
        }
        bool changed = false;
        for (auto const& [from, to] : rules) {
          if (auto pos = w.find(from); pos != std::string::npos) {
            w.replace(pos, from.size(), to);
            changed = true;
            break;
          }
        }
        if (!changed) {
          return w;
        }
      }
    };

    std::vector<std::string> forms{""};
    for (std::size_t i = 0; i < forms.size(); ++i) {
      for (Letter g : p.generators) {
        std::string w = forms[i] + g;
        if (detail::contains_factor(w, zero_factors)
            || detail::contains_factor(w, lhs_factors)) {
          continue;
        }
        forms.push_back(std::move(w));
        if (forms.size() > cap) {
          throw LikelyInfinite("more than " + std::to_string(cap)
                               + " normal forms; the presentation is likely infinite");
        }
      }
    }

    bool const has_zero = p.has_zero();
    using E             = FiniteMonoid::element_type;
    std::unordered_map<std::string, E> index;
    std::vector<std::string>           names;
    for (auto const& f : forms) {
      index.emplace(f, static_cast<E>(names.size()));
      names.push_back(f.empty() ? "1" : Word::trusted(f).to_string());
    }
    std::optional<E> zero;
    if (has_zero) {
      zero = static_cast<E>(names.size());
      names.push_back("0");
    }
    auto const     n = names.size();
    std::vector<E> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        E r;
        if (zero && (a == *zero || b == *zero)) {
          r = *zero;
        } else {
          auto w = normalize(forms[a] + forms[b]);
          if (!w) {
            r = *zero;
          } else {
            auto it = index.find(*w);
            if (it == index.end()) {
              throw UnsupportedPresentation("normal form " + *w + " was not enumerated");
            }
            r = it->second;
          }
        }
        table[a * n + b] = r;
      }
    }
    FiniteMonoid m(std::move(names), std::move(table), 0, zero);
    try {
      m.validate();
    } catch (InvalidTable const& e) {
      throw UnsupportedPresentation(
          std::string("oriented relations are not confluent: ") + e.what());
    }
    return m;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tables
  ////////////////////////////////////////////////////////////////////////

  inline FiniteMonoid from_table(std::vector<std::string> const&              names,
                                 std::vector<std::vector<std::string>> const& rows,
                                 std::string const&                           identity_name,
                                 std::optional<std::string> const& zero_name = std::nullopt) {
    using E = FiniteMonoid::element_type;
    std::unordered_map<std::string, E> index;
    for (E i = 0; i < names.size(); ++i) {
      if (!index.emplace(names[i], i).second) {
        throw InvalidTable("duplicate element name '" + names[i] + "'");
      }
    }
    auto lookup = [&](std::string const& s) {
      auto it = index.find(s);
      if (it == index.end()) {
        throw InvalidTable("unknown element '" + s + "'");
      }
      return it->second;
    };
    if (rows.size() != names.size()) {
      throw InvalidTable("table is not square");
    }
    std::vector<E> table;
    for (auto const& row : rows) {
      if (row.size() != names.size()) {
        throw InvalidTable("table is not square");
      }
      for (auto const& s : row) {
        table.push_back(lookup(s));
      }
    }
    std::optional<E> zero;
    if (zero_name) {
      zero = lookup(*zero_name);
    }
    FiniteMonoid m(names, std::move(table), lookup(identity_name), zero);
    m.validate();
    return m;
  }

  // First line: element names; then n rows of n names; then "one: <name>"
  // and optionally "zero: <name>".
  inline FiniteMonoid parse_table(std::string_view text) {
    std::istringstream                    in{std::string(text)};
    std::string                           line;
    std::vector<std::vector<std::string>> lines;
    std::optional<std::string>            one, zero;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream       ls(line);
      std::vector<std::string> toks;
      std::string              t;
      while (ls >> t) {
        toks.push_back(t);
      }
      if (toks.empty()) {
        continue;
      }
      if (toks[0] == "one:" || toks[0] == "zero:") {
        if (toks.size() != 2) {
          throw ParseError("expected '" + toks[0] + " <name>'");
        }
        (toks[0] == "one:" ? one : zero) = toks[1];
        continue;
      }
      lines.push_back(std::move(toks));
    }
    if (lines.empty()) {
      throw ParseError("table file has no element line");
    }
    if (!one) {
      throw ParseError("table file has no 'one:' line");
    }
    std::vector<std::string>              names(lines[0]);
    std::vector<std::vector<std::string>> rows(lines.begin() + 1, lines.end());
    return from_table(names, rows, *one, zero);
  }

  inline Presentation load_presentation(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open presentation file " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return Presentation::parse(buf.str());
  }

  inline FiniteMonoid load_table(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open table file " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_table(buf.str());
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  inline FiniteMonoid direct_product(FiniteMonoid const& m, FiniteMonoid const& n) {
    using E          = FiniteMonoid::element_type;
    auto const       sm = m.size(), sn = n.size(), s = sm * sn;
    std::vector<std::string> names;
    names.reserve(s);
    for (E a = 0; a < sm; ++a) {
      for (E b = 0; b < sn; ++b) {
        names.push_back("(" + m.name(a) + "," + n.name(b) + ")");
      }
    }
    std::vector<E> table(s * s);
    for (E a1 = 0; a1 < sm; ++a1) {
      for (E b1 = 0; b1 < sn; ++b1) {
        auto x = a1 * sn + b1;
        for (E a2 = 0; a2 < sm; ++a2) {
          for (E b2 = 0; b2 < sn; ++b2) {
            auto y            = a2 * sn + b2;
            table[x * s + y] = static_cast<E>(m.product(a1, a2) * sn + n.product(b1, b2));
          }
        }
      }
    }
    std::optional<E> zero;
    if (m.zero() && n.zero()) {
      zero = static_cast<E>(*m.zero() * sn + *n.zero());
    }
    return FiniteMonoid(std::move(names),
                        std::move(table),
                        static_cast<E>(m.one() * sn + n.one()),
                        zero);
  }

  // Same elements, reversed multiplication.
  inline FiniteMonoid opposite(FiniteMonoid const& m) {
    using E      = FiniteMonoid::element_type;
    auto const n = m.size();
    std::vector<E> table(n * n);
    for (E a = 0; a < n; ++a) {
      for (E b = 0; b < n; ++b) {
        table[a * n + b] = m.product(b, a);
      }
    }
    return FiniteMonoid(m.names(), std::move(table), m.one(), m.zero());
  }

  inline FiniteMonoid trivial_monoid() {
    return FiniteMonoid({"1"}, {0}, 0, 0);
  }

  // {1, e} with e·e = e.
  inline FiniteMonoid semilattice2() {
    return FiniteMonoid({"1", "e"}, {0, 1, 1, 1}, 0, 1);
  }

  // Words over k letters with pairwise distinct letters; u·v = ini(uv).
  // The element count is Σ_{j≤k} k!/(k-j)!, so k = 7, 8 exceed the default
  // cap.
  inline FiniteMonoid free_lrb_monoid(std::size_t k, std::size_t cap = default_element_cap) {
    if (k < 1 || k > 8) {
      throw DomainError("free_lrb_monoid: k must be in 1..8");
    }
    std::size_t count = 1, falling = 1;
    for (std::size_t j = 1; j <= k; ++j) {
      falling *= k - j + 1;
      count += falling;
    }
    if (count > cap) {
      throw ResourceLimit("free_lrb_monoid(" + std::to_string(k) + ") has "
                          + std::to_string(count) + " elements, above the cap of "
                          + std::to_string(cap));
    }
    std::vector<std::string> forms{""};
    for (std::size_t i = 0; i < forms.size(); ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        Letter a = letter_at(j);
        if (forms[i].find(a) == std::string::npos) {
          forms.push_back(forms[i] + a);
        }
      }
    }
    using E = FiniteMonoid::element_type;
    std::unordered_map<std::string, E> index;
    std::vector<std::string>           names;
    for (auto const& f : forms) {
      index.emplace(f, static_cast<E>(names.size()));
      names.push_back(f.empty() ? "1" : f);
    }
    auto const     n = forms.size();
    std::vector<E> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = index.at(initial_part(Word::trusted(forms[a] + forms[b])).letters());
      }
    }
    return FiniteMonoid(std::move(names), std::move(table), 0);
  }

  // ⟨a, 1 | aⁿ = 0⟩ = {1, a, ..., a^{n-1}, 0}.
  inline FiniteMonoid cyclic_counter(std::size_t n) {
    if (n < 1) {
      throw DomainError("cyclic_counter: n must be positive");
    }
    using E = FiniteMonoid::element_type;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(i == 0 ? "1" : Word::trusted(std::string(i, 'a')).to_string());
    }
    names.push_back("0");
    auto const     s = n + 1;
    std::vector<E> table(s * s);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        // exponent n stands for 0
        table[i * s + j] = static_cast<E>(std::min(i + j, n));
      }
    }
    return FiniteMonoid(std::move(names), std::move(table), 0, static_cast<E>(n));
  }

  // Z/mZ written multiplicatively: {1, a, ..., a^{m-1}}.
  inline FiniteMonoid cyclic_group(std::size_t m) {
    if (m < 1) {
      throw DomainError("cyclic_group: m must be positive");
    }
    using E = FiniteMonoid::element_type;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) {
      names.push_back(i == 0 ? "1" : Word::trusted(std::string(i, 'a')).to_string());
    }
    std::vector<E> table(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        table[i * m + j] = static_cast<E>((i + j) % m);
      }
    }
    std::optional<E> zero;
    if (m == 1) {
      zero = 0;
    }
    return FiniteMonoid(std::move(names), std::move(table), 0, zero);
  }

  ////////////////////////////////////////////////////////////////////////
  // Identity checking
  ////////////////////////////////////////////////////////////////////////

  // Letter ↦ element, ordered by letter.
  using Assignment = std::vector<std::pair<Letter, FiniteMonoid::element_type>>;

  inline std::string to_string(Assignment const& a, FiniteMonoid const& m) {
    std::string out = "{";
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i != 0) {
        out += ", ";
      }
      out += a[i].first;
      out += "->";
      out += m.name(a[i].second);
    }
    return out + "}";
  }

  struct SatisfactionOptions {
    // Lift the refusal of identities with more than 6 letters against
    // monoids with more than 20 elements.
    bool allow_large = false;
  };

  inline FiniteMonoid::element_type evaluate(FiniteMonoid const& m,
                                             Word const&         w,
                                             Assignment const&   a) {
    std::array<FiniteMonoid::element_type, alphabet_size> value{};
    for (auto const& [x, e] : a) {
      value[letter_index(x)] = e;
    }
    auto out = m.one();
    for (Letter x : w) {
      out = m.product(out, value[letter_index(x)]);
    }
    return out;
  }

  // A witness assignment on which the two sides differ, in odometer order
  // (last letter varies fastest), or nullopt.
  inline std::optional<Assignment> find_counterexample(FiniteMonoid const&        m,
                                                       Identity const&            id,
                                                       SatisfactionOptions const& opts = {}) {
    using E      = FiniteMonoid::element_type;
    auto letters = (content(id.lhs) | content(id.rhs)).letters();
    if (letters.size() > 6 && m.size() > 20 && !opts.allow_large) {
      throw ResourceLimit("identity with " + std::to_string(letters.size())
                          + " letters against a monoid with " + std::to_string(m.size())
                          + " elements; pass the override to check anyway");
    }
    if (id.lhs == id.rhs) {
      return std::nullopt;
    }
    // Compile each side to slot indices.
    std::array<std::size_t, alphabet_size> slot{};
    for (std::size_t i = 0; i < letters.size(); ++i) {
      slot[letter_index(letters[i])] = i;
    }
    auto compile = [&](Word const& w) {
      std::vector<std::size_t> out;
      for (Letter x : w) {
        out.push_back(slot[letter_index(x)]);
      }
      return out;
    };
    auto const     lhs = compile(id.lhs), rhs = compile(id.rhs);
    std::vector<E> value(letters.size(), 0);
    auto eval = [&](std::vector<std::size_t> const& w) {
      E out = m.one();
      for (auto s : w) {
        out = m.product(out, value[s]);
      }
      return out;
    };
    auto const n = static_cast<E>(m.size());
    while (true) {
      if (eval(lhs) != eval(rhs)) {
        Assignment a;
        for (std::size_t i = 0; i < letters.size(); ++i) {
          a.emplace_back(letters[i], value[i]);
        }
        return a;
      }
      std::size_t i = letters.size();
      while (i > 0) {
        --i;
        if (++value[i] < n) {
          break;
        }
        value[i] = 0;
        if (i == 0) {
          return std::nullopt;
        }
      }
      if (letters.empty()) {
        return std::nullopt;
      }
    }
  }

  inline bool satisfies_identity(FiniteMonoid const&        m,
                                 Identity const&            id,
                                 SatisfactionOptions const& opts = {}) {
    return !find_counterexample(m, id, opts).has_value();
  }

  ////////////////////////////////////////////////////////////////////////
  // Structure
  ////////////////////////////////////////////////////////////////////////

  struct IndexPeriod {
    std::size_t index  = 1;
    std::size_t period = 1;

    bool operator==(IndexPeriod const&) const = default;
  };

  // Least (n, m) with aⁿ = aⁿ⁺ᵐ.
  inline IndexPeriod element_index_period(FiniteMonoid const&         m,
                                          FiniteMonoid::element_type a) {
    // powers[k-1] = a^k
    std::vector<FiniteMonoid::element_type>                  powers;
    std::map<FiniteMonoid::element_type, std::size_t>       first;
    auto                                                     cur = a;
    for (std::size_t k = 1;; ++k) {
      auto [it, inserted] = first.emplace(cur, k);
      if (!inserted) {
        return {it->second, k - it->second};
      }
      cur = m.product(cur, a);
    }
  }

  // Least (n, m) with xⁿ = xⁿ⁺ᵐ for every x: the largest element index and
  // the lcm of element periods.
  inline IndexPeriod monoid_index_period(FiniteMonoid const& m) {
    IndexPeriod out{1, 1};
    for (FiniteMonoid::element_type a = 0; a < m.size(); ++a) {
      auto ip    = element_index_period(m, a);
      out.index  = std::max(out.index, ip.index);
      out.period = std::lcm(out.period, ip.period);
    }
    return out;
  }

  // Every x has x^{k+1} = x for some k ≥ 1, i.e. every element index is 1.
  inline bool is_completely_regular(FiniteMonoid const& m) {
    for (FiniteMonoid::element_type a = 0; a < m.size(); ++a) {
      if (element_index_period(m, a).index != 1) {
        return false;
      }
    }
    return true;
  }

  inline bool is_commutative(FiniteMonoid const& m) {
    for (FiniteMonoid::element_type a = 0; a < m.size(); ++a) {
      for (FiniteMonoid::element_type b = a + 1; b < m.size(); ++b) {
        if (m.product(a, b) != m.product(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace monvar
