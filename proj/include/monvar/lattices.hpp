#pragma once

// Finite lattices stored as full order matrices with precomputed meet and
// join tables, exhaustive tests for modular, cancellable and costandard
// elements, partition lattices, and the built-in fixtures.

#include <algorithm>
#include <array>
#include <cstddef>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "monvar/errors.hpp"

namespace monvar {

  class FiniteLattice {
   public:
    using element_type = std::size_t;

    FiniteLattice() = default;

    // leq is row-major: leq[a * n + b] is a ≤ b. Validates that leq is a
    // partial order with all meets and joins.
    static FiniteLattice from_order(std::vector<std::string> names, std::vector<char> leq) {
      FiniteLattice l;
      l._names     = std::move(names);
      l._leq       = std::move(leq);
      auto const n = l._names.size();
      if (n == 0) {
        throw NotALattice("a lattice needs at least one element");
      }
      if (l._leq.size() != n * n) {
        throw NotALattice("order matrix has the wrong size");
      }
      for (element_type i = 0; i < n; ++i) {
        if (!l._index.emplace(l._names[i], i).second) {
          throw NotALattice("duplicate element name '" + l._names[i] + "'");
        }
      }
      for (element_type a = 0; a < n; ++a) {
        if (!l.leq(a, a)) {
          throw NotALattice("order is not reflexive at " + l._names[a]);
        }
        for (element_type b = 0; b < n; ++b) {
          if (a != b && l.leq(a, b) && l.leq(b, a)) {
            throw NotALattice("cycle through " + l._names[a] + " and " + l._names[b]);
          }
          for (element_type c = 0; c < n; ++c) {
            if (l.leq(a, b) && l.leq(b, c) && !l.leq(a, c)) {
              throw NotALattice("order is not transitive at " + l._names[a] + ", "
                                + l._names[b] + ", " + l._names[c]);
            }
          }
        }
      }
      l._meet.assign(n * n, 0);
      l._join.assign(n * n, 0);
      for (element_type a = 0; a < n; ++a) {
        for (element_type b = a; b < n; ++b) {
          auto m = l.extremal_bound(a, b, /*upper=*/false);
          auto j = l.extremal_bound(a, b, /*upper=*/true);
          l._meet[a * n + b] = l._meet[b * n + a] = m;
          l._join[a * n + b] = l._join[b * n + a] = j;
        }
      }
      return l;
    }

    // Cover pairs (lower, upper); the order is their reflexive-transitive
    // closure.
    static FiniteLattice from_covers(std::vector<std::string> const&                        names,
                                     std::vector<std::pair<std::string, std::string>> const& covers) {
      auto const                                   n = names.size();
      std::unordered_map<std::string, std::size_t> index;
      for (std::size_t i = 0; i < n; ++i) {
        if (!index.emplace(names[i], i).second) {
          throw NotALattice("duplicate element name '" + names[i] + "'");
        }
      }
      std::vector<char> leq(n * n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        leq[i * n + i] = 1;
      }
      for (auto const& [lo, hi] : covers) {
        auto a = index.find(lo), b = index.find(hi);
        if (a == index.end() || b == index.end()) {
          throw NotALattice("cover " + lo + " < " + hi + " names an unknown element");
        }
        if (a->second == b->second) {
          throw NotALattice("cycle: " + lo + " < " + hi);
        }
        leq[a->second * n + b->second] = 1;
      }
      // Warshall closure
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
          if (!leq[i * n + k]) {
            continue;
          }
          for (std::size_t j = 0; j < n; ++j) {
            if (leq[k * n + j]) {
              leq[i * n + j] = 1;
            }
          }
        }
      }
      return from_order(names, std::move(leq));
    }

    std::size_t size() const noexcept {
      return _names.size();
    }

    bool leq(element_type a, element_type b) const {
      return _leq[a * size() + b] != 0;
    }

    element_type meet(element_type a, element_type b) const {
      return _meet[a * size() + b];
    }

    element_type join(element_type a, element_type b) const {
      return _join[a * size() + b];
    }

    std::string const& name(element_type a) const {
      return _names.at(a);
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::optional<element_type> find(std::string const& name) const {
      auto it = _index.find(name);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    element_type bottom() const {
      element_type out = 0;
      for (element_type a = 1; a < size(); ++a) {
        out = meet(out, a);
      }
      return out;
    }

    element_type top() const {
      element_type out = 0;
      for (element_type a = 1; a < size(); ++a) {
        out = join(out, a);
      }
      return out;
    }

    // Cover pairs in index order.
    std::vector<std::pair<element_type, element_type>> covers() const {
      std::vector<std::pair<element_type, element_type>> out;
      for (element_type a = 0; a < size(); ++a) {
        for (element_type b = 0; b < size(); ++b) {
          if (a == b || !leq(a, b)) {
            continue;
          }
          bool cover = true;
          for (element_type c = 0; c < size() && cover; ++c) {
            cover = !(c != a && c != b && leq(a, c) && leq(c, b));
          }
          if (cover) {
            out.emplace_back(a, b);
          }
        }
      }
      return out;
    }

   private:
    element_type extremal_bound(element_type a, element_type b, bool upper) const {
      auto const                n = size();
      std::vector<element_type> bounds;
      for (element_type c = 0; c < n; ++c) {
        if (upper ? (leq(a, c) && leq(b, c)) : (leq(c, a) && leq(c, b))) {
          bounds.push_back(c);
        }
      }
      for (auto c : bounds) {
        bool extremal = std::all_of(bounds.begin(), bounds.end(), [&](element_type d) {
          return upper ? leq(c, d) : leq(d, c);
        });
        if (extremal) {
          return c;
        }
      }
      throw NotALattice("no unique " + std::string(upper ? "join" : "meet") + " for ("
                        + _names[a] + ", " + _names[b] + ")");
    }

    std::vector<std::string>                       _names;
    std::vector<char>                              _leq;
    std::vector<element_type>                      _meet;
    std::vector<element_type>                      _join;
    std::unordered_map<std::string, element_type> _index;
  };

  ////////////////////////////////////////////////////////////////////////
  // Special elements
  ////////////////////////////////////////////////////////////////////////

  // A failing pair (y, z) for a property of x.
  using PairWitness = std::pair<FiniteLattice::element_type, FiniteLattice::element_type>;

  // y ≤ z → (x∧z)∨y = (x∨y)∧z
  inline std::optional<PairWitness> modular_element_witness(FiniteLattice const&       l,
                                                            FiniteLattice::element_type x) {
    for (std::size_t y = 0; y < l.size(); ++y) {
      for (std::size_t z = 0; z < l.size(); ++z) {
        if (l.leq(y, z) && l.join(l.meet(x, z), y) != l.meet(l.join(x, y), z)) {
          return PairWitness{y, z};
        }
      }
    }
    return std::nullopt;
  }

  // x∨y = x∨z & x∧y = x∧z → y = z
  inline std::optional<PairWitness> cancellable_element_witness(FiniteLattice const&       l,
                                                                FiniteLattice::element_type x) {
    for (std::size_t y = 0; y < l.size(); ++y) {
      for (std::size_t z = y + 1; z < l.size(); ++z) {
        if (l.join(x, y) == l.join(x, z) && l.meet(x, y) == l.meet(x, z)) {
          return PairWitness{y, z};
        }
      }
    }
    return std::nullopt;
  }

  // (x∧z)∨y = (x∨y)∧(z∨y)
  inline std::optional<PairWitness> costandard_element_witness(FiniteLattice const&       l,
                                                               FiniteLattice::element_type x) {
    for (std::size_t y = 0; y < l.size(); ++y) {
      for (std::size_t z = 0; z < l.size(); ++z) {
        if (l.join(l.meet(x, z), y) != l.meet(l.join(x, y), l.join(z, y))) {
          return PairWitness{y, z};
        }
      }
    }
    return std::nullopt;
  }

  inline bool is_modular_element(FiniteLattice const& l, FiniteLattice::element_type x) {
    return !modular_element_witness(l, x);
  }

  inline bool is_cancellable_element(FiniteLattice const& l, FiniteLattice::element_type x) {
    return !cancellable_element_witness(l, x);
  }

  inline bool is_costandard_element(FiniteLattice const& l, FiniteLattice::element_type x) {
    return !costandard_element_witness(l, x);
  }

  struct ElementReport {
    std::string                name;
    bool                       modular     = false;
    bool                       cancellable = false;
    bool                       costandard  = false;
    std::optional<PairWitness> modular_witness;
    std::optional<PairWitness> cancellable_witness;
    std::optional<PairWitness> costandard_witness;
  };

  inline ElementReport classify_element(FiniteLattice const& l, FiniteLattice::element_type x) {
    ElementReport r;
    r.name                = l.name(x);
    r.modular_witness     = modular_element_witness(l, x);
    r.cancellable_witness = cancellable_element_witness(l, x);
    r.costandard_witness  = costandard_element_witness(l, x);
    r.modular             = !r.modular_witness;
    r.cancellable         = !r.cancellable_witness;
    r.costandard          = !r.costandard_witness;
    return r;
  }

  using TripleWitness = std::array<FiniteLattice::element_type, 3>;

  inline bool is_modular_lattice(FiniteLattice const& l) {
    for (std::size_t x = 0; x < l.size(); ++x) {
      if (!is_modular_element(l, x)) {
        return false;
      }
    }
    return true;
  }

  // A triple (x, y, z) with x∧(y∨z) ≠ (x∧y)∨(x∧z), if any.
  inline std::optional<TripleWitness> distributivity_witness(FiniteLattice const& l) {
    for (std::size_t x = 0; x < l.size(); ++x) {
      for (std::size_t y = 0; y < l.size(); ++y) {
        for (std::size_t z = 0; z < l.size(); ++z) {
          if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
            return TripleWitness{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  inline bool is_distributive_lattice(FiniteLattice const& l) {
    return !distributivity_witness(l);
  }

  ////////////////////////////////////////////////////////////////////////
  // Partitions
  ////////////////////////////////////////////////////////////////////////

  // A partition of {1, ..., n}; blocks sorted internally and by least
  // element.
  class Partition {
   public:
    Partition() = default;

    Partition(std::size_t n, std::vector<std::vector<std::size_t>> blocks)
        : _n(n), _blocks(std::move(blocks)) {
      std::vector<int> seen(n + 1, 0);
      for (auto& b : _blocks) {
        if (b.empty()) {
          throw DomainError("partition has an empty block");
        }
        std::sort(b.begin(), b.end());
        for (auto e : b) {
          if (e < 1 || e > n || seen[e]++) {
            throw DomainError("blocks do not partition the ground set");
          }
        }
      }
      if (std::count(seen.begin() + 1, seen.end(), 1) != static_cast<long>(n)) {
        throw DomainError("blocks do not cover the ground set");
      }
      std::sort(_blocks.begin(), _blocks.end());
    }

    // From a restricted growth string: element i+1 lies in block rgs[i].
    static Partition from_rgs(std::vector<std::size_t> const& rgs) {
      std::vector<std::vector<std::size_t>> blocks;
      for (std::size_t i = 0; i < rgs.size(); ++i) {
        if (rgs[i] >= blocks.size()) {
          blocks.resize(rgs[i] + 1);
        }
        blocks[rgs[i]].push_back(i + 1);
      }
      return Partition(rgs.size(), std::move(blocks));
    }

    // "12|3|4"; elements above 9 are not supported by this format.
    static Partition parse(std::string_view text) {
      std::vector<std::vector<std::size_t>> blocks(1);
      std::size_t                           n = 0;
      for (char c : text) {
        if (c == '|') {
          blocks.emplace_back();
        } else if (c >= '1' && c <= '9') {
          blocks.back().push_back(static_cast<std::size_t>(c - '0'));
          ++n;
        } else {
          throw ParseError("bad partition text: " + std::string(text));
        }
      }
      return Partition(n, std::move(blocks));
    }

    std::size_t ground_size() const noexcept {
      return _n;
    }

    std::vector<std::vector<std::size_t>> const& blocks() const noexcept {
      return _blocks;
    }

    // Block index of each element 1..n (index 0 unused).
    std::vector<std::size_t> block_of() const {
      std::vector<std::size_t> out(_n + 1, 0);
      for (std::size_t i = 0; i < _blocks.size(); ++i) {
        for (auto e : _blocks[i]) {
          out[e] = i;
        }
      }
      return out;
    }

    // Every block of *this lies inside a block of that.
    bool refines(Partition const& that) const {
      auto owner = that.block_of();
      return std::all_of(_blocks.begin(), _blocks.end(), [&](auto const& b) {
        return std::all_of(b.begin(), b.end(), [&](std::size_t e) {
          return owner[e] == owner[b.front()];
        });
      });
    }

    std::string to_string() const {
      std::string out;
      for (std::size_t i = 0; i < _blocks.size(); ++i) {
        if (i != 0) {
          out += '|';
        }
        for (auto e : _blocks[i]) {
          out += std::to_string(e);
        }
      }
      return out;
    }

    bool operator==(Partition const&) const = default;

   private:
    std::size_t                           _n = 0;
    std::vector<std::vector<std::size_t>> _blocks;
  };

  // All partitions of {1..k} in restricted-growth-string order.
  inline std::vector<Partition> all_partitions(std::size_t k) {
    std::vector<Partition>   out;
    std::vector<std::size_t> rgs(k, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
      if (i == k) {
        out.push_back(Partition::from_rgs(rgs));
        return;
      }
      for (std::size_t b = 0; b <= blocks; ++b) {
        rgs[i] = b;
        rec(i + 1, std::max(blocks, b + 1));
      }
    };
    if (k == 0) {
      return {Partition(0, {})};
    }
    rgs[0] = 0;
    rec(1, 1);
    return out;
  }

  // Part({1..k}) ordered by refinement; element names are Partition text.
  inline FiniteLattice partition_lattice(std::size_t k) {
    if (k < 1 || k > 6) {
      throw DomainError("partition_lattice: k must be in 1..6");
    }
    auto                     parts = all_partitions(k);
    auto const               n     = parts.size();
    std::vector<std::string> names;
    for (auto const& p : parts) {
      names.push_back(p.to_string());
    }
    std::vector<char> leq(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        leq[a * n + b] = parts[a].refines(parts[b]) ? 1 : 0;
      }
    }
    return FiniteLattice::from_order(std::move(names), std::move(leq));
  }

  // At most one block with two or more elements.
  inline bool one_block_modular(Partition const& p) {
    return std::count_if(p.blocks().begin(), p.blocks().end(), [](auto const& b) {
             return b.size() >= 2;
           })
           <= 1;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format and fixtures
  ////////////////////////////////////////////////////////////////////////

  //   elems: n1 n2 ...
  //   cover: a < b
  // '#' starts a comment.
  inline FiniteLattice parse_lattice(std::string_view text) {
    std::istringstream                               in{std::string(text)};
    std::string                                      line;
    std::vector<std::string>                         names;
    std::vector<std::pair<std::string, std::string>> covers;
    bool                                             have_elems = false;
    std::size_t                                      lineno     = 0;
    while (std::getline(in, line)) {
      ++lineno;
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
      auto where = "line " + std::to_string(lineno) + ": ";
      if (toks[0] == "elems:") {
        names.insert(names.end(), toks.begin() + 1, toks.end());
        have_elems = true;
      } else if (toks[0] == "cover:") {
        if (toks.size() != 4 || toks[2] != "<") {
          throw ParseError(where + "expected 'cover: a < b'");
        }
        covers.emplace_back(toks[1], toks[3]);
      } else {
        throw ParseError(where + "expected 'elems:' or 'cover:'");
      }
    }
    if (!have_elems) {
      throw ParseError("lattice file has no 'elems:' line");
    }
    return FiniteLattice::from_covers(names, covers);
  }

  inline FiniteLattice load_lattice(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open lattice file " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_lattice(buf.str());
  }

  namespace fixtures {

    // Ten elements; x and y are cancellable, their join xvy is not. The
    // covers follow the drawing as published; x and y sit on the segments
    // from c up to e and f.
    inline constexpr std::string_view fig1_text = R"(# fig1: cancellable elements whose join is not cancellable
# Covers transcribed from the drawing (fixed only up to the drawn covers).
elems: bot a b c x y xvy e f top
cover: bot < a
cover: bot < c
cover: bot < b
cover: a < e
cover: c < x
cover: x < e
cover: c < y
cover: y < f
cover: b < f
cover: x < xvy
cover: y < xvy
cover: e < top
cover: f < top
cover: xvy < top
)";

    // Subvariety lattice of RvRop: eleven elements, modular, not
    // distributive.
    inline constexpr std::string_view fig2_text = R"(# fig2: subvariety lattice of RvRop
# Covers transcribed from the drawing (fixed only up to the drawn covers).
elems: T SL C2 D C3 D2 DvC3 R D2vC3 Rop RvRop
cover: T < SL
cover: SL < C2
cover: C2 < D
cover: C2 < C3
cover: D < D2
cover: D < DvC3
cover: C3 < DvC3
cover: D2 < D2vC3
cover: DvC3 < D2vC3
cover: DvC3 < R
cover: DvC3 < Rop
cover: D2vC3 < RvRop
cover: R < RvRop
cover: Rop < RvRop
)";

    inline constexpr std::string_view chain_d_text = R"(# chainD: subvariety lattice of D
elems: T SL C2 D
cover: T < SL
cover: SL < C2
cover: C2 < D
)";

    inline FiniteLattice fig1() {
      return parse_lattice(fig1_text);
    }

    inline FiniteLattice fig2() {
      return parse_lattice(fig2_text);
    }

    inline FiniteLattice chain_d() {
      return parse_lattice(chain_d_text);
    }

    inline std::map<std::string, FiniteLattice> all() {
      return {{"fig1", fig1()}, {"fig2", fig2()}, {"chainD", chain_d()}};
    }

  }  // namespace fixtures

}  // namespace monvar
