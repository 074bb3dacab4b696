#pragma once

// Named monoid varieties and the procedures that decide (or semi-decide)
// whether an identity holds in them.
//
// Varieties with a known free-object normal form are decided by that rule;
// varieties with a finite generating monoid are decided by brute force on
// the monoid; everything else is answered by bounded derivation from the
// basis plus refutation by registered finite members of the variety.

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monvar/deduction.hpp"
#include "monvar/errors.hpp"
#include "monvar/monoids.hpp"
#include "monvar/words.hpp"

namespace monvar {

  enum class RuleKind {
    lrb_ini,        // holds iff initial parts agree
    com_occ,        // holds iff all occurrence counts agree
    sl_content,     // holds iff contents agree
    cn_capped_occ,  // holds iff min(occ, n) agrees per letter
    am_mod_occ,     // holds iff occ agrees mod m per letter
    finite_model,   // brute force on the generating monoid
    deduction_only  // bounded derivation + refutation models
  };

  struct DecisionRule {
    RuleKind    kind      = RuleKind::deduction_only;
    std::size_t parameter = 0;

    std::string to_string() const {
      switch (kind) {
        case RuleKind::lrb_ini:
          return "LRB-ini";
        case RuleKind::com_occ:
          return "COM-occ";
        case RuleKind::sl_content:
          return "SL-content";
        case RuleKind::cn_capped_occ:
          return "Cn-cappedocc(" + std::to_string(parameter) + ")";
        case RuleKind::am_mod_occ:
          return "Am-modocc(" + std::to_string(parameter) + ")";
        case RuleKind::finite_model:
          return "finite-model";
        case RuleKind::deduction_only:
          return "deduction-only";
      }
      return "?";
    }
  };

  using MonoidPtr = std::shared_ptr<FiniteMonoid const>;

  struct NamedMonoid {
    std::string name;
    MonoidPtr   monoid;
  };

  struct VarietySpec {
    std::string                   name;
    std::optional<IdentitySystem> basis;
    std::optional<NamedMonoid>    model;
    DecisionRule                  rule;
    // Finite monoids known to lie in the variety (they satisfy the basis).
    std::vector<NamedMonoid> refutation_models;

    // At least one of basis/model; finite-model rule needs a model.
    void check() const {
      if (!basis && !model) {
        throw DomainError("variety " + name + " has neither basis nor model");
      }
      if (rule.kind == RuleKind::finite_model && !model) {
        throw DomainError("variety " + name + " uses finite-model without a model");
      }
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Monoids used by the catalog
  ////////////////////////////////////////////////////////////////////////

  namespace monoids {

    inline FiniteMonoid const& d2() {
      static FiniteMonoid const m
          = from_presentation(Presentation::parse("gens: a b\nrel: a2 = b2 = bab = 0\n"));
      return m;
    }

    inline FiniteMonoid const& r() {
      static FiniteMonoid const m
          = from_presentation(Presentation::parse("gens: a b\nrel: a3 = b2 = ba = 0\n"));
      return m;
    }

    inline FiniteMonoid const& r_op() {
      static FiniteMonoid const m = opposite(r());
      return m;
    }

    inline FiniteMonoid const& r_times_r_op() {
      static FiniteMonoid const m = direct_product(r(), r_op());
      return m;
    }

    // ⟨a, b, 1 | a² = b² = ab = 0⟩, a 5-element candidate member of D.
    inline FiniteMonoid const& ab_zero() {
      static FiniteMonoid const m
          = from_presentation(Presentation::parse("gens: a b\nrel: a2 = b2 = ab = 0\n"));
      return m;
    }

    inline MonoidPtr share(FiniteMonoid m) {
      return std::make_shared<FiniteMonoid const>(std::move(m));
    }

  }  // namespace monoids

  ////////////////////////////////////////////////////////////////////////
  // Bases
  ////////////////////////////////////////////////////////////////////////

  namespace bases {

    inline IdentitySystem parse_list(std::initializer_list<char const*> ids,
                                     std::string                        name) {
      IdentitySystem out;
      for (auto text : ids) {
        for (auto const& id : parse_identity_chain(text)) {
          out.add(id);
        }
      }
      out.set_name(std::move(name));
      return out;
    }

    inline IdentitySystem d() {
      return parse_list({"x2 = x3", "x2y = xyx = yx2"}, "D");
    }

    inline IdentitySystem d_single() {
      return parse_list({"x3yz = yxzx"}, "D (single identity)");
    }

    inline IdentitySystem d2() {
      return parse_list({"x3 = x2",
                         "x3yzt = yxzxtx",
                         "xyzxty = yxzxty",
                         "xzxyty = xzyxty",
                         "xtyzxy = xtyzyx"},
                        "D2");
    }

    inline IdentitySystem r_join_r_op() {
      return parse_list({"x4 = x3",
                         "x3yzt = yxzxtx",
                         "xyzxty = yxzxty",
                         "xzxyty = xzyxty",
                         "xtyzxy = xtyzyx"},
                        "RvRop");
    }

    inline IdentitySystem e() {
      return parse_list({"x2 = x3", "x2y = xyx", "x2y2 = y2x2"}, "E");
    }

    inline Word p() {
      return Word::parse("y2xt2z2y2t2xz2");
    }

    inline Word q() {
      return Word::parse("y2xt2z2xy2t2xz2");
    }

    inline IdentitySystem k() {
      return IdentitySystem({Identity(p(), q())}, "K");
    }

    inline IdentitySystem q_variety() {
      return parse_list({"yxyzxy = yxzxyxz"}, "Q");
    }

    inline IdentitySystem c_n(std::size_t n) {
      auto x = Word::parse("x");
      return IdentitySystem({Identity(x.power(n), x.power(n + 1)), Identity::parse("xy=yx")},
                            "C" + std::to_string(n));
    }

    inline IdentitySystem b_n(std::size_t n) {
      auto x = Word::parse("x");
      return IdentitySystem({Identity(x.power(n), x.power(n + 1))}, "B" + std::to_string(n));
    }

    inline IdentitySystem a_m(std::size_t m) {
      auto x = Word::parse("x");
      return IdentitySystem({Identity(x.power(m) + Word::parse("y"), Word::parse("y")),
                             Identity::parse("xy=yx")},
                            "A" + std::to_string(m));
    }

    // {x^{n+1} ≈ x^{n+2}, xⁿv ≈ x^{n+1}v}
    inline IdentitySystem z(std::size_t n, Word const& v) {
      auto x = Word::parse("x");
      return IdentitySystem(
          {Identity(x.power(n + 1), x.power(n + 2)), Identity(x.power(n) + v, x.power(n + 1) + v)},
          "Z:" + std::to_string(n) + ":" + v.to_string());
    }

  }  // namespace bases

  inline bool model_contains_basis(FiniteMonoid const&        m,
                                   IdentitySystem const&      basis,
                                   SatisfactionOptions const& opts = {}) {
    for (auto const& id : basis) {
      if (!satisfies_identity(m, id, opts)) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Catalog
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    inline std::vector<NamedMonoid> const& refutation_pool() {
      static std::vector<NamedMonoid> const pool = [] {
        std::vector<NamedMonoid> out;
        out.push_back({"T", monoids::share(trivial_monoid())});
        out.push_back({"SL2", monoids::share(semilattice2())});
        for (std::size_t n = 2; n <= 4; ++n) {
          out.push_back({"counter:" + std::to_string(n), monoids::share(cyclic_counter(n))});
        }
        for (std::size_t m = 2; m <= 3; ++m) {
          out.push_back({"group:" + std::to_string(m), monoids::share(cyclic_group(m))});
        }
        out.push_back({"lrb:3", monoids::share(free_lrb_monoid(3))});
        out.push_back({"D2", monoids::share(monoids::d2())});
        out.push_back({"R", monoids::share(monoids::r())});
        out.push_back({"Rop", monoids::share(monoids::r_op())});
        out.push_back({"<a,b|a2=b2=ab=0>", monoids::share(monoids::ab_zero())});
        return out;
      }();
      return pool;
    }

    // Members of the pool that satisfy the basis.
    inline std::vector<NamedMonoid> members_of(IdentitySystem const& basis) {
      std::vector<NamedMonoid> out;
      for (auto const& nm : refutation_pool()) {
        try {
          if (model_contains_basis(*nm.monoid, basis)) {
            out.push_back(nm);
          }
        } catch (ResourceLimit const&) {
          // too large to check; not registered
        }
      }
      return out;
    }

    inline VarietySpec make(std::string                   name,
                            std::optional<IdentitySystem> basis,
                            std::optional<NamedMonoid>    model,
                            DecisionRule                  rule) {
      VarietySpec v{std::move(name), std::move(basis), std::move(model), rule, {}};
      if (v.rule.kind == RuleKind::deduction_only && v.basis) {
        v.refutation_models = members_of(*v.basis);
      }
      v.check();
      return v;
    }

    inline std::optional<std::size_t> parse_count(std::string_view s) {
      if (s.empty() || s.size() > 4) {
        return std::nullopt;
      }
      std::size_t out = 0;
      for (char c : s) {
        if (c < '0' || c > '9') {
          return std::nullopt;
        }
        out = out * 10 + static_cast<std::size_t>(c - '0');
      }
      return out;
    }

  }  // namespace detail

  inline VarietySpec variety_c(std::size_t n) {
    if (n < 1) {
      throw DomainError("C_n needs n >= 1");
    }
    return detail::make("C" + std::to_string(n),
                        bases::c_n(n),
                        NamedMonoid{"counter:" + std::to_string(n),
                                    monoids::share(cyclic_counter(n))},
                        {RuleKind::cn_capped_occ, n});
  }

  inline VarietySpec variety_b(std::size_t n) {
    if (n < 1) {
      throw DomainError("B_n needs n >= 1");
    }
    return detail::make(
        "B" + std::to_string(n), bases::b_n(n), std::nullopt, {RuleKind::deduction_only, 0});
  }

  inline VarietySpec variety_a(std::size_t m) {
    if (m < 1) {
      throw DomainError("A_m needs m >= 1");
    }
    return detail::make("A" + std::to_string(m),
                        bases::a_m(m),
                        NamedMonoid{"group:" + std::to_string(m), monoids::share(cyclic_group(m))},
                        {RuleKind::am_mod_occ, m});
  }

  inline VarietySpec variety_z(std::size_t n, Word const& v) {
    if (n < 1) {
      throw DomainError("Z needs n >= 1");
    }
    auto basis = bases::z(n, v);
    auto name  = basis.name();
    return detail::make(name, std::move(basis), std::nullopt, {RuleKind::deduction_only, 0});
  }

  // The fixed named entries; C2 stands in for the C_n family.
  inline std::vector<VarietySpec> const& catalog() {
    static std::vector<VarietySpec> const entries = [] {
      using detail::make;
      using monoids::share;
      std::vector<VarietySpec> out;
      out.push_back(make("T",
                         bases::parse_list({"x = 1"}, "T"),
                         NamedMonoid{"T", share(trivial_monoid())},
                         {RuleKind::finite_model, 0}));
      out.push_back(make("SL",
                         bases::parse_list({"x = x2", "xy = yx"}, "SL"),
                         NamedMonoid{"SL2", share(semilattice2())},
                         {RuleKind::sl_content, 0}));
      out.push_back(make("COM",
                         bases::parse_list({"xy = yx"}, "COM"),
                         std::nullopt,
                         {RuleKind::com_occ, 0}));
      out.push_back(variety_c(2));
      out.push_back(make("D", bases::d(), std::nullopt, {RuleKind::deduction_only, 0}));
      out.push_back(make("D2",
                         bases::d2(),
                         NamedMonoid{"D2", share(monoids::d2())},
                         {RuleKind::finite_model, 0}));
      out.push_back(make("E", bases::e(), std::nullopt, {RuleKind::deduction_only, 0}));
      out.push_back(make("K", bases::k(), std::nullopt, {RuleKind::deduction_only, 0}));
      out.push_back(make("LRB",
                         bases::parse_list({"xy = xyx"}, "LRB"),
                         std::nullopt,
                         {RuleKind::lrb_ini, 0}));
      out.push_back(
          make("Q", bases::q_variety(), std::nullopt, {RuleKind::deduction_only, 0}));
      {
        auto basis = bases::r_join_r_op();
        basis.add(Identity::parse("xyx = yx2"));
        basis.set_name("R");
        out.push_back(make("R",
                           basis,
                           NamedMonoid{"R", share(monoids::r())},
                           {RuleKind::finite_model, 0}));
      }
      {
        auto basis = bases::r_join_r_op();
        basis.add(Identity::parse("xyx = x2y"));
        basis.set_name("Rop");
        out.push_back(make("Rop",
                           basis,
                           NamedMonoid{"Rop", share(monoids::r_op())},
                           {RuleKind::finite_model, 0}));
      }
      out.push_back(make("RvRop",
                         bases::r_join_r_op(),
                         NamedMonoid{"RxRop", share(monoids::r_times_r_op())},
                         {RuleKind::finite_model, 0}));
      return out;
    }();
    return entries;
  }

  // Resolves catalog names and the parametric forms C<n>, B<n>, A<m>,
  // Z:<n>:<word>. MON is rejected.
  inline VarietySpec lookup(std::string_view name) {
    if (name == "MON" || name == "MON-guard") {
      throw UnknownVariety(
          "MON is the variety of all monoids: it satisfies only trivial identities and "
          "has no finite basis or model to check against; compare the two words directly");
    }
    for (auto const& v : catalog()) {
      if (v.name == name) {
        return v;
      }
    }
    if (name.size() >= 2) {
      // C2 and C_2 are both accepted
      auto digits = name.substr(name[1] == '_' ? 2 : 1);
      auto num    = detail::parse_count(digits);
      if (num && *num >= 1) {
        switch (name[0]) {
          case 'C':
            return variety_c(*num);
          case 'B':
            return variety_b(*num);
          case 'A':
            return variety_a(*num);
          default:
            break;
        }
      }
    }
    if (name.rfind("Z:", 0) == 0) {
      auto rest  = name.substr(2);
      auto colon = rest.find(':');
      if (colon != std::string_view::npos) {
        auto n = detail::parse_count(rest.substr(0, colon));
        if (n && *n >= 1) {
          return variety_z(*n, Word::parse(rest.substr(colon + 1)));
        }
      }
      throw UnknownVariety("expected Z:<n>:<word>, got " + std::string(name));
    }
    throw UnknownVariety("unknown variety " + std::string(name));
  }

  ////////////////////////////////////////////////////////////////////////
  // Decisions
  ////////////////////////////////////////////////////////////////////////

  enum class Truth { holds, fails, unknown };

  inline std::string_view to_string(Truth t) {
    switch (t) {
      case Truth::holds:
        return "holds";
      case Truth::fails:
        return "fails";
      case Truth::unknown:
        return "unknown";
    }
    return "?";
  }

  struct Verdict {
    Truth                      value = Truth::unknown;
    std::optional<Assignment>  counterexample;
    std::string                counterexample_model;  // name of the refuting monoid
    std::string                counterexample_text;   // rendered assignment
    std::optional<Derivation>  derivation;
    std::string                detail;
  };

  struct DecisionOptions {
    SearchBounds search;
    bool         allow_large = false;
  };

  namespace detail {

    inline Verdict refute_with(NamedMonoid const& nm, Identity const& id, bool allow_large) {
      Verdict out;
      auto    cx = find_counterexample(*nm.monoid, id, {allow_large});
      if (cx) {
        out.value                = Truth::fails;
        out.counterexample_text  = to_string(*cx, *nm.monoid);
        out.counterexample       = std::move(cx);
        out.counterexample_model = nm.name;
      } else {
        out.value = Truth::holds;
      }
      return out;
    }

    // Attaches a model counterexample to a rule-based failure when the
    // search is small.
    inline void attach_witness(Verdict&                          v,
                               std::optional<NamedMonoid> const& model,
                               Identity const&                   id) {
      if (v.value != Truth::fails || !model) {
        return;
      }
      double space = 1;
      for (std::size_t i = 0; i < (content(id.lhs) | content(id.rhs)).size(); ++i) {
        space *= static_cast<double>(model->monoid->size());
      }
      if (space > 1e7) {
        return;
      }
      auto w = refute_with(*model, id, true);
      if (w.value == Truth::fails) {
        v.counterexample       = std::move(w.counterexample);
        v.counterexample_text  = std::move(w.counterexample_text);
        v.counterexample_model = std::move(w.counterexample_model);
      }
    }

  }  // namespace detail

  inline Verdict decide_identity(VarietySpec const&     v,
                                 Identity const&        id,
                                 DecisionOptions const& opts = {}) {
    Verdict out;
    auto const& u = id.lhs;
    auto const& w = id.rhs;
    auto        verdict_of = [](bool b) { return b ? Truth::holds : Truth::fails; };
    switch (v.rule.kind) {
      case RuleKind::lrb_ini: {
        auto iu = initial_part(u), iw = initial_part(w);
        out.value  = verdict_of(iu == iw);
        out.detail = "ini: " + iu.to_string() + " vs " + iw.to_string();
        break;
      }
      case RuleKind::com_occ: {
        out.value  = verdict_of(occurrences(u) == occurrences(w));
        out.detail = "occurrence counts compared";
        break;
      }
      case RuleKind::sl_content: {
        out.value  = verdict_of(content(u) == content(w));
        out.detail = "content: " + content(u).to_string() + " vs " + content(w).to_string();
        break;
      }
      case RuleKind::cn_capped_occ: {
        auto ou = occurrences(u), ow = occurrences(w);
        bool eq = true;
        for (std::size_t i = 0; i < alphabet_size; ++i) {
          eq = eq && std::min(ou[i], v.rule.parameter) == std::min(ow[i], v.rule.parameter);
        }
        out.value  = verdict_of(eq);
        out.detail = "occurrence counts capped at " + std::to_string(v.rule.parameter);
        break;
      }
      case RuleKind::am_mod_occ: {
        auto ou = occurrences(u), ow = occurrences(w);
        bool eq = true;
        for (std::size_t i = 0; i < alphabet_size; ++i) {
          eq = eq && ou[i] % v.rule.parameter == ow[i] % v.rule.parameter;
        }
        out.value  = verdict_of(eq);
        out.detail = "occurrence counts mod " + std::to_string(v.rule.parameter);
        break;
      }
      case RuleKind::finite_model: {
        out        = detail::refute_with(*v.model, id, opts.allow_large);
        out.detail = "exhaustive check on " + v.model->name;
        return out;
      }
      case RuleKind::deduction_only: {
        for (auto const& nm : v.refutation_models) {
          try {
            auto r = detail::refute_with(nm, id, opts.allow_large);
            if (r.value == Truth::fails) {
              r.detail = "refuted by member " + nm.name;
              return r;
            }
          } catch (ResourceLimit const&) {
            // skip models too large for this identity
          }
        }
        auto r = derivable(id, *v.basis, opts.search);
        out.detail = "derivation search visited " + std::to_string(r.visited) + " words";
        switch (r.answer) {
          case Derivability::yes:
            out.value      = Truth::holds;
            out.derivation = std::move(r.derivation);
            break;
          case Derivability::no_within_bounds:
            out.value = Truth::fails;
            out.detail += "; the derivation class of the left side is finite and "
                          "excludes the right side";
            break;
          case Derivability::unknown:
            out.value = Truth::unknown;
            break;
        }
        return out;
      }
    }
    detail::attach_witness(out, v.model, id);
    return out;
  }

  // xⁿ is an isoterm for var(M) iff M violates xⁿ ≈ x^{n+m} for every
  // 1 ≤ m ≤ |M|.
  inline bool is_isoterm_power(VarietySpec const& v, std::size_t n) {
    if (!v.model) {
      throw DomainError("is_isoterm_power needs a variety with a generating monoid");
    }
    if (n < 1) {
      throw DomainError("is_isoterm_power needs n >= 1");
    }
    auto const& m = *v.model->monoid;
    auto        x = Word::parse("x");
    for (std::size_t k = 1; k <= m.size(); ++k) {
      if (satisfies_identity(m, Identity(x.power(n), x.power(n + k)))) {
        return false;
      }
    }
    return true;
  }

  struct IsotermSearchBounds {
    std::size_t     max_len        = 8;
    std::size_t     max_candidates = 200'000;
    DecisionOptions decision;
  };

  // A word v ≠ w with w ≈ v holding in V, or nullopt when none is found
  // within bounds (which does not make w an isoterm).
  //
  // Candidates come first from one-step rewrites of w by the basis, in
  // enumeration order, then from all words over content(w) in shortlex
  // order. For deduction-only varieties a one-step rewrite is itself a
  // derivation, so only the first source is used.
  inline std::optional<Word> isoterm_witness_search(VarietySpec const&         v,
                                                    Word const&                w,
                                                    IsotermSearchBounds const& bounds = {}) {
    std::optional<Word> found;
    std::size_t const   rewrite_len = std::max(bounds.max_len, w.size() + 1);
    if (v.basis) {
      detail::for_each_rewrite(
          w,
          *v.basis,
          rewrite_len,
          content(w) | v.basis->content(),
          [&](detail::RewriteMatch const&, std::string_view t) {
            if (t == w.letters()) {
              return false;
            }
            auto cand = Word::trusted(std::string(t));
            if (v.rule.kind == RuleKind::deduction_only
                || decide_identity(v, Identity(w, cand), bounds.decision).value
                       == Truth::holds) {
              found = std::move(cand);
              return true;
            }
            return false;
          });
      if (found || v.rule.kind == RuleKind::deduction_only) {
        return found;
      }
    }
    auto alphabet = content(w).letters();
    if (alphabet.empty()) {
      alphabet = {'x'};
    }
    std::vector<std::string> level{""};
    std::size_t              seen = 0;
    for (std::size_t len = 0; len <= bounds.max_len; ++len) {
      for (auto const& cand : level) {
        if (++seen > bounds.max_candidates) {
          return std::nullopt;
        }
        if (cand == w.letters()) {
          continue;
        }
        auto word = Word::trusted(cand);
        if (decide_identity(v, Identity(w, word), bounds.decision).value == Truth::holds) {
          return word;
        }
      }
      std::vector<std::string> next;
      for (auto const& cand : level) {
        for (Letter a : alphabet) {
          next.push_back(cand + a);
        }
      }
      level = std::move(next);
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // The words y^{r1} x t^{r2} z^{r3} [x] y^{r4} t^{r5} x z^{r6}
  ////////////////////////////////////////////////////////////////////////

  enum class WClass { w1, w2, outside };

  inline std::string_view to_string(WClass c) {
    switch (c) {
      case WClass::w1:
        return "W1";
      case WClass::w2:
        return "W2";
      case WClass::outside:
        return "outside";
    }
    return "?";
  }

  // Exponents r1..r6; `with_middle_x` selects the second shape.
  inline Word w_word(std::array<std::size_t, 6> const& r, bool with_middle_x) {
    std::string s;
    s.append(r[0], 'y');
    s += 'x';
    s.append(r[1], 't');
    s.append(r[2], 'z');
    if (with_middle_x) {
      s += 'x';
    }
    s.append(r[3], 'y');
    s.append(r[4], 't');
    s += 'x';
    s.append(r[5], 'z');
    return Word::trusted(s);
  }

  inline WClass membership_in_W(Word const& w) {
    std::vector<std::pair<Letter, std::size_t>> runs;
    for (Letter a : w) {
      if (!runs.empty() && runs.back().first == a) {
        ++runs.back().second;
      } else {
        runs.emplace_back(a, 1);
      }
    }
    // (letter, exact exponent 1) for x, (letter, 0 = "at least 2") otherwise
    static constexpr std::array<std::pair<char, int>, 8> shape1{
        {{'y', 0}, {'x', 1}, {'t', 0}, {'z', 0}, {'y', 0}, {'t', 0}, {'x', 1}, {'z', 0}}};
    static constexpr std::array<std::pair<char, int>, 9> shape2{{{'y', 0},
                                                                 {'x', 1},
                                                                 {'t', 0},
                                                                 {'z', 0},
                                                                 {'x', 1},
                                                                 {'y', 0},
                                                                 {'t', 0},
                                                                 {'x', 1},
                                                                 {'z', 0}}};
    auto matches = [&](auto const& shape) {
      if (runs.size() != shape.size()) {
        return false;
      }
      for (std::size_t i = 0; i < shape.size(); ++i) {
        if (runs[i].first != shape[i].first) {
          return false;
        }
        if (shape[i].second == 1 ? runs[i].second != 1 : runs[i].second < 2) {
          return false;
        }
      }
      return true;
    };
    if (matches(shape1)) {
      return WClass::w1;
    }
    if (matches(shape2)) {
      return WClass::w2;
    }
    return WClass::outside;
  }

}  // namespace monvar
