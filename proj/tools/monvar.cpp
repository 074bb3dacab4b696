// monvar: command-line front end for the monvar library.
//
// Exit codes: 0 yes/pass, 1 no/fail, 2 unknown, 3 resource cap,
// 64 usage, 65 parse or data error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "monvar/deduction.hpp"
#include "monvar/lattices.hpp"
#include "monvar/monoids.hpp"
#include "monvar/varieties.hpp"
#include "monvar/verification.hpp"
#include "monvar/words.hpp"

using namespace monvar;

namespace {

  enum Exit : int {
    exit_yes      = 0,
    exit_no       = 1,
    exit_unknown  = 2,
    exit_resource = 3,
    exit_usage    = 64,
    exit_data     = 65
  };

  struct Bounds {
    std::size_t max_len     = SearchBounds{}.max_len;
    std::size_t max_depth   = SearchBounds{}.max_depth;
    std::size_t max_visited = SearchBounds{}.max_visited;

    SearchBounds get() const {
      return {max_len, max_depth, max_visited};
    }
  };

  void add_bound_flags(CLI::App* cmd, Bounds& b) {
    cmd->add_option("--max-len", b.max_len, "longest word the search may visit")
        ->capture_default_str();
    cmd->add_option("--max-depth", b.max_depth, "longest derivation")->capture_default_str();
    cmd->add_option("--max-visited", b.max_visited, "visited-word cap")->capture_default_str();
  }

  void print_derivation(Derivation const& d) {
    std::cout << "derivation (" << d.length() << (d.length() == 1 ? " step" : " steps") << "):\n";
    std::cout << "  " << d.words.front() << "\n";
    for (auto const& step : d.steps) {
      std::cout << "  " << step.to_string() << "\n";
    }
  }

  ///////////////////////////////////////////////////////////////////////
  // check
  ///////////////////////////////////////////////////////////////////////

  int cmd_check(std::string const& variety,
                std::string const& identity,
                Bounds const&      bounds,
                bool               allow_large) {
    auto v  = lookup(variety);
    auto id = Identity::parse(identity);
    auto r  = decide_identity(v, id, {bounds.get(), allow_large});
    std::cout << v.name << " |= " << id << " : " << to_string(r.value) << "\n";
    std::cout << "rule: " << v.rule.to_string() << "\n";
    if (!r.detail.empty()) {
      std::cout << "detail: " << r.detail << "\n";
    }
    if (r.counterexample) {
      std::cout << "witness in " << r.counterexample_model << ": " << r.counterexample_text
                << "\n";
    }
    if (r.derivation) {
      print_derivation(*r.derivation);
    }
    switch (r.value) {
      case Truth::holds:
        return exit_yes;
      case Truth::fails:
        return exit_no;
      case Truth::unknown:
        break;
    }
    return exit_unknown;
  }

  ///////////////////////////////////////////////////////////////////////
  // monoid
  ///////////////////////////////////////////////////////////////////////

  struct MonoidSource {
    std::string presentation;
    std::string table;
    std::string builtin;
  };

  std::optional<std::size_t> suffix_count(std::string const& s, std::string const& prefix) {
    if (s.rfind(prefix, 0) != 0) {
      return std::nullopt;
    }
    auto n = detail::parse_count(std::string_view(s).substr(prefix.size()));
    if (!n || *n == 0) {
      throw ParseError("bad count in builtin monoid '" + s + "'");
    }
    return n;
  }

  FiniteMonoid builtin_monoid(std::string const& name) {
    if (name == "T") {
      return trivial_monoid();
    }
    if (name == "SL2") {
      return semilattice2();
    }
    if (name == "D2") {
      return monoids::d2();
    }
    if (name == "R") {
      return monoids::r();
    }
    if (name == "Rop") {
      return monoids::r_op();
    }
    if (name == "RxRop") {
      return monoids::r_times_r_op();
    }
    if (auto k = suffix_count(name, "lrb:")) {
      return free_lrb_monoid(*k);
    }
    if (auto n = suffix_count(name, "counter:")) {
      return cyclic_counter(*n);
    }
    if (auto m = suffix_count(name, "group:")) {
      return cyclic_group(*m);
    }
    throw ParseError("unknown builtin monoid '" + name
                     + "' (T, SL2, D2, R, Rop, RxRop, lrb:k, counter:n, group:m)");
  }

  FiniteMonoid load_monoid(MonoidSource const& src) {
    int given = !src.presentation.empty() + !src.table.empty() + !src.builtin.empty();
    if (given != 1) {
      throw CLI::ValidationError("give exactly one of --presentation, --table, --builtin");
    }
    if (!src.presentation.empty()) {
      return from_presentation(load_presentation(src.presentation));
    }
    if (!src.table.empty()) {
      return load_table(src.table);
    }
    return builtin_monoid(src.builtin);
  }

  int cmd_monoid_build(MonoidSource const& src) {
    auto m = load_monoid(src);
    std::cout << "size " << m.size() << "\n";
    std::cout << "elements:";
    for (auto const& n : m.names()) {
      std::cout << " " << n;
    }
    std::cout << "\n";
    std::cout << "identity " << m.name(m.one()) << "\n";
    if (m.zero()) {
      std::cout << "zero " << m.name(*m.zero()) << "\n";
    }
    return exit_yes;
  }

  int cmd_monoid_satisfies(MonoidSource const& src, std::string const& identity, bool allow_large) {
    auto m  = load_monoid(src);
    auto id = Identity::parse(identity);
    auto cx = find_counterexample(m, id, {allow_large});
    std::cout << id << " : " << (cx ? "false" : "true") << "\n";
    if (cx) {
      std::cout << "witness: " << to_string(*cx, m) << "\n";
      return exit_no;
    }
    return exit_yes;
  }

  int cmd_monoid_info(MonoidSource const& src) {
    auto m  = load_monoid(src);
    auto ip = monoid_index_period(m);
    std::cout << "size " << m.size() << "\n";
    std::cout << "index " << ip.index << "\n";
    std::cout << "period " << ip.period << "\n";
    std::cout << "commutative " << (is_commutative(m) ? "yes" : "no") << "\n";
    bool cr = is_completely_regular(m);
    std::cout << "completely-regular " << (cr ? "yes" : "no");
    if (!cr) {
      for (FiniteMonoid::element_type e = 0; e < m.size(); ++e) {
        if (element_index_period(m, e).index != 1) {
          std::cout << " (witness " << m.name(e) << ")";
          break;
        }
      }
    }
    std::cout << "\n";
    return exit_yes;
  }

  ///////////////////////////////////////////////////////////////////////
  // lattice
  ///////////////////////////////////////////////////////////////////////

  FiniteLattice load_lattice_source(std::string const& source) {
    auto builtins = fixtures::all();
    if (auto it = builtins.find(source); it != builtins.end()) {
      return it->second;
    }
    if (source.rfind("part:", 0) == 0) {
      auto k = detail::parse_count(std::string_view(source).substr(5));
      if (!k) {
        throw ParseError("expected part:<k>, got " + source);
      }
      return partition_lattice(*k);
    }
    return load_lattice(source);
  }

  std::string pair_text(FiniteLattice const& l, std::optional<PairWitness> const& w) {
    if (!w) {
      return "";
    }
    return " (witness y=" + l.name(w->first) + ", z=" + l.name(w->second) + ")";
  }

  struct LatticeFlags {
    std::string element;
    bool        modular       = false;
    bool        cancellable   = false;
    bool        costandard    = false;
    bool        global        = false;
    bool        count_modular = false;
  };

  int cmd_lattice(std::string const& source, LatticeFlags const& f) {
    auto l = load_lattice_source(source);
    std::cout << "elements " << l.size() << "\n";
    int  code       = exit_yes;
    bool any_action = false;
    if (f.global) {
      any_action = true;
      std::cout << "modular " << (is_modular_lattice(l) ? "yes" : "no") << "\n";
      auto w = distributivity_witness(l);
      std::cout << "distributive " << (w ? "no" : "yes");
      if (w) {
        std::cout << " (witness x=" << l.name((*w)[0]) << ", y=" << l.name((*w)[1])
                  << ", z=" << l.name((*w)[2]) << ")";
      }
      std::cout << "\n";
    }
    if (f.count_modular) {
      any_action        = true;
      std::size_t count = 0;
      for (std::size_t x = 0; x < l.size(); ++x) {
        count += is_modular_element(l, x) ? 1 : 0;
      }
      std::cout << "modular-elements " << count << "\n";
    }
    bool const selected = f.modular || f.cancellable || f.costandard;
    std::vector<FiniteLattice::element_type> targets;
    if (!f.element.empty()) {
      auto name = detail::replace_all(f.element, "∨", "v");
      name      = detail::replace_all(name, "∧", "^");
      auto x    = l.find(name);
      if (!x) {
        throw ParseError("no element named '" + f.element + "'");
      }
      targets.push_back(*x);
    } else if (selected || !any_action) {
      for (std::size_t x = 0; x < l.size(); ++x) {
        targets.push_back(x);
      }
    }
    for (auto x : targets) {
      auto r = classify_element(l, x);
      std::cout << r.name << ":";
      auto report = [&](char const* what, bool show, bool value, auto const& witness) {
        if (!show) {
          return;
        }
        std::cout << " " << what << "=" << (value ? "true" : "false") << pair_text(l, witness);
        if (!value) {
          code = exit_no;
        }
      };
      bool all = !selected;
      report("modular", all || f.modular, r.modular, r.modular_witness);
      report("cancellable", all || f.cancellable, r.cancellable, r.cancellable_witness);
      report("costandard", all || f.costandard, r.costandard, r.costandard_witness);
      std::cout << "\n";
    }
    // A plain listing is informational; only asked-for properties decide.
    return selected ? code : exit_yes;
  }

  ///////////////////////////////////////////////////////////////////////
  // derive
  ///////////////////////////////////////////////////////////////////////

  int cmd_derive(std::string const&              basis_file,
                 std::vector<std::string> const& ids,
                 std::string const&              variety,
                 std::string const&              from,
                 std::string const&              to,
                 Bounds const&                   bounds) {
    IdentitySystem sys;
    if (!basis_file.empty()) {
      sys = IdentitySystem::load(basis_file);
    }
    if (!variety.empty()) {
      auto v = lookup(variety);
      if (!v.basis) {
        throw DomainError("variety " + v.name + " has no basis");
      }
      for (auto const& id : *v.basis) {
        sys.add(id);
      }
    }
    for (auto const& text : ids) {
      for (auto const& id : parse_identity_chain(text)) {
        sys.add(id);
      }
    }
    if (sys.empty()) {
      throw CLI::ValidationError("no identities: use --basis, --id or --variety");
    }
    auto u = Word::parse(from), v = Word::parse(to);
    auto r = derivable(u, v, sys, bounds.get());
    std::cout << "system " << sys.to_string() << "\n";
    std::cout << u << " -> " << v << " : " << to_string(r.answer) << "\n";
    std::cout << "visited " << r.visited << "\n";
    if (r.answer != Derivability::yes) {
      std::cout << "truncated:" << (r.length_truncated ? " length" : "")
                << (r.depth_truncated ? " depth" : "")
                << (r.visited_truncated ? " visited" : "")
                << (r.length_truncated || r.depth_truncated || r.visited_truncated ? ""
                                                                                  : " none")
                << "\n";
    }
    if (r.derivation) {
      print_derivation(*r.derivation);
      validate_derivation(*r.derivation, sys);
      std::cout << "derivation checks\n";
    }
    switch (r.answer) {
      case Derivability::yes:
        return exit_yes;
      case Derivability::no_within_bounds:
        return exit_no;
      case Derivability::unknown:
        break;
    }
    return exit_unknown;
  }

  ///////////////////////////////////////////////////////////////////////
  // preceq, verify-paper
  ///////////////////////////////////////////////////////////////////////

  int cmd_preceq(std::string const& u, std::string const& v) {
    bool r = embeds(Word::parse(u), Word::parse(v));
    std::cout << (r ? "true" : "false") << "\n";
    return r ? exit_yes : exit_no;
  }

  int cmd_verify(bool timings) {
    auto report = verification::run_all();
    report.print(std::cout, timings);
    return report.all_pass() ? exit_yes : exit_no;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monoid varieties: identities, finite models, derivations, lattices"};
  app.require_subcommand(1);

  Bounds      bounds;
  bool        allow_large = false;
  std::string variety, identity;

  auto* check = app.add_subcommand("check", "decide whether a variety satisfies an identity");
  check->add_option("variety", variety, "variety name (T, SL, COM, C<n>, B<n>, A<m>, D, ...)")
      ->required();
  check->add_option("identity", identity, "identity u=v")->required();
  check->add_flag("--allow-large", allow_large, "allow large brute-force checks");
  add_bound_flags(check, bounds);

  MonoidSource src;
  auto*        monoid = app.add_subcommand("monoid", "build or inspect a finite monoid");
  monoid->require_subcommand(1);
  auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("--presentation", src.presentation, "presentation file");
    cmd->add_option("--table", src.table, "Cayley table file");
    cmd->add_option("--builtin", src.builtin, "T, SL2, D2, R, Rop, RxRop, lrb:k, counter:n, group:m");
  };
  auto* build = monoid->add_subcommand("build", "enumerate and list the elements");
  add_source(build);
  auto* satisfies = monoid->add_subcommand("satisfies", "brute-force satisfaction check");
  add_source(satisfies);
  satisfies->add_option("identity", identity, "identity u=v")->required();
  satisfies->add_flag("--allow-large", allow_large, "allow large brute-force checks");
  auto* info = monoid->add_subcommand("info", "index, period, commutativity, regularity");
  add_source(info);

  std::string  lattice_source;
  LatticeFlags lf;
  auto*        lattice = app.add_subcommand("lattice", "classify lattice elements");
  lattice->add_option("source", lattice_source, "fig1, fig2, chainD, part:<k> or a file")
      ->required();
  lattice->add_option("--element", lf.element, "element to classify");
  lattice->add_flag("--modular", lf.modular, "report modularity");
  lattice->add_flag("--cancellable", lf.cancellable, "report cancellability");
  lattice->add_flag("--costandard", lf.costandard, "report costandardness");
  lattice->add_flag("--global", lf.global, "whole-lattice modular and distributive checks");
  lattice->add_flag("--count-modular", lf.count_modular, "count modular elements");

  std::string              basis_file, from, to;
  std::vector<std::string> ids;
  auto* derive = app.add_subcommand("derive", "search for a derivation between two words");
  derive->add_option("--basis", basis_file, "identity file");
  derive->add_option("--id", ids, "identity u=v (repeatable)");
  derive->add_option("--variety", variety, "use the basis of a catalog variety");
  derive->add_option("--from", from, "source word")->required();
  derive->add_option("--to", to, "target word")->required();
  add_bound_flags(derive, bounds);

  std::string u, v;
  auto*       preceq = app.add_subcommand("preceq", "is u a pattern of v under a nonerasing substitution");
  preceq->add_option("u", u, "pattern word")->required();
  preceq->add_option("v", v, "target word")->required();

  bool  timings = false;
  auto* verify  = app.add_subcommand("verify-paper", "run the acceptance checks");
  verify->add_flag("--timings", timings, "print per-check timings");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*check) {
      return cmd_check(variety, identity, bounds, allow_large);
    }
    if (*build) {
      return cmd_monoid_build(src);
    }
    if (*satisfies) {
      return cmd_monoid_satisfies(src, identity, allow_large);
    }
    if (*info) {
      return cmd_monoid_info(src);
    }
    if (*lattice) {
      return cmd_lattice(lattice_source, lf);
    }
    if (*derive) {
      return cmd_derive(basis_file, ids, variety, from, to, bounds);
    }
    if (*preceq) {
      return cmd_preceq(u, v);
    }
    if (*verify) {
      return cmd_verify(timings);
    }
  } catch (CLI::ValidationError const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (ResourceLimit const& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return exit_resource;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_data;
  }
  return exit_usage;
}
