#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "monvar/lattices.hpp"

using namespace monvar;

namespace {

  std::string slurp(std::string const& path) {
    std::ifstream     in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  // Bell numbers from the Bell triangle.
  std::size_t bell(std::size_t k) {
    std::vector<std::size_t> row{1};
    for (std::size_t i = 1; i <= k; ++i) {
      std::vector<std::size_t> next{row.back()};
      for (auto v : row) {
        next.push_back(next.back() + v);
      }
      row = std::move(next);
    }
    return row.front();
  }

  FiniteLattice::element_type at(FiniteLattice const& l, char const* name) {
    auto x = l.find(name);
    REQUIRE(x);
    return *x;
  }

  std::vector<FiniteLattice> sample_lattices() {
    std::vector<FiniteLattice> out{fixtures::fig1(), fixtures::fig2(), fixtures::chain_d()};
    for (std::size_t k = 1; k <= 5; ++k) {
      out.push_back(partition_lattice(k));
    }
    return out;
  }

}  // namespace

TEST_CASE("fixture files match the built-in fixtures", "[lattices][fixtures]") {
  CHECK(slurp(MONVAR_DATA_DIR "/fig1.lat") == fixtures::fig1_text);
  CHECK(slurp(MONVAR_DATA_DIR "/fig2.lat") == fixtures::fig2_text);
  CHECK(slurp(MONVAR_DATA_DIR "/chainD.lat") == fixtures::chain_d_text);
  auto l = load_lattice(MONVAR_DATA_DIR "/fig2.lat");
  CHECK(l.names() == fixtures::fig2().names());
}

TEST_CASE("fixture shapes", "[lattices][fixtures]") {
  auto f1 = fixtures::fig1();
  auto f2 = fixtures::fig2();
  CHECK(f1.size() == 10);
  CHECK(f2.size() == 11);
  CHECK(f1.name(f1.bottom()) == "bot");
  CHECK(f1.name(f1.top()) == "top");
  CHECK(f2.name(f2.bottom()) == "T");
  CHECK(f2.name(f2.top()) == "RvRop");
  CHECK(f1.name(f1.join(at(f1, "x"), at(f1, "y"))) == "xvy");

  // chainD is the bottom chain of fig2 and a sublattice of it
  auto chain = fixtures::chain_d();
  for (std::size_t a = 0; a < chain.size(); ++a) {
    for (std::size_t b = 0; b < chain.size(); ++b) {
      auto fa = at(f2, chain.name(a).c_str()), fb = at(f2, chain.name(b).c_str());
      CHECK(chain.leq(a, b) == f2.leq(fa, fb));
      CHECK(chain.name(chain.meet(a, b)) == f2.name(f2.meet(fa, fb)));
      CHECK(chain.name(chain.join(a, b)) == f2.name(f2.join(fa, fb)));
    }
  }
  CHECK(is_distributive_lattice(chain));
}

TEST_CASE("cancellable elements whose join is not cancellable", "[lattices][elements]") {
  auto l = fixtures::fig1();
  CHECK(is_cancellable_element(l, at(l, "x")));
  CHECK(is_cancellable_element(l, at(l, "y")));
  auto w = cancellable_element_witness(l, at(l, "xvy"));
  REQUIRE(w);
  // the witness pair really violates cancellation
  auto xy = at(l, "xvy");
  CHECK(l.join(xy, w->first) == l.join(xy, w->second));
  CHECK(l.meet(xy, w->first) == l.meet(xy, w->second));
  CHECK(w->first != w->second);
}

TEST_CASE("the eleven-element lattice is modular but not distributive", "[lattices][global]") {
  auto l = fixtures::fig2();
  CHECK(is_modular_lattice(l));
  auto t = distributivity_witness(l);
  REQUIRE(t);
  auto [x, y, z] = *t;
  CHECK(l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)));
  CHECK_FALSE(is_distributive_lattice(l));
}

TEST_CASE("global checks on small lattices", "[lattices][global]") {
  // N5 is not modular, M3 is modular but not distributive
  auto n5 = parse_lattice("elems: 0 a b c 1\ncover: 0 < a\ncover: a < b\ncover: b < 1\n"
                          "cover: 0 < c\ncover: c < 1\n");
  CHECK_FALSE(is_modular_lattice(n5));
  auto m3 = parse_lattice("elems: 0 a b c 1\ncover: 0 < a\ncover: 0 < b\ncover: 0 < c\n"
                          "cover: a < 1\ncover: b < 1\ncover: c < 1\n");
  CHECK(is_modular_lattice(m3));
  CHECK_FALSE(is_distributive_lattice(m3));
  CHECK(is_distributive_lattice(partition_lattice(2)));
  CHECK_FALSE(is_modular_lattice(partition_lattice(4)));
}

TEST_CASE("element classification", "[lattices][elements]") {
  auto l = fixtures::fig1();
  auto r = classify_element(l, l.top());
  CHECK(r.modular);
  CHECK(r.cancellable);
  CHECK(r.costandard);
  auto xy = classify_element(l, at(l, "xvy"));
  CHECK(xy.name == "xvy");
  CHECK(xy.modular);
  CHECK_FALSE(xy.cancellable);
  CHECK(xy.cancellable_witness);
}

TEST_CASE("costandard implies cancellable implies modular", "[lattices][elements][property]") {
  for (auto const& l : sample_lattices()) {
    for (std::size_t x = 0; x < l.size(); ++x) {
      INFO(l.name(x));
      auto r = classify_element(l, x);
      if (r.costandard) {
        CHECK(r.cancellable);
      }
      if (r.cancellable) {
        CHECK(r.modular);
      }
    }
  }
}

TEST_CASE("meets and joins agree with the order", "[lattices][property]") {
  for (auto const& l : sample_lattices()) {
    for (std::size_t a = 0; a < l.size(); ++a) {
      for (std::size_t b = 0; b < l.size(); ++b) {
        CHECK(l.leq(a, b) == (l.meet(a, b) == a));
        CHECK(l.leq(a, b) == (l.join(a, b) == b));
      }
    }
  }
}

TEST_CASE("partitions", "[lattices][partitions]") {
  auto p = Partition::parse("12|34");
  CHECK(p.ground_size() == 4);
  CHECK(p.to_string() == "12|34");
  CHECK(Partition::parse("3|21").to_string() == "12|3");
  CHECK(Partition::parse("1|2|3").refines(p.parse("123")));
  CHECK_FALSE(p.refines(Partition::parse("13|24")));
  CHECK(Partition::from_rgs({0, 0, 1, 1}) == p);
  CHECK_THROWS_AS(Partition::parse("12|2"), DomainError);
  CHECK_THROWS_AS(Partition::parse("12|x"), ParseError);
  CHECK_THROWS_AS(Partition(3, {{1, 2}}), DomainError);

  for (std::size_t k = 1; k <= 6; ++k) {
    CHECK(all_partitions(k).size() == bell(k));
  }
  CHECK(partition_lattice(4).size() == 15);
  CHECK_THROWS_AS(partition_lattice(7), DomainError);
  CHECK_THROWS_AS(partition_lattice(0), DomainError);
}

TEST_CASE("modular partitions have at most one non-singleton block", "[lattices][partitions]") {
  for (std::size_t k = 1; k <= 5; ++k) {
    auto        l     = partition_lattice(k);
    std::size_t count = 0;
    for (std::size_t x = 0; x < l.size(); ++x) {
      bool mod = is_modular_element(l, x);
      INFO(l.name(x));
      CHECK(mod == one_block_modular(Partition::parse(l.name(x))));
      count += mod ? 1 : 0;
    }
    // one non-singleton block: choose its support of size >= 2, plus the
    // discrete partition
    std::size_t expected = (std::size_t{1} << k) - k;
    CHECK(count == expected);
  }
  auto l4 = partition_lattice(4);
  for (auto name : {"12|34", "13|24", "14|23"}) {
    CHECK_FALSE(is_modular_element(l4, at(l4, name)));
  }
}

TEST_CASE("malformed lattices are rejected", "[lattices][errors]") {
  CHECK_THROWS_AS(parse_lattice("elems: a b\ncover: a < c\n"), NotALattice);
  CHECK_THROWS_AS(parse_lattice("elems: a b\ncover: a < b\ncover: b < a\n"), NotALattice);
  CHECK_THROWS_AS(load_lattice(MONVAR_DATA_DIR "/not_a_lattice.lat"), NotALattice);
  CHECK_THROWS_AS(parse_lattice("cover: a < b\n"), ParseError);
  CHECK_THROWS_AS(parse_lattice("elems: a b\ncover: a b\n"), ParseError);
  CHECK_THROWS_AS(parse_lattice("elems: a a\n"), NotALattice);
  try {
    load_lattice(MONVAR_DATA_DIR "/not_a_lattice.lat");
  } catch (NotALattice const& e) {
    CHECK(std::string(e.what()).find("(a, b)") != std::string::npos);
  }
}
