#include <catch_amalgamated.hpp>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "monvar/deduction.hpp"

using namespace monvar;

namespace {

  Word w(char const* text) {
    return Word::parse(text);
  }

  Word const p = w("y2xt2z2y2t2xz2");
  Word const q = w("y2xt2z2xy2t2xz2");

  IdentitySystem const single{Identity::parse("x3yz=yxzx")};
  IdentitySystem const d_basis{Identity::parse("x2=x3"),
                               Identity::parse("x2y=xyx"),
                               Identity::parse("xyx=yx2")};

  Word random_word(std::mt19937_64& rng, std::string_view alphabet, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::string                                s;
    for (auto n = len(rng); n > 0; --n) {
      s += alphabet[pick(rng)];
    }
    return Word::trusted(s);
  }

  // All words over `alphabet` of length at most n, including the empty word.
  std::vector<std::string> all_words(std::string_view alphabet, std::size_t n) {
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].size() < n) {
        for (char a : alphabet) {
          out.push_back(out[i] + a);
        }
      }
    }
    return out;
  }

  // Naive one-step rewriting: every substitution with images of length at
  // most `image_len` over `alphabet`, every position, both directions.
  // Needs identities whose two sides have the same content.
  std::set<std::string> rewrites_oracle(std::string const&    word,
                                        IdentitySystem const& sys,
                                        std::size_t           max_len,
                                        std::string_view      alphabet,
                                        std::size_t           image_len) {
    auto                  images = all_words(alphabet, image_len);
    std::set<std::string> out;
    for (auto const& id : sys) {
      for (int dir = 0; dir < 2; ++dir) {
        auto const& s       = dir == 0 ? id.lhs : id.rhs;
        auto const& t       = dir == 0 ? id.rhs : id.lhs;
        auto        letters = content(s).letters();
        std::vector<std::size_t> choice(letters.size(), 0);
        while (true) {
          auto apply = [&](Word const& side) {
            std::string r;
            for (Letter c : side) {
              auto k = std::find(letters.begin(), letters.end(), c) - letters.begin();
              r += images[choice[k]];
            }
            return r;
          };
          auto xs = apply(s), xt = apply(t);
          for (std::size_t pos = 0; pos + xs.size() <= word.size(); ++pos) {
            if (word.compare(pos, xs.size(), xs) == 0) {
              auto target = word.substr(0, pos) + xt + word.substr(pos + xs.size());
              if (target.size() <= max_len) {
                out.insert(target);
              }
            }
          }
          std::size_t i = 0;
          while (i < choice.size() && ++choice[i] == images.size()) {
            choice[i++] = 0;
          }
          if (i == choice.size()) {
            break;
          }
        }
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("identity systems have set semantics", "[deduction][system]") {
  IdentitySystem sys;
  CHECK(sys.add(Identity::parse("xy=yx")));
  CHECK_FALSE(sys.add(Identity::parse("yx=xy")));
  CHECK(sys.size() == 1);
  CHECK(sys.contains(Identity::parse("xy=yx")));
  CHECK(sys.to_string() == "{xy=yx}");
}

TEST_CASE("identity files parse comments, names and chains", "[deduction][system]") {
  auto sys = IdentitySystem::parse("# D basis\nname: D\n\nx2 = x3\nx2y = xyx = yx2  # chain\n");
  CHECK(sys.name() == "D");
  CHECK(sys.size() == 3);
  CHECK(sys.contains(Identity::parse("xyx=yx2")));
  CHECK_THROWS_AS(IdentitySystem::parse("x2 = x3\nxy\n"), ParseError);

  auto file = IdentitySystem::load(MONVAR_DATA_DIR "/d.ids");
  CHECK(file.size() == 3);
  for (auto const& id : d_basis) {
    CHECK(file.contains(id));
  }
  CHECK_THROWS_AS(IdentitySystem::load(MONVAR_DATA_DIR "/missing.ids"), ParseError);
}

TEST_CASE("one-step rewrites", "[deduction][rewrite]") {
  IdentitySystem k{Identity(p, q)};
  CHECK(one_step_rewrites(p, k, 20).count(q) == 1);

  auto sq = one_step_rewrites(w("x2"), {Identity::parse("x2=x3")}, 4);
  CHECK(sq.count(w("x3")) == 1);
  CHECK(sq == std::set<Word, ShortlexLess>{w("x2"), w("x3")});

  CHECK(one_step_rewrites(w("x2y"), single, 4).count(w("x3y")) == 1);

  // length bound is respected
  for (auto const& v : one_step_rewrites(w("x2y"), single, 4)) {
    CHECK(v.size() <= 4);
  }
  CHECK(one_step_rewrites(w("x2"), {Identity::parse("x2=x3")}, 2)
        == std::set<Word, ShortlexLess>{w("x2")});
}

TEST_CASE("one-step rewrites agree with a naive substitution oracle",
          "[deduction][rewrite][property]") {
  IdentitySystem sys{Identity::parse("x2y=yx2"), Identity::parse("xyx=x2y")};
  std::mt19937_64 rng(21);
  for (int i = 0; i < 40; ++i) {
    auto u = random_word(rng, "ab", 6);
    // images longer than the word cannot match a factor
    auto expected = rewrites_oracle(u.letters(), sys, 8, "ab", u.size());
    std::set<std::string> got;
    for (auto const& v : one_step_rewrites(u, sys, 8)) {
      got.insert(v.letters());
    }
    INFO(u);
    CHECK(got == expected);
  }
}

TEST_CASE("one-step rewriting is symmetric", "[deduction][rewrite][property]") {
  std::mt19937_64   rng(22);
  std::size_t const L = 9;
  for (int i = 0; i < 60; ++i) {
    auto u = random_word(rng, "xy", 6);
    for (auto const& v : one_step_rewrites(u, d_basis, L)) {
      INFO(u << " -> " << v);
      CHECK(one_step_rewrites(v, d_basis, L).count(u) == 1);
    }
  }
}

TEST_CASE("hand-built derivations check", "[deduction][derivation]") {
  IdentitySystem k{Identity(p, q)};
  Derivation     one{{p, q}, {RewriteStep{Word(), Substitution(), Identity(p, q),
                                          Direction::left_to_right, Word()}}};
  CHECK(check_derivation(one, k));

  // x2y -> x3y -> yx2 over {x3yz = yxzx}
  Substitution first;
  first.set('y', Word()).set('z', Word());
  Substitution second;
  second.set('z', Word());
  auto       id = Identity::parse("x3yz=yxzx");
  Derivation two{{w("x2y"), w("x3y"), w("yx2")},
                 {RewriteStep{Word(), first, id, Direction::right_to_left, w("y")},
                  RewriteStep{Word(), second, id, Direction::left_to_right, Word()}}};
  CHECK(check_derivation(two, single));
  CHECK_FALSE(check_derivation(two, d_basis));

  auto bad      = two;
  bad.words[1]  = w("x4y");
  CHECK_FALSE(check_derivation(bad, single));
  try {
    validate_derivation(bad, single);
    FAIL("expected a DerivationError");
  } catch (DerivationError const& e) {
    CHECK(e.step() == 0);
  }

  auto bad_prefix               = two;
  bad_prefix.steps[1].prefix    = w("y");
  CHECK_FALSE(check_derivation(bad_prefix, single));
  try {
    validate_derivation(bad_prefix, single);
    FAIL("expected a DerivationError");
  } catch (DerivationError const& e) {
    CHECK(e.step() == 1);
  }

  CHECK(check_derivation(Derivation{{p}, {}}, single));
  CHECK_FALSE(check_derivation(Derivation{}, single));
}

TEST_CASE("find_step and connect build checkable derivations", "[deduction][derivation]") {
  auto step = find_step(w("x2y"), w("x3y"), single);
  REQUIRE(step);
  CHECK(step->source() == w("x2y"));
  CHECK(step->target() == w("x3y"));
  CHECK_FALSE(find_step(w("x2y"), w("xy"), single));

  auto d = connect({w("x2y"), w("x3y"), w("yx2")}, single);
  REQUIRE(d);
  CHECK(d->length() == 2);
  CHECK(check_derivation(*d, single));
  CHECK_FALSE(connect({w("x2y"), w("xy")}, single));
}

TEST_CASE("derivation search", "[deduction][derivable]") {
  auto r = derivable(w("x2y"), w("yx2"), single, {4, 3, 100000});
  REQUIRE(r.answer == Derivability::yes);
  REQUIRE(r.derivation);
  CHECK(r.derivation->length() == 2);
  CHECK(check_derivation(*r.derivation, single));

  auto same = derivable(p, p, single, {});
  CHECK(same.answer == Derivability::yes);
  CHECK(same.derivation->length() == 0);

  auto pq = derivable(p, q, {Identity::parse("x2=x3"), Identity::parse("x2y=yx2")}, {20, 40});
  REQUIRE(pq.answer == Derivability::yes);
  CHECK(check_derivation(*pq.derivation,
                         {Identity::parse("x2=x3"), Identity::parse("x2y=yx2")}));
  CHECK(pq.derivation->words.front() == p);
  CHECK(pq.derivation->words.back() == q);

  auto depth0 = derivable(w("x2"), w("x3"), {Identity::parse("x2=x3")}, {10, 0});
  CHECK(depth0.answer == Derivability::unknown);
  CHECK(depth0.depth_truncated);

  // {x2 = x3} never changes a word without a square
  auto none = derivable(w("xy"), w("yx"), {Identity::parse("x2=x3")}, {});
  CHECK(none.answer == Derivability::no_within_bounds);

  // x is alone in its class, so the search from its side is exhaustive
  auto lone = derivable(w("x2"), w("x"), {Identity::parse("x2=x3")}, {6, 48});
  CHECK(lone.answer == Derivability::no_within_bounds);

  // both classes are infinite, so the length bound bites
  auto cut = derivable(w("x2"), w("x2y"), {Identity::parse("x2=x3")}, {6, 48});
  CHECK(cut.answer == Derivability::unknown);
  CHECK(cut.length_truncated);
}

TEST_CASE("the two D bases derive each other", "[deduction][derivable]") {
  for (auto const& id : d_basis) {
    auto r = derivable(id, single, {8, 4});
    INFO(id);
    REQUIRE(r.answer == Derivability::yes);
    CHECK(r.derivation->length() <= 4);
    CHECK(check_derivation(*r.derivation, single));
  }
  auto back = derivable(Identity::parse("x3yz=yxzx"), d_basis, {});
  REQUIRE(back.answer == Derivability::yes);
  CHECK(check_derivation(*back.derivation, d_basis));
}

TEST_CASE("derivability is a congruence on samples", "[deduction][derivable][property]") {
  std::mt19937_64 rng(23);
  int             found = 0;
  for (int i = 0; i < 40; ++i) {
    auto u  = random_word(rng, "xy", 4);
    auto vs = one_step_rewrites(u, d_basis, 6);
    for (auto const& v : vs) {
      auto r = derivable(u, v, d_basis, {8, 6});
      if (r.answer != Derivability::yes) {
        continue;
      }
      ++found;
      CHECK(check_derivation(*r.derivation, d_basis));
      auto c  = random_word(rng, "xyz", 3);
      auto rl = derivable(c + u, c + v, d_basis, {8 + c.size(), 6});
      auto rr = derivable(u + c, v + c, d_basis, {8 + c.size(), 6});
      INFO(u << " ~ " << v << " with context " << c);
      CHECK(rl.answer == Derivability::yes);
      CHECK(rr.answer == Derivability::yes);
    }
  }
  CHECK(found > 20);
}

TEST_CASE("derivation search is deterministic", "[deduction][derivable]") {
  auto a = derivable(Identity::parse("x3yz=yxzx"), d_basis, {});
  auto b = derivable(Identity::parse("x3yz=yxzx"), d_basis, {});
  REQUIRE(a.derivation);
  REQUIRE(b.derivation);
  CHECK(a.derivation->words == b.derivation->words);
  CHECK(a.visited == b.visited);
}
