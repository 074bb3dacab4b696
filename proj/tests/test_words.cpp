#include <catch_amalgamated.hpp>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "monvar/words.hpp"

using namespace monvar;

namespace {

  Word w(char const* text) {
    return Word::parse(text);
  }

  Word const p = w("y2xt2z2y2t2xz2");
  Word const q = w("y2xt2z2xy2t2xz2");

  Word random_word(std::mt19937_64& rng, std::string_view alphabet, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::string                                s;
    for (auto n = len(rng); n > 0; --n) {
      s += alphabet[pick(rng)];
    }
    return Word::trusted(s);
  }

  // Independent ≼ oracle: try every assignment of nonempty factors of v to
  // the letters of u and look for ξ(u) as a factor of v.
  bool embeds_oracle(std::string const& u, std::string const& v) {
    std::set<std::string> factors;
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j <= v.size(); ++j) {
        factors.insert(v.substr(i, j - i));
      }
    }
    std::vector<std::string> pool(factors.begin(), factors.end());
    if (pool.empty()) {
      return false;
    }
    std::vector<char>        letters;
    for (char c : u) {
      if (std::find(letters.begin(), letters.end(), c) == letters.end()) {
        letters.push_back(c);
      }
    }
    std::vector<std::size_t> choice(letters.size(), 0);
    while (true) {
      std::string image;
      for (char c : u) {
        auto k = std::find(letters.begin(), letters.end(), c) - letters.begin();
        image += pool[choice[k]];
        if (image.size() > v.size()) {
          break;
        }
      }
      if (v.find(image) != std::string::npos) {
        return true;
      }
      std::size_t i = 0;
      while (i < choice.size() && ++choice[i] == pool.size()) {
        choice[i++] = 0;
      }
      if (i == choice.size()) {
        return false;
      }
    }
  }

}  // namespace

TEST_CASE("word text round-trips through the canonical form", "[words][parse]") {
  CHECK(w("y2xt2z2").letters() == "yyxttzz");
  CHECK(w("yyxttzz").to_string() == "y2xt2z2");
  CHECK(w("1").empty());
  CHECK(Word().to_string() == "1");
  CHECK(w(" x ^3 y ").letters() == "xxxy");
  CHECK(w("x12").size() == 12);
  for (auto text : {"x", "x2y", "y2xt2z2xy2t2xz2", "abcabc", "z10"}) {
    CHECK(w(text).to_string() == text);
  }
}

TEST_CASE("malformed word text is rejected", "[words][parse]") {
  CHECK_THROWS_AS(w(""), ParseError);
  CHECK_THROWS_AS(w("x0"), ParseError);
  CHECK_THROWS_AS(w("X"), ParseError);
  CHECK_THROWS_AS(w("2x"), ParseError);
  CHECK_THROWS_AS(w("x^"), ParseError);
  CHECK_THROWS_AS(w("x1y1z-"), ParseError);
  CHECK_THROWS_AS(Word("ab1"), ParseError);
}

TEST_CASE("identities parse with either equality sign and chains expand", "[words][parse]") {
  auto id = Identity::parse("x2y = yx2");
  CHECK(id.lhs == w("x2y"));
  CHECK(id.rhs == w("yx2"));
  CHECK(id.to_string() == "x2y=yx2");
  CHECK(Identity::parse("x ≈ x2") == Identity(w("x"), w("x2")));
  CHECK(Identity::parse("x=x").is_trivial());
  CHECK(Identity::parse("xy=yx").same_as(Identity::parse("yx=xy")));

  auto chain = parse_identity_chain("x2y = xyx = yx2");
  REQUIRE(chain.size() == 2);
  CHECK(chain[0] == Identity(w("x2y"), w("xyx")));
  CHECK(chain[1] == Identity(w("xyx"), w("yx2")));

  CHECK_THROWS_AS(Identity::parse("xy"), ParseError);
  CHECK_THROWS_AS(Identity::parse("x=y=z"), ParseError);
}

TEST_CASE("shortlex order compares length first", "[words]") {
  CHECK(shortlex_less(w("z"), w("aa")));
  CHECK(shortlex_less(w("ab"), w("ba")));
  CHECK_FALSE(shortlex_less(w("ab"), w("ab")));
  CHECK(w("aa") < w("z"));
}

TEST_CASE("content", "[words]") {
  CHECK(content(Word()).empty());
  CHECK(content(p) == LetterSet{'x', 'y', 'z', 't'});
  CHECK(content(w("xyxzy")) == LetterSet{'x', 'y', 'z'});
  CHECK(content(p).to_string() == "{t,x,y,z}");
}

TEST_CASE("occurrence counts", "[words]") {
  CHECK(occ(q, 'x') == 3);
  CHECK(occ(Word(), 'x') == 0);
  CHECK(occ(p, 'y') == 4);
  CHECK(occ(p, 'z') == 4);
  CHECK(occ(p, 't') == 4);
  CHECK(occ(p, 'x') == 2);
}

TEST_CASE("deleting letters", "[words]") {
  CHECK(delete_letters(p, {'y', 't'}) == w("xz2xz2"));
  CHECK(delete_letters(p, {}) == p);
  CHECK(delete_letters(p, content(p)).empty());
}

TEST_CASE("initial part", "[words]") {
  CHECK(initial_part(w("xyxzy")) == w("xyz"));
  CHECK(initial_part(w("xy")) == w("xy"));
  CHECK(initial_part(w("xyx")) == w("xy"));
  CHECK(initial_part(Word()).empty());
  CHECK(initial_part(q) == w("yxtz"));
}

TEST_CASE("substitutions", "[words]") {
  Substitution xi;
  xi.set('x', w("y"));
  CHECK(apply_substitution(xi, w("x2")) == w("y2"));

  Substitution erase;
  erase.set('x', Word());
  CHECK(apply_substitution(erase, w("x2y")) == w("y"));

  Substitution keep_x;
  keep_x.set('y', Word()).set('z', Word());
  CHECK(apply_substitution(keep_x, w("x3yz")) == w("x3"));
  CHECK(keep_x.image('x') == w("x"));
  CHECK_FALSE(keep_x.is_explicit('x'));
  CHECK(keep_x.to_string() == "{y->1, z->1}");

  Substitution semi(SubstitutionKind::semigroup);
  semi.set('x', Word());
  CHECK_THROWS_AS(apply_substitution(semi, w("x2y")), KindViolation);
  // unused letters may have empty images
  CHECK(apply_substitution(semi, w("y2")) == w("y2"));
}

TEST_CASE("embedding quasi-order", "[words][embeds]") {
  for (auto v : {"x", "xy", "y2xt2z2", "abcabc"}) {
    CHECK(embeds(w("x"), w(v)));
  }
  CHECK(embeds(w("xy"), w("yx")));
  CHECK_FALSE(embeds(w("x2"), w("xy")));
  CHECK_FALSE(embeds_oracle("xx", "xy"));
  CHECK(embeds(w("xyx"), w("abcab")));
  CHECK_FALSE(embeds(w("xyx"), w("abc")));
  CHECK_THROWS_AS(embeds(Word(), w("xy")), DomainError);
}

TEST_CASE("embedding agrees with a factor-assignment oracle", "[words][embeds][property]") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto u = random_word(rng, "xy", 3);
    auto v = random_word(rng, "ab", 6);
    if (u.empty()) {
      continue;
    }
    INFO(u << " vs " << v);
    CHECK(embeds(u, v) == embeds_oracle(u.letters(), v.letters()));
  }
}

TEST_CASE("embedding is reflexive and transitive on samples", "[words][embeds][property]") {
  std::mt19937_64   rng(12);
  std::vector<Word> sample;
  while (sample.size() < 25) {
    auto u = random_word(rng, "xyz", 5);
    if (!u.empty()) {
      sample.push_back(u);
    }
  }
  for (auto const& a : sample) {
    CHECK(embeds(a, a));
    for (auto const& b : sample) {
      if (!embeds(a, b)) {
        continue;
      }
      for (auto const& c : sample) {
        if (embeds(b, c)) {
          CHECK(embeds(a, c));
        }
      }
    }
  }
}

TEST_CASE("words of equal length and content with distinct multiplicities form an anti-chain",
          "[words][embeds]") {
  // permutations of x y2 z3: a nonerasing image of the same length is a
  // letter renaming, which must preserve the occurrence counts
  std::string base = "xyyzzz";
  std::sort(base.begin(), base.end());
  std::vector<Word> words;
  do {
    words.push_back(Word::trusted(base));
  } while (std::next_permutation(base.begin(), base.end()) && words.size() < 40);
  for (auto const& u : words) {
    for (auto const& v : words) {
      CHECK(embeds(u, v) == (u == v));
    }
  }
}

TEST_CASE("reversal", "[words]") {
  CHECK(reverse(w("xyz")) == w("zyx"));
  CHECK(reverse(Word()).empty());
  CHECK(reverse(w("x2y")) == w("yx2"));
  CHECK(reverse(Identity::parse("x2y=xyx")) == Identity::parse("yx2=xyx"));
}

TEST_CASE("word laws hold on random samples", "[words][property]") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    auto u = random_word(rng, "xyzt", 10);
    auto v = random_word(rng, "xyzt", 10);

    auto ini = initial_part(u);
    CHECK(initial_part(ini) == ini);
    CHECK(content(ini) == content(u));
    CHECK(ini.size() == content(u).size());

    LetterSet X{'x', 'z'}, Y{'y'};
    CHECK(delete_letters(u, X | Y) == delete_letters(delete_letters(u, X), Y));
    CHECK(content(delete_letters(u, X)) == content(u) - X);

    CHECK(reverse(reverse(u)) == u);
    CHECK(reverse(u + v) == reverse(v) + reverse(u));
    CHECK(content(reverse(u)) == content(u));

    Substitution xi;
    xi.set('x', random_word(rng, "xy", 3)).set('y', random_word(rng, "zt", 2));
    auto image = apply_substitution(xi, u + v);
    CHECK(image == apply_substitution(xi, u) + apply_substitution(xi, v));
    for (Letter b : {'x', 'y', 'z', 't'}) {
      std::size_t expected = 0;
      for (Letter a : {'x', 'y', 'z', 't'}) {
        expected += occ(u + v, a) * occ(xi.image(a), b);
      }
      CHECK(occ(image, b) == expected);
    }
  }
}
