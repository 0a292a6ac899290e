#include <doctest.h>

#include <algorithm>
#include <random>

#include "bonded/error.hpp"
#include "bonded/words.hpp"
#include "support.hpp"

using namespace bonded;

namespace {

BraidWord W(const char* text, int n, Flavor f = Flavor::monoid()) { return parse_word(text, n, f); }

// Deletes one randomly chosen adjacent inverse pair at a time.
BraidWord random_order_reduce(BraidWord w, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::size_t> spots;
    for (std::size_t k = 0; k + 1 < w.letters.size(); ++k) {
      if (w.letters[k + 1] == w.letters[k].inverse()) spots.push_back(k);
    }
    if (spots.empty()) return w;
    const std::size_t at = spots[rng() % spots.size()];
    w.letters.erase(w.letters.begin() + static_cast<std::ptrdiff_t>(at),
                    w.letters.begin() + static_cast<std::ptrdiff_t>(at + 2));
  }
}

}  // namespace

TEST_CASE("validate examples") {
  CHECK(validate(BraidWord{4, Flavor::monoid(), {Generator::b(3), Generator::s(1)}}).empty());
  const auto kink = validate(BraidWord{2, Flavor::monoid(), {Generator::k(1)}});
  REQUIRE(kink.size() == 1);
  CHECK(kink[0].position == 0);
  CHECK(kink[0].message.find("kink") != std::string::npos);
  const auto anti = validate(BraidWord{2, Flavor::monoid(), {Generator::b(1, -1)}});
  REQUIRE(anti.size() == 1);
  CHECK(anti[0].message.find("inverse") != std::string::npos);
  const auto several = validate(BraidWord{3, Flavor::monoid(), {Generator::s(3), Generator::s(1), Generator::k(0)}});
  CHECK(several.size() >= 2);
  CHECK_THROWS_AS(require_valid(BraidWord{2, Flavor::monoid(), {Generator::k(1)}}), FlavorError);
  CHECK_THROWS_AS(require_valid(BraidWord{2, Flavor::monoid(), {Generator::s(2)}}), RangeError);
}

TEST_CASE("free_reduce examples") {
  CHECK(free_reduce(W("s1 s1^-1", 2)).empty());
  CHECK(free_reduce(W("b1 b1^-1", 2, Flavor::group())).empty());
  CHECK(free_reduce(W("s1 b2 s2 s2^-1 b2^-1 s1^-1", 3, Flavor::group())).empty());
  CHECK(free_reduce(W("s1 b2 s2 s2^-1 b2^-1 s2", 3, Flavor::group())) == W("s1 s2", 3, Flavor::group()));
  CHECK(free_reduce(W("s1 s2^-1 s1", 3)) == W("s1 s2^-1 s1", 3));
}

TEST_CASE("property: free reduction is confluent") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 200; ++k) {
    const Flavor f = test::all_flavors()[static_cast<std::size_t>(k % 4)];
    // Small alphabets produce many cancellations.
    const BraidWord w = test::random_word(rng, 3, test::uniform(rng, 0, 14), f);
    const BraidWord stack = free_reduce(w);
    CHECK(free_reduce(stack) == stack);
    for (int order = 0; order < 3; ++order) CHECK(random_order_reduce(w, rng) == stack);
  }
}

TEST_CASE("relation_neighbors examples") {
  CHECK(relation_neighbors(W("s1 s3", 4)) == std::vector<BraidWord>{W("s3 s1", 4)});
  CHECK(relation_neighbors(W("s1 b1", 2)) == std::vector<BraidWord>{W("b1 s1", 2)});
  const auto m3 = relation_neighbors(W("s2 s1 b2", 3));
  CHECK(std::find(m3.begin(), m3.end(), W("b1 s2 s1", 3)) != m3.end());
  CHECK(m3 == std::vector<BraidWord>{W("b1 s2 s1", 3)});
  const auto r3 = relation_neighbors(W("s1 s2 s1", 3));
  CHECK(std::find(r3.begin(), r3.end(), W("s2 s1 s2", 3)) != r3.end());
  const auto mk = relation_neighbors(W("s1 s2 k1", 3, Flavor::rigid_monoid()));
  CHECK(std::find(mk.begin(), mk.end(), W("k2 s1 s2", 3, Flavor::rigid_monoid())) != mk.end());
  const auto bk = relation_neighbors(W("b1 k3", 4, Flavor::rigid_monoid()));
  CHECK(bk == std::vector<BraidWord>{W("k3 b1", 4, Flavor::rigid_monoid())});
  // Deletions of inverse pairs are rewrites too.
  const auto r1 = enumerate_rewrites(W("s1 s1^-1", 2));
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].relation == "R1");
  CHECK(relation_neighbors(W("s1 s1^-1", 2), NeighborOptions{true}).size() > 1);
}

TEST_CASE("property: relation_neighbors is symmetric and preserves the permutation") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 60; ++k) {
    const Flavor f = test::all_flavors()[static_cast<std::size_t>(k % 4)];
    const int n = test::uniform(rng, 2, 5);
    const BraidWord w = test::random_word(rng, n, test::uniform(rng, 1, 8), f);
    for (const Rewrite& r : enumerate_rewrites(w)) {
      const BraidWord v = apply_rewrite(w, r);
      CHECK(permutation(v) == permutation(w));
      if (r.from.size() == r.to.size()) {
        const auto back = relation_neighbors(v);
        CHECK(std::find(back.begin(), back.end(), w) != back.end());
        CHECK(apply_rewrite(v, r.reversed()) == w);
      }
    }
  }
}

TEST_CASE("apply_rewrite rejects a rewrite that does not match") {
  const BraidWord w = W("s1 s3", 4);
  Rewrite bogus{"R2", 0, {Generator::s(1), Generator::s(2)}, {Generator::s(2), Generator::s(1)}};
  CHECK_THROWS_AS(apply_rewrite(w, bogus), MoveError);
  Rewrite fake{"R2", 0, {Generator::s(1), Generator::s(3)}, {Generator::s(2), Generator::s(2)}};
  CHECK_THROWS_AS(apply_rewrite(w, fake), MoveError);
}

TEST_CASE("permutation examples") {
  CHECK(permutation(BraidWord::identity(5)) == Permutation::identity(5));
  CHECK(permutation(W("s1", 2)).images == std::vector<int>{1, 0});
  const Permutation fig6 = permutation(W(test::kFig6, 4));
  CHECK(fig6.cycles() == std::vector<std::vector<int>>{{1, 4, 3}, {2}});
  CHECK(permutation(W(test::kFig17, 8)).cycles() == std::vector<std::vector<int>>{{1, 6, 3, 5, 8, 2, 4, 7}});
}

TEST_CASE("property: permutation is a homomorphism") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const int n = test::uniform(rng, 2, 6);
    const Flavor f = test::all_flavors()[static_cast<std::size_t>(k % 4)];
    const BraidWord u = test::random_word(rng, n, test::uniform(rng, 0, 8), f);
    const BraidWord v = test::random_word(rng, n, test::uniform(rng, 0, 8), f);
    CHECK(permutation(concat(u, v)) == permutation(u).then(permutation(v)));
  }
}

TEST_CASE("concat and invert") {
  const Flavor g = Flavor::group();
  CHECK(free_reduce(concat(W("s1", 2, g), W("s1^-1", 2, g))).empty());
  CHECK(invert(W("s1 s2", 3, g)) == W("s2^-1 s1^-1", 3, g));
  CHECK(invert(W("b1 k2^-1", 3, Flavor::rigid_group())) == W("k2 b1^-1", 3, Flavor::rigid_group()));
  CHECK_THROWS_AS(invert(W("b1", 2)), FlavorError);
  CHECK_THROWS_AS(concat(W("s1", 2), W("s1", 2, g)), FlavorError);
  CHECK_THROWS_AS(concat(W("s1", 2), W("s1", 3)), Error);
}

TEST_CASE("parse_word") {
  const BraidWord fig6 = W(test::kFig6, 4);
  CHECK(fig6.length() == 9);
  CHECK(fig6.letters[0] == Generator::b(3));
  CHECK(fig6.letters[3] == Generator::s(3, -1));
  CHECK(fig6.to_string() == test::kFig6);
  CHECK(W("", 3) == BraidWord::identity(3));
  CHECK(W("   ", 3).empty());
  CHECK_THROWS_AS(W("k2", 3), FlavorError);
  CHECK_THROWS_AS(W("b1^-1", 2), FlavorError);
  CHECK_THROWS_AS(W("s3", 3), RangeError);
  CHECK_THROWS_AS(W("s0", 3), RangeError);
  try {
    W("s1 x2", 3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
  CHECK_THROWS_AS(W("s1^2", 3), ParseError);
  CHECK_THROWS_AS(W("s", 3), ParseError);
  CHECK_THROWS_AS(W("s1s2", 3), ParseError);
  CHECK(Flavor::parse("rigid-group") == Flavor::rigid_group());
  CHECK_THROWS_AS(Flavor::parse("rigid"), Error);
}

TEST_CASE("property: print then parse is the identity") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    const Flavor f = test::all_flavors()[static_cast<std::size_t>(k % 4)];
    const int n = test::uniform(rng, 2, 9);
    const BraidWord w = test::random_word(rng, n, test::uniform(rng, 0, 12), f);
    CHECK(parse_word(w.to_string(), n, f) == w);
  }
}
