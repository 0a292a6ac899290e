#include <doctest.h>

#include <map>
#include <random>

#include "bonded/closure.hpp"
#include "support.hpp"

using namespace bonded;

namespace {

BraidWord W(const char* text, int n, Flavor f = Flavor::monoid()) { return parse_word(text, n, f); }

// Fingerprints computed by an independent permutation oracle (composition of
// transpositions, positional strand tracking, brute-force bond relabeling).
struct Fixture {
  const char* word;
  int strands;
  const char* fingerprint;
};

const Fixture kOracle[] = {
    {"", 2, "c=2;sizes=[1,1];bonds=[];lk=[]"},
    {"s1 s1", 2, "c=2;sizes=[1,1];bonds=[];lk=[1]"},
    {"b3 s1 s2 s3^-1 b2 s3 s1^-1 s3 b1", 4, "c=2;sizes=[1,3];bonds=[0-0,0-0,0-1];lk=[]"},
    {"b2 s5 s4^-1 s3^-1 b7 s4^-1 s2^-1 s4^-1 s1^-1 s2^-1 s3^-1 s6 s5 s4 s3 s2 s1 s7 s6 s5 s4 s3 s2", 8,
     "c=1;sizes=[8];bonds=[0-0,0-0];lk=[]"},
    {"", 3, "c=3;sizes=[1,1,1];bonds=[];lk=[]"},
    {"s1", 2, "c=1;sizes=[2];bonds=[];lk=[]"},
    {"s1 s2 b1 s1^-1 s2 s2 b2", 3, "c=2;sizes=[1,2];bonds=[0-1,0-1];lk=[1]"},
    {"s1 s1 b1 s2 s2 b2 s3 s3^-1", 4, "c=4;sizes=[1,1,1,1];bonds=[0-1,0-2];lk=[1,1]"},
};

// Signed crossings between labeled strands, walking the word with an
// explicit label array, then summed over cycle membership.
std::map<std::pair<int, int>, long> brute_force_linking(const BraidWord& w) {
  const auto cycles = permutation(w).cycles();
  std::vector<int> comp(static_cast<std::size_t>(w.strands));
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (int s : cycles[c]) comp[static_cast<std::size_t>(s - 1)] = static_cast<int>(c);
  }
  std::vector<int> label(static_cast<std::size_t>(w.strands));
  for (int k = 0; k < w.strands; ++k) label[static_cast<std::size_t>(k)] = k;
  std::map<std::pair<int, int>, long> twice;
  for (const auto& g : w.letters) {
    const auto p = static_cast<std::size_t>(g.index - 1);
    const int a = comp[static_cast<std::size_t>(label[p])];
    const int b = comp[static_cast<std::size_t>(label[p + 1])];
    if (a != b) twice[{std::min(a, b), std::max(a, b)}] += g.sign;
    std::swap(label[p], label[p + 1]);
  }
  for (auto& [key, v] : twice) v /= 2;
  return twice;
}

}  // namespace

TEST_CASE("close examples") {
  const ClosureSummary id3 = close(BraidWord::identity(3));
  CHECK(id3.component_count == 3);
  for (const auto& row : id3.linking_matrix) {
    for (long v : row) CHECK(v == 0);
  }
  const ClosureSummary s1 = close(W("s1", 2));
  CHECK(s1.component_count == 1);
  CHECK(s1.writhe == std::vector<long>{1});

  const ClosureSummary fig6 = close(W(test::kFig6, 4));
  CHECK(fig6.component_count == 2);
  CHECK(fig6.components == std::vector<std::vector<int>>{{1, 4, 3}, {2}});
  // b3 comes first and joins strands 3 and 4, both on the 3-cycle.
  REQUIRE(fig6.bond_incidence.size() == 3);
  CHECK(fig6.bond_incidence[0] == std::pair<int, int>{0, 0});

  const ClosureSummary hopf = close(W("s1 s1", 2));
  CHECK(hopf.linking_matrix == std::vector<std::vector<long>>{{0, 1}, {1, 0}});
  const ClosureSummary neg = close(W("s1^-1 s1^-1 s1^-1 s1^-1", 2, Flavor::group()));
  CHECK(neg.linking_matrix[0][1] == -2);
}

TEST_CASE("fingerprints match the permutation oracle") {
  for (const auto& f : kOracle) {
    CAPTURE(f.word);
    CHECK(closure_invariant_fingerprint(W(f.word, f.strands)) == f.fingerprint);
  }
  CHECK(stable_fingerprint(close(W("s1 s1", 2))) == "c=2;bonds=[];lk=[1]");
}

TEST_CASE("inverse bonds count with sign") {
  const Flavor g = Flavor::group();
  CHECK(closure_invariant_fingerprint(W("b1^-1", 3, g)) == "c=3;sizes=[1,1,1];bonds=[0-1^-1];lk=[]");
  CHECK(closure_invariant_fingerprint(W("b1 b1^-1 s1", 3, g)) == "c=2;sizes=[1,2];bonds=[];lk=[]");
  CHECK(closure_invariant_fingerprint(W("b1 b2^-1", 3, g)) == "c=3;sizes=[1,1,1];bonds=[0-1,0-2^-1];lk=[]");
  const ClosureSummary s = close(W("b1 b2^-1", 3, g));
  CHECK(s.bond_signs == std::vector<int>{1, -1});
}

TEST_CASE("bond incidence is independent of component labels") {
  // Bond pairs are compared up to relabeling of components.
  CHECK(closure_invariant_fingerprint(W("b1 s2 s2", 3)) == closure_invariant_fingerprint(W("s1 s1 b2", 3)));
}

TEST_CASE("property: linking numbers agree with a brute-force count") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 100; ++k) {
    const int n = test::uniform(rng, 2, 6);
    BraidWord w{n, Flavor::group(), {}};
    const int len = test::uniform(rng, 0, 14);
    for (int j = 0; j < len; ++j) {
      w.letters.push_back(Generator::s(test::uniform(rng, 1, n - 1), test::uniform(rng, 0, 1) ? 1 : -1));
    }
    const ClosureSummary s = close(w);
    const auto oracle = brute_force_linking(w);
    for (int a = 0; a < s.component_count; ++a) {
      CHECK(s.linking_matrix[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] == 0);
      for (int b = a + 1; b < s.component_count; ++b) {
        const auto it = oracle.find({a, b});
        const long expected = it == oracle.end() ? 0 : it->second;
        CHECK(s.linking_matrix[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == expected);
        CHECK(s.linking_matrix[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] == expected);
      }
    }
  }
}

TEST_CASE("property: relation rewrites preserve the closure") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 80; ++k) {
    const Flavor f = test::all_flavors()[static_cast<std::size_t>(k % 4)];
    const BraidWord w = test::random_word(rng, test::uniform(rng, 2, 5), test::uniform(rng, 1, 10), f);
    const std::string fp = closure_invariant_fingerprint(w);
    for (const BraidWord& v : relation_neighbors(w)) CHECK(closure_invariant_fingerprint(v) == fp);
  }
}

TEST_CASE("summary text") {
  const std::string text = close(W("s1 s1 b1", 2)).to_string();
  CHECK(text.find("components: 2") == 0);
  CHECK(text.find("#0: 0-1") != std::string::npos);
}
