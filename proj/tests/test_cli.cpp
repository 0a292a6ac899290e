#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "bonded/cli.hpp"
#include "bonded/error.hpp"
#include "support.hpp"

using namespace bonded;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("reduced prints the paper's 1x1 image") {
  const Result r = run({"reduced", "--n", "2", "--word", "s1"});
  CHECK(r.code == 0);
  CHECK(r.out == "[[-t]]\n");
  CHECK(run({"reduced", "--strands", "2", "--word", "b1"}).out == "[[-t*z - z + 1]]\n");
  CHECK(run({"burau", "--n", "2", "--word", "s1"}).out == "[[-t + 1, t], [1, 0]]\n");
}

TEST_CASE("verify passes for a strand range") {
  const Result r = run({"verify", "--n", "2..5", "--flavor", "rigid-monoid"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("R3 n=4 i=1 kind=full PASS") != std::string::npos);
  CHECK(r.out.find("MK3 n=5") != std::string::npos);
  CHECK(r.out.rfind("verify rigid-monoid n=2..5: PASS\n") != std::string::npos);
}

TEST_CASE("closure of the Fig. 17 word") {
  const Result r = run({"closure", "--n", "8", "--word", test::kFig17});
  CHECK(r.code == 0);
  CHECK(r.out.find("fingerprint: c=1;sizes=[8];bonds=[0-0,0-0];lk=[]\n") != std::string::npos);
  CHECK(r.out.find("components: 1") == 0);
}

TEST_CASE("invariant command") {
  const Result r = run({"invariant", "--n", "2", "--word", "s1 s1 s1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("alexander: t^2 - t + 1\n") != std::string::npos);
  CHECK(r.out.find("char_poly reduced: x + t^3\n") != std::string::npos);
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"reduced", "--word", "s1"}).code == 2);  // missing strand count
  const Result flavor = run({"closure", "--n", "3", "--word", "k2"});
  CHECK(flavor.code == 2);
  CHECK(flavor.err.find("error:") == 0);
  const Result syntax = run({"closure", "--n", "3", "--word", "s1 q2"});
  CHECK(syntax.code == 2);
  CHECK(syntax.err.find("position 3") != std::string::npos);
  CHECK(run({"closure", "--n", "3", "--word", "s3"}).code == 2);
  CHECK(run({"closure", "--n", "2..4", "--word", "s1"}).code == 2);
  CHECK(run({"verify", "--n", "5..2"}).code == 2);
  CHECK(run({"verify", "--flavor", "spicy"}).code == 2);
  CHECK(run({"reduced", "--n", "1", "--word", ""}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("json output mirrors the text output") {
  const Result r = run({"closure", "--n", "4", "--word", test::kFig6, "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["component_count"] == 2);
  CHECK(j["fingerprint"] == "c=2;sizes=[1,3];bonds=[0-0,0-0,0-1];lk=[]");
  CHECK(j["input"]["word"] == test::kFig6);

  const auto m = nlohmann::json::parse(run({"reduced", "--n", "2", "--word", "s1", "--json"}).out);
  CHECK(m["matrix"][0][0] == "-t");

  const auto v = nlohmann::json::parse(run({"verify", "--n", "2..3", "--json"}).out);
  CHECK(v["pass"] == true);
  CHECK(v["results"].size() == 2);

  const auto inv = nlohmann::json::parse(run({"invariant", "--n", "2", "--word", "b1", "--json"}).out);
  CHECK(inv["alexander"]["value"] == "z");
  CHECK(inv["alexander"]["raw"] == "-t*z - z");

  const auto walk = nlohmann::json::parse(
      run({"markov-walk", "--n", "3", "--word", "s1 b2", "--walks", "3", "--steps", "5", "--json"}).out);
  CHECK(walk["report"]["pass"] == true);
  CHECK(walk["trace"].size() == 5);
}

TEST_CASE("markov commands") {
  const Result walk = run({"markov-walk", "--n", "4", "--word", test::kFig6, "--seed", "3", "--steps", "8",
                           "--walks", "3", "--allow-stab"});
  CHECK(walk.code == 0);
  CHECK(walk.out.find("overall: PASS") != std::string::npos);

  const Result eq = run({"markov-equiv", "--n", "2", "--word", "s1", "--target", "s1 s2", "--target-n", "3"});
  CHECK(eq.code == 0);
  CHECK(eq.out.find("equivalent: certificate of 1 steps") == 0);

  const auto j = nlohmann::json::parse(
      run({"markov-equiv", "--n", "3", "--word", "s1 b2 s2", "--target", "s2 s1 b2 s2 s1^-1", "--json"}).out);
  CHECK(j["found"] == true);
  CHECK(j["certificate"].is_array());

  const Result none = run({"markov-equiv", "--n", "2", "--word", "s1 s1", "--target", "", "--max-states", "500"});
  CHECK(none.code == 1);
  CHECK(none.out.find("no certificate within bounds") == 0);
}

TEST_CASE("identical invocations give identical output") {
  const std::vector<std::string> args{"markov-walk", "--n", "3", "--word", "s1 b2 s2^-1 b1", "--seed", "9"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> eq{"markov-equiv", "--n", "3", "--word", "s2 b1", "--target", "s1 s2 b1 s1^-1"};
  CHECK(run(eq).out == run(eq).out);
}

TEST_CASE("strand range parsing") {
  CHECK(cli::parse_strand_range("4") == std::pair<int, int>{4, 4});
  CHECK(cli::parse_strand_range("2..6") == std::pair<int, int>{2, 6});
  CHECK_THROWS_AS(cli::parse_strand_range("0"), Error);
  CHECK_THROWS_AS(cli::parse_strand_range("3..x"), Error);
  CHECK_THROWS_AS(cli::parse_strand_range(""), Error);
}
