#include <doctest.h>

#include <sstream>

#include "fpg/cli.hpp"
#include "fpg/io.hpp"

using namespace fpg;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"parse", "a, b | a b"}).code == cli::kOk);
  CHECK(run({"parse", "a, b | a c"}).code == cli::kParseError);
  CHECK(run({"find-z", "a | a^2"}).code == cli::kNoEpimorphism);
  CHECK(run({"certify", "--use-deficiency", "t, a | t a t^-1 a^-2"}).code == cli::kInconclusive);
  CHECK(run({"certify", "--use-deficiency", "a, b, c, d | a b a^-1 b^-1 c d c^-1 d^-1"}).code ==
        cli::kOk);
  CHECK(run({"certify", "--z", "x=1,y=1", "x, y | x^2 y^-3", "--l2-lower-bound", "1"}).code ==
        cli::kFailed);
  CHECK(run({"nonsense"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"cover", "-n", "0", "t, a |"}).code == cli::kUsage);
  CHECK(run({"certify", "--use-deficiency", "--l2-lower-bound", "1", "t |"}).code == cli::kUsage);
  CHECK(run({"parse", "--format", "xml", "t |"}).code == cli::kUsage);
}

TEST_CASE("stdin input") {
  const auto r = run({"abelianize", "-"}, "gens: a, b\nrels: a^2\n");
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("b1") != std::string::npos);
}

TEST_CASE("parse emits canonical JSON") {
  const auto r = run({"parse", "t, a | t a t^-1 a^-2"});
  const auto j = Json::parse(r.out);
  CHECK(j["schema_version"] == "1");
  CHECK(j["generators"] == Json::array({"t", "a"}));
}

TEST_CASE("split and cover") {
  const auto s = Json::parse(run({"split", "t, a | t a t^-1 a^-2"}).out);
  CHECK(s["shift_bound_N"] == "1");
  CHECK(s["rank_bound_M"] == "1");
  const auto c = run({"cover", "-n", "2", "t, a | t a t^-1 a^-2"});
  CHECK(c.code == cli::kOk);
  CHECK(Json::parse(c.out)["presentation"]["generators"] == Json::array({"x", "a_c0", "a_c1"}));
}

TEST_CASE("find-z") {
  const auto r = run({"find-z", "--format", "json", "x, y | x^2 y^-3"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("\"3\"") != std::string::npos);
}

TEST_CASE("betti-growth text") {
  const auto r = run({"betti-growth", "--max-n", "4", "a, b |"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("cyclic-cover Betti growth") != std::string::npos);
  CHECK(r.out.find("5/4") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> invocations{
      {"certify", "--use-deficiency", "--format", "json", "a, b, c, d | a b a^-1 b^-1 c d c^-1 d^-1"},
      {"betti-growth", "--max-n", "5", "--format", "json", "t, a | t a t^-1 a^-2"},
      {"split", "x, y | x^2 y^-3"},
  };
  for (const auto& args : invocations) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
