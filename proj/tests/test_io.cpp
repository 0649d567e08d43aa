#include <doctest.h>

#include "fixtures.hpp"
#include "fpg/io.hpp"

using namespace fpg;
using fpg::testing::parse;

namespace {

template <class E>
std::size_t error_position(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const E& e) {
    return e.position();
  }
  FAIL("no error raised for: " << text);
  return 0;
}

}  // namespace

TEST_CASE("parse_word") {
  const std::vector<std::string> names{"a", "b"};
  CHECK(parse_word("a b^-1", names) == Word{{0, 1}, {1, -1}});
  CHECK(parse_word("a*a*b", names) == Word{{0, 1}, {0, 1}, {1, 1}});
  CHECK(parse_word("a^3 a^-3", names).empty());
  CHECK(parse_word("1", names).empty());
  CHECK_THROWS_AS(parse_word("a^0", names), SyntaxError);
  CHECK_THROWS_AS(parse_word("c", names), UnknownGenerator);
  CHECK_THROWS_AS(parse_word("a^", names), SyntaxError);
  CHECK_THROWS_AS(parse_word("a^x", names), SyntaxError);
  CHECK_THROWS_AS(parse_word("a^99999999", names), SyntaxError);
}

TEST_CASE("parse_presentation forms") {
  const auto inline_form = parse("t, a | t a t^-1 a^-2");
  const auto line_form = parse("# comment\ngens: t, a\n\nrels: t a t^-1 a^-2\n");
  CHECK(inline_form == line_form);
  CHECK(parse("a, b |").relator_count() == 0);
  CHECK(parse("a, b | a ; b").relator_count() == 2);
}

TEST_CASE("parse errors report positions") {
  CHECK(error_position<UnknownGenerator>("a, b | a c") == 9);
  CHECK(error_position<DuplicateGenerator>("a, a |") == 3);
  CHECK_THROWS_AS(parse_presentation("a b"), SyntaxError);
  CHECK_THROWS_AS(parse_presentation(""), SyntaxError);
  CHECK_THROWS_AS(parse_presentation("rels: a"), SyntaxError);
}

TEST_CASE("parse warnings") {
  const auto r = parse_presentation("a, b | a a^-1 ; b");
  CHECK(r.presentation.relator_count() == 1);
  CHECK_FALSE(r.warnings.empty());
  CHECK(parse_presentation("a, b | b").warnings.empty());
}

TEST_CASE("text round-trip") {
  for (const auto& f : fpg::testing::fixtures()) {
    const auto text = presentation_to_text(f.presentation);
    CHECK(parse(text) == f.presentation);
  }
  CHECK(presentation_to_text(parse("t, a | t a t^-1 a^-2")) ==
        "gens: t a\nrels: t a t^-1 a^-2\n");
}

TEST_CASE("zmap and rational parsing") {
  const auto p = parse("t, a, b |");
  CHECK(parse_zmap("t=1,a=0", p).values == std::vector<BigInt>{1, 0, 0});
  CHECK(parse_zmap("b=-4", p).values == std::vector<BigInt>{0, 0, -4});
  CHECK_THROWS_AS(parse_zmap("q=1", p), UnknownGenerator);
  CHECK_THROWS_AS(parse_zmap("t=x", p), SyntaxError);
  CHECK_THROWS_AS(parse_zmap("t=1,t=2", p), DuplicateGenerator);

  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK_THROWS_AS(parse_rational("1/0"), SyntaxError);
  CHECK_THROWS_AS(parse_rational("abc"), SyntaxError);
}

TEST_CASE("decimal strings") {
  CHECK(to_decimal(BigInt("123456789012345678901234567890")) ==
        "123456789012345678901234567890");
  CHECK(to_decimal(Rational(-6, 4)) == "-3/2");
  CHECK(to_decimal(-5L) == "-5");
  CHECK(to_decimal(std::size_t{7}) == "7");
}

TEST_CASE("JSON round-trips") {
  const auto p = fpg::testing::genus2();
  const Json pj = presentation_to_json(p);
  CHECK(pj["schema_version"] == "1");
  CHECK(presentation_from_json(Json::parse(pj.dump())) == p);

  const Word w = parse_word("a b^-2 c", p.generators());
  const Json wj = word_to_json(w, p.generators());
  CHECK(wj.dump() == R"([["a","1"],["b","-1"],["b","-1"],["c","1"]])");
  CHECK(word_from_json(wj, p.generators()) == w);

  const ZHomomorphism eps{{1, 0, -2, 7}};
  CHECK(zmap_from_json(zmap_to_json(eps, p), p) == eps);

  const std::vector<TietzeMove> moves{
      tietze::AddGenerator{"e", w},
      tietze::SubstituteGenerator{0, parse_word("a b", p.generators())},
      tietze::RemoveGenerator{1, 0},
      tietze::AddRedundantRelator{w, DerivationWitness{{w, 0, -1}}},
      tietze::RemoveRedundantRelator{0, {}},
  };
  for (const auto& mv : moves) {
    const Json mj = move_to_json(mv, p);
    CHECK(mj["move"] == std::string(move_kind(mv)));
    CHECK(move_to_json(move_from_json(mj, p), p) == mj);
  }
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS(presentation_from_json(Json::parse(R"({"generators":["a"],"relators":[]})")));
  CHECK_THROWS(presentation_from_json(
      Json::parse(R"({"schema_version":"2","generators":["a"],"relators":[]})")));
  CHECK_THROWS(word_from_json(Json::parse(R"([["z","1"]])"), {"a"}));
  CHECK_THROWS(word_from_json(Json::parse(R"([["a",1]])"), {"a"}));
}
