#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "fpg/zmaps.hpp"

using namespace fpg;
using fpg::testing::parse;

namespace {

ZHomomorphism z(std::initializer_list<long> v) {
  ZHomomorphism out;
  for (long x : v) out.values.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("check_zmap") {
  const auto tre = parse("x, y | x^2 y^-3");
  CHECK(verify_zmap(tre, z({3, 2})));
  CHECK(verify_zmap(tre, z({-3, -2})));

  const auto bad = check_zmap(tre, z({1, 1}));
  CHECK(bad.not_homomorphism);
  CHECK(bad.relator_images == std::vector<BigInt>{-1});

  const auto f2 = parse("a, b |");
  CHECK(check_zmap(f2, z({2, 4})).not_surjective);
  CHECK(check_zmap(f2, z({2, 4})).gcd == 2);
  CHECK(check_zmap(f2, z({1})).wrong_length);
  CHECK(check_zmap(f2, z({0, 0})).not_surjective);
  CHECK(verify_zmap(f2, z({2, 3})));
}

TEST_CASE("zmap_image") {
  const auto p = parse("a, b |");
  CHECK(zmap_image(z({2, 3}), parse_word("a b^-2 a", p.generators())) == -2);
}

TEST_CASE("find_zmap examples") {
  CHECK(find_zmap(parse("x, y | x^2 y^-3")) == z({3, 2}));
  CHECK_FALSE(find_zmap(parse("a | a^2")).has_value());
  CHECK(find_zmap(parse("a, b |")) == z({1, 0}));
  CHECK(find_zmap(parse("t, a | t a t^-1 a^-2")) == z({1, 0}));
  CHECK(find_zmap(parse("s, u | u^3")) == z({1, 0}));
}

TEST_CASE("find_zmap exists iff b1 > 0") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t g = 1 + rng() % 4;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < g; ++i) names.push_back("g" + std::to_string(i));
    std::vector<Word> rels;
    for (std::size_t j = rng() % 4; j > 0; --j)
      rels.push_back(fpg::testing::random_word(rng, g, 1 + rng() % 8));
    const FinitePresentation p(names, rels);
    const auto eps = find_zmap(p);
    CHECK(eps.has_value() == (abelianization(p).b1 > 0));
    if (eps) CHECK(verify_zmap(p, *eps));
  }
}

TEST_CASE("normalize_stable_letter") {
  SUBCASE("trefoil") {
    const auto p = parse("x, y | x^2 y^-3");
    const auto n = normalize_stable_letter(p, z({3, 2}));
    CHECK(verify_zmap(n.presentation, n.transported));
    BigInt ones = 0;
    for (std::size_t i = 0; i < n.transported.values.size(); ++i) {
      if (i == n.stable.id) {
        CHECK(n.transported.values[i] == 1);
      } else {
        CHECK(n.transported.values[i] == 0);
      }
    }
    CHECK(abelianized_invariants_preserved(p, n.presentation));
    for (const auto& r : n.presentation.relators()) CHECK(exponent_sum(r, n.stable.id) == 0);

    // Replaying the logged moves reproduces the output.
    FinitePresentation q = p;
    ZHomomorphism e = z({3, 2});
    for (const auto& mv : n.moves) {
      e = transport_zmap(q, e, mv);
      q = apply_tietze(q, mv);
    }
    CHECK(q == n.presentation);
    CHECK(e == n.transported);
  }
  SUBCASE("already normalized") {
    const auto p = parse("a, b |");
    const auto n = normalize_stable_letter(p, z({1, 0}));
    CHECK(n.presentation == p);
    CHECK(n.moves.empty());
    CHECK(n.stable.name == "a");
  }
  SUBCASE("second generator becomes stable") {
    const auto n = normalize_stable_letter(parse("a, b |"), z({0, 1}));
    CHECK(n.stable.name == "b");
    CHECK(n.transported == z({0, 1}));
  }
  SUBCASE("negative value is flipped") {
    const auto p = parse("t, a | t a t^-1 a^-2");
    const auto n = normalize_stable_letter(p, z({-1, 0}));
    CHECK(n.transported == z({1, 0}));
    CHECK(abelianized_invariants_preserved(p, n.presentation));
  }
  SUBCASE("invalid maps throw") {
    CHECK_THROWS_AS(normalize_stable_letter(parse("x, y | x^2 y^-3"), z({1, 1})),
                    NotHomomorphism);
    CHECK_THROWS_AS(normalize_stable_letter(parse("a, b |"), z({2, 2})), NotSurjective);
  }
}

TEST_CASE("normalization on random presentations") {
  std::mt19937 rng(17);
  int done = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t g = 1 + rng() % 4;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < g; ++i) names.push_back("g" + std::to_string(i));
    std::vector<Word> rels;
    for (std::size_t j = rng() % 3; j > 0; --j)
      rels.push_back(fpg::testing::random_word(rng, g, 1 + rng() % 8));
    const FinitePresentation p(names, rels);
    const auto eps = find_zmap(p);
    if (!eps) continue;
    const auto n = normalize_stable_letter(p, *eps);
    CHECK(verify_zmap(n.presentation, n.transported));
    CHECK(n.transported.values[n.stable.id] == 1);
    for (const auto& r : n.presentation.relators()) CHECK(exponent_sum(r, n.stable.id) == 0);
    CHECK(abelianized_invariants_preserved(p, n.presentation));
    CHECK(n.presentation.generator_count() == p.generator_count());
    ++done;
  }
  CHECK(done > 50);
}
