#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "fpg/words.hpp"

using namespace fpg;

namespace {

const std::vector<std::string> kNames{"t", "a", "b"};
constexpr GenId T = 0, A = 1, B = 2;

Letter l(GenId g, int s = 1) { return {g, s}; }

// Oracle: delete the first cancelling pair, repeat until none is left.
std::vector<Letter> naive_reduce(std::vector<Letter> w) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i].cancels(w[i + 1])) {
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
  }
  return w;
}

std::vector<Letter> random_letters(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<GenId> gen(0, 2);
  std::bernoulli_distribution sign;
  std::vector<Letter> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({gen(rng), sign(rng) ? 1 : -1});
  return out;
}

}  // namespace

TEST_CASE("free_reduce examples") {
  CHECK(free_reduce(std::vector{l(A), l(A, -1)}).empty());

  const Word w{l(T), l(A), l(T, -1), l(A, -1), l(A, -1)};
  CHECK(w.size() == 5);
  CHECK(format_word(w, kNames) == "t a t^-1 a^-2");

  CHECK(free_reduce(std::vector{l(T), l(T, -1), l(A), l(B), l(B, -1), l(A, -1)}).empty());
}

TEST_CASE("free_reduce agrees with the naive oracle and is idempotent") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto raw = random_letters(rng, rng() % 30);
    const Word w = free_reduce(raw);
    CHECK(w.letters() == naive_reduce(raw));
    CHECK(free_reduce(w.letters()) == w);
    CHECK(w.size() <= raw.size());
  }
}

TEST_CASE("cyclic_reduce") {
  SUBCASE("single conjugation layer") {
    const auto r = cyclic_reduce(Word{l(A), l(B), l(A, -1)});
    CHECK(r.core == Word{l(B)});
    CHECK(r.conjugator == Word{l(A)});
  }
  SUBCASE("fixed point") {
    const Word w{l(T), l(A), l(T, -1), l(A, -1), l(A, -1)};
    const auto r = cyclic_reduce(w);
    CHECK(r.core == w);
    CHECK(r.conjugator.empty());
  }
  SUBCASE("t^2 a t^-2") {
    const auto r = cyclic_reduce(Word{l(T), l(T), l(A), l(T, -1), l(T, -1)});
    CHECK(r.core == Word{l(A)});
    CHECK(r.conjugator == Word::power_of(T, 2));
  }
  SUBCASE("round trip on random words") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
      const Word w(random_letters(rng, rng() % 25));
      const auto r = cyclic_reduce(w);
      CHECK(is_cyclically_reduced(r.core));
      CHECK(r.conjugator * r.core * r.conjugator.inverse() == w);
    }
  }
}

TEST_CASE("exponent_sum") {
  const Word r{l(T), l(A), l(T, -1), l(A, -1), l(A, -1)};
  CHECK(exponent_sum(r, T) == 0);
  CHECK(exponent_sum(r, A) == -1);
  CHECK(exponent_sum(Word(), B) == 0);
}

TEST_CASE("free group laws on random words") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Word x(random_letters(rng, rng() % 12));
    const Word y(random_letters(rng, rng() % 12));
    const Word z(random_letters(rng, rng() % 12));
    CHECK((x * y) * z == x * (y * z));
    CHECK((x * x.inverse()).empty());
    CHECK((x * y).inverse() == y.inverse() * x.inverse());
    for (GenId g : {T, A, B}) {
      CHECK(exponent_sum(x * y, g) == exponent_sum(x, g) + exponent_sum(y, g));
      CHECK(exponent_sum(x.inverse(), g) == -exponent_sum(x, g));
    }
  }
}

TEST_CASE("powers and substitution") {
  const Word ab{l(A), l(B)};
  CHECK(ab.pow(3).size() == 6);
  CHECK(ab.pow(-2) == ab.inverse() * ab.inverse());
  CHECK(ab.pow(0).empty());
  CHECK(Word::power_of(A, -3) == Word{l(A, -1), l(A, -1), l(A, -1)});

  // a -> a b^-1 in a^2 b : (a b^-1)(a b^-1) b = a b^-1 a
  const Word w{l(A), l(A), l(B)};
  const Word s = w.substitute([](GenId g) {
    return g == A ? Word{l(A), l(B, -1)} : Word::power_of(g, 1);
  });
  CHECK(s == Word{l(A), l(B, -1), l(A)});
}

TEST_CASE("rotations and formatting") {
  CHECK(is_cyclic_rotation(Word{l(A), l(B), l(T)}, Word{l(T), l(A), l(B)}));
  CHECK_FALSE(is_cyclic_rotation(Word{l(A), l(B), l(T)}, Word{l(B), l(A), l(T)}));
  CHECK(format_word(Word(), kNames) == "1");
  CHECK(format_word(Word{l(B, -1)}, kNames) == "b^-1");
  CHECK(is_valid_generator_name("a_1x"));
  CHECK_FALSE(is_valid_generator_name("1a"));
  CHECK_FALSE(is_valid_generator_name("_a"));
  CHECK_FALSE(is_valid_generator_name(""));
}
