#pragma once

#include <random>
#include <string>
#include <vector>

#include "fpg/io.hpp"
#include "fpg/presentation.hpp"

namespace fpg::testing {

inline FinitePresentation parse(const std::string& text) {
  return parse_presentation(text).presentation;
}

inline FinitePresentation bs12() { return parse("t, a | t a t^-1 a^-2"); }
inline FinitePresentation free2() { return parse("t, a |"); }
inline FinitePresentation free_ab() { return parse("a, b |"); }
inline FinitePresentation integers() { return parse("t |"); }
inline FinitePresentation genus2() { return parse("a, b, c, d | a b a^-1 b^-1 c d c^-1 d^-1"); }
inline FinitePresentation trefoil() { return parse("x, y | x^2 y^-3"); }
inline FinitePresentation z_squared() { return parse("a, b | a b a^-1 b^-1"); }
inline FinitePresentation cyclic2() { return parse("a | a^2"); }

struct Fixture {
  std::string name;
  FinitePresentation presentation;
};

/// Presentations with b1 >= 1 used across suites.
inline std::vector<Fixture> fixtures() {
  return {{"BS(1,2)", bs12()},
          {"F2", free2()},
          {"Z", integers()},
          {"genus-2", genus2()},
          {"trefoil", trefoil()},
          {"Z^2", z_squared()},
          {"Z*Z/3", parse("s, u | u^3")},
          {"BS(2,3)", parse("t, a | t a^2 t^-1 a^-3")}};
}

inline Word random_word(std::mt19937& rng, std::size_t generators, std::size_t length) {
  std::uniform_int_distribution<GenId> gen(0, static_cast<GenId>(generators - 1));
  std::bernoulli_distribution sign;
  std::vector<Letter> raw;
  for (std::size_t i = 0; i < length; ++i) raw.push_back({gen(rng), sign(rng) ? 1 : -1});
  return Word(raw);
}

/// Random presentation on up to 5 generators and 4 relators, every relator
/// balanced to zero exponent sum in generator 0 by appending t-letters.
inline FinitePresentation random_balanced_presentation(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> ngens(1, 5), nrels(0, 4), len(1, 10);
  const std::size_t g = ngens(rng);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g; ++i) names.push_back(i == 0 ? "t" : "a" + std::to_string(i));
  std::vector<Word> rels;
  const std::size_t m = nrels(rng);
  for (std::size_t j = 0; j < m; ++j) {
    Word w = random_word(rng, g, len(rng));
    const long s = exponent_sum(w, 0);
    w *= Word::power_of(0, -s);
    rels.push_back(w);
  }
  return FinitePresentation(names, rels);
}

}  // namespace fpg::testing
