#include <doctest.h>

#include <functional>
#include <random>

#include "fixtures.hpp"
#include "fpg/intlin.hpp"

using namespace fpg;
using fpg::testing::parse;

namespace {

// Determinant by cofactor expansion; independent of the Bareiss code.
BigInt cofactor_det(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const BigInt term = m[0][c] * cofactor_det(minor);
    total += (c % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out,
             std::vector<std::size_t>& cur, std::size_t from = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, out, cur, i + 1);
    cur.pop_back();
  }
}

// Determinantal divisors: gcd of all k x k minors, k = 1..min(r, c).
std::vector<BigInt> determinantal_divisors(const IntMatrix& a) {
  std::vector<BigInt> out;
  const std::size_t top = std::min(a.rows(), a.cols());
  for (std::size_t k = 1; k <= top; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, rs, cur);
    subsets(a.cols(), k, cs, cur);
    BigInt g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<BigInt>> m(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a(r[i], c[j]);
        BigInt d = cofactor_det(m);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    out.push_back(g);
  }
  return out;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, long span) {
  std::uniform_int_distribution<long> d(-span, span);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

bool is_diagonal(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  return true;
}

bool unimodular(const IntMatrix& m) {
  const BigInt d = determinant(m);
  return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("smith_normal_form examples") {
  SUBCASE("identity") {
    const auto s = smith_normal_form(IntMatrix::identity(3));
    CHECK(s.rank == 3);
    CHECK(s.invariant_factors == std::vector<BigInt>{1, 1, 1});
  }
  SUBCASE("2x2") {
    const IntMatrix a{{2, 4}, {6, 8}};
    const auto s = smith_normal_form(a);
    CHECK(s.invariant_factors == std::vector<BigInt>{2, 4});
    CHECK(s.u * a * s.v == s.d);
  }
  SUBCASE("rectangular") {
    const IntMatrix a{{0, -2, 1}, {0, 1, -2}};
    const auto s = smith_normal_form(a);
    CHECK(s.rank == 2);
    CHECK(s.invariant_factors == std::vector<BigInt>{1, 3});
    CHECK(s.u * a * s.v == s.d);
  }
  SUBCASE("zero and empty") {
    CHECK(smith_normal_form(IntMatrix(2, 3)).rank == 0);
    const auto e = smith_normal_form(IntMatrix(0, 2));
    CHECK(e.rank == 0);
    CHECK(e.v == IntMatrix::identity(2));
  }
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng() % 5;
    const auto m = random_matrix(rng, n, n, 6);
    std::vector<std::vector<BigInt>> rows(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
    CHECK(determinant(m) == cofactor_det(rows));
  }
}

TEST_CASE("random matrices: U A V = D and invariant factors match minors") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const auto a = random_matrix(rng, r, c, trial % 3 == 0 ? 2 : 9);
    const auto s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(is_diagonal(s.d));
    CHECK(unimodular(s.u));
    CHECK(unimodular(s.v));
    for (std::size_t i = 0; i < s.rank; ++i) {
      CHECK(s.d(i, i) == s.invariant_factors[i]);
      CHECK(s.invariant_factors[i] > 0);
      if (i + 1 < s.rank) CHECK(mpz_divisible_p(s.invariant_factors[i + 1].get_mpz_t(),
                                                s.invariant_factors[i].get_mpz_t()));
    }
    const auto dd = determinantal_divisors(a);
    BigInt prod = 1;
    for (std::size_t k = 0; k < dd.size(); ++k) {
      if (k < s.rank) {
        prod *= s.invariant_factors[k];
        CHECK(dd[k] == prod);
      } else {
        CHECK(dd[k] == 0);
      }
    }
  }
}

TEST_CASE("large entries stay exact") {
  const IntMatrix a{{1000000007, 998244353}, {123456789, 987654321}};
  const auto s = smith_normal_form(a);
  CHECK(s.u * a * s.v == s.d);
  CHECK(s.invariant_factors.back() == abs(determinant(a)));
}

TEST_CASE("dimension cap") {
  CHECK(max_matrix_dimension() >= 1);
  CHECK_THROWS_AS(smith_normal_form(IntMatrix(max_matrix_dimension() + 1, 1)),
                  ResourceLimitExceeded);
}

TEST_CASE("relation_matrix and abelianization") {
  CHECK(relation_matrix(parse("x, y | x^2 y^-3")) == IntMatrix{{2, -3}});

  const auto z2 = abelianization(parse("a, b |"));
  CHECK(z2.b1 == 2);
  CHECK(z2.torsion.empty());
  CHECK(z2.min_abelian_gens == 2);

  const auto bs = abelianization(parse("t, a | t a t^-1 a^-2"));
  CHECK(bs.b1 == 1);
  CHECK(bs.torsion.empty());

  const auto bs23 = abelianization(parse("t, a | t a^2 t^-1 a^-3"));
  CHECK(bs23.b1 == 1);
  CHECK(bs23.torsion.empty());

  const auto tor = abelianization(parse("a, b | a^4 ; b^6"));
  CHECK(tor.b1 == 0);
  CHECK(tor.torsion == std::vector<BigInt>{2, 12});
  CHECK(tor.min_abelian_gens == 2);

  CHECK(abelianization(parse("a, b, c, d | a b a^-1 b^-1 c d c^-1 d^-1")).b1 == 4);
  CHECK(abelianization(parse("a | a^2")).torsion == std::vector<BigInt>{2});
  CHECK(abelianization(parse("x, y | x^2 y^-3")).b1 == 1);
}
