#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "fpg/presentation.hpp"

namespace fpg {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::vector<BigInt> column(std::size_t c) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

/// U * A * V = D with U, V unimodular and D diagonal.
struct SmithDecomposition {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  std::size_t rank = 0;
  /// d_1 | d_2 | ... | d_rank, all positive.
  std::vector<BigInt> invariant_factors;
};

/// Exact determinant (fraction-free Bareiss elimination).
BigInt determinant(const IntMatrix& a);

/// Smith normal form by smallest-absolute-value pivoting.
///
/// Throws ResourceLimitExceeded if either dimension exceeds
/// max_matrix_dimension().
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Dimension cap for smith_normal_form; read once from FPG_MAX_SNF_DIM
/// (default 2000).
std::size_t max_matrix_dimension();

/// m x g matrix of exponent sums: entry (i, j) = exponent_sum(R_i, j).
IntMatrix relation_matrix(const FinitePresentation& p);

struct Abelianization {
  std::size_t b1 = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1
  std::size_t min_abelian_gens = 0;
};

Abelianization abelianization(const FinitePresentation& p);

}  // namespace fpg
