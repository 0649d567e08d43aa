#include "fpg/intlin.hpp"

#include <cstdlib>
#include <optional>
#include <utility>

namespace fpg {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
    for (long x : r) entries_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<BigInt> IntMatrix::column(std::size_t c) const {
  std::vector<BigInt> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t max_matrix_dimension() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("FPG_MAX_SNF_DIM")) {
      char* end = nullptr;
      const unsigned long v = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{2000};
  }();
  return cap;
}

namespace {

class SmithState {
 public:
  explicit SmithState(const IntMatrix& a)
      : d_(a), u_(IntMatrix::identity(a.rows())), v_(IntMatrix::identity(a.cols())) {}

  SmithDecomposition run() {
    const std::size_t m = d_.rows();
    const std::size_t n = d_.cols();
    std::size_t t = 0;
    for (; t < m && t < n; ++t) {
      if (!reduce_block(t)) break;
      if (d_(t, t) < 0) negate_row(t);
    }
    SmithDecomposition out;
    out.rank = t;
    for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(d_(i, i));
    out.d = std::move(d_);
    out.u = std::move(u_);
    out.v = std::move(v_);
    return out;
  }

 private:
  // Smallest nonzero |entry| in the block rows >= t, cols >= t.
  std::optional<std::pair<std::size_t, std::size_t>> min_pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < d_.rows(); ++i)
      for (std::size_t j = t; j < d_.cols(); ++j) {
        if (d_(i, j) == 0) continue;
        if (!best || mpz_cmpabs(d_(i, j).get_mpz_t(), d_(best->first, best->second).get_mpz_t()) < 0)
          best = {i, j};
      }
    return best;
  }

  // Clears row t and column t outside the pivot and enforces that the pivot
  // divides the remaining block. Returns false if the block is zero.
  bool reduce_block(std::size_t t) {
    for (;;) {
      auto pivot = min_pivot(t);
      if (!pivot) return false;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < d_.rows(); ++i) {
        if (d_(i, t) == 0) continue;
        BigInt q = d_(i, t) / d_(t, t);  // truncating
        add_row_multiple(i, t, -q);
        if (d_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d_.cols(); ++j) {
        if (d_(t, j) == 0) continue;
        BigInt q = d_(t, j) / d_(t, t);
        add_col_multiple(j, t, -q);
        if (d_(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      if (auto bad = non_divisible(t)) {
        add_row_multiple(t, *bad, 1);
        continue;
      }
      return true;
    }
  }

  std::optional<std::size_t> non_divisible(std::size_t t) const {
    for (std::size_t i = t + 1; i < d_.rows(); ++i)
      for (std::size_t j = t + 1; j < d_.cols(); ++j)
        if (!mpz_divisible_p(d_(i, j).get_mpz_t(), d_(t, t).get_mpz_t())) return i;
    return std::nullopt;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < d_.cols(); ++c) std::swap(d_(a, c), d_(b, c));
    for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(a, c), u_(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < d_.rows(); ++r) std::swap(d_(r, a), d_(r, b));
    for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, a), v_(r, b));
  }
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t c = 0; c < d_.cols(); ++c) d_(dst, c) += k * d_(src, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(dst, c) += k * u_(src, c);
  }
  // col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t r = 0; r < d_.rows(); ++r) d_(r, dst) += k * d_(r, src);
    for (std::size_t r = 0; r < v_.rows(); ++r) v_(r, dst) += k * v_(r, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < d_.cols(); ++c) d_(r, c) = -d_(r, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(r, c) = -u_(r, c);
  }

  IntMatrix d_;
  IntMatrix u_;
  IntMatrix v_;
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t cap = max_matrix_dimension();
  if (a.rows() > cap || a.cols() > cap)
    throw ResourceLimitExceeded("matrix " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) +
                                " exceeds FPG_MAX_SNF_DIM=" + std::to_string(cap));
  return SmithState(a).run();
}

IntMatrix relation_matrix(const FinitePresentation& p) {
  IntMatrix m(p.relator_count(), p.generator_count());
  for (std::size_t i = 0; i < p.relator_count(); ++i)
    for (const Letter& l : p.relators()[i]) m(i, l.gen) += l.sign;
  return m;
}

Abelianization abelianization(const FinitePresentation& p) {
  const auto snf = smith_normal_form(relation_matrix(p));
  Abelianization out;
  out.b1 = p.generator_count() - snf.rank;
  for (const auto& f : snf.invariant_factors)
    if (f > 1) out.torsion.push_back(f);
  out.min_abelian_gens = out.b1 + out.torsion.size();
  return out;
}

}  // namespace fpg
