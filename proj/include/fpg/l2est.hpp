#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fpg/intlin.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

/// One cyclic cover K_n in a growth table.
struct BettiGrowthRow {
  std::size_t n = 0;
  std::size_t b1 = 0;
  std::vector<BigInt> torsion;
  Rational ratio;  // b1 / n, exact
};

/// b1(K_n)/n for n = 1..n_max along the cyclic covers of one Z-map.
///
/// This is cyclic-cover Betti growth. The chain K_n intersects in ker(eps),
/// not in the trivial group, so the ratios are an estimator and are never
/// reported as the l2-Betti number itself.
struct BettiGrowthReport {
  static constexpr const char* kLabel = "cyclic-cover Betti growth";

  std::vector<BettiGrowthRow> rows;
  Rational last_ratio;
  bool ratios_nonincreasing = true;
  bool b1_nondecreasing = true;
};

BettiGrowthReport betti_growth(const FinitePresentation& p, const GeneratorSymbol& stable,
                               std::size_t n_max);

/// Presentation-level bracket for the first l2-Betti number.
struct L2Bounds {
  /// max(deficiency - 1, 0)
  BigInt lower_from_deficiency;
  /// generator count - 1; a proxy for rank - 1 using this generating set.
  BigInt upper_from_rank;
  std::optional<Rational> user_lower;
  std::string user_note;
};

L2Bounds l2_bounds(const FinitePresentation& p);

}  // namespace fpg
