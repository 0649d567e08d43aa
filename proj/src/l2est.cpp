#include "fpg/l2est.hpp"

#include "fpg/covers.hpp"

namespace fpg {

BettiGrowthReport betti_growth(const FinitePresentation& p, const GeneratorSymbol& stable,
                               std::size_t n_max) {
  if (n_max < 1) throw BadDegree("--max-n must be at least 1");
  BettiGrowthReport report;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto ab = betti_of_cover(p, stable, n);
    BettiGrowthRow row{n, ab.b1, ab.torsion,
                       Rational(BigInt(static_cast<unsigned long>(ab.b1)),
                                BigInt(static_cast<unsigned long>(n)))};
    row.ratio.canonicalize();
    if (!report.rows.empty()) {
      const auto& prev = report.rows.back();
      if (row.ratio > prev.ratio) report.ratios_nonincreasing = false;
      if (row.b1 < prev.b1) report.b1_nondecreasing = false;
    }
    report.rows.push_back(std::move(row));
  }
  report.last_ratio = report.rows.back().ratio;
  return report;
}

L2Bounds l2_bounds(const FinitePresentation& p) {
  L2Bounds b;
  const long lower = deficiency(p) - 1;
  b.lower_from_deficiency = lower > 0 ? lower : 0;
  b.upper_from_rank = static_cast<long>(p.generator_count()) - 1;
  return b;
}

}  // namespace fpg
