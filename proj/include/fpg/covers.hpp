#pragma once

#include <vector>

#include "fpg/hnn.hpp"
#include "fpg/intlin.hpp"
#include "fpg/presentation.hpp"
#include "fpg/zmaps.hpp"

namespace fpg {

FPG_DEFINE_ERROR(BadDegree);
FPG_DEFINE_ERROR(DegreeTooSmall);

/// Presentation of K_n = ker(H -> Z -> Z/n) from the transversal {t^0..t^(n-1)}.
///
/// Generator 0 is x = t^n; then a_{alpha,i} = t^i a_alpha t^-i, alpha-major,
/// named "<a>_c<i>". Relators are the rewrites of t^i R_j t^-i, j-major.
struct CoverPresentation {
  std::size_t degree = 0;
  FinitePresentation pres;
  GeneratorSymbol stable_x;
  GeneratorSymbol original_stable;
  /// Word in the original generators represented by each cover generator.
  std::vector<Word> embedding;
  /// (alpha, i) of each a_{alpha,i}; entry 0 (for x) is unused.
  std::vector<std::pair<std::size_t, std::size_t>> schreier_index;
  /// x -> 1, a_{alpha,i} -> 0.
  ZHomomorphism inherited_zmap;

  GenId schreier_generator(std::size_t alpha, std::size_t i) const {
    return static_cast<GenId>(1 + alpha * degree + i);
  }
};

/// "<name>_c<i>"
std::string cover_name(const std::string& generator, std::size_t coset);

/// Throws NotNormalized if a relator has nonzero t-exponent sum, BadDegree if
/// n < 1.
CoverPresentation kernel_presentation(const FinitePresentation& p,
                                      const GeneratorSymbol& stable, std::size_t n);

Abelianization betti_of_cover(const FinitePresentation& p, const GeneratorSymbol& stable,
                              std::size_t n);

/// Edge-group data of K_n as an HNN extension with stable letter x.
struct CoverHnnData {
  GeneratorSymbol stable_x;
  /// a_{alpha,beta} for 0 <= beta < N.
  std::vector<Word> assoc_c;
  /// t-conjugates of assoc_c written over the cover generators:
  /// a_{alpha,beta+1}, or x a_{alpha,0} x^-1 when beta + 1 = n.
  std::vector<Word> assoc_d;
  std::vector<GenId> base_generators;  // every a_{alpha,i}
  std::size_t rank_bound = 0;          // M, independent of n
};

/// Requires cover.degree >= split.shift_bound (DegreeTooSmall otherwise).
CoverHnnData cover_hnn_data(const HnnSplitting& split, const CoverPresentation& cover);

}  // namespace fpg
