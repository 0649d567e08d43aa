#pragma once

#include <optional>
#include <vector>

#include "fpg/intlin.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

FPG_DEFINE_ERROR(NotSurjective);
FPG_DEFINE_ERROR(NotHomomorphism);

/// A homomorphism onto Z given by the image of each generator.
struct ZHomomorphism {
  std::vector<BigInt> values;

  bool operator==(const ZHomomorphism&) const = default;
};

/// Why verify_zmap rejected a map; all flags false means it is valid.
struct ZMapCheck {
  bool wrong_length = false;
  bool not_homomorphism = false;  // some relator has nonzero image
  bool not_surjective = false;    // gcd of values != 1
  std::vector<BigInt> relator_images;
  BigInt gcd;

  bool ok() const { return !wrong_length && !not_homomorphism && !not_surjective; }
};

ZMapCheck check_zmap(const FinitePresentation& p, const ZHomomorphism& eps);

inline bool verify_zmap(const FinitePresentation& p, const ZHomomorphism& eps) {
  return check_zmap(p, eps).ok();
}

/// Image of a word under eps.
BigInt zmap_image(const ZHomomorphism& eps, const Word& w);

/// A surjective map onto Z, or nullopt iff b1(p) = 0.
///
/// Candidates are the kernel columns of the Smith transform V, sign-normalized
/// so the first nonzero entry is positive. The smallest sum of absolute values
/// wins; ties go to the lexicographically largest vector of absolute values,
/// so (1, 0) beats (0, 1).
std::optional<ZHomomorphism> find_zmap(const FinitePresentation& p);

/// The map induced on apply_tietze(p, mv) by eps on p.
ZHomomorphism transport_zmap(const FinitePresentation& p, const ZHomomorphism& eps,
                             const TietzeMove& mv);

struct NormalizedPresentation {
  FinitePresentation presentation;
  GeneratorSymbol stable;
  std::vector<TietzeMove> moves;
  /// eps transported along the moves: 1 on `stable`, 0 elsewhere.
  ZHomomorphism transported;
};

/// Euclidean reduction of the value vector by logged SubstituteGenerator
/// moves, followed by a sign flip if the surviving value is -1.
///
/// Throws NotHomomorphism / NotSurjective if eps is invalid for p.
NormalizedPresentation normalize_stable_letter(const FinitePresentation& p,
                                               const ZHomomorphism& eps);

}  // namespace fpg
