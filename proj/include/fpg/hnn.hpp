#pragma once

#include <string>
#include <vector>

#include "fpg/presentation.hpp"

namespace fpg {

FPG_DEFINE_ERROR(NonzeroStableExponent);
FPG_DEFINE_ERROR(NotNormalized);

/// Index of a base letter b_{alpha,beta} = t^beta a_alpha t^-beta.
struct ShiftedLetter {
  std::size_t alpha = 0;  // position among the non-stable generators
  long beta = 0;
  auto operator<=>(const ShiftedLetter&) const = default;
};

/// A relator rewritten over the shifted alphabet.
struct RewrittenRelator {
  std::vector<std::pair<ShiftedLetter, int>> letters;  // freely reduced
  /// Power c of t with t^c R t^-c = embedding of the rewritten word.
  long shift_offset = 0;
};

/// Rewrites R (zero t-exponent sum) by tracking the running t-exponent; the
/// result is shifted so the smallest emitted index is 0.
RewrittenRelator rewrite_relator(const Word& relator, GenId stable);

/// HNN decomposition H = < t, B | S_1..S_m, t C t^-1 = D >.
struct HnnSplitting {
  GeneratorSymbol stable;
  /// Non-stable generators of the original presentation, in order (a_1..a_k).
  std::vector<GeneratorSymbol> original_letters;
  std::size_t shift_bound = 0;   // N
  std::size_t rank_bound = 0;    // M = k N
  /// Maximal number of t^{+-1} letters in one relator (the coarse bound).
  std::size_t occurrence_bound = 0;
  /// Base presentation over b_{alpha,beta}, 1 <= alpha <= k, 0 <= beta <= N,
  /// ordered alpha-major. Generator names are "<a>_s<beta>".
  FinitePresentation base;
  std::vector<ShiftedLetter> base_letters;  // parallel to base.generators()
  std::vector<long> relator_offsets;        // parallel to base.relators()
  std::vector<Word> assoc_c;                // b_{alpha,beta}, beta < N
  std::vector<Word> assoc_d;                // b_{alpha,beta+1}
  /// Pairs (b_{alpha,beta}, b_{alpha,beta+1}) with t x t^-1 = y.
  std::vector<std::pair<GenId, GenId>> conj_relations;

  std::size_t k() const { return original_letters.size(); }

  /// t^beta a_alpha t^-beta as a word in the original generators.
  Word embed_letter(const ShiftedLetter& b) const;
  Word embed(const Word& base_word) const;

  bool operator==(const HnnSplitting&) const = default;
};

/// Throws NotNormalized if some relator has nonzero t-exponent sum.
HnnSplitting split_as_hnn(const FinitePresentation& p, const GeneratorSymbol& stable);

/// Embedding of every S_i equals t^c R_i t^-c, every conjugation relation
/// holds in the free group, and the bounds are consistent.
bool verify_splitting(const HnnSplitting& split, const FinitePresentation& original);

/// "<name>_s<beta>"
std::string shifted_name(const std::string& generator, long beta);

}  // namespace fpg
