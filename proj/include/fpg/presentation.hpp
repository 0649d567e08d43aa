#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fpg/error.hpp"
#include "fpg/words.hpp"

namespace fpg {

FPG_DEFINE_ERROR(MalformedMove);
FPG_DEFINE_ERROR(NotRedundant);

/// A finite presentation <generators | relators>.
///
/// Relators are stored cyclically reduced; relators that reduce to the
/// identity are dropped on construction. Generator names are unique and
/// valid identifiers.
class FinitePresentation {
 public:
  FinitePresentation() = default;
  FinitePresentation(std::vector<std::string> generators,
                     std::vector<Word> relators);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::size_t generator_count() const { return generators_.size(); }
  std::size_t relator_count() const { return relators_.size(); }

  std::optional<GenId> find_generator(std::string_view name) const;
  GeneratorSymbol symbol(GenId id) const;
  std::string format(const Word& w) const { return format_word(w, generators_); }

  bool operator==(const FinitePresentation&) const = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

/// One factor c * R_j^sign * c^-1 of a product-of-conjugates derivation.
struct ConjugateFactor {
  Word conjugator;
  std::size_t relator = 0;
  int sign = 1;

  bool operator==(const ConjugateFactor&) const = default;
};

/// Expresses a word as a product of conjugates of existing relators.
using DerivationWitness = std::vector<ConjugateFactor>;

namespace tietze {

/// Adds generator `name` together with the relator name * definition^-1.
struct AddGenerator {
  std::string name;
  Word definition;
  bool operator==(const AddGenerator&) const = default;
};

/// Removes `generator` using relator `relator`, in which it must occur
/// exactly once. Remaining ids are compacted.
struct RemoveGenerator {
  GenId generator = 0;
  std::size_t relator = 0;
  bool operator==(const RemoveGenerator&) const = default;
};

/// Appends a consequence of the relators. Without a witness the word must be
/// a cyclic rotation of an existing relator or of its inverse.
struct AddRedundantRelator {
  Word relator;
  std::optional<DerivationWitness> witness;
  bool operator==(const AddRedundantRelator&) const = default;
};

/// Drops relator `index`; the witness derives it from the other relators.
struct RemoveRedundantRelator {
  std::size_t index = 0;
  DerivationWitness witness;
  bool operator==(const RemoveRedundantRelator&) const = default;
};

/// Textually replaces `generator` by `replacement` in every relator. The
/// replacement must contain the generator exactly once (a Nielsen move).
struct SubstituteGenerator {
  GenId generator = 0;
  Word replacement;
  bool operator==(const SubstituteGenerator&) const = default;
};

}  // namespace tietze

using TietzeMove =
    std::variant<tietze::AddGenerator, tietze::RemoveGenerator,
                 tietze::AddRedundantRelator, tietze::RemoveRedundantRelator,
                 tietze::SubstituteGenerator>;

struct TietzeResult {
  FinitePresentation presentation;
  /// rename[old id] = new id, or nullopt for a removed generator.
  std::vector<std::optional<GenId>> rename;
};

TietzeResult apply_tietze_renamed(const FinitePresentation& p,
                                  const TietzeMove& mv);

inline FinitePresentation apply_tietze(const FinitePresentation& p,
                                       const TietzeMove& mv) {
  return apply_tietze_renamed(p, mv).presentation;
}

/// A move undoing `mv` when applied to apply_tietze(before, mv).
TietzeMove inverse_move(const FinitePresentation& before, const TietzeMove& mv);

/// Short machine-readable tag of a move variant ("substitute_generator", ...).
std::string_view move_kind(const TietzeMove& mv);

/// Starting presentation plus the logged moves that transformed it.
class TietzeLog {
 public:
  explicit TietzeLog(FinitePresentation start);

  const FinitePresentation& start() const { return start_; }
  const FinitePresentation& current() const { return current_; }
  const std::vector<TietzeMove>& moves() const { return moves_; }

  const FinitePresentation& apply(const TietzeMove& mv);

  /// Re-applies every move to start() and checks the result equals current().
  bool replay_matches() const;

 private:
  FinitePresentation start_;
  FinitePresentation current_;
  std::vector<TietzeMove> moves_;
};

/// Generator count minus relator count of this presentation.
long deficiency(const FinitePresentation& p);

/// True iff p and q have the same first Betti number and torsion.
bool abelianized_invariants_preserved(const FinitePresentation& p,
                                      const FinitePresentation& q);

/// Verifies free_reduce(prod c_i R_{j_i}^{s_i} c_i^-1) is a cyclic rotation
/// of target (after cyclic reduction).
bool witness_derives(const FinitePresentation& p, const DerivationWitness& w,
                     const Word& target,
                     std::optional<std::size_t> excluded = std::nullopt);

}  // namespace fpg
