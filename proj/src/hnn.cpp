#include "fpg/hnn.hpp"

#include <algorithm>
#include <limits>

namespace fpg {

std::string shifted_name(const std::string& generator, long beta) {
  return generator + "_s" + std::to_string(beta);
}

RewrittenRelator rewrite_relator(const Word& relator, GenId stable) {
  if (exponent_sum(relator, stable) != 0)
    throw NonzeroStableExponent("relator has nonzero stable-letter exponent sum");
  RewrittenRelator out;
  long beta = 0;
  long lowest = std::numeric_limits<long>::max();
  for (const Letter& l : relator) {
    if (l.gen == stable) {
      beta += l.sign;
      continue;
    }
    const std::size_t alpha = l.gen < stable ? l.gen : l.gen - 1;
    out.letters.push_back({{alpha, beta}, l.sign});
    lowest = std::min(lowest, beta);
  }
  if (out.letters.empty()) return out;
  out.shift_offset = -lowest;
  for (auto& [b, sign] : out.letters) b.beta -= lowest;

  // A freely reduced relator never yields a cancelling pair, but reduce anyway
  // so the postcondition does not depend on the caller.
  std::vector<std::pair<ShiftedLetter, int>> reduced;
  for (const auto& x : out.letters) {
    if (!reduced.empty() && reduced.back().first == x.first &&
        reduced.back().second == -x.second)
      reduced.pop_back();
    else
      reduced.push_back(x);
  }
  out.letters = std::move(reduced);
  return out;
}

Word HnnSplitting::embed_letter(const ShiftedLetter& b) const {
  const Word t = Word::power_of(stable.id, b.beta);
  return t * Word::power_of(original_letters.at(b.alpha).id, 1) * t.inverse();
}

Word HnnSplitting::embed(const Word& base_word) const {
  return base_word.substitute(
      [this](GenId g) { return embed_letter(base_letters.at(g)); });
}

HnnSplitting split_as_hnn(const FinitePresentation& p, const GeneratorSymbol& stable) {
  if (stable.id >= p.generator_count() || p.generators()[stable.id] != stable.name)
    throw InvalidArgument("stable letter '" + stable.name + "' is not a generator");
  for (const auto& r : p.relators())
    if (exponent_sum(r, stable.id) != 0)
      throw NotNormalized("relator " + p.format(r) +
                          " has nonzero exponent sum in '" + stable.name + "'");

  HnnSplitting split;
  split.stable = stable;
  for (GenId g = 0; g < p.generator_count(); ++g)
    if (g != stable.id) split.original_letters.push_back(p.symbol(g));

  std::vector<RewrittenRelator> rewritten;
  long top = 0;
  for (const auto& r : p.relators()) {
    split.occurrence_bound = std::max(split.occurrence_bound, occurrences(r, stable.id));
    rewritten.push_back(rewrite_relator(r, stable.id));
    for (const auto& [b, sign] : rewritten.back().letters) top = std::max(top, b.beta);
  }
  const std::size_t n = static_cast<std::size_t>(top);
  const std::size_t k = split.k();
  split.shift_bound = n;
  split.rank_bound = k * n;

  std::vector<std::string> names;
  for (std::size_t alpha = 0; alpha < k; ++alpha)
    for (std::size_t beta = 0; beta <= n; ++beta) {
      names.push_back(shifted_name(split.original_letters[alpha].name, static_cast<long>(beta)));
      split.base_letters.push_back({alpha, static_cast<long>(beta)});
    }
  auto id_of = [n](const ShiftedLetter& b) {
    return static_cast<GenId>(b.alpha * (n + 1) + static_cast<std::size_t>(b.beta));
  };

  std::vector<Word> base_relators;
  for (const auto& rw : rewritten) {
    std::vector<Letter> letters;
    for (const auto& [b, sign] : rw.letters) letters.push_back({id_of(b), sign});
    base_relators.emplace_back(letters);
    split.relator_offsets.push_back(rw.shift_offset);
  }
  split.base = FinitePresentation(std::move(names), std::move(base_relators));
  if (split.base.relator_count() != split.relator_offsets.size())
    throw InvalidArgument("a relator rewrote to the identity");

  for (std::size_t alpha = 0; alpha < k; ++alpha)
    for (std::size_t beta = 0; beta < n; ++beta) {
      const GenId from = id_of({alpha, static_cast<long>(beta)});
      const GenId to = id_of({alpha, static_cast<long>(beta + 1)});
      split.assoc_c.push_back(Word::power_of(from, 1));
      split.assoc_d.push_back(Word::power_of(to, 1));
      split.conj_relations.emplace_back(from, to);
    }
  return split;
}

bool verify_splitting(const HnnSplitting& split, const FinitePresentation& original) {
  const GenId t = split.stable.id;
  if (t >= original.generator_count() || original.generators()[t] != split.stable.name)
    return false;
  if (split.k() + 1 != original.generator_count()) return false;
  for (const auto& a : split.original_letters)
    if (a.id >= original.generator_count() || a.id == t ||
        original.generators()[a.id] != a.name)
      return false;
  const std::size_t n = split.shift_bound;
  if (split.rank_bound != split.k() * n) return false;
  if (split.assoc_c.size() != split.assoc_d.size() ||
      split.assoc_c.size() > split.rank_bound)
    return false;
  if (split.base.generator_count() != split.k() * (n + 1) ||
      split.base_letters.size() != split.base.generator_count())
    return false;
  for (GenId g = 0; g < split.base_letters.size(); ++g) {
    const auto& b = split.base_letters[g];
    if (b.alpha >= split.k() || b.beta < 0 || b.beta > static_cast<long>(n)) return false;
    if (split.base.generators()[g] !=
        shifted_name(split.original_letters[b.alpha].name, b.beta))
      return false;
  }

  if (split.base.relator_count() != original.relator_count() ||
      split.relator_offsets.size() != original.relator_count())
    return false;
  for (std::size_t i = 0; i < original.relator_count(); ++i) {
    const Word shift = Word::power_of(t, split.relator_offsets[i]);
    const Word expected = shift * original.relators()[i] * shift.inverse();
    if (split.embed(split.base.relators()[i]) != expected) return false;
  }

  // Each conjugation relation must hold as an identity of free words, and the
  // relation list must cover exactly 0 <= beta < N for every alpha.
  if (split.conj_relations.size() != split.assoc_c.size()) return false;
  const Word tw = Word::power_of(t, 1);
  std::vector<std::vector<bool>> covered(split.k(), std::vector<bool>(n, false));
  for (std::size_t i = 0; i < split.conj_relations.size(); ++i) {
    const auto [from, to] = split.conj_relations[i];
    if (from >= split.base_letters.size() || to >= split.base_letters.size()) return false;
    if (split.assoc_c[i] != Word::power_of(from, 1) ||
        split.assoc_d[i] != Word::power_of(to, 1))
      return false;
    const auto& b = split.base_letters[from];
    if (b.beta >= static_cast<long>(n) || covered[b.alpha][b.beta]) return false;
    covered[b.alpha][b.beta] = true;
    if (tw * split.embed_letter(b) * tw.inverse() !=
        split.embed_letter(split.base_letters[to]))
      return false;
  }
  for (const auto& row : covered)
    if (std::find(row.begin(), row.end(), false) != row.end()) return false;
  return true;
}

}  // namespace fpg
