#include "fpg/presentation.hpp"

#include <algorithm>
#include <set>

#include "fpg/intlin.hpp"

namespace fpg {

FinitePresentation::FinitePresentation(std::vector<std::string> generators,
                                       std::vector<Word> relators)
    : generators_(std::move(generators)) {
  std::set<std::string_view> seen;
  for (const auto& name : generators_) {
    if (!is_valid_generator_name(name))
      throw InvalidArgument("invalid generator name '" + name + "'");
    if (!seen.insert(name).second)
      throw InvalidArgument("duplicate generator name '" + name + "'");
  }
  relators_.reserve(relators.size());
  for (auto& r : relators) {
    if (r.generator_bound() > generators_.size())
      throw InvalidArgument("relator references an undeclared generator");
    Word core = cyclic_reduce(r).core;
    if (!core.empty()) relators_.push_back(std::move(core));
  }
}

std::optional<GenId> FinitePresentation::find_generator(
    std::string_view name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) return std::nullopt;
  return static_cast<GenId>(it - generators_.begin());
}

GeneratorSymbol FinitePresentation::symbol(GenId id) const {
  if (id >= generators_.size())
    throw InvalidArgument("generator id " + std::to_string(id) +
                          " out of range");
  return {id, generators_[id]};
}

long deficiency(const FinitePresentation& p) {
  return static_cast<long>(p.generator_count()) -
         static_cast<long>(p.relator_count());
}

bool witness_derives(const FinitePresentation& p, const DerivationWitness& w,
                     const Word& target, std::optional<std::size_t> excluded) {
  Word product;
  for (const auto& f : w) {
    if (f.relator >= p.relator_count() || f.relator == excluded) return false;
    if (f.sign != 1 && f.sign != -1) return false;
    if (f.conjugator.generator_bound() > p.generator_count()) return false;
    product *= f.conjugator * p.relators()[f.relator].pow(f.sign) *
               f.conjugator.inverse();
  }
  return is_cyclic_rotation(cyclic_reduce(product).core,
                            cyclic_reduce(target).core);
}

namespace {

void check_generator(const FinitePresentation& p, GenId g) {
  if (g >= p.generator_count())
    throw MalformedMove("move references missing generator id " +
                        std::to_string(g));
}

void check_word(const FinitePresentation& p, const Word& w, std::size_t bound) {
  if (w.generator_bound() > bound)
    throw MalformedMove("move word references a missing generator");
  (void)p;
}

struct NielsenSplit {
  Word prefix;
  int sign;
  Word suffix;
};

// Splits w = prefix * g^sign * suffix where g occurs exactly once in w.
std::optional<NielsenSplit> split_single_occurrence(const Word& w, GenId g) {
  if (occurrences(w, g) != 1) return std::nullopt;
  const auto& ls = w.letters();
  auto it = std::find_if(ls.begin(), ls.end(),
                         [g](const Letter& l) { return l.gen == g; });
  const auto pos = static_cast<std::size_t>(it - ls.begin());
  return NielsenSplit{Word(std::span(ls).first(pos)), it->sign,
                      Word(std::span(ls).subspan(pos + 1))};
}

std::vector<std::optional<GenId>> identity_rename(std::size_t n) {
  std::vector<std::optional<GenId>> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<GenId>(i);
  return r;
}

TietzeResult apply(const FinitePresentation& p, const tietze::AddGenerator& mv) {
  check_word(p, mv.definition, p.generator_count());
  if (p.find_generator(mv.name))
    throw MalformedMove("generator '" + mv.name + "' already exists");
  if (!is_valid_generator_name(mv.name))
    throw MalformedMove("invalid generator name '" + mv.name + "'");
  auto gens = p.generators();
  const auto id = static_cast<GenId>(gens.size());
  gens.push_back(mv.name);
  auto rels = p.relators();
  rels.push_back(Word::power_of(id, 1) * mv.definition.inverse());
  return {FinitePresentation(std::move(gens), std::move(rels)),
          identity_rename(p.generator_count())};
}

TietzeResult apply(const FinitePresentation& p,
                   const tietze::RemoveGenerator& mv) {
  check_generator(p, mv.generator);
  if (mv.relator >= p.relator_count())
    throw MalformedMove("relator index out of range");
  const Word& defining = p.relators()[mv.relator];
  auto split = split_single_occurrence(defining, mv.generator);
  if (!split)
    throw NotRedundant("generator '" + p.generators()[mv.generator] +
                       "' does not occur exactly once in the relator");
  // prefix g^s suffix = 1  =>  g^s = prefix^-1 suffix^-1.
  Word value = split->prefix.inverse() * split->suffix.inverse();
  if (split->sign < 0) value = value.inverse();

  std::vector<std::optional<GenId>> rename(p.generator_count());
  std::vector<std::string> gens;
  for (GenId i = 0; i < p.generator_count(); ++i) {
    if (i == mv.generator) continue;
    rename[i] = static_cast<GenId>(gens.size());
    gens.push_back(p.generators()[i]);
  }
  auto image = [&](GenId g) {
    if (g == mv.generator) return value.substitute([&](GenId h) {
        return Word::power_of(*rename[h], 1);
      });
    return Word::power_of(*rename[g], 1);
  };
  std::vector<Word> rels;
  for (std::size_t j = 0; j < p.relator_count(); ++j)
    if (j != mv.relator) rels.push_back(p.relators()[j].substitute(image));
  return {FinitePresentation(std::move(gens), std::move(rels)),
          std::move(rename)};
}

TietzeResult apply(const FinitePresentation& p,
                   const tietze::AddRedundantRelator& mv) {
  check_word(p, mv.relator, p.generator_count());
  if (cyclic_reduce(mv.relator).core.empty())
    throw MalformedMove("added relator is trivial");
  bool ok = false;
  if (mv.witness) {
    ok = witness_derives(p, *mv.witness, mv.relator);
  } else {
    const Word core = cyclic_reduce(mv.relator).core;
    ok = std::any_of(p.relators().begin(), p.relators().end(),
                     [&](const Word& r) {
                       return is_cyclic_rotation(r, core) ||
                              is_cyclic_rotation(r.inverse(), core);
                     });
  }
  if (!ok) throw NotRedundant("added relator is not derived by the witness");
  auto rels = p.relators();
  rels.push_back(mv.relator);
  return {FinitePresentation(p.generators(), std::move(rels)),
          identity_rename(p.generator_count())};
}

TietzeResult apply(const FinitePresentation& p,
                   const tietze::RemoveRedundantRelator& mv) {
  if (mv.index >= p.relator_count())
    throw MalformedMove("relator index out of range");
  if (!witness_derives(p, mv.witness, p.relators()[mv.index], mv.index))
    throw NotRedundant("witness does not derive relator " +
                       std::to_string(mv.index));
  auto rels = p.relators();
  rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(mv.index));
  return {FinitePresentation(p.generators(), std::move(rels)),
          identity_rename(p.generator_count())};
}

TietzeResult apply(const FinitePresentation& p,
                   const tietze::SubstituteGenerator& mv) {
  check_generator(p, mv.generator);
  check_word(p, mv.replacement, p.generator_count());
  if (!split_single_occurrence(mv.replacement, mv.generator))
    throw MalformedMove("replacement must contain the generator exactly once");
  auto image = [&](GenId g) {
    return g == mv.generator ? mv.replacement : Word::power_of(g, 1);
  };
  std::vector<Word> rels;
  for (const auto& r : p.relators()) rels.push_back(r.substitute(image));
  return {FinitePresentation(p.generators(), std::move(rels)),
          identity_rename(p.generator_count())};
}

}  // namespace

TietzeResult apply_tietze_renamed(const FinitePresentation& p,
                                  const TietzeMove& mv) {
  return std::visit([&](const auto& m) { return apply(p, m); }, mv);
}

TietzeMove inverse_move(const FinitePresentation& before, const TietzeMove& mv) {
  struct Visitor {
    const FinitePresentation& p;

    TietzeMove operator()(const tietze::AddGenerator&) const {
      return tietze::RemoveGenerator{static_cast<GenId>(p.generator_count()),
                                     p.relator_count()};
    }
    TietzeMove operator()(const tietze::RemoveGenerator& m) const {
      check_generator(p, m.generator);
      if (m.relator >= p.relator_count())
        throw MalformedMove("relator index out of range");
      auto split = split_single_occurrence(p.relators()[m.relator], m.generator);
      if (!split) throw NotRedundant("generator does not occur exactly once");
      Word value = split->prefix.inverse() * split->suffix.inverse();
      if (split->sign < 0) value = value.inverse();
      // Express the definition in the compacted ids.
      Word renamed = value.substitute([&](GenId h) {
        return Word::power_of(h > m.generator ? h - 1 : h, 1);
      });
      return tietze::AddGenerator{p.generators()[m.generator], renamed};
    }
    TietzeMove operator()(const tietze::AddRedundantRelator& m) const {
      // The relators it was derived from are all still present.
      if (m.witness)
        return tietze::RemoveRedundantRelator{p.relator_count(), *m.witness};
      const Word core = cyclic_reduce(m.relator).core;
      for (std::size_t j = 0; j < p.relator_count(); ++j) {
        const Word& r = p.relators()[j];
        if (is_cyclic_rotation(r, core))
          return tietze::RemoveRedundantRelator{p.relator_count(),
                                                {{Word(), j, 1}}};
        if (is_cyclic_rotation(r.inverse(), core))
          return tietze::RemoveRedundantRelator{p.relator_count(),
                                                {{Word(), j, -1}}};
      }
      throw NotRedundant("added relator is not derived by the witness");
    }
    TietzeMove operator()(const tietze::RemoveRedundantRelator& m) const {
      // Re-index the witness: relators after m.index shift down by one.
      DerivationWitness w = m.witness;
      for (auto& f : w)
        if (f.relator > m.index) --f.relator;
      return tietze::AddRedundantRelator{p.relators()[m.index], w};
    }
    TietzeMove operator()(const tietze::SubstituteGenerator& m) const {
      auto split = split_single_occurrence(m.replacement, m.generator);
      if (!split) throw MalformedMove("replacement must contain the generator");
      const Word g = Word::power_of(m.generator, 1);
      Word inv = split->sign > 0
                     ? split->prefix.inverse() * g * split->suffix.inverse()
                     : split->suffix * g.inverse() * split->prefix;
      return tietze::SubstituteGenerator{m.generator, inv};
    }
  };
  return std::visit(Visitor{before}, mv);
}

std::string_view move_kind(const TietzeMove& mv) {
  static constexpr std::string_view kinds[] = {
      "add_generator", "remove_generator", "add_redundant_relator",
      "remove_redundant_relator", "substitute_generator"};
  return kinds[mv.index()];
}

TietzeLog::TietzeLog(FinitePresentation start)
    : start_(std::move(start)), current_(start_) {}

const FinitePresentation& TietzeLog::apply(const TietzeMove& mv) {
  current_ = apply_tietze(current_, mv);
  moves_.push_back(mv);
  return current_;
}

bool TietzeLog::replay_matches() const {
  FinitePresentation p = start_;
  try {
    for (const auto& mv : moves_) p = apply_tietze(p, mv);
  } catch (const Error&) {
    return false;
  }
  return p == current_;
}

bool abelianized_invariants_preserved(const FinitePresentation& p,
                                      const FinitePresentation& q) {
  const auto a = abelianization(p);
  const auto b = abelianization(q);
  return a.b1 == b.b1 && a.torsion == b.torsion;
}

}  // namespace fpg
