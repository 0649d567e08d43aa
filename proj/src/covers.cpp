#include "fpg/covers.hpp"

namespace fpg {

std::string cover_name(const std::string& generator, std::size_t coset) {
  return generator + "_c" + std::to_string(coset);
}

CoverPresentation kernel_presentation(const FinitePresentation& p,
                                      const GeneratorSymbol& stable, std::size_t n) {
  if (n < 1) throw BadDegree("cover degree must be at least 1");
  if (stable.id >= p.generator_count() || p.generators()[stable.id] != stable.name)
    throw InvalidArgument("stable letter '" + stable.name + "' is not a generator");
  for (const auto& r : p.relators())
    if (exponent_sum(r, stable.id) != 0)
      throw NotNormalized("relator " + p.format(r) +
                          " has nonzero exponent sum in '" + stable.name + "'");

  CoverPresentation cover;
  cover.degree = n;
  cover.original_stable = stable;

  // Non-stable generator ids in order; alpha indexes this list.
  std::vector<GenId> letters;
  for (GenId g = 0; g < p.generator_count(); ++g)
    if (g != stable.id) letters.push_back(g);

  std::vector<std::string> names{"x"};
  cover.embedding.push_back(Word::power_of(stable.id, static_cast<long>(n)));
  cover.schreier_index.emplace_back(0, 0);
  std::vector<GenId> alpha_of(p.generator_count(), 0);
  for (std::size_t alpha = 0; alpha < letters.size(); ++alpha) {
    alpha_of[letters[alpha]] = static_cast<GenId>(alpha);
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(cover_name(p.generators()[letters[alpha]], i));
      const Word ti = Word::power_of(stable.id, static_cast<long>(i));
      cover.embedding.push_back(ti * Word::power_of(letters[alpha], 1) * ti.inverse());
      cover.schreier_index.emplace_back(alpha, i);
    }
  }

  // Rewrite t^i R t^-i by tracing cosets; only the t-edge leaving coset n-1
  // is a non-tree Schreier generator (it equals x).
  std::vector<Word> relators;
  for (const auto& r : p.relators())
    for (std::size_t start = 0; start < n; ++start) {
      std::vector<Letter> out;
      std::size_t coset = start;
      for (const Letter& l : r) {
        if (l.gen == stable.id) {
          if (l.sign > 0) {
            if (coset == n - 1) out.push_back({0, 1});
            coset = (coset + 1) % n;
          } else {
            coset = (coset + n - 1) % n;
            if (coset == n - 1) out.push_back({0, -1});
          }
        } else {
          out.push_back({cover.schreier_generator(alpha_of[l.gen], coset), l.sign});
        }
      }
      relators.emplace_back(out);
    }

  cover.pres = FinitePresentation(std::move(names), std::move(relators));
  cover.stable_x = cover.pres.symbol(0);
  cover.inherited_zmap.values.assign(cover.pres.generator_count(), 0);
  cover.inherited_zmap.values[0] = 1;
  return cover;
}

Abelianization betti_of_cover(const FinitePresentation& p, const GeneratorSymbol& stable,
                              std::size_t n) {
  return abelianization(kernel_presentation(p, stable, n).pres);
}

CoverHnnData cover_hnn_data(const HnnSplitting& split, const CoverPresentation& cover) {
  if (cover.degree < split.shift_bound)
    throw DegreeTooSmall("cover degree " + std::to_string(cover.degree) +
                         " is below the shift bound " + std::to_string(split.shift_bound));
  if (split.stable.name != cover.original_stable.name ||
      split.k() * cover.degree + 1 != cover.pres.generator_count())
    throw InvalidArgument("splitting and cover come from different presentations");

  CoverHnnData data;
  data.stable_x = cover.stable_x;
  data.rank_bound = split.rank_bound;
  const Word x = Word::power_of(cover.stable_x.id, 1);
  for (std::size_t alpha = 0; alpha < split.k(); ++alpha) {
    for (std::size_t beta = 0; beta < split.shift_bound; ++beta) {
      data.assoc_c.push_back(Word::power_of(cover.schreier_generator(alpha, beta), 1));
      if (beta + 1 < cover.degree)
        data.assoc_d.push_back(Word::power_of(cover.schreier_generator(alpha, beta + 1), 1));
      else
        data.assoc_d.push_back(x * Word::power_of(cover.schreier_generator(alpha, 0), 1) *
                               x.inverse());
    }
    for (std::size_t i = 0; i < cover.degree; ++i)
      data.base_generators.push_back(cover.schreier_generator(alpha, i));
  }
  return data;
}

}  // namespace fpg
