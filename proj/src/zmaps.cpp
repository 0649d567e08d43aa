#include "fpg/zmaps.hpp"

#include <algorithm>

namespace fpg {

BigInt zmap_image(const ZHomomorphism& eps, const Word& w) {
  BigInt sum = 0;
  for (const Letter& l : w) {
    if (l.gen >= eps.values.size())
      throw InvalidArgument("word references a generator outside the map");
    if (l.sign > 0)
      sum += eps.values[l.gen];
    else
      sum -= eps.values[l.gen];
  }
  return sum;
}

ZMapCheck check_zmap(const FinitePresentation& p, const ZHomomorphism& eps) {
  ZMapCheck check;
  if (eps.values.size() != p.generator_count()) {
    check.wrong_length = true;
    return check;
  }
  for (const auto& r : p.relators()) {
    check.relator_images.push_back(zmap_image(eps, r));
    if (check.relator_images.back() != 0) check.not_homomorphism = true;
  }
  check.gcd = 0;
  for (const auto& v : eps.values) mpz_gcd(check.gcd.get_mpz_t(), check.gcd.get_mpz_t(), v.get_mpz_t());
  check.not_surjective = check.gcd != 1;
  return check;
}

namespace {

BigInt abs_sum(const std::vector<BigInt>& v) {
  BigInt s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

std::size_t first_support(const std::vector<BigInt>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

}  // namespace

std::optional<ZHomomorphism> find_zmap(const FinitePresentation& p) {
  const auto snf = smith_normal_form(relation_matrix(p));
  std::optional<std::vector<BigInt>> best;
  for (std::size_t c = snf.rank; c < p.generator_count(); ++c) {
    auto v = snf.v.column(c);
    const std::size_t lead = first_support(v);
    if (lead < v.size() && v[lead] < 0)
      for (auto& x : v) x = -x;
    if (!best) {
      best = std::move(v);
      continue;
    }
    const int by_size = cmp(abs_sum(v), abs_sum(*best));
    if (by_size < 0 ||
        (by_size == 0 && std::lexicographical_compare(
                             best->begin(), best->end(), v.begin(), v.end(),
                             [](const BigInt& a, const BigInt& b) { return abs(a) < abs(b); })))
      best = std::move(v);
  }
  if (!best) return std::nullopt;
  return ZHomomorphism{std::move(*best)};
}

ZHomomorphism transport_zmap(const FinitePresentation& p, const ZHomomorphism& eps,
                             const TietzeMove& mv) {
  struct Visitor {
    const FinitePresentation& p;
    const ZHomomorphism& eps;

    ZHomomorphism operator()(const tietze::AddGenerator& m) const {
      ZHomomorphism out = eps;
      out.values.push_back(zmap_image(eps, m.definition));
      return out;
    }
    ZHomomorphism operator()(const tietze::RemoveGenerator& m) const {
      ZHomomorphism out;
      for (GenId g = 0; g < eps.values.size(); ++g)
        if (g != m.generator) out.values.push_back(eps.values[g]);
      return out;
    }
    ZHomomorphism operator()(const tietze::AddRedundantRelator&) const { return eps; }
    ZHomomorphism operator()(const tietze::RemoveRedundantRelator&) const { return eps; }
    ZHomomorphism operator()(const tietze::SubstituteGenerator& m) const {
      // old g = replacement(new g, others); replacement = u g^s v.
      BigInt rest = 0;
      int sign = 0;
      for (const Letter& l : m.replacement) {
        if (l.gen == m.generator) {
          sign = l.sign;
          continue;
        }
        if (l.sign > 0)
          rest += eps.values.at(l.gen);
        else
          rest -= eps.values.at(l.gen);
      }
      if (sign == 0) throw MalformedMove("replacement must contain the generator");
      ZHomomorphism out = eps;
      out.values.at(m.generator) = sign * (eps.values.at(m.generator) - rest);
      return out;
    }
  };
  return std::visit(Visitor{p, eps}, mv);
}

NormalizedPresentation normalize_stable_letter(const FinitePresentation& p,
                                               const ZHomomorphism& eps) {
  const auto check = check_zmap(p, eps);
  if (check.wrong_length)
    throw InvalidArgument("map has " + std::to_string(eps.values.size()) +
                          " values for " + std::to_string(p.generator_count()) +
                          " generators");
  if (check.not_homomorphism) throw NotHomomorphism("some relator has nonzero image");
  if (check.not_surjective)
    throw NotSurjective("values have gcd " + check.gcd.get_str() + ", not 1");

  TietzeLog log(p);
  ZHomomorphism values = eps;
  auto substitute = [&](const tietze::SubstituteGenerator& mv) {
    values = transport_zmap(log.current(), values, mv);
    log.apply(mv);
  };

  for (;;) {
    std::vector<GenId> nonzero;
    for (GenId g = 0; g < values.values.size(); ++g)
      if (values.values[g] != 0) nonzero.push_back(g);
    if (nonzero.size() <= 1) break;
    const GenId pivot = *std::min_element(
        nonzero.begin(), nonzero.end(), [&](GenId a, GenId b) {
          return mpz_cmpabs(values.values[a].get_mpz_t(), values.values[b].get_mpz_t()) < 0;
        });
    const GenId target = nonzero.front() == pivot ? nonzero[1] : nonzero.front();
    const BigInt q = values.values[target] / values.values[pivot];  // truncating
    if (!q.fits_slong_p()) throw ResourceLimitExceeded("Euclidean quotient too large");
    // new target = old target * pivot^-q, i.e. textual target -> target pivot^q.
    substitute({target, Word::power_of(target, 1) * Word::power_of(pivot, q.get_si())});
  }

  GenId stable = 0;
  while (values.values[stable] == 0) ++stable;
  if (values.values[stable] < 0) substitute({stable, Word::power_of(stable, -1)});

  NormalizedPresentation out{log.current(), log.current().symbol(stable), log.moves(),
                             std::move(values)};
  return out;
}

}  // namespace fpg
