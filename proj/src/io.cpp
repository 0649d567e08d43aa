#include "fpg/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iomanip>
#include <set>
#include <sstream>

namespace fpg {

namespace {

constexpr long kMaxExponent = 1'000'000;

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && is_space(s[b])) ++b;
  std::size_t e = s.size();
  while (e > b && is_space(s[e - 1])) --e;
  if (lead) *lead = b;
  return s.substr(b, e - b);
}

std::optional<GenId> lookup(const std::vector<std::string>& names, std::string_view name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<GenId>(it - names.begin());
}

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& names,
                std::size_t offset) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  bool saw_atom = false;
  while (i < text.size()) {
    const char c = text[i];
    if (is_space(c) || c == '*') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (c == '1' && (i + 1 == text.size() || is_space(text[i + 1]) || text[i + 1] == '*')) {
      ++i;
      saw_atom = true;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw SyntaxError(std::string("unexpected character '") + c + "'", offset + i);
    while (i < text.size() && is_name_char(text[i])) ++i;
    const std::string_view name = text.substr(start, i - start);
    const auto id = lookup(names, name);
    if (!id)
      throw UnknownGenerator("unknown generator '" + std::string(name) + "'", offset + start);
    long e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const std::size_t exp_start = i;
      if (i < text.size() && text[i] == '+') ++i;
      const char* first = text.data() + i;
      const char* last = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(first, last, e);
      if (ec != std::errc() || ptr == first)
        throw SyntaxError("expected an integer exponent after '^'", offset + exp_start);
      if (text[exp_start] == '+' && *first == '-')
        throw SyntaxError("malformed exponent", offset + exp_start);
      i = static_cast<std::size_t>(ptr - text.data());
      if (e == 0) throw SyntaxError("exponent must be nonzero", offset + exp_start);
      if (e > kMaxExponent || e < -kMaxExponent)
        throw SyntaxError("exponent out of range", offset + exp_start);
    }
    if (i < text.size() && !is_space(text[i]) && text[i] != '*')
      throw SyntaxError(std::string("unexpected character '") + text[i] + "'", offset + i);
    const int sign = e < 0 ? -1 : 1;
    for (long k = 0; k < (e < 0 ? -e : e); ++k) letters.push_back({*id, sign});
    saw_atom = true;
  }
  if (!saw_atom) throw SyntaxError("empty word (write 1 for the identity)", offset);
  return Word(letters);
}

namespace {

std::vector<std::string> parse_generator_list(std::string_view text, std::size_t offset) {
  std::vector<std::string> names;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i]) || text[i] == ',') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i]) && text[i] != ',') ++i;
    std::string name(text.substr(start, i - start));
    if (!is_valid_generator_name(name))
      throw SyntaxError("invalid generator name '" + name + "'", offset + start);
    if (std::find(names.begin(), names.end(), name) != names.end())
      throw DuplicateGenerator("duplicate generator '" + name + "'", offset + start);
    names.push_back(std::move(name));
  }
  return names;
}

void parse_relator_list(std::string_view text, std::size_t offset,
                        const std::vector<std::string>& names, std::vector<Word>& out,
                        std::vector<std::string>& warnings) {
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const std::string_view segment = text.substr(start, end - start);
    std::size_t lead = 0;
    const std::string_view body = trim(segment, &lead);
    if (!body.empty()) {
      Word w = parse_word(body, names, offset + start + lead);
      if (cyclic_reduce(w).core.empty())
        warnings.push_back("relator '" + std::string(body) +
                           "' is trivial after reduction; dropped");
      else
        out.push_back(std::move(w));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
}

}  // namespace

ParsedPresentation parse_presentation(std::string_view text) {
  ParsedPresentation result;
  std::vector<std::string> names;
  std::vector<Word> relators;

  const std::size_t bar = text.find('|');
  if (bar != std::string_view::npos) {
    if (text.find('|', bar + 1) != std::string_view::npos)
      throw SyntaxError("more than one '|'", text.find('|', bar + 1));
    names = parse_generator_list(text.substr(0, bar), 0);
    parse_relator_list(text.substr(bar + 1), bar + 1, names, relators, result.warnings);
  } else {
    bool saw_gens = false;
    bool saw_rels = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t eol = std::min(text.find('\n', pos), text.size());
      std::size_t lead = 0;
      const std::string_view line = trim(text.substr(pos, eol - pos), &lead);
      const std::size_t at = pos + lead;
      if (line.empty() || line.front() == '#') {
      } else if (line.starts_with("gens:")) {
        if (saw_gens) throw SyntaxError("repeated 'gens:' line", at);
        names = parse_generator_list(line.substr(5), at + 5);
        saw_gens = true;
      } else if (line.starts_with("rels:")) {
        if (!saw_gens) throw SyntaxError("'rels:' before 'gens:'", at);
        if (saw_rels) throw SyntaxError("repeated 'rels:' line", at);
        parse_relator_list(line.substr(5), at + 5, names, relators, result.warnings);
        saw_rels = true;
      } else {
        throw SyntaxError("expected 'gens:' or 'rels:' line", at);
      }
      if (eol == text.size()) break;
      pos = eol + 1;
    }
    if (!saw_gens) throw SyntaxError("missing 'gens:' line or inline 'gens | rels' form", 0);
  }
  result.presentation = FinitePresentation(std::move(names), std::move(relators));
  return result;
}

std::string presentation_to_text(const FinitePresentation& p) {
  std::ostringstream os;
  os << "gens:";
  for (const auto& g : p.generators()) os << ' ' << g;
  os << "\nrels:";
  for (std::size_t i = 0; i < p.relator_count(); ++i)
    os << (i ? " ; " : " ") << p.format(p.relators()[i]);
  os << '\n';
  return os.str();
}

ZHomomorphism parse_zmap(std::string_view text, const FinitePresentation& p) {
  ZHomomorphism eps;
  eps.values.assign(p.generator_count(), 0);
  std::vector<bool> seen(p.generator_count(), false);
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    std::size_t lead = 0;
    const std::string_view item = trim(text.substr(start, end - start), &lead);
    const std::size_t at = start + lead;
    if (!item.empty()) {
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) throw SyntaxError("expected name=value", at);
      const std::string_view name = trim(item.substr(0, eq));
      const auto id = p.find_generator(name);
      if (!id) throw UnknownGenerator("unknown generator '" + std::string(name) + "'", at);
      if (seen[*id]) throw DuplicateGenerator("generator '" + std::string(name) + "' repeated", at);
      seen[*id] = true;
      const std::string value(trim(item.substr(eq + 1)));
      if (eps.values[*id].set_str(value.starts_with('+') ? value.substr(1) : value, 10) != 0)
        throw SyntaxError("invalid integer '" + value + "'", at + eq + 1);
    } else if (end != text.size() || start != 0) {
      throw SyntaxError("empty map entry", at);
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return eps;
}

Rational parse_rational(std::string_view text) {
  const std::string s(trim(text));
  Rational q;
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    return i < t.size() && std::all_of(t.begin() + static_cast<long>(i), t.end(),
                                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  auto strip_plus = [](const std::string& t) { return t.starts_with('+') ? t.substr(1) : t; };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw SyntaxError("invalid rational '" + s + "'", 0);
    q = BigInt(strip_plus(s));
  } else {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.starts_with('-') || den.starts_with('+'))
      throw SyntaxError("invalid rational '" + s + "'", 0);
    const BigInt d(den);
    if (d == 0) throw SyntaxError("zero denominator", slash + 1);
    q = Rational(BigInt(strip_plus(num)), d);
    q.canonicalize();
  }
  return q;
}

std::string to_decimal(const BigInt& x) { return x.get_str(); }
std::string to_decimal(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_str();
}
std::string to_decimal(long x) { return std::to_string(x); }
std::string to_decimal(std::size_t x) { return std::to_string(x); }

Json word_to_json(const Word& w, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const Letter& l : w) out.push_back(Json::array({names.at(l.gen), l.sign > 0 ? "1" : "-1"}));
  return out;
}

namespace {

int sign_from_json(const Json& s) {
  if (s.is_string()) {
    const auto v = s.get<std::string>();
    if (v == "1" || v == "+1") return 1;
    if (v == "-1") return -1;
  }
  throw InvalidArgument("letter sign must be \"1\" or \"-1\"");
}

std::size_t index_from_json(const Json& j) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && !s.empty()) return v;
  }
  throw InvalidArgument("expected a non-negative decimal index");
}

GenId generator_from_json(const Json& j, const FinitePresentation& p) {
  const auto id = p.find_generator(j.get<std::string>());
  if (!id) throw InvalidArgument("unknown generator '" + j.get<std::string>() + "'");
  return *id;
}

}  // namespace

Word word_from_json(const Json& j, const std::vector<std::string>& names) {
  if (!j.is_array()) throw InvalidArgument("word must be a JSON array");
  std::vector<Letter> letters;
  for (const auto& l : j) {
    if (!l.is_array() || l.size() != 2) throw InvalidArgument("letter must be [name, sign]");
    const auto id = lookup(names, l[0].get<std::string>());
    if (!id) throw InvalidArgument("unknown generator '" + l[0].get<std::string>() + "'");
    letters.push_back({*id, sign_from_json(l[1])});
  }
  return Word(letters);
}

Json presentation_to_json(const FinitePresentation& p) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["generators"] = p.generators();
  Json rels = Json::array();
  for (const auto& r : p.relators()) rels.push_back(word_to_json(r, p.generators()));
  j["relators"] = std::move(rels);
  return j;
}

FinitePresentation presentation_from_json(const Json& j) {
  if (!j.contains("generators") || !j.contains("relators"))
    throw InvalidArgument("presentation JSON needs 'generators' and 'relators'");
  if (j.value("schema_version", "") != kSchemaVersion)
    throw InvalidArgument("unsupported presentation schema_version");
  auto names = j.at("generators").get<std::vector<std::string>>();
  std::vector<Word> rels;
  for (const auto& r : j.at("relators")) rels.push_back(word_from_json(r, names));
  return FinitePresentation(std::move(names), std::move(rels));
}

Json zmap_to_json(const ZHomomorphism& eps, const FinitePresentation& p) {
  Json out = Json::array();
  for (GenId g = 0; g < eps.values.size(); ++g)
    out.push_back(Json::array({p.generators().at(g), to_decimal(eps.values[g])}));
  return out;
}

ZHomomorphism zmap_from_json(const Json& j, const FinitePresentation& p) {
  ZHomomorphism eps;
  eps.values.assign(p.generator_count(), 0);
  if (!j.is_array() || j.size() != p.generator_count())
    throw InvalidArgument("map must list every generator");
  for (GenId g = 0; g < p.generator_count(); ++g) {
    if (j[g].at(0).get<std::string>() != p.generators()[g])
      throw InvalidArgument("map entries must follow generator order");
    eps.values[g] = BigInt(j[g].at(1).get<std::string>());
  }
  return eps;
}

namespace {

Json witness_to_json(const DerivationWitness& w, const FinitePresentation& p) {
  Json out = Json::array();
  for (const auto& f : w) {
    Json jf;
    jf["conjugator"] = word_to_json(f.conjugator, p.generators());
    jf["relator"] = to_decimal(f.relator);
    jf["sign"] = f.sign > 0 ? "1" : "-1";
    out.push_back(std::move(jf));
  }
  return out;
}

DerivationWitness witness_from_json(const Json& j, const FinitePresentation& p) {
  DerivationWitness w;
  for (const auto& jf : j)
    w.push_back({word_from_json(jf.at("conjugator"), p.generators()),
                 index_from_json(jf.at("relator")), sign_from_json(jf.at("sign"))});
  return w;
}

}  // namespace

Json move_to_json(const TietzeMove& mv, const FinitePresentation& before) {
  const auto& names = before.generators();
  Json j;
  j["move"] = std::string(move_kind(mv));
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, tietze::AddGenerator>) {
          j["name"] = m.name;
          j["definition"] = word_to_json(m.definition, names);
        } else if constexpr (std::is_same_v<T, tietze::RemoveGenerator>) {
          j["generator"] = names.at(m.generator);
          j["relator"] = to_decimal(m.relator);
        } else if constexpr (std::is_same_v<T, tietze::AddRedundantRelator>) {
          j["relator"] = word_to_json(m.relator, names);
          j["witness"] = m.witness ? witness_to_json(*m.witness, before) : Json(nullptr);
        } else if constexpr (std::is_same_v<T, tietze::RemoveRedundantRelator>) {
          j["index"] = to_decimal(m.index);
          j["witness"] = witness_to_json(m.witness, before);
        } else {
          j["generator"] = names.at(m.generator);
          j["replacement"] = word_to_json(m.replacement, names);
        }
      },
      mv);
  return j;
}

TietzeMove move_from_json(const Json& j, const FinitePresentation& before) {
  const auto kind = j.at("move").get<std::string>();
  const auto& names = before.generators();
  if (kind == "add_generator")
    return tietze::AddGenerator{j.at("name").get<std::string>(),
                                word_from_json(j.at("definition"), names)};
  if (kind == "remove_generator")
    return tietze::RemoveGenerator{generator_from_json(j.at("generator"), before),
                                   index_from_json(j.at("relator"))};
  if (kind == "add_redundant_relator") {
    tietze::AddRedundantRelator m{word_from_json(j.at("relator"), names), std::nullopt};
    if (j.contains("witness") && !j.at("witness").is_null())
      m.witness = witness_from_json(j.at("witness"), before);
    return m;
  }
  if (kind == "remove_redundant_relator")
    return tietze::RemoveRedundantRelator{index_from_json(j.at("index")),
                                          witness_from_json(j.at("witness"), before)};
  if (kind == "substitute_generator")
    return tietze::SubstituteGenerator{generator_from_json(j.at("generator"), before),
                                       word_from_json(j.at("replacement"), names)};
  throw InvalidArgument("unknown Tietze move '" + kind + "'");
}

Json abelianization_to_json(const Abelianization& ab) {
  Json j;
  j["b1"] = to_decimal(ab.b1);
  Json tors = Json::array();
  for (const auto& t : ab.torsion) tors.push_back(to_decimal(t));
  j["torsion"] = std::move(tors);
  j["min_abelian_gens"] = to_decimal(ab.min_abelian_gens);
  return j;
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_decimal(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json splitting_to_json(const HnnSplitting& split) {
  const auto& base_names = split.base.generators();
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["stable"] = split.stable.name;
  j["k"] = to_decimal(split.k());
  j["shift_bound_N"] = to_decimal(split.shift_bound);
  j["rank_bound_M"] = to_decimal(split.rank_bound);
  j["occurrence_bound"] = to_decimal(split.occurrence_bound);
  j["base"] = presentation_to_json(split.base);
  Json offsets = Json::array();
  for (long c : split.relator_offsets) offsets.push_back(to_decimal(c));
  j["relator_offsets"] = std::move(offsets);
  Json c = Json::array(), d = Json::array(), conj = Json::array();
  for (const auto& w : split.assoc_c) c.push_back(word_to_json(w, base_names));
  for (const auto& w : split.assoc_d) d.push_back(word_to_json(w, base_names));
  for (const auto& [from, to] : split.conj_relations)
    conj.push_back(Json::array({base_names[from], base_names[to]}));
  j["assoc_C"] = std::move(c);
  j["assoc_D"] = std::move(d);
  j["conj_relations"] = std::move(conj);

  std::vector<std::string> original(split.k() + 1);
  original.at(split.stable.id) = split.stable.name;
  for (const auto& a : split.original_letters) original.at(a.id) = a.name;
  Json emb = Json::array();
  for (GenId g = 0; g < split.base_letters.size(); ++g)
    emb.push_back(Json::array(
        {base_names[g], word_to_json(split.embed_letter(split.base_letters[g]), original)}));
  j["embedding"] = std::move(emb);
  return j;
}

namespace {

std::vector<std::string> original_names(const CoverPresentation& cover) {
  GenId bound = cover.original_stable.id + 1;
  for (const auto& w : cover.embedding) bound = std::max(bound, w.generator_bound());
  std::vector<std::string> names(bound);
  names[cover.original_stable.id] = cover.original_stable.name;
  // Recover the a_alpha names from "<a>_c0" cover generators.
  for (GenId g = 1; g < cover.pres.generator_count(); ++g) {
    if (cover.schreier_index[g].second != 0) continue;
    const std::string& n = cover.pres.generators()[g];
    for (const Letter& l : cover.embedding[g])
      if (l.gen != cover.original_stable.id) names[l.gen] = n.substr(0, n.size() - 3);
  }
  return names;
}

}  // namespace

Json cover_to_json(const CoverPresentation& cover) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["degree"] = to_decimal(cover.degree);
  j["stable_x"] = cover.stable_x.name;
  j["presentation"] = presentation_to_json(cover.pres);
  const auto names = original_names(cover);
  Json emb = Json::array();
  for (GenId g = 0; g < cover.pres.generator_count(); ++g)
    emb.push_back(Json::array({cover.pres.generators()[g], word_to_json(cover.embedding[g], names)}));
  j["embedding"] = std::move(emb);
  j["inherited_zmap"] = zmap_to_json(cover.inherited_zmap, cover.pres);
  return j;
}

Json cover_hnn_to_json(const CoverHnnData& data, const CoverPresentation& cover) {
  const auto& names = cover.pres.generators();
  Json j;
  j["stable_x"] = data.stable_x.name;
  Json c = Json::array(), d = Json::array(), base = Json::array();
  for (const auto& w : data.assoc_c) c.push_back(word_to_json(w, names));
  for (const auto& w : data.assoc_d) d.push_back(word_to_json(w, names));
  for (GenId g : data.base_generators) base.push_back(names.at(g));
  j["assoc_C"] = std::move(c);
  j["assoc_D"] = std::move(d);
  j["base_generators"] = std::move(base);
  j["rank_bound_M"] = to_decimal(data.rank_bound);
  return j;
}

Json growth_to_json(const BettiGrowthReport& report) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["label"] = BettiGrowthReport::kLabel;
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json row;
    row["n"] = to_decimal(r.n);
    row["b1"] = to_decimal(r.b1);
    Json tors = Json::array();
    for (const auto& t : r.torsion) tors.push_back(to_decimal(t));
    row["torsion"] = std::move(tors);
    row["ratio"] = to_decimal(r.ratio);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["last_ratio"] = to_decimal(report.last_ratio);
  j["ratios_nonincreasing"] = report.ratios_nonincreasing;
  j["b1_nondecreasing"] = report.b1_nondecreasing;
  return j;
}

Json bounds_to_json(const L2Bounds& bounds) {
  Json j;
  j["lower_from_deficiency"] = to_decimal(bounds.lower_from_deficiency);
  j["upper_from_rank"] = to_decimal(bounds.upper_from_rank);
  j["upper_note"] = "generator count - 1 of this presentation";
  if (bounds.user_lower) {
    j["user_lower"] = to_decimal(*bounds.user_lower);
    j["user_note"] = bounds.user_note;
  }
  return j;
}

namespace {

std::string torsion_text(const std::vector<BigInt>& torsion) {
  if (torsion.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (i) s += ',';
    s += to_decimal(torsion[i]);
  }
  return s;
}

}  // namespace

std::string growth_to_text(const BettiGrowthReport& report) {
  std::vector<std::array<std::string, 4>> cells{{"n", "b1", "torsion", "ratio"}};
  for (const auto& r : report.rows)
    cells.push_back({to_decimal(r.n), to_decimal(r.b1), torsion_text(r.torsion),
                     to_decimal(r.ratio)});
  std::array<std::size_t, 4> width{};
  for (const auto& row : cells)
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  os << "# " << BettiGrowthReport::kLabel << " (estimator, not an l2-Betti number)\n";
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (c) os << "  ";
      os << std::setw(static_cast<int>(width[c])) << (c == 2 ? std::left : std::right)
         << row[c];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace fpg
