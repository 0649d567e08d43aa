#include "fpg/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fpg/certify.hpp"
#include "fpg/covers.hpp"
#include "fpg/hnn.hpp"
#include "fpg/io.hpp"
#include "fpg/l2est.hpp"
#include "fpg/zmaps.hpp"

namespace fpg::cli {

namespace {

// Raised for problems with flag values rather than with the input.
class UsageError : public Error {
 public:
  using Error::Error;
};

class NoEpimorphism : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string input;
  std::string format;
  std::string zmap;
  std::size_t degree = 0;
  std::size_t max_n = 0;
  bool use_deficiency = false;
  std::string l2_lower;
};

std::string read_input(const std::string& input, std::istream& in) {
  std::ostringstream buf;
  if (input == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) {
    std::ifstream f(input);
    if (!f) throw UsageError("cannot read '" + input + "'");
    buf << f.rdbuf();
    return buf.str();
  }
  return input;
}

FinitePresentation load(const Options& o, std::istream& in, std::ostream& err) {
  auto parsed = parse_presentation(read_input(o.input, in));
  for (const auto& w : parsed.warnings) err << "warning: " << w << '\n';
  return std::move(parsed.presentation);
}

std::optional<ZHomomorphism> flag_zmap(const Options& o, const FinitePresentation& p) {
  if (o.zmap.empty()) return std::nullopt;
  try {
    return parse_zmap(o.zmap, p);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--z: ") + e.what());
  }
}

std::string zmap_flag_text(const ZHomomorphism& eps, const FinitePresentation& p) {
  std::string s;
  for (GenId g = 0; g < eps.values.size(); ++g) {
    if (g) s += ',';
    s += p.generators()[g] + "=" + to_decimal(eps.values[g]);
  }
  return s;
}

// The map from --z (validated) or one found from the abelianization.
ZHomomorphism require_zmap(const Options& o, const FinitePresentation& p) {
  if (auto eps = flag_zmap(o, p)) {
    const auto check = check_zmap(p, *eps);
    if (check.wrong_length || check.not_homomorphism)
      throw UsageError("--z does not define a homomorphism (some relator has nonzero image)");
    if (check.not_surjective)
      throw UsageError("--z is not surjective (gcd of values is " + to_decimal(check.gcd) + ")");
    return *eps;
  }
  if (auto eps = find_zmap(p)) return *eps;
  throw NoEpimorphism("b1 = 0: no epimorphism onto Z");
}

NormalizedPresentation normalized(const Options& o, const FinitePresentation& p) {
  return normalize_stable_letter(p, require_zmap(o, p));
}

bool json_format(const Options& o) { return o.format == "json"; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_parse(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto p = load(o, in, err);
  if (json_format(o))
    emit(out, presentation_to_json(p));
  else
    out << presentation_to_text(p);
  return kOk;
}

int cmd_abelianize(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto p = load(o, in, err);
  const auto ab = abelianization(p);
  if (json_format(o)) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    const Json summary = abelianization_to_json(ab);
    for (const auto& [k, v] : summary.items()) j[k] = v;
    j["deficiency"] = to_decimal(deficiency(p));
    j["relation_matrix"] = matrix_to_json(relation_matrix(p));
    emit(out, j);
  } else {
    std::string tors;
    for (const auto& t : ab.torsion) tors += (tors.empty() ? "" : ",") + to_decimal(t);
    out << "b1 = " << ab.b1 << '\n'
        << "torsion = [" << tors << "]\n"
        << "min_abelian_gens = " << ab.min_abelian_gens << '\n'
        << "deficiency = " << deficiency(p) << '\n';
  }
  return kOk;
}

int cmd_find_z(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto p = load(o, in, err);
  const auto eps = require_zmap(o, p);
  if (json_format(o)) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["source"] = o.zmap.empty() ? "found" : "verified";
    j["zmap"] = zmap_to_json(eps, p);
    emit(out, j);
  } else {
    out << zmap_flag_text(eps, p) << '\n';
  }
  return kOk;
}

int cmd_split(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto p = load(o, in, err);
  const auto norm = normalized(o, p);
  const auto split = split_as_hnn(norm.presentation, norm.stable);
  if (json_format(o)) {
    Json j = splitting_to_json(split);
    j["verified"] = verify_splitting(split, norm.presentation);
    j["normalized"] = presentation_to_json(norm.presentation);
    Json moves = Json::array();
    FinitePresentation cur = p;
    for (const auto& mv : norm.moves) {
      moves.push_back(move_to_json(mv, cur));
      cur = apply_tietze(cur, mv);
    }
    j["moves"] = std::move(moves);
    emit(out, j);
  } else {
    const auto& names = split.base.generators();
    out << "stable letter: " << split.stable.name << '\n'
        << "k = " << split.k() << ", N = " << split.shift_bound << ", M = " << split.rank_bound
        << " (occurrence bound " << split.occurrence_bound << ")\n"
        << "base:\n"
        << presentation_to_text(split.base);
    out << "C:";
    for (const auto& w : split.assoc_c) out << ' ' << format_word(w, names);
    out << "\nD:";
    for (const auto& w : split.assoc_d) out << ' ' << format_word(w, names);
    out << "\nverified: " << (verify_splitting(split, norm.presentation) ? "yes" : "no") << '\n';
  }
  return kOk;
}

int cmd_cover(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto p = load(o, in, err);
  const auto norm = normalized(o, p);
  const auto cover = kernel_presentation(norm.presentation, norm.stable, o.degree);
  const auto ab = abelianization(cover.pres);
  if (json_format(o)) {
    Json j = cover_to_json(cover);
    j["abelianization"] = abelianization_to_json(ab);
    const auto split = split_as_hnn(norm.presentation, norm.stable);
    if (cover.degree >= split.shift_bound)
      j["hnn"] = cover_hnn_to_json(cover_hnn_data(split, cover), cover);
    emit(out, j);
  } else {
    std::string tors;
    for (const auto& t : ab.torsion) tors += (tors.empty() ? "" : ",") + to_decimal(t);
    out << "# K_" << cover.degree << " = ker(H -> Z/" << cover.degree << ")\n"
        << presentation_to_text(cover.pres) << "b1 = " << ab.b1 << ", torsion = [" << tors
        << "]\n";
  }
  return kOk;
}

int cmd_betti_growth(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto p = load(o, in, err);
  const auto norm = normalized(o, p);
  const auto report = betti_growth(norm.presentation, norm.stable, o.max_n);
  const auto bounds = l2_bounds(p);
  if (json_format(o)) {
    Json j = growth_to_json(report);
    j["bounds"] = bounds_to_json(bounds);
    emit(out, j);
  } else {
    out << growth_to_text(report) << "bounds: " << to_decimal(bounds.lower_from_deficiency)
        << " <= b1(2) <= " << to_decimal(bounds.upper_from_rank)
        << " (deficiency - 1; generator count - 1)\n";
  }
  return kOk;
}

int cmd_certify(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto p = load(o, in, err);
  CertifyOptions opts;
  if (!o.l2_lower.empty()) {
    opts.source = LowerBoundSource::User;
    try {
      opts.user_lower = parse_rational(o.l2_lower);
    } catch (const ParseError& e) {
      throw UsageError(std::string("--l2-lower-bound: ") + e.what());
    }
  }
  opts.zmap = flag_zmap(o, p);
  const auto cert = certify(p, opts);
  out << render_certificate(cert, o.format);
  switch (cert.verdict) {
    case Verdict::Certified: return kOk;
    case Verdict::Inconclusive: return kInconclusive;
    case Verdict::Failed: return kFailed;
  }
  return kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Finite presentations: HNN splittings, cyclic covers, Betti growth and "
               "acylindrical hyperbolicity certificates"};
  app.name("fpg");
  app.require_subcommand(1);
  Options o;

  std::vector<std::pair<CLI::App*, std::string>> default_formats;
  auto add_common = [&](CLI::App* sub, const std::string& default_format, bool with_z) {
    sub->add_option("input", o.input, "presentation file, '-' for stdin, or inline text")
        ->required();
    sub->add_option("--format", o.format, "output format (default: " + default_format + ")")
        ->check(CLI::IsMember({"json", "text"}));
    if (with_z) sub->add_option("--z", o.zmap, "map onto Z, e.g. \"t=1,a=0\"");
    default_formats.emplace_back(sub, default_format);
  };

  auto* parse = app.add_subcommand("parse", "parse and print a presentation");
  add_common(parse, "json", false);
  auto* abel = app.add_subcommand("abelianize", "first Betti number and torsion");
  add_common(abel, "text", false);
  auto* findz = app.add_subcommand("find-z", "find or verify an epimorphism onto Z");
  add_common(findz, "text", true);
  auto* split = app.add_subcommand("split", "HNN splitting over the stable letter");
  add_common(split, "json", true);
  auto* cover = app.add_subcommand("cover", "presentation of the n-fold cyclic cover");
  add_common(cover, "json", true);
  cover->add_option("-n", o.degree, "cover degree")->required()->check(CLI::PositiveNumber);
  auto* growth = app.add_subcommand("betti-growth", "b1(K_n)/n for n = 1..max-n");
  add_common(growth, "text", true);
  growth->add_option("--max-n", o.max_n, "largest cover degree")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* cert = app.add_subcommand("certify", "acylindrical hyperbolicity certificate");
  add_common(cert, "text", true);
  auto* use_def = cert->add_flag("--use-deficiency", o.use_deficiency,
                                 "L = deficiency - 1 (default)");
  auto* lower = cert->add_option("--l2-lower-bound", o.l2_lower,
                                 "user-supplied lower bound P/Q for the first l2-Betti number");
  use_def->excludes(lower);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (o.format.empty())
    for (const auto& [sub, fmt] : default_formats)
      if (sub->parsed()) o.format = fmt;

  try {
    if (*parse) return cmd_parse(o, in, out, err);
    if (*abel) return cmd_abelianize(o, in, out, err);
    if (*findz) return cmd_find_z(o, in, out, err);
    if (*split) return cmd_split(o, in, out, err);
    if (*cover) return cmd_cover(o, in, out, err);
    if (*growth) return cmd_betti_growth(o, in, out, err);
    if (*cert) return cmd_certify(o, in, out, err);
  } catch (const NoEpimorphism& e) {
    err << e.what() << '\n';
    return kNoEpimorphism;
  } catch (const ParseError& e) {
    err << "parse error " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace fpg::cli
