#include "fpg/certify.hpp"

#include <openssl/evp.h>

#include <iomanip>
#include <sstream>

#include "fpg/covers.hpp"
#include "fpg/hnn.hpp"
#include "fpg/intlin.hpp"

namespace fpg {

std::string_view to_string(StepStatus s) {
  switch (s) {
    case StepStatus::Computed: return "computed";
    case StepStatus::Cited: return "cited";
    case StepStatus::Failed: return "failed";
  }
  return "failed";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::Failed: return "failed";
  }
  return "failed";
}

std::string_view to_string(LowerBoundSource s) {
  return s == LowerBoundSource::Deficiency ? "deficiency-route" : "user-supplied";
}

std::string presentation_digest(const FinitePresentation& p) {
  const std::string canonical = presentation_to_json(p).dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(canonical.data(), canonical.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 digest failed");
  std::ostringstream os;
  os << "sha256:";
  for (unsigned int i = 0; i < len; ++i)
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

std::size_t cover_degree(const Rational& lower, std::size_t rank_bound,
                         std::size_t shift_bound) {
  if (lower <= 0) throw InvalidArgument("cover degree needs a positive lower bound");
  const Rational needed = Rational(BigInt(static_cast<unsigned long>(rank_bound + 1))) / lower;
  BigInt n;
  mpz_cdiv_q(n.get_mpz_t(), needed.get_num_mpz_t(), needed.get_den_mpz_t());
  if (!n.fits_ulong_p()) throw ResourceLimitExceeded("cover degree does not fit a machine word");
  std::size_t degree = n.get_ui();
  return std::max({degree, shift_bound, std::size_t{1}});
}

namespace {

std::string str(std::size_t x) { return std::to_string(x); }

Json size_json(std::size_t x) { return str(x); }

BigInt gcd_of(const ZHomomorphism& eps) {
  BigInt g = 0;
  for (const auto& v : eps.values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

// Everything the later steps derive from, in the form the auditor rebuilds.
struct Context {
  FinitePresentation input;
  ZHomomorphism eps;
  NormalizedPresentation norm;
  HnnSplitting split;
  std::size_t degree = 0;
  CoverPresentation cover;
  CoverHnnData edge;
};

CertStep zmap_step(const FinitePresentation& p, const ZHomomorphism& eps, bool user) {
  const auto check = check_zmap(p, eps);
  CertStep s;
  s.index = 1;
  s.claim = "eps: H -> Z is a surjective homomorphism";
  s.justification = "every relator has eps-image 0 and the values have gcd 1";
  s.status = check.ok() ? StepStatus::Computed : StepStatus::Failed;
  s.data["source"] = user ? "user" : "found";
  s.data["eps"] = zmap_to_json(eps, p);
  Json images = Json::array();
  for (const auto& x : check.relator_images) images.push_back(to_decimal(x));
  s.data["relator_images"] = std::move(images);
  s.data["gcd"] = check.wrong_length ? Json("n/a") : Json(to_decimal(check.gcd));
  return s;
}

CertStep normalize_step(const FinitePresentation& p, const NormalizedPresentation& norm) {
  CertStep s;
  s.index = 2;
  s.claim = "after logged Tietze moves, eps(" + norm.stable.name +
            ") = 1 and every other generator maps to 0";
  s.justification = "Nielsen substitutions carry eps along a Euclidean reduction of its values";
  s.status = StepStatus::Computed;
  s.data["stable"] = norm.stable.name;
  Json moves = Json::array();
  FinitePresentation cur = p;
  for (const auto& mv : norm.moves) {
    moves.push_back(move_to_json(mv, cur));
    cur = apply_tietze(cur, mv);
  }
  s.data["moves"] = std::move(moves);
  s.data["normalized"] = presentation_to_json(norm.presentation);
  s.data["transported"] = zmap_to_json(norm.transported, norm.presentation);
  return s;
}

CertStep split_step(const HnnSplitting& split, bool verified) {
  CertStep s;
  s.index = 3;
  s.claim = "H is an HNN extension with stable letter " + split.stable.name +
            " and associated subgroups of rank at most M = k*N = " + str(split.k()) + "*" +
            str(split.shift_bound) + " = " + str(split.rank_bound);
  s.justification =
      "rewrite each relator over b_{a,j} = t^j a t^-j; add t b_{a,j} t^-1 = b_{a,j+1} "
      "for j < N; the associated subgroups are generated by k*N letters";
  s.status = verified ? StepStatus::Computed : StepStatus::Failed;
  s.data["k"] = size_json(split.k());
  s.data["N"] = size_json(split.shift_bound);
  s.data["M"] = size_json(split.rank_bound);
  s.data["verified"] = verified;
  Json sj = splitting_to_json(split);
  sj.erase("schema_version");
  s.data["splitting"] = std::move(sj);
  return s;
}

CertStep degree_step(const Rational& lower, const HnnSplitting& split, std::size_t degree) {
  const Rational needed = Rational(BigInt(static_cast<unsigned long>(split.rank_bound + 1))) / lower;
  BigInt ceil_term;
  mpz_cdiv_q(ceil_term.get_mpz_t(), needed.get_num_mpz_t(), needed.get_den_mpz_t());
  CertStep s;
  s.index = 4;
  s.claim = "cover degree n* = max(ceil((M+1)/L), N) = " + str(degree) +
            ", so n* * L >= M + 1";
  s.justification =
      "arithmetic; cites multiplicativity of the first l2-Betti number under finite "
      "index: b1(2)(K_n) = b1(2)(H) * [H:K_n] = n * b1(2)(H)";
  s.status = StepStatus::Computed;
  s.data["L"] = to_decimal(lower);
  s.data["M"] = size_json(split.rank_bound);
  s.data["N"] = size_json(split.shift_bound);
  s.data["ceil_term"] = to_decimal(ceil_term);
  s.data["n_star"] = size_json(degree);
  s.data["n_star_times_L"] = to_decimal(Rational(BigInt(static_cast<unsigned long>(degree))) * lower);
  return s;
}

CertStep rank_step(const Rational& lower, const HnnSplitting& split, std::size_t degree) {
  CertStep s;
  s.index = 5;
  s.claim = "b1(2)(K_" + str(degree) + ") >= " +
            to_decimal(Rational(BigInt(static_cast<unsigned long>(degree))) * lower) +
            " >= M + 1 = " + str(split.rank_bound + 1) + ", hence d(K_" + str(degree) +
            ") >= M + 2 = " + str(split.rank_bound + 2);
  s.justification = "cited: the first l2-Betti number of a group is at most its rank minus 1";
  s.status = StepStatus::Cited;
  s.data["n_star"] = size_json(degree);
  s.data["l2_lower_K"] = to_decimal(Rational(BigInt(static_cast<unsigned long>(degree))) * lower);
  s.data["rank_lower_K"] = size_json(split.rank_bound + 2);
  return s;
}

CertStep cover_step(const Context& ctx) {
  const auto& cover = ctx.cover;
  const auto& edge = ctx.edge;
  const auto ab = abelianization(cover.pres);
  CertStep s;
  s.index = 6;
  s.claim = "K_" + str(cover.degree) + " is an HNN extension with stable letter x = " +
            ctx.norm.stable.name + "^" + str(cover.degree) +
            " whose associated subgroup C is generated by " + str(edge.assoc_c.size()) +
            " <= M = " + str(edge.rank_bound) + " elements";
  s.justification =
      "Reidemeister-Schreier rewriting with transversal {t^0..t^(n-1)}; the edge group "
      "lies in ker(eps), so it is the same subgroup for every n >= N";
  const bool ok = edge.assoc_c.size() <= edge.rank_bound && edge.assoc_c.size() == edge.assoc_d.size();
  s.status = ok ? StepStatus::Computed : StepStatus::Failed;
  s.data["degree"] = size_json(cover.degree);
  s.data["generators"] = size_json(cover.pres.generator_count());
  s.data["relators"] = size_json(cover.pres.relator_count());
  s.data["deficiency"] = to_decimal(deficiency(cover.pres));
  s.data["cover_digest"] = presentation_digest(cover.pres);
  s.data["abelianization"] = abelianization_to_json(ab);
  s.data["edge"] = cover_hnn_to_json(edge, cover);
  s.data["C_size"] = size_json(edge.assoc_c.size());
  return s;
}

CertStep chain_step(const Context& ctx) {
  const std::size_t m = ctx.split.rank_bound;
  const std::size_t c = ctx.edge.assoc_c.size();
  CertStep s;
  s.index = 7;
  s.claim = "d(A) >= d(K) - 1 >= M + 1 = " + str(m + 1) + " > M = " + str(m) +
            " >= d(C) = d(D); so C and D are proper in A";
  s.justification =
      "d(K) <= d(A) + 1 for an HNN extension K of A; lower bound from step 5, generating "
      "set of C from step 6";
  s.status = (m + 1 > c) ? StepStatus::Computed : StepStatus::Failed;
  s.data["rank_lower_K"] = size_json(m + 2);
  s.data["rank_lower_A"] = size_json(m + 1);
  s.data["M"] = size_json(m);
  s.data["rank_upper_C"] = size_json(c);
  s.data["rank_upper_D"] = size_json(ctx.edge.assoc_d.size());
  return s;
}

CertStep s_normal_step(const Context& ctx) {
  CertStep s;
  s.index = 8;
  s.claim = "C is a proper, infinite-index, finitely generated subgroup of K_" +
            str(ctx.degree) + ", hence not s-normal: C^g meets C finitely for some g";
  s.justification =
      "cited: s-normal subgroup theorem for l2-Betti numbers (an infinite-index s-normal subgroup with finite first "
      "l2-Betti number forces b1(2) of the ambient group to vanish), contradicting step 5";
  s.status = StepStatus::Cited;
  s.data["ambient"] = "K_" + str(ctx.degree);
  s.data["C"] = cover_hnn_to_json(ctx.edge, ctx.cover)["assoc_C"];
  s.data["C_generators"] = size_json(ctx.edge.assoc_c.size());
  s.data["finitely_generated"] = true;
  return s;
}

CertStep mo_step(const Context& ctx) {
  CertStep s;
  s.index = 9;
  s.claim = "K_" + str(ctx.degree) + " is acylindrically hyperbolic";
  if (ctx.edge.assoc_c.empty()) {
    s.justification =
        "C is trivial, so C^g meets C finitely for every g; with C != A != D this is the "
        "acylindricity criterion for HNN extensions, instanced trivially";
    s.status = StepStatus::Computed;
    s.data["C_size"] = "0";
    s.data["trivial_edge_group"] = true;
  } else {
    s.justification =
        "cited: acylindricity criterion for HNN extensions (an HNN extension with C != A != D and some g with "
        "C^g meeting C finitely is acylindrically hyperbolic); hypotheses from steps 7-8";
    s.status = StepStatus::Cited;
    s.data["C_size"] = size_json(ctx.edge.assoc_c.size());
    s.data["trivial_edge_group"] = false;
  }
  return s;
}

CertStep transfer_step(const Context& ctx) {
  CertStep s;
  s.index = 10;
  s.claim = "the input group is acylindrically hyperbolic";
  s.justification =
      "cited: a group is acylindrically hyperbolic iff a finite-index subgroup is; K_" +
      str(ctx.degree) + " has index " + str(ctx.degree) + " in H";
  s.status = StepStatus::Cited;
  s.data["subgroup"] = "K_" + str(ctx.degree);
  s.data["index"] = size_json(ctx.degree);
  return s;
}

Verdict verdict_of(const std::vector<CertStep>& steps) {
  for (const auto& s : steps)
    if (s.status == StepStatus::Failed) return Verdict::Failed;
  return Verdict::Certified;
}

}  // namespace

Certificate certify(const FinitePresentation& p, const CertifyOptions& options) {
  Certificate c;
  c.input_digest = presentation_digest(p);
  c.presentation = p;
  c.lower_source = options.source;
  c.user_zmap = options.zmap;
  if (options.source == LowerBoundSource::User) {
    if (!options.user_lower) throw InvalidArgument("user-supplied route needs a lower bound");
    c.lower_bound = *options.user_lower;
  } else {
    c.lower_bound = Rational(deficiency(p) - 1);
  }
  const Rational& lower = c.lower_bound;
  if (lower <= 0) {
    c.verdict = Verdict::Inconclusive;
    c.note = "no positive lower bound on the first l2-Betti number (L = " + to_decimal(lower) +
             "); cannot select a cover degree";
    return c;
  }

  Context ctx;
  ctx.input = p;
  if (options.zmap) {
    ctx.eps = *options.zmap;
  } else if (auto found = find_zmap(p)) {
    ctx.eps = std::move(*found);
  } else {
    c.verdict = Verdict::Inconclusive;
    c.note = "b1 = 0: no epimorphism onto Z";
    return c;
  }

  c.steps.push_back(zmap_step(p, ctx.eps, options.zmap.has_value()));
  if (c.steps.back().status == StepStatus::Failed) {
    c.verdict = Verdict::Failed;
    c.note = "the supplied map is not an epimorphism onto Z";
    return c;
  }

  ctx.norm = normalize_stable_letter(p, ctx.eps);
  c.steps.push_back(normalize_step(p, ctx.norm));

  ctx.split = split_as_hnn(ctx.norm.presentation, ctx.norm.stable);
  c.steps.push_back(split_step(ctx.split, verify_splitting(ctx.split, ctx.norm.presentation)));

  ctx.degree = cover_degree(lower, ctx.split.rank_bound, ctx.split.shift_bound);
  c.steps.push_back(degree_step(lower, ctx.split, ctx.degree));
  c.steps.push_back(rank_step(lower, ctx.split, ctx.degree));

  ctx.cover = kernel_presentation(ctx.norm.presentation, ctx.norm.stable, ctx.degree);
  ctx.edge = cover_hnn_data(ctx.split, ctx.cover);
  c.steps.push_back(cover_step(ctx));
  c.steps.push_back(chain_step(ctx));
  if (!ctx.edge.assoc_c.empty()) c.steps.push_back(s_normal_step(ctx));
  c.steps.push_back(mo_step(ctx));
  c.steps.push_back(transfer_step(ctx));

  c.verdict = verdict_of(c.steps);
  if (c.verdict == Verdict::Certified && options.source == LowerBoundSource::User)
    c.note = "conditional on user bound L = " + to_decimal(lower);
  return c;
}

// ---------------------------------------------------------------------------
// Serialization

Json certificate_to_json(const Certificate& c) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "certificate";
  j["input_digest"] = c.input_digest;
  j["presentation"] = presentation_to_json(c.presentation);
  Json lb;
  lb["value"] = to_decimal(c.lower_bound);
  lb["provenance"] = std::string(to_string(c.lower_source));
  j["lower_bound"] = std::move(lb);
  j["user_zmap"] = c.user_zmap ? zmap_to_json(*c.user_zmap, c.presentation) : Json(nullptr);
  Json steps = Json::array();
  for (const auto& s : c.steps) {
    Json js;
    js["index"] = std::to_string(s.index);
    js["claim"] = s.claim;
    js["status"] = std::string(to_string(s.status));
    js["justification"] = s.justification;
    js["data"] = s.data;
    steps.push_back(std::move(js));
  }
  j["steps"] = std::move(steps);
  j["verdict"] = std::string(to_string(c.verdict));
  j["note"] = c.note;
  return j;
}

namespace {

template <typename Enum, std::size_t N>
Enum enum_from(const std::string& s, const std::array<Enum, N>& values) {
  for (Enum v : values)
    if (to_string(v) == s) return v;
  throw InvalidArgument("unknown value '" + s + "'");
}

}  // namespace

Certificate certificate_from_json(const Json& j) {
  if (j.value("schema_version", "") != kSchemaVersion || j.value("kind", "") != "certificate")
    throw InvalidArgument("not a schema_version 1 certificate document");
  Certificate c;
  c.input_digest = j.at("input_digest").get<std::string>();
  c.presentation = presentation_from_json(j.at("presentation"));
  c.lower_bound = parse_rational(j.at("lower_bound").at("value").get<std::string>());
  c.lower_source = enum_from(j.at("lower_bound").at("provenance").get<std::string>(),
                             std::array{LowerBoundSource::Deficiency, LowerBoundSource::User});
  if (!j.at("user_zmap").is_null()) c.user_zmap = zmap_from_json(j.at("user_zmap"), c.presentation);
  for (const auto& js : j.at("steps")) {
    CertStep s;
    s.index = std::stoi(js.at("index").get<std::string>());
    s.claim = js.at("claim").get<std::string>();
    s.status = enum_from(js.at("status").get<std::string>(),
                         std::array{StepStatus::Computed, StepStatus::Cited, StepStatus::Failed});
    s.justification = js.at("justification").get<std::string>();
    s.data = js.at("data");
    c.steps.push_back(std::move(s));
  }
  c.verdict = enum_from(j.at("verdict").get<std::string>(),
                        std::array{Verdict::Certified, Verdict::Inconclusive, Verdict::Failed});
  c.note = j.at("note").get<std::string>();
  return c;
}

std::string render_certificate(const Certificate& c, std::string_view format) {
  if (format == "json") return certificate_to_json(c).dump(2) + "\n";
  if (format != "text") throw UnknownFormat("unknown format '" + std::string(format) + "'");

  std::ostringstream os;
  os << "certificate " << c.input_digest << '\n';
  os << presentation_to_text(c.presentation);
  os << "L = " << to_decimal(c.lower_bound) << " (" << to_string(c.lower_source) << ")\n";
  for (const auto& s : c.steps) {
    std::string status(to_string(s.status));
    for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    os << s.index << ". [" << status << "] " << s.claim << '\n';
    os << "   by: " << s.justification << '\n';
    if (s.index != 2 && s.index != 3) os << "   data: " << s.data.dump() << '\n';
  }
  if (!c.note.empty()) os << "note: " << c.note << '\n';
  std::string verdict(to_string(c.verdict));
  for (auto& ch : verdict) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  os << "verdict: " << verdict << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Audit

namespace {

class Auditor {
 public:
  explicit Auditor(const Certificate& c) : c_(c) {}

  AuditResult run() {
    if (presentation_digest(c_.presentation) != c_.input_digest)
      fail("input digest does not match the presentation");
    check_against_recompute();
    replay_steps();
    AuditResult r;
    r.failures = std::move(failures_);
    r.verdict = r.failures.empty() ? c_.verdict : Verdict::Failed;
    return r;
  }

 private:
  void fail(std::string msg) { failures_.push_back(std::move(msg)); }

  const CertStep* step(int index) const {
    for (const auto& s : c_.steps)
      if (s.index == index) return &s;
    return nullptr;
  }

  // The pipeline is deterministic, so re-running it must reproduce every step.
  void check_against_recompute() {
    CertifyOptions opts;
    opts.source = c_.lower_source;
    if (c_.lower_source == LowerBoundSource::User) opts.user_lower = c_.lower_bound;
    opts.zmap = c_.user_zmap;
    Certificate fresh;
    try {
      fresh = certify(c_.presentation, opts);
    } catch (const Error& e) {
      fail(std::string("pipeline re-run raised: ") + e.what());
      return;
    }
    if (fresh.lower_bound != c_.lower_bound) fail("lower bound L does not match its provenance");
    if (fresh.steps.size() != c_.steps.size()) {
      fail("step sequence has the wrong length");
      return;
    }
    for (std::size_t i = 0; i < fresh.steps.size(); ++i) {
      const auto& want = fresh.steps[i];
      const auto& got = c_.steps[i];
      if (want.index != got.index) fail("step " + std::to_string(i + 1) + " has the wrong index");
      if (want.status != got.status) fail("step " + std::to_string(want.index) + " status differs");
      if (want.claim != got.claim) fail("step " + std::to_string(want.index) + " claim differs");
      if (want.justification != got.justification)
        fail("step " + std::to_string(want.index) + " justification differs");
      if (want.data != got.data) fail("step " + std::to_string(want.index) + " data differs");
    }
    if (fresh.verdict != c_.verdict) fail("verdict is inconsistent with the steps");
    if (fresh.note != c_.note) fail("note differs");
  }

  // Independent replays of the COMPUTED steps from their data alone.
  void replay_steps() {
    try {
      replay_zmap();
      replay_normalize();
      replay_split();
      replay_degree();
      replay_cover();
      replay_chain();
      replay_trivial_edge();
    } catch (const std::exception& e) {
      fail(std::string("replay error: ") + e.what());
    }
  }

  void replay_zmap() {
    const CertStep* s = step(1);
    if (!s || s->status != StepStatus::Computed) return;
    eps_ = zmap_from_json(s->data.at("eps"), c_.presentation);
    const auto check = check_zmap(c_.presentation, *eps_);
    if (!check.ok()) fail("step 1: eps is not a surjective homomorphism");
    for (const auto& img : s->data.at("relator_images"))
      if (img.get<std::string>() != "0") fail("step 1: recorded relator image is not 0");
    if (s->data.at("gcd").get<std::string>() != to_decimal(gcd_of(*eps_)))
      fail("step 1: recorded gcd is wrong");
  }

  void replay_normalize() {
    const CertStep* s = step(2);
    if (!s || !eps_ || s->status != StepStatus::Computed) return;
    FinitePresentation cur = c_.presentation;
    ZHomomorphism vals = *eps_;
    for (const auto& mj : s->data.at("moves")) {
      const TietzeMove mv = move_from_json(mj, cur);
      vals = transport_zmap(cur, vals, mv);
      cur = apply_tietze(cur, mv);
    }
    if (presentation_to_json(cur) != s->data.at("normalized"))
      fail("step 2: replaying the move log does not give the recorded presentation");
    if (zmap_to_json(vals, cur) != s->data.at("transported"))
      fail("step 2: transported map differs from the recorded one");
    const auto t = cur.find_generator(s->data.at("stable").get<std::string>());
    if (!t) {
      fail("step 2: stable letter is not a generator");
      return;
    }
    for (GenId g = 0; g < vals.values.size(); ++g)
      if (vals.values[g] != (g == *t ? 1 : 0)) fail("step 2: transported map is not normalized");
    if (!verify_zmap(cur, vals)) fail("step 2: transported map is not an epimorphism");
    if (!abelianized_invariants_preserved(c_.presentation, cur))
      fail("step 2: abelian invariants changed along the move log");
    normalized_ = cur;
    stable_ = cur.symbol(*t);
  }

  void replay_split() {
    const CertStep* s = step(3);
    if (!s || !normalized_ || s->status != StepStatus::Computed) return;
    const auto split = split_as_hnn(*normalized_, *stable_);
    if (!verify_splitting(split, *normalized_)) fail("step 3: splitting does not verify");
    Json sj = splitting_to_json(split);
    sj.erase("schema_version");
    if (sj != s->data.at("splitting")) fail("step 3: recorded splitting differs");
    if (s->data.at("k") != size_json(split.k()) || s->data.at("N") != size_json(split.shift_bound) ||
        s->data.at("M") != size_json(split.rank_bound))
      fail("step 3: recorded k, N or M is wrong");
    if (split.rank_bound != split.k() * split.shift_bound) fail("step 3: M != k*N");
    if (s->data.at("verified") != true) fail("step 3: splitting recorded as unverified");
    split_ = split;
  }

  void replay_degree() {
    const CertStep* s = step(4);
    if (!s || !split_ || s->status != StepStatus::Computed) return;
    const Rational lower = parse_rational(s->data.at("L").get<std::string>());
    const auto n_star = std::stoul(s->data.at("n_star").get<std::string>());
    if (lower != c_.lower_bound) fail("step 4: L differs from the certificate bound");
    if (s->data.at("M") != size_json(split_->rank_bound) || s->data.at("N") != size_json(split_->shift_bound))
      fail("step 4: M or N differs from step 3");
    const Rational product = Rational(BigInt(n_star)) * lower;
    if (product < Rational(BigInt(static_cast<unsigned long>(split_->rank_bound + 1))))
      fail("step 4: n* * L < M + 1");
    if (n_star < split_->shift_bound) fail("step 4: n* < N");
    if (n_star != cover_degree(lower, split_->rank_bound, split_->shift_bound))
      fail("step 4: n* is not the minimal admissible degree");
    if (s->data.at("n_star_times_L").get<std::string>() != to_decimal(product))
      fail("step 4: recorded n* * L is wrong");
    degree_ = n_star;
  }

  void replay_cover() {
    const CertStep* s = step(6);
    if (!s || !degree_ || s->status != StepStatus::Computed) return;
    if (s->data.at("degree") != size_json(*degree_)) fail("step 6: degree differs from step 4");
    const auto cover = kernel_presentation(*normalized_, *stable_, *degree_);
    const std::size_t k = split_->k();
    const std::size_t m = normalized_->relator_count();
    if (cover.pres.generator_count() != k * *degree_ + 1 ||
        cover.pres.relator_count() != m * *degree_)
      fail("step 6: cover generator/relator counts violate kn+1 / mn");
    if (s->data.at("generators") != size_json(cover.pres.generator_count()) ||
        s->data.at("relators") != size_json(cover.pres.relator_count()))
      fail("step 6: recorded counts are wrong");
    if (s->data.at("deficiency").get<std::string>() != to_decimal(deficiency(cover.pres)))
      fail("step 6: recorded deficiency is wrong");
    if (s->data.at("cover_digest").get<std::string>() != presentation_digest(cover.pres))
      fail("step 6: cover digest differs");
    if (abelianization_to_json(abelianization(cover.pres)) != s->data.at("abelianization"))
      fail("step 6: recorded abelianization differs");
    if (!verify_zmap(cover.pres, cover.inherited_zmap)) fail("step 6: inherited map invalid");

    const auto edge = cover_hnn_data(*split_, cover);
    if (cover_hnn_to_json(edge, cover) != s->data.at("edge")) fail("step 6: edge data differs");
    if (edge.assoc_c.size() > split_->rank_bound) fail("step 6: |C| > M");
    const Word t = Word::power_of(stable_->id, 1);
    for (std::size_t i = 0; i < edge.assoc_c.size(); ++i) {
      auto embed = [&](const Word& w) {
        return w.substitute([&](GenId g) { return cover.embedding[g]; });
      };
      if (t * embed(edge.assoc_c[i]) * t.inverse() != embed(edge.assoc_d[i]))
        fail("step 6: D is not the t-conjugate of C");
      if (split_->embed(split_->assoc_c[i]) != embed(edge.assoc_c[i]))
        fail("step 6: C generator does not match the splitting");
    }
    if (s->data.at("C_size") != size_json(edge.assoc_c.size())) fail("step 6: recorded |C| is wrong");
    c_size_ = edge.assoc_c.size();
  }

  void replay_chain() {
    const CertStep* s = step(7);
    if (!s || !c_size_ || s->status != StepStatus::Computed) return;
    const std::size_t m = split_->rank_bound;
    if (s->data.at("rank_lower_K") != size_json(m + 2) ||
        s->data.at("rank_lower_A") != size_json(m + 1) || s->data.at("M") != size_json(m) ||
        s->data.at("rank_upper_C") != size_json(*c_size_) ||
        s->data.at("rank_upper_D") != size_json(*c_size_))
      fail("step 7: inequality chain data inconsistent with steps 3 and 6");
    if (!(m + 1 > *c_size_)) fail("step 7: M + 1 > d(C) fails");
  }

  void replay_trivial_edge() {
    const CertStep* s = step(9);
    if (!s || s->status != StepStatus::Computed) return;
    if (!c_size_ || *c_size_ != 0 || s->data.at("C_size") != "0" ||
        s->data.at("trivial_edge_group") != true)
      fail("step 9: trivial edge group claimed but C is not trivial");
  }

  const Certificate& c_;
  std::vector<std::string> failures_;
  std::optional<ZHomomorphism> eps_;
  std::optional<FinitePresentation> normalized_;
  std::optional<GeneratorSymbol> stable_;
  std::optional<HnnSplitting> split_;
  std::optional<std::size_t> degree_;
  std::optional<std::size_t> c_size_;
};

}  // namespace

AuditResult audit_certificate(const Certificate& c) { return Auditor(c).run(); }

}  // namespace fpg
