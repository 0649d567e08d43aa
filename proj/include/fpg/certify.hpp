#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fpg/io.hpp"
#include "fpg/presentation.hpp"
#include "fpg/zmaps.hpp"

namespace fpg {

FPG_DEFINE_ERROR(UnknownFormat);

enum class StepStatus { Computed, Cited, Failed };
enum class Verdict { Certified, Inconclusive, Failed };
enum class LowerBoundSource { Deficiency, User };

std::string_view to_string(StepStatus s);
std::string_view to_string(Verdict v);
std::string_view to_string(LowerBoundSource s);

/// One link of the acylindrical-hyperbolicity argument.
///
/// COMPUTED steps carry everything needed to re-check them in `data`; CITED
/// steps record the exact instance of the theorem they appeal to.
struct CertStep {
  int index = 0;
  std::string claim;
  StepStatus status = StepStatus::Computed;
  std::string justification;
  Json data;

  bool operator==(const CertStep&) const = default;
};

struct Certificate {
  std::string input_digest;  // sha256 of the canonical presentation JSON
  FinitePresentation presentation;
  LowerBoundSource lower_source = LowerBoundSource::Deficiency;
  Rational lower_bound;  // L, a lower bound for the first l2-Betti number
  /// Map supplied by the caller, if any; otherwise one is searched for.
  std::optional<ZHomomorphism> user_zmap;
  std::vector<CertStep> steps;
  Verdict verdict = Verdict::Inconclusive;
  std::string note;

  bool operator==(const Certificate&) const = default;
};

struct CertifyOptions {
  LowerBoundSource source = LowerBoundSource::Deficiency;
  std::optional<Rational> user_lower;  // required for LowerBoundSource::User
  std::optional<ZHomomorphism> zmap;
};

/// Runs the pipeline. Never throws for mathematical failures: they become
/// FAILED steps or an INCONCLUSIVE verdict.
Certificate certify(const FinitePresentation& p, const CertifyOptions& options);

/// Smallest n with n * L >= M + 1, raised to at least N (and to 1).
std::size_t cover_degree(const Rational& lower, std::size_t rank_bound,
                         std::size_t shift_bound);

std::string presentation_digest(const FinitePresentation& p);

/// "json" or "text"; anything else throws UnknownFormat.
std::string render_certificate(const Certificate& c, std::string_view format);

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

struct AuditResult {
  Verdict verdict = Verdict::Failed;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Replays every COMPUTED step from its recorded data and checks the step
/// sequence and verdict. Any discrepancy yields Verdict::Failed.
AuditResult audit_certificate(const Certificate& c);

}  // namespace fpg
