#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "fpg/covers.hpp"
#include "fpg/hnn.hpp"
#include "fpg/intlin.hpp"
#include "fpg/l2est.hpp"
#include "fpg/presentation.hpp"
#include "fpg/zmaps.hpp"

namespace fpg {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Input text that does not parse. position() is a byte offset into the text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("at offset " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

#define FPG_DEFINE_PARSE_ERROR(Name) \
  class Name : public ParseError {   \
   public:                           \
    using ParseError::ParseError;    \
  }

FPG_DEFINE_PARSE_ERROR(SyntaxError);
FPG_DEFINE_PARSE_ERROR(UnknownGenerator);
FPG_DEFINE_PARSE_ERROR(DuplicateGenerator);

/// Whitespace- or '*'-separated atoms `name` or `name^e`; `1` is the identity.
/// `offset` is added to reported positions.
Word parse_word(std::string_view text, const std::vector<std::string>& names,
                std::size_t offset = 0);

struct ParsedPresentation {
  FinitePresentation presentation;
  std::vector<std::string> warnings;
};

/// Accepts `gens: ...` / `rels: w ; w` lines or the inline `g1, g2 | w1 ; w2`.
/// Blank lines and lines starting with '#' are ignored.
ParsedPresentation parse_presentation(std::string_view text);

/// Canonical two-line text form.
std::string presentation_to_text(const FinitePresentation& p);

/// `t=1,a=0`. Generators left out map to 0.
ZHomomorphism parse_zmap(std::string_view text, const FinitePresentation& p);

/// `P/Q` or `P`.
Rational parse_rational(std::string_view text);

std::string to_decimal(const BigInt& x);
std::string to_decimal(const Rational& x);
std::string to_decimal(long x);
std::string to_decimal(std::size_t x);

Json word_to_json(const Word& w, const std::vector<std::string>& names);
Word word_from_json(const Json& j, const std::vector<std::string>& names);

Json presentation_to_json(const FinitePresentation& p);
FinitePresentation presentation_from_json(const Json& j);

Json zmap_to_json(const ZHomomorphism& eps, const FinitePresentation& p);
ZHomomorphism zmap_from_json(const Json& j, const FinitePresentation& p);

/// Moves refer to generators by their names in `before`.
Json move_to_json(const TietzeMove& mv, const FinitePresentation& before);
TietzeMove move_from_json(const Json& j, const FinitePresentation& before);

Json abelianization_to_json(const Abelianization& ab);
Json matrix_to_json(const IntMatrix& m);
Json splitting_to_json(const HnnSplitting& split);
Json cover_to_json(const CoverPresentation& cover);
Json cover_hnn_to_json(const CoverHnnData& data, const CoverPresentation& cover);
Json growth_to_json(const BettiGrowthReport& report);
Json bounds_to_json(const L2Bounds& bounds);

/// Aligned columns n, b1, torsion, ratio.
std::string growth_to_text(const BettiGrowthReport& report);

}  // namespace fpg
