#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fpg {

using GenId = std::uint32_t;

/// A named generator of a presentation. Ids are dense 0..g-1.
struct GeneratorSymbol {
  GenId id = 0;
  std::string name;

  auto operator<=>(const GeneratorSymbol&) const = default;
};

/// True if `name` is a letter followed by letters, digits or underscores.
bool is_valid_generator_name(std::string_view name);

/// One signed occurrence of a generator.
struct Letter {
  GenId gen = 0;
  int sign = 1;  // +1 or -1

  constexpr Letter inverse() const { return {gen, -sign}; }
  constexpr bool cancels(const Letter& other) const {
    return gen == other.gen && sign == -other.sign;
  }
  auto operator<=>(const Letter&) const = default;
};

/// A freely reduced word. The empty word is the identity.
///
/// Every constructor and operation re-reduces, so a Word never contains an
/// adjacent pair x x^-1.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const Letter> raw);
  Word(std::initializer_list<Letter> raw);

  /// g^power; power may be zero or negative.
  static Word power_of(GenId g, long power);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word inverse() const;
  Word pow(long e) const;

  /// Replaces every occurrence of generator g by image(g) (inverted for g^-1).
  Word substitute(const std::function<Word(GenId)>& image) const;

  /// Largest generator id referenced plus one (0 for the empty word).
  GenId generator_bound() const;

  friend Word operator*(const Word& lhs, const Word& rhs);
  Word& operator*=(const Word& rhs);

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence.
Word free_reduce(std::span<const Letter> raw);

struct CyclicReduction {
  Word core;
  Word conjugator;
};

/// Splits w as conjugator * core * conjugator^-1 with core cyclically reduced.
CyclicReduction cyclic_reduce(const Word& w);

/// True if the first and last letters of w are not mutually inverse.
bool is_cyclically_reduced(const Word& w);

/// Sum of the signs of all occurrences of g in w.
long exponent_sum(const Word& w, GenId g);

/// Number of occurrences of g^{+1} or g^{-1} in w.
std::size_t occurrences(const Word& w, GenId g);

/// True if a and b are equal up to cyclic rotation.
bool is_cyclic_rotation(const Word& a, const Word& b);

/// Word -> text, e.g. "t a t^-1 a^-2"; the identity renders as "1".
std::string format_word(const Word& w, std::span<const std::string> names);

}  // namespace fpg
