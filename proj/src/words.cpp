#include "fpg/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "fpg/error.hpp"

namespace fpg {

bool is_valid_generator_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front())))
    return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

namespace {

// Appends one letter to an already reduced buffer, cancelling if possible.
void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().cancels(l))
    out.pop_back();
  else
    out.push_back(l);
}

}  // namespace

Word free_reduce(std::span<const Letter> raw) { return Word(raw); }

Word::Word(std::span<const Letter> raw) {
  letters_.reserve(raw.size());
  for (const Letter& l : raw) {
    if (l.sign != 1 && l.sign != -1)
      throw InvalidArgument("letter sign must be +1 or -1");
    push_reduced(letters_, l);
  }
}

Word::Word(std::initializer_list<Letter> raw)
    : Word(std::span<const Letter>(raw.begin(), raw.size())) {}

Word Word::power_of(GenId g, long power) {
  Word w;
  const int sign = power < 0 ? -1 : 1;
  const unsigned long n = power < 0 ? -static_cast<unsigned long>(power)
                                    : static_cast<unsigned long>(power);
  w.letters_.assign(n, Letter{g, sign});
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(it->inverse());
  return w;
}

Word Word::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Word result;
  Word base = *this;
  // Square-and-multiply keeps the work proportional to the output length.
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Word Word::substitute(const std::function<Word(GenId)>& image) const {
  std::vector<Letter> out;
  for (const Letter& l : letters_) {
    Word img = image(l.gen);
    if (l.sign < 0) img = img.inverse();
    for (const Letter& x : img) push_reduced(out, x);
  }
  Word w;
  w.letters_ = std::move(out);
  return w;
}

GenId Word::generator_bound() const {
  GenId bound = 0;
  for (const Letter& l : letters_) bound = std::max(bound, l.gen + 1);
  return bound;
}

Word operator*(const Word& lhs, const Word& rhs) {
  Word w = lhs;
  w *= rhs;
  return w;
}

Word& Word::operator*=(const Word& rhs) {
  for (const Letter& l : rhs.letters_) push_reduced(letters_, l);
  return *this;
}

CyclicReduction cyclic_reduce(const Word& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0;
  std::size_t hi = ls.size();
  while (hi - lo >= 2 && ls[lo].cancels(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  return {Word(std::span(ls).subspan(lo, hi - lo)),
          Word(std::span(ls).first(lo))};
}

bool is_cyclically_reduced(const Word& w) {
  return w.size() < 2 || !w[0].cancels(w[w.size() - 1]);
}

long exponent_sum(const Word& w, GenId g) {
  long sum = 0;
  for (const Letter& l : w)
    if (l.gen == g) sum += l.sign;
  return sum;
}

std::size_t occurrences(const Word& w, GenId g) {
  return static_cast<std::size_t>(std::count_if(
      w.begin(), w.end(), [g](const Letter& l) { return l.gen == g; }));
}

bool is_cyclic_rotation(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  std::vector<Letter> doubled(a.begin(), a.end());
  doubled.insert(doubled.end(), a.begin(), a.end());
  return std::search(doubled.begin(), doubled.end(), b.begin(), b.end()) !=
         doubled.end();
}

std::string format_word(const Word& w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long e = static_cast<long>(j - i) * w[i].sign;
    if (!first) os << ' ';
    first = false;
    if (w[i].gen >= names.size())
      throw InvalidArgument("word references generator id " +
                            std::to_string(w[i].gen) + " without a name");
    os << names[w[i].gen];
    if (e != 1) os << '^' << e;
    i = j;
  }
  return os.str();
}

}  // namespace fpg
