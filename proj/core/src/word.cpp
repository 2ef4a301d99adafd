#include "mlcf/word.hpp"

#include <algorithm>
#include <cctype>

#include "mlcf/error.hpp"

namespace mlcf {

Word parse_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c < '1' || c > '9') throw ParseError(std::string("invalid digit '") + c + "'", i);
    w.push_back(c - '0');
  }
  return w;
}

std::string to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Digit d : w) {
    if (d < 1 || d > 9) throw DomainError("digit " + std::to_string(d) + " has no single-character form");
    s.push_back(static_cast<char>('0' + d));
  }
  return s;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

Word rotated(const Word& w, long k) {
  if (w.empty()) return w;
  long n = static_cast<long>(w.size());
  long shift = ((k % n) + n) % n;
  Word r(w.size());
  for (long i = 0; i < n; ++i) r[i] = w[(i + shift) % n];
  return r;
}

Alphabet::Alphabet(std::initializer_list<Digit> digits) : Alphabet(std::vector<Digit>(digits)) {}

Alphabet::Alphabet(std::vector<Digit> digits) : digits_(std::move(digits)) {
  std::sort(digits_.begin(), digits_.end());
  digits_.erase(std::unique(digits_.begin(), digits_.end()), digits_.end());
  if (digits_.empty()) throw DomainError("empty alphabet");
  if (digits_.front() < 1) throw DomainError("alphabet digits must be >= 1");
}

Alphabet Alphabet::parse(std::string_view text) {
  std::vector<Digit> digits;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '{' || c == '}' || c == ',' || std::isspace(static_cast<unsigned char>(c))) continue;
    if (c < '1' || c > '9') throw ParseError(std::string("invalid alphabet digit '") + c + "'", i);
    digits.push_back(c - '0');
  }
  return Alphabet(std::move(digits));
}

Alphabet Alphabet::range(Digit lo, Digit hi) {
  std::vector<Digit> digits;
  for (Digit d = lo; d <= hi; ++d) digits.push_back(d);
  return Alphabet(std::move(digits));
}

bool Alphabet::contains(Digit d) const { return std::binary_search(digits_.begin(), digits_.end(), d); }

bool Alphabet::admits(const Word& w) const {
  return std::all_of(w.begin(), w.end(), [this](Digit d) { return contains(d); });
}

std::string Alphabet::to_string() const { return mlcf::to_string(digits_); }

Mobius convergent_matrix(Digit c0, const Word& w) {
  // [[p_n, p_{n-1}], [q_n, q_{n-1}]] for [c0; w]
  Mobius m;
  m.a = c0;
  m.b = 1;
  m.c = 1;
  m.d = 0;
  for (Digit x : w) {
    Int a = m.a * x + m.b;
    Int c = m.c * x + m.d;
    m.b = m.a;
    m.d = m.c;
    m.a = a;
    m.c = c;
  }
  return m;
}

Mobius convergent_matrix(const Word& w) {
  Mobius m;  // identity
  for (Digit x : w) {
    Int a = m.a * x + m.b;
    Int c = m.c * x + m.d;
    m.b = m.a;
    m.d = m.c;
    m.a = a;
    m.c = c;
  }
  return m;
}

Continuant continuant(const Word& w) {
  Mobius m = convergent_matrix(0, w);
  return {m.a, m.c};
}

Int continuant_value(const Word& w) { return continuant(w).denominator; }

}  // namespace mlcf
