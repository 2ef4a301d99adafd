#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "mlcf/rational.hpp"

namespace mlcf {

using Digit = int;
using Word = std::vector<Digit>;

// "2212" -> {2,2,1,2}. Digits are single characters '1'..'9'.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

Word reversed(const Word& w);

// Cyclic rotation: rotated(w, k)[i] = w[(i + k) mod |w|].
Word rotated(const Word& w, long k);

// Finite set of admissible partial quotients.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::initializer_list<Digit> digits);
  explicit Alphabet(std::vector<Digit> digits);
  static Alphabet parse(std::string_view text);  // "123" or "{1,2,3}"
  static Alphabet range(Digit lo, Digit hi);

  const std::vector<Digit>& digits() const { return digits_; }
  Digit min() const { return digits_.front(); }
  Digit max() const { return digits_.back(); }
  std::size_t size() const { return digits_.size(); }
  bool contains(Digit d) const;
  bool admits(const Word& w) const;
  std::string to_string() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
  friend auto operator<=>(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Digit> digits_;
};

// p/q = [0; w] in lowest terms; q is the continuant K(w). The empty word
// gives (0, 1).
struct Continuant {
  Int numerator;
  Int denominator;
};
Continuant continuant(const Word& w);

// K(w): the denominator of [0; w], with K(empty) = 1.
Int continuant_value(const Word& w);

// 2x2 integer matrix product of [[d,1],[1,0]] over a word: [[p_n, p_{n-1}], [q_n, q_{n-1}]].
struct Mobius {
  Int a{1}, b{0}, c{0}, d{1};
};
Mobius convergent_matrix(Digit c0, const Word& w);
Mobius convergent_matrix(const Word& w);

}  // namespace mlcf
