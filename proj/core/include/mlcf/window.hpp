#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "mlcf/cf.hpp"

namespace mlcf {

// Partially known bi-infinite sequence. Positions in `known` are fixed; an
// optional periodic tail continues the sequence outward beyond the extreme
// known position on that side. Every other position ranges over `alphabet`.
struct WindowPattern {
  std::map<long, Digit> known;
  Alphabet alphabet{1, 2, 3};
  Word left_tail;   // read outward, starting at position min_known() - 1
  Word right_tail;  // read outward, starting at position max_known() + 1

  // Sequence literal syntax plus '?' for an unknown digit, e.g. "233*2?1".
  static WindowPattern parse(std::string_view literal, const Alphabet& alphabet);

  long min_known() const { return known.begin()->first; }
  long max_known() const { return known.rbegin()->first; }
  std::optional<Digit> digit(long pos) const;
  bool is_free(long pos) const { return !digit(pos).has_value(); }

  WindowPattern with(long pos, Digit d) const;
  WindowPattern transposed() const;
  std::string to_literal() const;

  friend bool operator==(const WindowPattern&, const WindowPattern&) = default;
};

// Exact extremum of λ_i over all completions of the pattern. Unknown digits
// are chosen coordinate-wise by the parity rule, which is optimal because the
// forward and backward continued fractions are monotone in every digit.
Real lambda_extreme(const WindowPattern& w, long i, Objective objective);

// A completion attaining that extremum, indexed so that a_0 is position 0.
BiSeq extremal_completion(const WindowPattern& w, long i, Objective objective);

}  // namespace mlcf
