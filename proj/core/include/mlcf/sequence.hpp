#pragma once

#include <string>
#include <string_view>

#include "mlcf/word.hpp"

namespace mlcf {

// head · tail · tail · …, read outward from the origin. An empty tail marks a
// partial sequence.
struct OneSidedSeq {
  Word head;
  Word tail;

  bool complete() const { return !tail.empty(); }
  // k-th digit outward (0-based); requires k < head.size() or a tail.
  Digit at(std::size_t k) const;
  // The sequence with its first n digits removed.
  OneSidedSeq drop(std::size_t n) const;
  // The sequence with w placed in front.
  OneSidedSeq prepend(const Word& w) const;

  friend bool operator==(const OneSidedSeq&, const OneSidedSeq&) = default;
};

// … a_{-2} a_{-1} a_0* a_1 a_2 …
struct BiSeq {
  OneSidedSeq left;  // a_{-1}, a_{-2}, …
  Digit origin = 1;  // a_0
  OneSidedSeq right; // a_1, a_2, …

  bool complete() const { return left.complete() && right.complete(); }
  Digit at(long i) const;
  BiSeq transpose() const { return BiSeq{right, origin, left}; }
  // Same sequence re-indexed so that a_i becomes the origin.
  BiSeq recentered(long i) const;

  friend bool operator==(const BiSeq&, const BiSeq&) = default;
};

// Literal syntax: digits, '*' after the origin digit, '(...)' around a
// periodic block, optional '^t' suffix for the transpose.
//   (3322212)33*2221233222122121212(21)   left period, heads, right period
//   (33*22212)                            purely periodic, origin marked
//   (21)                                  purely periodic, origin = first digit
//   33*2                                  partial on both sides
BiSeq parse_sequence(std::string_view literal);
std::string to_literal(const BiSeq& a);

// The bi-infinite periodic sequence …www… with a_0 = w[origin_index].
BiSeq periodic(const Word& w, std::size_t origin_index = 0);

}  // namespace mlcf
