#include "mlcf/window.hpp"

#include "mlcf/error.hpp"

namespace mlcf {

WindowPattern WindowPattern::parse(std::string_view literal, const Alphabet& alphabet) {
  // Reuse the sequence grammar by mapping '?' to a placeholder digit.
  std::string text(literal);
  constexpr char kHole = '9';
  if (alphabet.contains(9)) throw DomainError("window patterns reserve digit 9 for '?'");
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '9') throw ParseError("digit 9 not allowed in window patterns", i);
    if (text[i] == '?') text[i] = kHole;
  }
  BiSeq a = parse_sequence(text);
  if (a.origin == 9) throw ParseError("origin digit must be known", text.find('*'));
  WindowPattern w;
  w.alphabet = alphabet;
  w.known[0] = a.origin;
  for (std::size_t k = 0; k < a.right.head.size(); ++k) {
    if (a.right.head[k] != 9) w.known[static_cast<long>(k) + 1] = a.right.head[k];
  }
  for (std::size_t k = 0; k < a.left.head.size(); ++k) {
    if (a.left.head[k] != 9) w.known[-static_cast<long>(k) - 1] = a.left.head[k];
  }
  for (const Word* tail : {&a.left.tail, &a.right.tail}) {
    for (Digit d : *tail) {
      if (d == 9) throw ParseError("'?' not allowed in a periodic block", 0);
    }
  }
  // Periodic tails attach to the outermost written digit, which must be known.
  if (a.right.complete()) {
    if (!a.right.head.empty() && a.right.head.back() == 9) throw ParseError("'?' next to a periodic block", 0);
    w.right_tail = a.right.tail;
  }
  if (a.left.complete()) {
    if (!a.left.head.empty() && a.left.head.back() == 9) throw ParseError("'?' next to a periodic block", 0);
    w.left_tail = a.left.tail;
  }
  for (const auto& [pos, d] : w.known) {
    if (!alphabet.contains(d)) throw DomainError("digit " + std::to_string(d) + " outside the alphabet");
  }
  return w;
}

std::optional<Digit> WindowPattern::digit(long pos) const {
  if (auto it = known.find(pos); it != known.end()) return it->second;
  long hi = max_known(), lo = min_known();
  if (pos > hi && !right_tail.empty()) return right_tail[static_cast<std::size_t>(pos - hi - 1) % right_tail.size()];
  if (pos < lo && !left_tail.empty()) return left_tail[static_cast<std::size_t>(lo - pos - 1) % left_tail.size()];
  return std::nullopt;
}

WindowPattern WindowPattern::with(long pos, Digit d) const {
  if (!is_free(pos)) throw DomainError("position " + std::to_string(pos) + " is already determined");
  if (!alphabet.contains(d)) throw DomainError("digit outside the alphabet");
  // A free position never lies beyond a tail, so tails stay attached.
  WindowPattern w = *this;
  w.known[pos] = d;
  return w;
}

WindowPattern WindowPattern::transposed() const {
  WindowPattern w;
  w.alphabet = alphabet;
  for (const auto& [pos, d] : known) w.known[-pos] = d;
  w.left_tail = right_tail;
  w.right_tail = left_tail;
  return w;
}

std::string WindowPattern::to_literal() const {
  std::string s;
  if (!left_tail.empty()) s += "(" + to_string(reversed(left_tail)) + ")";
  for (long p = min_known(); p <= max_known(); ++p) {
    auto d = known.find(p);
    s += d == known.end() ? '?' : static_cast<char>('0' + d->second);
    if (p == 0) s += '*';
  }
  if (!right_tail.empty()) s += "(" + to_string(right_tail) + ")";
  return s;
}

namespace {

// Digits of the completion around position i: c0 = a_i, then forward and
// backward heads up to the last position that is not covered by a tail.
struct Extremal {
  Digit c0;
  OneSidedSeq forward;
  OneSidedSeq backward;
};

Extremal build_extremal(const WindowPattern& w, long i, Objective obj) {
  const Alphabet& A = w.alphabet;
  auto pick = [&](long pos, long index) {
    auto d = w.digit(pos);
    return d ? *d : extremal_digit(A, obj, index);
  };
  Extremal e;
  e.c0 = pick(i, 0);

  long hi = w.max_known(), lo = w.min_known();
  long right_end = std::max(hi, i);
  for (long p = i + 1; p <= right_end; ++p) e.forward.head.push_back(pick(p, p - i));
  if (!w.right_tail.empty()) {
    e.forward.tail = rotated(w.right_tail, right_end - hi);
  } else {
    e.forward.tail = extremal_tail(A, obj, right_end + 1 - i).tail;
  }

  long left_end = std::min(lo, i);
  for (long p = i - 1; p >= left_end; --p) e.backward.head.push_back(pick(p, i - p));
  if (!w.left_tail.empty()) {
    e.backward.tail = rotated(w.left_tail, lo - left_end);
  } else {
    e.backward.tail = extremal_tail(A, obj, i - left_end + 1).tail;
  }
  return e;
}

}  // namespace

Real lambda_extreme(const WindowPattern& w, long i, Objective objective) {
  Extremal e = build_extremal(w, i, objective);
  Real forward(cf_value(e.c0, e.forward.head, e.forward.tail));
  Real backward(cf_value(0, e.backward.head, e.backward.tail));
  return forward + backward;
}

BiSeq extremal_completion(const WindowPattern& w, long i, Objective objective) {
  Extremal e = build_extremal(w, i, objective);
  BiSeq centered{e.backward, e.c0, e.forward};
  return centered.recentered(-i);
}

}  // namespace mlcf
