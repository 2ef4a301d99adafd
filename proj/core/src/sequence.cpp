#include "mlcf/sequence.hpp"

#include "mlcf/error.hpp"

namespace mlcf {

Digit OneSidedSeq::at(std::size_t k) const {
  if (k < head.size()) return head[k];
  if (tail.empty()) throw DomainError("digit beyond the end of a partial sequence");
  return tail[(k - head.size()) % tail.size()];
}

OneSidedSeq OneSidedSeq::drop(std::size_t n) const {
  if (n <= head.size()) return {Word(head.begin() + static_cast<long>(n), head.end()), tail};
  if (tail.empty()) throw DomainError("dropping past the end of a partial sequence");
  return {Word{}, rotated(tail, static_cast<long>((n - head.size()) % tail.size()))};
}

OneSidedSeq OneSidedSeq::prepend(const Word& w) const {
  Word h = w;
  h.insert(h.end(), head.begin(), head.end());
  return {h, tail};
}

Digit BiSeq::at(long i) const {
  if (i == 0) return origin;
  if (i > 0) return right.at(static_cast<std::size_t>(i - 1));
  return left.at(static_cast<std::size_t>(-i - 1));
}

BiSeq BiSeq::recentered(long i) const {
  if (i == 0) return *this;
  if (i < 0) return transpose().recentered(-i).transpose();
  // a_{i-1}, …, a_1, a_0 then the old left side
  Word inner;
  inner.reserve(static_cast<std::size_t>(i));
  for (long k = i - 1; k >= 0; --k) inner.push_back(at(k));
  return BiSeq{left.prepend(inner), at(i), right.drop(static_cast<std::size_t>(i))};
}

BiSeq periodic(const Word& w, std::size_t origin_index) {
  if (w.empty()) throw DomainError("empty periodic block");
  if (origin_index >= w.size()) throw DomainError("origin index outside periodic block");
  Word before(w.begin(), w.begin() + static_cast<long>(origin_index));
  Word after(w.begin() + static_cast<long>(origin_index) + 1, w.end());
  return BiSeq{OneSidedSeq{reversed(before), reversed(w)}, w[origin_index], OneSidedSeq{after, w}};
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in '" + std::string(s) + "'", pos);
  }
  Word digits() {
    Word w;
    while (!done() && s[pos] >= '1' && s[pos] <= '9') w.push_back(s[pos++] - '0');
    return w;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
};

}  // namespace

BiSeq parse_sequence(std::string_view literal) {
  bool transpose = false;
  if (literal.size() >= 2 && literal.substr(literal.size() - 2) == "^t") {
    transpose = true;
    literal.remove_suffix(2);
  }
  Cursor c{literal};
  if (literal.empty()) c.fail("empty sequence literal");

  // Purely periodic "(...)" with nothing outside.
  if (literal.front() == '(' && literal.back() == ')' && literal.find(')') == literal.size() - 1) {
    c.expect('(');
    Word before = c.digits();
    Word after;
    bool starred = false;
    if (c.peek() == '*') {
      ++c.pos;
      starred = true;
      after = c.digits();
    }
    c.expect(')');
    if (!c.done()) c.fail("trailing characters");
    Word block = before;
    block.insert(block.end(), after.begin(), after.end());
    if (block.empty()) c.fail("empty periodic block");
    if (starred && before.empty()) c.fail("'*' must follow a digit");
    BiSeq a = periodic(block, starred ? before.size() - 1 : 0);
    return transpose ? a.transpose() : a;
  }

  Word left_period;
  if (c.peek() == '(') {
    ++c.pos;
    left_period = c.digits();
    if (left_period.empty()) c.fail("empty periodic block");
    c.expect(')');
  }
  Word left_digits = c.digits();
  if (c.peek() != '*') c.fail("missing origin marker '*'");
  if (left_digits.empty()) c.fail("'*' must follow a digit");
  ++c.pos;
  Digit origin = left_digits.back();
  left_digits.pop_back();
  Word right_digits = c.digits();
  Word right_period;
  if (c.peek() == '(') {
    ++c.pos;
    right_period = c.digits();
    if (right_period.empty()) c.fail("empty periodic block");
    c.expect(')');
  }
  if (!c.done()) c.fail("unexpected character");

  BiSeq a{OneSidedSeq{reversed(left_digits), reversed(left_period)}, origin,
          OneSidedSeq{right_digits, right_period}};
  return transpose ? a.transpose() : a;
}

std::string to_literal(const BiSeq& a) {
  Word center = reversed(a.left.head);
  center.push_back(a.origin);
  center.insert(center.end(), a.right.head.begin(), a.right.head.end());
  if (a.complete() && a.right.tail == center && a.left.tail == reversed(center)) {
    std::string body = to_string(reversed(a.left.head)) + std::to_string(a.origin) + "*" + to_string(a.right.head);
    return "(" + body + ")";
  }
  std::string s;
  if (a.left.complete()) s += "(" + to_string(reversed(a.left.tail)) + ")";
  s += to_string(reversed(a.left.head));
  s += std::to_string(a.origin) + "*";
  s += to_string(a.right.head);
  if (a.right.complete()) s += "(" + to_string(a.right.tail) + ")";
  return s;
}

}  // namespace mlcf
