#include "mlcf/interval.hpp"

#include <algorithm>

#include "mlcf/error.hpp"

namespace mlcf {

RInterval::RInterval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi) {
  if (lo_ > hi_) throw DomainError("interval with lo > hi");
}

RInterval& RInterval::operator+=(const RInterval& o) {
  lo_ += o.lo_;
  hi_ += o.hi_;
  return *this;
}

RInterval& RInterval::operator-=(const RInterval& o) {
  Rational lo = lo_ - o.hi_;
  hi_ -= o.lo_;
  lo_ = lo;
  return *this;
}

RInterval& RInterval::operator*=(const RInterval& o) {
  Rational a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
  lo_ = std::min({a, b, c, d});
  hi_ = std::max({a, b, c, d});
  return *this;
}

RInterval& RInterval::operator/=(const RInterval& o) {
  if (o.lo_ <= 0 && o.hi_ >= 0) throw DomainError("interval division by an interval containing zero");
  return *this *= RInterval(1 / o.hi_, 1 / o.lo_);
}

RInterval RInterval::hull(const RInterval& o) const {
  return RInterval(std::min(lo_, o.lo_), std::max(hi_, o.hi_));
}

std::string RInterval::lo_string(int digits) const { return to_decimal(lo_, digits, Rounding::Down); }
std::string RInterval::hi_string(int digits) const { return to_decimal(hi_, digits, Rounding::Up); }

std::string RInterval::to_string(int digits) const {
  return "[" + lo_string(digits) + ", " + hi_string(digits) + "]";
}

RInterval operator+(RInterval a, const RInterval& b) { return a += b; }
RInterval operator-(RInterval a, const RInterval& b) { return a -= b; }
RInterval operator*(RInterval a, const RInterval& b) { return a *= b; }
RInterval operator/(RInterval a, const RInterval& b) { return a /= b; }

RInterval max(const RInterval& a, const RInterval& b) {
  return RInterval(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

RInterval min(const RInterval& a, const RInterval& b) {
  return RInterval(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

bool matches_printed(const RInterval& x, const std::string& printed) {
  int digits = decimal_places(printed);
  return x.lo_string(digits) == printed && to_decimal(x.hi(), digits, Rounding::Down) == printed;
}

std::ostream& operator<<(std::ostream& os, const RInterval& x) { return os << x.to_string(20); }

}  // namespace mlcf
