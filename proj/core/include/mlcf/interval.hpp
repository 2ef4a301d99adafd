#pragma once

#include <ostream>
#include <string>

#include "mlcf/rational.hpp"

namespace mlcf {

// Closed interval [lo, hi] with exact rational endpoints. Arithmetic is exact
// on the endpoints, so results are always valid (outward) enclosures.
class RInterval {
 public:
  RInterval() = default;
  explicit RInterval(const Rational& point) : lo_(point), hi_(point) {}
  RInterval(const Rational& lo, const Rational& hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / 2; }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const RInterval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
  bool overlaps(const RInterval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }

  // Certified strict comparisons: every point of *this versus every point of the other side.
  bool certainly_below(const Rational& x) const { return hi_ < x; }
  bool certainly_above(const Rational& x) const { return lo_ > x; }
  bool certainly_below(const RInterval& o) const { return hi_ < o.lo_; }
  bool certainly_above(const RInterval& o) const { return lo_ > o.hi_; }

  RInterval operator-() const { return RInterval(-hi_, -lo_); }
  RInterval& operator+=(const RInterval& o);
  RInterval& operator-=(const RInterval& o);
  RInterval& operator*=(const RInterval& o);
  RInterval& operator/=(const RInterval& o);

  // Interval hull.
  RInterval hull(const RInterval& o) const;

  // Decimal rendering "[lo, hi]" rounded outward to `digits` places.
  std::string to_string(int digits) const;
  std::string lo_string(int digits) const;
  std::string hi_string(int digits) const;

  friend bool operator==(const RInterval& a, const RInterval& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }

 private:
  Rational lo_{0};
  Rational hi_{0};
};

RInterval operator+(RInterval a, const RInterval& b);
RInterval operator-(RInterval a, const RInterval& b);
RInterval operator*(RInterval a, const RInterval& b);
RInterval operator/(RInterval a, const RInterval& b);

// Elementwise max / min of two intervals (enclosure of max/min of the values).
RInterval max(const RInterval& a, const RInterval& b);
RInterval min(const RInterval& a, const RInterval& b);

// True when truncating every point of the interval to `digits` decimals yields
// the same string as `printed` (e.g. "3.7165151389911").
bool matches_printed(const RInterval& x, const std::string& printed);

std::ostream& operator<<(std::ostream& os, const RInterval& x);

}  // namespace mlcf
