#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mlcf/interval.hpp"
#include "mlcf/rational.hpp"

namespace mlcf {

// Exact quadratic surd a + b*sqrt(d) with rational a, b and integer d >= 0.
// The radicand is kept free of square factors below a trial-division bound
// (see reduce_radicand); d == 0 exactly when b == 0.
class Surd {
 public:
  Surd() = default;
  Surd(const Rational& a);  // NOLINT: rationals embed implicitly
  Surd(long a) : Surd(Rational(a)) {}  // NOLINT
  Surd(const Rational& a, const Rational& b, const Int& d);

  static Surd sqrt(const Int& n);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Int& d() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  // Value written as (p + q*sqrt(d)) / r with integers, r > 0.
  struct IntegerForm {
    Int p, q, r, d;
  };
  IntegerForm integer_form() const;

  // Enclosure of width <= tol (a point when the value is rational).
  RInterval enclose(const Rational& tol) const;

  int sign() const;
  Surd conjugate() const { return Surd(a_, -b_, d_); }

  // Arithmetic needs both operands in the same field (or one rational);
  // otherwise DomainError.
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o);
  Surd operator-() const { return Surd(-a_, -b_, d_); }

  bool same_field(const Surd& o) const { return is_rational() || o.is_rational() || d_ == o.d_; }

  std::string to_string() const;

  friend bool operator==(const Surd& x, const Surd& y) { return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_; }

 private:
  void normalize();

  Rational a_{0};
  Rational b_{0};
  Int d_{0};
};

Surd operator+(Surd x, const Surd& y);
Surd operator-(Surd x, const Surd& y);
Surd operator*(Surd x, const Surd& y);
Surd operator/(Surd x, const Surd& y);

// Exact three-way comparison (always decidable for two surds).
int compare(const Surd& x, const Surd& y);
int compare(const Surd& x, const Rational& y);

// d = k^2 * m with m free of prime-square factors below 2^12; a square m
// remaining after that is also detected.
std::pair<Int, Int> reduce_radicand(const Int& d);

// Sum of surds from possibly different quadratic fields, e.g. a lambda value
// whose forward and backward tails have different periods.
class Real {
 public:
  Real() = default;
  Real(const Surd& s);      // NOLINT
  Real(const Rational& q);  // NOLINT
  Real(long q) : Real(Rational(q)) {}  // NOLINT

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real operator-() const;

  // Number of distinct irrational fields in the sum.
  std::size_t field_count() const { return terms_.size(); }
  bool is_surd() const { return terms_.size() <= 1; }
  Surd as_surd() const;

  RInterval enclose(const Rational& tol) const;

  // Exact for up to two fields; beyond that decided by refinement, and
  // nullopt when the enclosure still straddles zero at 2^-max_bits.
  std::optional<int> sign(long max_bits = 1L << 14) const;

  std::string to_string() const;

 private:
  Rational rational_{0};
  std::vector<std::pair<Int, Rational>> terms_;  // (radicand, coefficient), sorted by radicand
};

Real operator+(Real x, const Real& y);
Real operator-(Real x, const Real& y);

std::optional<int> compare(const Real& x, const Real& y);
std::optional<int> compare(const Real& x, const Rational& y);

std::ostream& operator<<(std::ostream& os, const Surd& s);
std::ostream& operator<<(std::ostream& os, const Real& r);

}  // namespace mlcf
