#include "mlcf/surd.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "mlcf/error.hpp"

namespace mlcf {

namespace {

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long kLimit = 1UL << 12;
    std::vector<bool> composite(kLimit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long p = 2; p <= kLimit; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (unsigned long m = p * p; m <= kLimit; m += p) composite[m] = true;
    }
    return out;
  }();
  return primes;
}

int sgn(const Rational& q) { return sgn(q.get_num()); }

// Sign of c + x*sqrt(e), all exact.
int sign_of(const Rational& c, const Rational& x, const Int& e) {
  int sc = sgn(c);
  int sx = (e == 0) ? 0 : sgn(x);
  if (sx == 0) return sc;
  if (sc == 0 || sc == sx) return sx;
  // opposite signs: compare c^2 with x^2 e
  Rational lhs = c * c;
  Rational rhs = x * x * Rational(e);
  int cmp = (lhs > rhs) - (lhs < rhs);
  return cmp > 0 ? sc : (cmp < 0 ? sx : 0);
}

// Sign of c + x*sqrt(d) + y*sqrt(e) for d != e (both normalized).
int sign_of(const Rational& c, const Rational& x, const Int& d, const Rational& y, const Int& e) {
  // S = x sqrt(d) + y sqrt(e); sign(S) by comparing squares.
  int sx = sgn(x), sy = sgn(y);
  Rational px = x * x * Rational(d);
  Rational py = y * y * Rational(e);
  int s_sign;
  if (sx == 0) {
    s_sign = sy;
  } else if (sy == 0 || sx == sy) {
    s_sign = sx;
  } else {
    s_sign = px > py ? sx : (px < py ? sy : 0);
  }
  int sc = sgn(c);
  if (s_sign == 0) return sc;
  if (sc == 0 || sc == s_sign) return s_sign;
  // opposite signs: compare c^2 with S^2 = px + py + 2xy sqrt(de)
  auto [k, m] = reduce_radicand(d * e);
  Rational t = c * c - px - py;  // sign(c^2 - S^2) = sign(t - 2xy k sqrt(m))
  int cmp = sign_of(t, Rational(-2 * x * y * Rational(k)), m);
  return cmp > 0 ? sc : (cmp < 0 ? s_sign : 0);
}

RInterval sqrt_term(const Rational& b, const Int& d, const Rational& tol) {
  // b*sqrt(d) to width <= tol
  if (b == 0 || d == 0) return RInterval(Rational(0));
  Rational abs_b = abs(b);
  long k = bits_for(tol / abs_b);
  Int scaled = d;
  scaled <<= static_cast<mp_bitcnt_t>(2 * k);
  Int s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  Rational lo(s), hi(s + 1);
  if (s * s == scaled) hi = lo;
  lo *= pow2(-k);
  hi *= pow2(-k);
  lo.canonicalize();
  hi.canonicalize();
  if (b > 0) return RInterval(b * lo, b * hi);
  return RInterval(b * hi, b * lo);
}

}  // namespace

std::pair<Int, Int> reduce_radicand(const Int& d) {
  if (d < 0) throw DomainError("negative radicand");
  if (d == 0) return {Int(0), Int(0)};
  Int k = 1, m = d;
  for (unsigned long p : small_primes()) {
    if (Int(p) * Int(p) > m) break;
    unsigned long p2 = p * p;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p2)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p2);
      k *= p;
    }
  }
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    k *= r;
    m = 1;
  }
  return {k, m};
}

Surd::Surd(const Rational& a) : a_(a) { a_.canonicalize(); }

Surd::Surd(const Rational& a, const Rational& b, const Int& d) : a_(a), b_(b), d_(d) {
  if (d_ < 0) throw DomainError("negative radicand");
  normalize();
}

Surd Surd::sqrt(const Int& n) { return Surd(Rational(0), Rational(1), n); }

void Surd::normalize() {
  a_.canonicalize();
  b_.canonicalize();
  if (b_ == 0 || d_ == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  auto [k, m] = reduce_radicand(d_);
  if (m == 1) {
    a_ += b_ * Rational(k);
    b_ = 0;
    d_ = 0;
    return;
  }
  b_ *= Rational(k);
  d_ = m;
}

Surd::IntegerForm Surd::integer_form() const {
  Int r;
  mpz_lcm(r.get_mpz_t(), a_.get_den_mpz_t(), b_.get_den_mpz_t());
  Int p = a_.get_num() * (r / a_.get_den());
  Int q = b_.get_num() * (r / b_.get_den());
  return {p, q, r, d_};
}

RInterval Surd::enclose(const Rational& tol) const {
  if (tol <= 0) throw DomainError("tolerance must be positive");
  return RInterval(a_) + sqrt_term(b_, d_, tol);
}

int Surd::sign() const { return sign_of(a_, b_, d_); }

Surd& Surd::operator+=(const Surd& o) {
  if (!same_field(o)) throw DomainError("surd addition across fields");
  Int d = is_rational() ? o.d_ : d_;
  *this = Surd(a_ + o.a_, b_ + o.b_, d);
  return *this;
}

Surd& Surd::operator-=(const Surd& o) { return *this += -o; }

Surd& Surd::operator*=(const Surd& o) {
  if (!same_field(o)) throw DomainError("surd product across fields");
  Int d = is_rational() ? o.d_ : d_;
  Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
  Rational b = a_ * o.b_ + b_ * o.a_;
  *this = Surd(a, b, d);
  return *this;
}

Surd& Surd::operator/=(const Surd& o) {
  if (!same_field(o)) throw DomainError("surd quotient across fields");
  Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(o.d_);
  if (norm == 0) throw DomainError("surd division by zero");
  *this *= o.conjugate();
  *this = Surd(a_ / norm, b_ / norm, d_);
  return *this;
}

std::string Surd::to_string() const {
  if (is_rational()) return a_.get_str();
  std::ostringstream os;
  Rational mag = abs(b_);
  std::string root = (mag == 1 ? std::string() : mag.get_str() + "*") + "sqrt(" + d_.get_str() + ")";
  if (a_ == 0) {
    os << (b_ < 0 ? "-" : "") << root;
  } else {
    os << a_.get_str() << (b_ > 0 ? " + " : " - ") << root;
  }
  return os.str();
}

Surd operator+(Surd x, const Surd& y) { return x += y; }
Surd operator-(Surd x, const Surd& y) { return x -= y; }
Surd operator*(Surd x, const Surd& y) { return x *= y; }
Surd operator/(Surd x, const Surd& y) { return x /= y; }

int compare(const Surd& x, const Surd& y) {
  if (x.same_field(y)) return (x - y).sign();
  return sign_of(x.a() - y.a(), x.b(), x.d(), -y.b(), y.d());
}

int compare(const Surd& x, const Rational& y) { return sign_of(x.a() - y, x.b(), x.d()); }

Real::Real(const Surd& s) : rational_(s.a()) {
  if (!s.is_rational()) terms_.emplace_back(s.d(), s.b());
}

Real::Real(const Rational& q) : rational_(q) {}

Real& Real::operator+=(const Real& o) {
  rational_ += o.rational_;
  for (const auto& [d, c] : o.terms_) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), d,
                               [](const auto& t, const Int& key) { return t.first < key; });
    if (it != terms_.end() && it->first == d) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    } else {
      terms_.insert(it, {d, c});
    }
  }
  return *this;
}

Real& Real::operator-=(const Real& o) { return *this += -o; }

Real Real::operator-() const {
  Real r;
  r.rational_ = -rational_;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Surd Real::as_surd() const {
  if (terms_.empty()) return Surd(rational_);
  if (terms_.size() > 1) throw DomainError("value spans several quadratic fields");
  return Surd(rational_, terms_[0].second, terms_[0].first);
}

RInterval Real::enclose(const Rational& tol) const {
  if (tol <= 0) throw DomainError("tolerance must be positive");
  RInterval r(rational_);
  if (terms_.empty()) return r;
  Rational part = tol / static_cast<long>(terms_.size());
  for (const auto& [d, c] : terms_) r += sqrt_term(c, d, part);
  return r;
}

std::optional<int> Real::sign(long max_bits) const {
  switch (terms_.size()) {
    case 0: return sgn(rational_);
    case 1: return sign_of(rational_, terms_[0].second, terms_[0].first);
    case 2:
      return sign_of(rational_, terms_[0].second, terms_[0].first, terms_[1].second, terms_[1].first);
    default: break;
  }
  for (long bits = 64; bits <= max_bits; bits *= 2) {
    RInterval e = enclose(pow2(-bits));
    if (e.lo() > 0) return 1;
    if (e.hi() < 0) return -1;
  }
  return std::nullopt;
}

std::string Real::to_string() const {
  std::ostringstream os;
  bool first = rational_ == 0;
  if (!first) os << rational_.get_str();
  for (const auto& [d, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c > 0 ? " + " : " - ");
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "sqrt(" << d.get_str() << ")";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Real operator+(Real x, const Real& y) { return x += y; }
Real operator-(Real x, const Real& y) { return x -= y; }

std::optional<int> compare(const Real& x, const Real& y) { return (x - y).sign(); }
std::optional<int> compare(const Real& x, const Rational& y) { return (x - Real(y)).sign(); }

std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << s.to_string(); }
std::ostream& operator<<(std::ostream& os, const Real& r) { return os << r.to_string(); }

}  // namespace mlcf
