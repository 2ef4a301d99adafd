#include "mlcf/rational.hpp"

#include <cctype>

#include "mlcf/error.hpp"

namespace mlcf {

namespace {

Int pow10_int(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw ParseError("empty number", 0);

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Rational num = parse_rational(s.substr(0, slash));
    Rational den = parse_rational(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'", slash);
    Rational q = num / den;
    q.canonicalize();
    return q;
  }

  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') {
    negative = s[i] == '-';
    ++i;
  }
  std::string digits;
  long scale = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) ++scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      throw ParseError("invalid character in number '" + s + "'", i);
    }
  }
  if (!any_digit) throw ParseError("no digits in number '" + s + "'", 0);
  long exponent = 0;
  if (i < s.size()) {
    std::string exp_text = s.substr(i + 1);
    if (exp_text.empty()) throw ParseError("missing exponent in '" + s + "'", i);
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      throw ParseError("invalid exponent in '" + s + "'", i + 1);
    }
    if (used != exp_text.size()) throw ParseError("invalid exponent in '" + s + "'", i + 1);
  }
  Rational q(Int(digits, 10));
  q *= pow10(exponent - scale);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_decimal(const Rational& q, int digits, Rounding mode) {
  if (digits < 0) digits = 0;
  Rational scaled = q * Rational(pow10_int(static_cast<unsigned long>(digits)));
  Int n;
  switch (mode) {
    case Rounding::Down: n = floor(scaled); break;
    case Rounding::Up: n = ceil(scaled); break;
    case Rounding::Nearest: n = floor(scaled + Rational(1, 2)); break;
  }
  bool negative = n < 0;
  if (negative) n = -n;
  std::string s = n.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (negative) s.insert(0, "-");
  return s;
}

std::string to_exact_decimal(const Rational& q) {
  Int den = q.get_den();
  int digits = 0;
  while (den != 1) {
    if (mpz_divisible_ui_p(den.get_mpz_t(), 10)) {
      den /= 10;
    } else if (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
      den /= 2;
    } else if (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
      den /= 5;
    } else {
      throw DomainError("non-terminating decimal: " + q.get_str());
    }
    ++digits;
  }
  // digits is an upper bound on the fractional length; trim zeros.
  std::string s = to_decimal(q, digits, Rounding::Down);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

int decimal_places(std::string_view text) {
  auto point = text.find('.');
  if (point == std::string_view::npos) return 0;
  int n = 0;
  for (std::size_t i = point + 1; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) ++n;
  return n;
}

Rational pow2(long e) {
  Int p = 1;
  p <<= static_cast<mp_bitcnt_t>(e < 0 ? -e : e);
  return e < 0 ? Rational(Int(1), p) : Rational(p);
}

Rational pow10(long e) {
  Int p = pow10_int(static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(Int(1), p) : Rational(p);
}

Int floor(const Rational& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int ceil(const Rational& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

long bits_for(const Rational& q) {
  if (q <= 0) throw DomainError("bits_for needs a positive rational");
  // 2^-e <= q  <=>  den <= q_num * 2^e
  long e = static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) - 1;
  if (e < 0) e = 0;
  while (pow2(-e) > q) ++e;
  while (e > 0 && pow2(-(e - 1)) <= q) --e;
  return e;
}

}  // namespace mlcf
