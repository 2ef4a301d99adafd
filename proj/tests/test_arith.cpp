#include <doctest.h>

#include <cmath>
#include <random>

#include "mlcf/error.hpp"
#include "mlcf/power.hpp"
#include "mlcf/surd.hpp"

using namespace mlcf;

TEST_SUITE("rational") {
  TEST_CASE("decimal literals parse exactly") {
    CHECK(parse_rational("3.7165") == Rational(7433, 2000));
    CHECK(parse_rational("-0.5") == Rational(-1, 2));
    CHECK(parse_rational("1/35") == Rational(1, 35));
    CHECK(parse_rational("1e-13") == pow10(-13));
    CHECK(parse_rational("2.5e2") == Rational(250));
    CHECK_THROWS_AS(parse_rational("3..1"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
  }

  TEST_CASE("directed decimal rounding") {
    Rational third(1, 3);
    CHECK(to_decimal(third, 4, Rounding::Down) == "0.3333");
    CHECK(to_decimal(third, 4, Rounding::Up) == "0.3334");
    CHECK(to_decimal(Rational(-1, 3), 4, Rounding::Down) == "-0.3334");
    CHECK(to_decimal(Rational(2, 3), 3) == "0.667");
    CHECK(to_exact_decimal(Rational(706104, 1000000)) == "0.706104");
    CHECK(to_exact_decimal(Rational(73, 100)) == "0.73");
    CHECK(decimal_places("3.7165151389911") == 13);
  }

  TEST_CASE("powers and floor") {
    CHECK(pow2(-3) == Rational(1, 8));
    CHECK(pow10(3) == Rational(1000));
    CHECK(floor(Rational(-7, 2)) == -4);
    CHECK(ceil(Rational(7, 2)) == 4);
    CHECK(bits_for(Rational(1, 1024)) == 10);
  }
}

TEST_SUITE("interval") {
  TEST_CASE("arithmetic encloses pointwise results") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 20);
    for (int k = 0; k < 500; ++k) {
      Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng)), d(num(rng), den(rng));
      a.canonicalize();
      b.canonicalize();
      c.canonicalize();
      d.canonicalize();
      RInterval x(std::min(a, b), std::max(a, b)), y(std::min(c, d), std::max(c, d));
      for (const Rational& u : {a, b}) {
        for (const Rational& v : {c, d}) {
          CHECK((x + y).contains(Rational(u + v)));
          CHECK((x - y).contains(Rational(u - v)));
          CHECK((x * y).contains(Rational(u * v)));
          if (!y.contains(Rational(0))) CHECK((x / y).contains(Rational(u / v)));
        }
      }
    }
  }

  TEST_CASE("division by an interval containing zero throws") {
    CHECK_THROWS(RInterval(Rational(1)) / RInterval(Rational(-1), Rational(1)));
  }

  TEST_CASE("printed decimals are matched by truncation") {
    RInterval x(parse_rational("3.82202018532155"), parse_rational("3.82202018532156"));
    CHECK(matches_printed(x, "3.822020185"));
    CHECK_FALSE(matches_printed(x, "3.822020186"));
    RInterval straddle(parse_rational("3.70999"), parse_rational("3.71001"));
    CHECK_FALSE(matches_printed(straddle, "3.709"));
  }

  TEST_CASE("rendering rounds outward") {
    RInterval x(Rational(1, 3), Rational(2, 3));
    CHECK(x.to_string(3) == "[0.333, 0.667]");
    CHECK(x.lo_string(2) == "0.33");
    CHECK(x.hi_string(2) == "0.67");
  }
}

TEST_SUITE("surd") {
  TEST_CASE("radicands are reduced") {
    auto [k, m] = reduce_radicand(Int(72));
    CHECK(k == 6);
    CHECK(m == 2);
    CHECK(Surd::sqrt(Int(49)).is_rational());
    CHECK(Surd::sqrt(Int(12)) == Surd(0, 2, Int(3)));
  }

  TEST_CASE("field arithmetic is exact") {
    Surd r5 = Surd::sqrt(Int(5));
    Surd phi = (Surd(1) + r5) / Surd(2);
    CHECK(phi * phi == phi + Surd(1));
    CHECK((r5 * r5) == Surd(5));
    CHECK((Surd(1) / (r5 - Surd(2))) == r5 + Surd(2));
    CHECK_THROWS_AS(r5 + Surd::sqrt(Int(3)), DomainError);
  }

  TEST_CASE("comparisons agree with long double") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-30, 30), rad(2, 60);
    for (int k = 0; k < 2000; ++k) {
      Surd x(Rational(coef(rng), 7), Rational(coef(rng), 5), Int(rad(rng)));
      Surd y(Rational(coef(rng), 3), Rational(coef(rng), 11), Int(rad(rng)));
      long double xv = x.a().get_d() + x.b().get_d() * std::sqrt(static_cast<long double>(x.d().get_si()));
      long double yv = y.a().get_d() + y.b().get_d() * std::sqrt(static_cast<long double>(y.d().get_si()));
      if (std::fabs(xv - yv) < 1e-12L) continue;
      CHECK(compare(x, y) == (xv < yv ? -1 : 1));
    }
  }

  TEST_CASE("enclosures contain the value and respect the width") {
    Surd s = Surd::sqrt(Int(2)) + Surd(Rational(1, 3));
    RInterval e = s.enclose(pow10(-30));
    CHECK(e.width() <= pow10(-30));
    CHECK(compare(s, e.lo()) >= 0);
    CHECK(compare(s, e.hi()) <= 0);
  }

  TEST_CASE("Real sums over two fields") {
    Real r = Real(Surd::sqrt(Int(2))) + Real(Surd::sqrt(Int(3)));
    CHECK(r.field_count() == 2);
    RInterval e = r.enclose(pow10(-25));
    long double v = std::sqrt(2.0L) + std::sqrt(3.0L);
    CHECK(std::fabs(e.mid().get_d() - static_cast<double>(v)) < 1e-15);
    CHECK(r.to_string() == "sqrt(2) + sqrt(3)");
    CHECK(compare(r, Rational(314, 100)).value() == 1);
    CHECK(compare(r, Rational(315, 100)).value() == -1);
  }
}

TEST_SUITE("power") {
  TEST_CASE("x^s encloses std::pow") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> n(1, 400), s(0, 1000);
    for (int k = 0; k < 500; ++k) {
      Rational x(n(rng), 97), e(s(rng), 1000);
      x.canonicalize();
      e.canonicalize();
      RInterval p = pow_enclosure(RInterval(x), e, 128);
      long double ref = std::pow(static_cast<long double>(x.get_d()), static_cast<long double>(e.get_d()));
      CHECK(p.lo().get_d() <= static_cast<double>(ref) * (1 + 1e-15));
      CHECK(p.hi().get_d() >= static_cast<double>(ref) * (1 - 1e-15));
      CHECK(p.width() <= pow2(-100) * (p.hi() + 1));
    }
  }

  TEST_CASE("monotone endpoints over an interval") {
    RInterval below(Rational(1, 4), Rational(1, 2)), across(Rational(1, 2), Rational(2));
    RInterval p = pow_enclosure(below, Rational(1, 2));
    CHECK(p.contains(Rational(1, 2)));
    CHECK(p.lo() <= Rational(1, 2));
    RInterval q = pow_enclosure(across, Rational(1, 3));
    CHECK(q.contains(Rational(1)));
    CHECK(pow_enclosure(across, Rational(0)) == RInterval(Rational(1)));
  }

  TEST_CASE("log encloses std::log") {
    RInterval l = log_enclosure(RInterval(Rational(2)));
    CHECK(l.lo().get_d() <= std::log(2.0));
    CHECK(l.hi().get_d() >= std::log(2.0) - 1e-16);
    CHECK(l.width() < pow2(-100));
  }
}
