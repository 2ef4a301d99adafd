#include "mlcf/power.hpp"

#include <mpfr.h>

#include "mlcf/error.hpp"

namespace mlcf {

namespace {

class Mpfr {
 public:
  explicit Mpfr(long bits) { mpfr_init2(v_, bits); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

  Rational to_rational() {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

 private:
  mpfr_t v_;
};

}  // namespace

RInterval pow_enclosure(const RInterval& x, const Rational& s, long bits) {
  if (x.lo() <= 0) throw DomainError("pow_enclosure needs x > 0");
  if (s < 0) throw DomainError("pow_enclosure needs s >= 0");
  if (s == 0) return RInterval(Rational(1));
  Mpfr xl(bits), xh(bits), sl(bits), sh(bits), lo(bits), hi(bits);
  mpfr_set_q(xl.get(), x.lo().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(xh.get(), x.hi().get_mpq_t(), MPFR_RNDU);
  mpfr_set_q(sl.get(), s.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(sh.get(), s.get_mpq_t(), MPFR_RNDU);
  // x^s is increasing in x; in s it decreases below 1 and increases above.
  bool below_one = x.hi() <= 1;
  bool above_one = x.lo() >= 1;
  mpfr_ptr s_for_lo = below_one ? sh.get() : sl.get();
  mpfr_ptr s_for_hi = above_one ? sh.get() : sl.get();
  if (!below_one && !above_one) {
    // Straddles 1: the extremes sit at the ends with the opposite exponent ends.
    Mpfr a(bits), b(bits);
    mpfr_pow(a.get(), xl.get(), sh.get(), MPFR_RNDD);
    mpfr_pow(b.get(), xh.get(), sh.get(), MPFR_RNDU);
    mpfr_pow(lo.get(), xl.get(), sl.get(), MPFR_RNDD);
    mpfr_pow(hi.get(), xh.get(), sl.get(), MPFR_RNDU);
    mpfr_min(lo.get(), lo.get(), a.get(), MPFR_RNDD);
    mpfr_max(hi.get(), hi.get(), b.get(), MPFR_RNDU);
    return RInterval(lo.to_rational(), hi.to_rational());
  }
  mpfr_pow(lo.get(), xl.get(), s_for_lo, MPFR_RNDD);
  mpfr_pow(hi.get(), xh.get(), s_for_hi, MPFR_RNDU);
  return RInterval(lo.to_rational(), hi.to_rational());
}

RInterval log_enclosure(const RInterval& x, long bits) {
  if (x.lo() <= 0) throw DomainError("log_enclosure needs x > 0");
  Mpfr xl(bits), xh(bits), lo(bits), hi(bits);
  mpfr_set_q(xl.get(), x.lo().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(xh.get(), x.hi().get_mpq_t(), MPFR_RNDU);
  mpfr_log(lo.get(), xl.get(), MPFR_RNDD);
  mpfr_log(hi.get(), xh.get(), MPFR_RNDU);
  return RInterval(lo.to_rational(), hi.to_rational());
}

}  // namespace mlcf
