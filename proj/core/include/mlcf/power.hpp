#pragma once

#include "mlcf/interval.hpp"

namespace mlcf {

// Enclosure of x^s over every x in `x` (x > 0) for rational s >= 0, computed
// with MPFR at `bits` of working precision and rounded outward.
RInterval pow_enclosure(const RInterval& x, const Rational& s, long bits = 128);

// Enclosure of log(x) for x > 0.
RInterval log_enclosure(const RInterval& x, long bits = 128);

}  // namespace mlcf
