#pragma once

#include "mlcf/interval.hpp"
#include "mlcf/sequence.hpp"
#include "mlcf/surd.hpp"
#include "mlcf/word.hpp"

namespace mlcf {

enum class Objective { Minimize, Maximize };

// Complete quotient x = [p1; p2, …, pk, x] > 1 of a purely periodic block.
Surd periodic_quotient(const Word& period);

// Exact [c0; head, period, period, …]; a rational when period is empty.
Surd cf_value(const Int& c0, const Word& head, const Word& period);

// Exact value of [integer_part; seq]. Throws DomainError for partial sequences.
Surd eval_exact(const OneSidedSeq& seq, const Int& integer_part);
RInterval eval(const OneSidedSeq& seq, const Int& integer_part, const Rational& tol);

// λ_i(a) = [a_i; a_{i+1}, …] + [0; a_{i-1}, …].
Real lambda_exact(const BiSeq& a, long i);
RInterval lambda_at(const BiSeq& a, long i, const Rational& tol);

// Markov value m(…www…) of a purely periodic sequence: the exact maximum
// of λ over one period of shifts.
Real periodic_markov(const Word& w);

// sup_n λ_n(a) for a sequence periodic on both sides.
RInterval markov_value(const BiSeq& a, const Rational& tol);

// limsup_{n→∞} λ_n(a) = Markov value of the right period.
RInterval lagrange_value(const BiSeq& a, const Rational& tol);

// Two continued fractions [c0; shared, next_a, …] and [c0; shared, next_b, …]:
// order is +1 when the first is larger, whatever the continuations, and their
// distance is below gap_bound = 2^{1-n} with n = |shared|.
struct PrefixComparison {
  int order;
  Rational gap_bound;
};
PrefixComparison compare_prefix(const Word& shared, Digit next_a, Digit next_b);

// The digit at continued-fraction index `index` that pushes the value in the
// direction of `objective` (the value increases with digits at even indices).
Digit extremal_digit(const Alphabet& alphabet, Objective objective, long index);

// Periodic tail alternating the extreme digits that extremizes
// [… ; prefix, tail] over all completions, when the tail starts at
// continued-fraction index `next_index`.
OneSidedSeq extremal_tail(const Alphabet& alphabet, Objective objective, long next_index);

}  // namespace mlcf
