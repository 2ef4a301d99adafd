#include "mlcf/cf.hpp"

#include <map>

#include "mlcf/error.hpp"

namespace mlcf {

namespace {

Surd solve_periodic(const Word& period) {
  // x = (P x + P') / (Q x + Q')  =>  Q x^2 + (Q' - P) x - P' = 0, positive root
  Mobius m = convergent_matrix(period);
  Int t = m.a - m.d;
  Int disc = t * t + 4 * m.b * m.c;
  Rational den(2 * m.c);
  return Surd(Rational(t) / den, Rational(1) / den, disc);
}

}  // namespace

Surd periodic_quotient(const Word& period) {
  if (period.empty()) throw DomainError("empty period");
  thread_local std::map<Word, Surd> cache;
  if (auto it = cache.find(period); it != cache.end()) return it->second;
  Surd x = solve_periodic(period);
  if (cache.size() > 4096) cache.clear();
  cache.emplace(period, x);
  return x;
}

Surd cf_value(const Int& c0, const Word& head, const Word& period) {
  Mobius m;
  m.a = c0;
  m.b = 1;
  m.c = 1;
  m.d = 0;
  for (Digit x : head) {
    Int a = m.a * x + m.b;
    Int c = m.c * x + m.d;
    m.b = m.a;
    m.d = m.c;
    m.a = a;
    m.c = c;
  }
  if (period.empty()) return Surd(Rational(m.a, m.c));
  Surd x = periodic_quotient(period);
  return (Surd(Rational(m.a)) * x + Surd(Rational(m.b))) / (Surd(Rational(m.c)) * x + Surd(Rational(m.d)));
}

Surd eval_exact(const OneSidedSeq& seq, const Int& integer_part) {
  if (!seq.complete()) throw DomainError("partial sequence: complete it with extremal_tail before evaluating");
  return cf_value(integer_part, seq.head, seq.tail);
}

RInterval eval(const OneSidedSeq& seq, const Int& integer_part, const Rational& tol) {
  return eval_exact(seq, integer_part).enclose(tol);
}

Real lambda_exact(const BiSeq& a, long i) {
  if (!a.complete()) throw DomainError("lambda needs a sequence that is periodic on both sides");
  BiSeq c = a.recentered(i);
  Real forward(cf_value(c.origin, c.right.head, c.right.tail));
  Real backward(cf_value(0, c.left.head, c.left.tail));
  return forward + backward;
}

RInterval lambda_at(const BiSeq& a, long i, const Rational& tol) { return lambda_exact(a, i).enclose(tol); }

Real periodic_markov(const Word& w) {
  if (w.empty()) throw DomainError("empty period");
  Real best;
  for (std::size_t j = 0; j < w.size(); ++j) {
    Real v = lambda_exact(periodic(w, j), 0);
    if (j == 0) {
      best = v;
      continue;
    }
    auto c = compare(v, best);
    if (!c) throw DomainError("undecidable comparison of periodic lambda values");
    if (*c > 0) best = v;
  }
  return best;
}

namespace {

bool is_purely_periodic(const BiSeq& a, Word& block) {
  Word center = reversed(a.left.head);
  center.push_back(a.origin);
  center.insert(center.end(), a.right.head.begin(), a.right.head.end());
  if (a.right.tail == center && a.left.tail == reversed(center)) {
    block = center;
    return true;
  }
  return false;
}

long round_up(long n, long period) { return ((n + period - 1) / period) * period; }

}  // namespace

RInterval markov_value(const BiSeq& a, const Rational& tol) {
  if (tol <= 0) throw DomainError("tolerance must be positive");
  if (!a.complete()) throw DomainError("Markov value needs a sequence that is periodic on both sides");
  Word block;
  if (is_purely_periodic(a, block)) return periodic_markov(block).enclose(tol);

  // Beyond the window the λ's are within eps of a periodic tail's values.
  Rational eps = tol / 2;
  Rational each = tol / 4;
  long extra = bits_for(eps) + 2;
  long right_end = static_cast<long>(a.right.head.size()) + round_up(extra, static_cast<long>(a.right.tail.size()));
  long left_end = static_cast<long>(a.left.head.size()) + round_up(extra, static_cast<long>(a.left.tail.size()));

  RInterval best = lambda_at(a, 0, each);
  for (long i = -left_end; i <= right_end; ++i) {
    if (i != 0) best = max(best, lambda_at(a, i, each));
  }
  RInterval mr = periodic_markov(a.right.tail).enclose(each);
  RInterval ml = periodic_markov(reversed(a.left.tail)).enclose(each);
  Rational lo = std::max({best.lo(), mr.lo(), ml.lo()});
  Rational hi = std::max({best.hi(), Rational(mr.hi() + eps), Rational(ml.hi() + eps)});
  // The tails never exceed their periodic sup by more than eps, and when the
  // window already dominates they cannot reach it.
  if (best.lo() >= mr.hi() + eps && best.lo() >= ml.hi() + eps) hi = best.hi();
  return RInterval(lo, hi);
}

RInterval lagrange_value(const BiSeq& a, const Rational& tol) {
  if (!a.right.complete()) throw DomainError("Lagrange value needs a right-periodic sequence");
  return periodic_markov(a.right.tail).enclose(tol);
}

PrefixComparison compare_prefix(const Word& shared, Digit next_a, Digit next_b) {
  if (next_a == next_b) throw DomainError("compare_prefix needs distinct next digits");
  long n = static_cast<long>(shared.size());
  int diff = next_a > next_b ? 1 : -1;
  int order = ((n + 1) % 2 == 0) ? diff : -diff;
  return {order, pow2(1 - n)};
}

Digit extremal_digit(const Alphabet& alphabet, Objective objective, long index) {
  bool even = index % 2 == 0;
  bool want_large = (objective == Objective::Maximize) == even;
  return want_large ? alphabet.max() : alphabet.min();
}

OneSidedSeq extremal_tail(const Alphabet& alphabet, Objective objective, long next_index) {
  Digit first = extremal_digit(alphabet, objective, next_index);
  Digit second = extremal_digit(alphabet, objective, next_index + 1);
  if (first == second) return OneSidedSeq{Word{}, Word{first}};
  return OneSidedSeq{Word{}, Word{first, second}};
}

}  // namespace mlcf
