#include "mlcf/spectra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "mlcf/error.hpp"
#include "text.hpp"

namespace mlcf {

namespace {

WindowPattern cantor_pattern(const Word& theta_prefix) {
  for (Digit d : theta_prefix) {
    if (d != 1 && d != 2) throw DomainError("theta digits must lie in {1,2}");
  }
  WindowPattern w = WindowPattern::parse(std::string(kCantorBase) + to_string(theta_prefix), Alphabet{1, 2, 3});
  w.alphabet = Alphabet{1, 2};
  return w;
}

RInterval hull_of(const Real& lo, const Real& hi, const Rational& tol) {
  return RInterval(lo.enclose(tol).lo(), hi.enclose(tol).hi());
}

}  // namespace

std::pair<Real, Real> c_point_exact(const Word& theta_prefix) {
  WindowPattern w = cantor_pattern(theta_prefix);
  return {lambda_extreme(w, 0, Objective::Minimize), lambda_extreme(w, 0, Objective::Maximize)};
}

RInterval c_point(const Word& theta_prefix, const Rational& tol) {
  auto [lo, hi] = c_point_exact(theta_prefix);
  return hull_of(lo, hi, tol);
}

RInterval GapInterval::enclose(const Rational& tol) const { return hull_of(lo, hi, tol); }

GapInterval interval_J() {
  return GapInterval{"J", lambda_exact(parse_sequence(kJ0Sequence), 0), lambda_exact(parse_sequence(kJ1Sequence), 0)};
}

Real upsilon_value() { return lambda_exact(parse_sequence(kUpsilonSequence), 0); }

Upsilon upsilon(const Ledger& ledger, const Rational& tol, const LedgerOptions& options, const std::string& chain_prefix) {
  Upsilon u;
  u.value = upsilon_value();
  u.enclosure = u.value.enclose(tol);
  std::vector<Claim> chain;
  for (const Claim& c : ledger.claims) {
    if (c.id.rfind(chain_prefix + ".", 0) == 0) chain.push_back(c);
  }
  u.chain = run_ledger(chain, options);
  return u;
}

BlockBound parse_bound(std::string_view text) {
  std::string t = detail::trim(text);
  if (t.rfind("sqrt(", 0) == 0 && t.back() == ')') {
    return BlockBound{t, Surd::sqrt(Int(t.substr(5, t.size() - 6)))};
  }
  return BlockBound{t, parse_rational(t)};
}

std::vector<SymmetricBlockSpec> parse_blocks(std::string_view text) {
  std::vector<SymmetricBlockSpec> out;
  for (const auto& [n, line] : detail::content_lines(text)) {
    auto f = detail::split(line, '|');
    if (f.size() < 6 || f.size() > 7) throw ParseError("block line " + std::to_string(n) + ": expected 6 or 7 fields", n);
    SymmetricBlockSpec s;
    s.id = f[0];
    s.region = f[1];
    for (const auto& g : detail::split(f[2], ',')) s.generators.push_back(parse_word(g));
    auto amb = detail::split(f[3], ';');
    s.ambient = Alphabet::parse(amb[0]);
    if (amb.size() > 1 && !amb[1].empty()) {
      for (const auto& w : detail::split(amb[1], ',')) s.forbidden.push_back(parse_word(w));
    }
    if (f[4] != "-") {
      s.expression = parse_sequence(f[4]);
      s.expression_text = f[4];
    }
    for (const auto& b : detail::split(f[5], ',')) s.bounds.push_back(parse_bound(b));
    if (f.size() == 7) s.restrictions = f[6];
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<SymmetricBlockSpec> load_blocks(const std::filesystem::path& path) {
  return parse_blocks(detail::read_file(path));
}

RInterval verify_block_constant(const SymmetricBlockSpec& spec, const Rational& tol) {
  if (!spec.expression) throw DomainError(spec.id + ": no expression to evaluate");
  Real v = lambda_exact(*spec.expression, 0);
  RInterval e = v.enclose(tol);
  for (const BlockBound& b : spec.bounds) {
    auto c = compare(v, b.value);
    if (!c || *c >= 0) {
      throw VerificationFailure(spec.id + ": c(B,C) bound " + e.to_string(12) + " is not below " + b.text);
    }
  }
  return e;
}

BlockCheck check_block(const SymmetricBlockSpec& spec, const Rational& tol) {
  BlockCheck r;
  r.id = spec.id;
  if (!spec.expression) {
    r.stated_only = true;
    r.message = "bound stated without an expression";
    return r;
  }
  try {
    r.value = verify_block_constant(spec, tol);
    r.verified = true;
  } catch (const VerificationFailure& e) {
    r.value = lambda_exact(*spec.expression, 0).enclose(tol);
    r.message = e.what();
  }
  return r;
}

namespace {

// Position inside Σ(B): the next digit to emit is generators[g][o].
using State = std::pair<std::size_t, std::size_t>;
using StateSet = std::set<State>;

StateSet all_states(const std::vector<Word>& gens) {
  StateSet s;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (std::size_t o = 0; o < gens[g].size(); ++o) s.insert({g, o});
  }
  return s;
}

StateSet step(const std::vector<Word>& gens, const StateSet& from, Digit d) {
  StateSet to;
  for (auto [g, o] : from) {
    if (gens[g][o] != d) continue;
    if (o + 1 < gens[g].size()) {
      to.insert({g, o + 1});
    } else {
      for (std::size_t h = 0; h < gens.size(); ++h) to.insert({h, 0});
    }
  }
  return to;
}

StateSet read(const std::vector<Word>& gens, StateSet s, const Word& w) {
  for (Digit d : w) {
    if (s.empty()) break;
    s = step(gens, s, d);
  }
  return s;
}

std::vector<Digit> generator_digits(const std::vector<Word>& gens) {
  std::set<Digit> ds;
  for (const Word& g : gens) ds.insert(g.begin(), g.end());
  return {ds.begin(), ds.end()};
}

// Admissible word of length k following `target` as closely as possible.
Word greedy_shadow(const std::vector<Word>& gens, const std::vector<Digit>& target) {
  std::vector<Digit> digits = generator_digits(gens);
  StateSet s = all_states(gens);
  Word w;
  for (Digit t : target) {
    std::vector<Digit> order = digits;
    std::stable_sort(order.begin(), order.end(), [t](Digit x, Digit y) { return std::abs(x - t) < std::abs(y - t); });
    bool moved = false;
    for (Digit d : order) {
      StateSet next = step(gens, s, d);
      if (!next.empty()) {
        s = std::move(next);
        w.push_back(d);
        moved = true;
        break;
      }
    }
    if (!moved) throw DomainError("generators admit no infinite sequence");
  }
  return w;
}

}  // namespace

bool block_admissible(const std::vector<Word>& generators, const Word& w) {
  return !read(generators, all_states(generators), w).empty();
}

std::optional<Word> block_bridge(const std::vector<Word>& generators, const Word& prefix, const Word& suffix,
                                 std::size_t max_length) {
  StateSet start = read(generators, all_states(generators), prefix);
  if (start.empty()) return std::nullopt;
  std::vector<Digit> digits = generator_digits(generators);
  std::deque<std::pair<StateSet, Word>> queue{{start, {}}};
  std::set<StateSet> seen{start};
  while (!queue.empty()) {
    auto [s, w] = std::move(queue.front());
    queue.pop_front();
    if (!read(generators, s, suffix).empty()) return w;
    if (w.size() >= max_length) continue;
    for (Digit d : digits) {
      StateSet next = step(generators, s, d);
      if (next.empty() || !seen.insert(next).second) continue;
      Word x = w;
      x.push_back(d);
      queue.emplace_back(std::move(next), std::move(x));
    }
  }
  return std::nullopt;
}

SpliceResult key_lemma_splice(const BiSeq& a, const std::vector<Word>& generators, const Alphabet& ambient, int k,
                              const Rational& tol, std::optional<Word> connector, std::optional<Real> c_bound) {
  if (k < 3) throw DomainError("key_lemma_splice needs k >= 3");
  if (!a.complete()) throw DomainError("key_lemma_splice needs a complete sequence");
  SpliceResult r;
  r.m = lambda_exact(a, 0);
  RInterval m_enc = r.m.enclose(tol);
  if (markov_value(a, tol).certainly_above(m_enc)) throw DomainError("the Markov value of a is not attained at the origin");

  long n = k;
  std::vector<Digit> right_target, left_target;
  for (long j = 1; j <= k; ++j) right_target.push_back(a.at(n + j));
  for (long j = 1; j <= k; ++j) left_target.push_back(a.at(-n - j));
  r.mu_plus = greedy_shadow(generators, right_target);
  std::vector<Word> reversed_gens;
  for (const Word& g : generators) reversed_gens.push_back(reversed(g));
  r.nu_minus = reversed(greedy_shadow(reversed_gens, left_target));
  if (connector) {
    Word whole = r.mu_plus;
    whole.insert(whole.end(), connector->begin(), connector->end());
    whole.insert(whole.end(), r.nu_minus.begin(), r.nu_minus.end());
    if (!block_admissible(generators, whole)) throw DomainError("connector is not admissible in the block subshift");
    r.connector = *connector;
  } else {
    auto bridge = block_bridge(generators, r.mu_plus, r.nu_minus);
    if (!bridge) throw DomainError("no connector found within the search bound");
    r.connector = *bridge;
  }

  for (long j = 0; j <= n; ++j) r.period.push_back(a.at(j));
  r.splice_begin = static_cast<long>(r.period.size());
  for (const Word* part : {&r.mu_plus, &r.connector, &r.nu_minus}) r.period.insert(r.period.end(), part->begin(), part->end());
  long splice_end = static_cast<long>(r.period.size());
  for (long j = -n; j <= -1; ++j) r.period.push_back(a.at(j));

  BiSeq pk = periodic(r.period, 0);
  r.m_pk = periodic_markov(r.period).enclose(tol);
  r.eps = pow2(-(k - 2));

  // θ1, θ2: a up to a_n, then μ+, then the two extremal tails over C.
  // θ3, θ4: the mirror image on the left with ν-.
  std::vector<RInterval> thetas;
  Word right_head, left_head;
  for (long j = 1; j <= n; ++j) right_head.push_back(a.at(j));
  right_head.insert(right_head.end(), r.mu_plus.begin(), r.mu_plus.end());
  for (long j = 1; j <= n; ++j) left_head.push_back(a.at(-j));
  Word nu_out = reversed(r.nu_minus);
  left_head.insert(left_head.end(), nu_out.begin(), nu_out.end());
  for (Objective obj : {Objective::Minimize, Objective::Maximize}) {
    OneSidedSeq tr = extremal_tail(ambient, obj, static_cast<long>(right_head.size()) + 1).prepend(right_head);
    thetas.push_back(markov_value(BiSeq{a.left, a.origin, tr}, tol));
    OneSidedSeq tl = extremal_tail(ambient, obj, static_cast<long>(left_head.size()) + 1).prepend(left_head);
    thetas.push_back(markov_value(BiSeq{tl, a.origin, a.right}, tol));
  }
  r.theta_max = thetas.front();
  for (const RInterval& t : thetas) r.theta_max = max(r.theta_max, t);

  RInterval upper = r.theta_max + RInterval(r.eps);
  RInterval lower = m_enc - RInterval(r.eps);
  r.e2 = true;
  for (long j = -1 - n; j <= n + 1; ++j) {
    if (lambda_at(pk, j, tol).hi() > upper.lo()) r.e2 = false;
  }
  if (c_bound) {
    Rational limit = c_bound->enclose(tol).lo() + pow2(-(k - 1));
    bool ok = true;
    // Non-extremal positions: a whole generator of the splice precedes them
    // and at least k-1 splice digits follow.
    std::size_t longest = 0;
    for (const Word& g : generators) longest = std::max(longest, g.size());
    for (long j = r.splice_begin + static_cast<long>(longest); j <= splice_end - (k - 1); ++j) {
      if (!lambda_at(pk, j, tol).certainly_below(limit)) ok = false;
    }
    r.e3 = ok;
  }
  r.e4 = lambda_at(pk, 0, tol).certainly_above(lower.hi());
  r.sandwich = lower.hi() <= r.m_pk.lo() && r.m_pk.hi() <= upper.lo();
  return r;
}

}  // namespace mlcf
