// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "mlcf/cf.hpp"
#include "mlcf/cover.hpp"
#include "mlcf/dim.hpp"
#include "mlcf/error.hpp"
#include "mlcf/forcing.hpp"
#include "mlcf/report.hpp"
#include "mlcf/spectra.hpp"
#include "mlcf/window.hpp"
#include "oracle.hpp"

using namespace mlcf;

namespace {

const std::filesystem::path kData = MLCF_TEST_DATA_DIR;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects failure reasons for one criterion.
struct Check {
  std::vector<std::string> failures;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  bool passed() const { return failures.empty(); }
};

RunConfig config() {
  RunConfig c;
  c.data_dir = kData;
  c.resolve();
  return c;
}

// Enclosure width at most 1e-13 and inside the truncation interval of `printed`.
void printed_constant(Check& c, const std::string& name, const RInterval& x, const std::string& printed) {
  c.require(x.width() <= pow10(-13), name + " width");
  c.require(matches_printed(x, printed), name + " != " + printed);
}

Check criterion1() {
  Check c;
  auto t0 = Clock::now();
  const Rational tol = pow10(-20);
  Ledger ledger = Ledger::load(kData / "ledger.txt");
  // The three extremal values come from evaluating the prover's witness.
  for (const char* id : {"l1.i", "l1.ii", "l1.iii"}) {
    const Claim& claim = ledger.find(id);
    Verdict v = prove_claim(claim);
    c.require(v.status == Status::Proved && v.witness.has_value(), std::string(id) + " not proved");
    if (v.witness) printed_constant(c, id, lambda_at(*v.witness, 0, tol), claim.printed);
  }
  GapInterval J = interval_J();
  printed_constant(c, "j0", lambda_at(parse_sequence(kJ0Sequence), 0, tol), "3.70969985967967");
  printed_constant(c, "j1", lambda_at(parse_sequence(kJ1Sequence), 0, tol), "3.70969985975042");
  c.require(J.lo.enclose(tol).overlaps(lambda_at(parse_sequence(kJ0Sequence), 0, tol)), "j0 routes disagree");
  printed_constant(c, "upsilon", lambda_at(parse_sequence(kUpsilonSequence), 0, tol), "3.7096998597503806");
  BiSeq e = parse_sequence("(21)2*(2)");
  RInterval s = lambda_at(e, 0, tol);
  Real exact = Real(Surd::sqrt(Int(2))) + Real(Surd::sqrt(Int(3)));
  c.require(compare(lambda_exact(e, 0), exact) == 0, "(21)2*(2) exact value");
  c.require(s.width() <= pow10(-13) && s.contains(exact.enclose(pow10(-30)).mid()), "(21)2*(2) enclosure");
  double secs = seconds_since(t0);
  c.require(secs < 1.0, "runtime");
  c.detail << "7 constants, " << secs << " s";
  return c;
}

Check criterion2() {
  Check c;
  auto t0 = Clock::now();
  Ledger ledger = Ledger::load(kData / "ledger.txt");
  LedgerReport r = run_ledger(ledger.claims);
  std::size_t printed = 0;
  for (const auto& e : r.entries) {
    c.require(e.status() == Status::Proved, e.id + " " + to_string(e.status()));
    c.require(e.printed_ok, e.id + " printed digits");
    printed += !e.printed.empty();
  }
  double secs = seconds_since(t0);
  c.require(secs < 300, "runtime");
  c.detail << r.entries.size() << " claims, " << printed << " with printed decimals, " << secs << " s";
  return c;
}

Check criterion3() {
  Check c;
  auto t0 = Clock::now();
  SurvivorSet s = survivors(parse_rational("3.7096992"), parse_rational("3.7096999"), 9, Alphabet{1, 2, 3});
  c.require(s.literals() == std::vector<std::string>{"2332221233*222123322"}, "c.7 window");
  Rational bound = parse_rational("3.70969985975033");
  Replication r = replicate_left(SymbolicWindow::parse(kReplicationSeed), bound);
  c.require(r.forced, "replication not forced");
  c.require(r.seed_offset && *r.seed_offset == -7, "seed offset");
  c.require(r.core.refines(SymbolicWindow::parse("23322212332221233*222123322212")), "replication extension");
  ReplicationChain chain = iterate_replication(SymbolicWindow::parse(kReplicationSeed), bound, 10);
  int copies = count_left_copies(chain.window, parse_word("3322212"), 0);
  c.require(chain.forced && copies >= 10, "ten copies");
  double secs = seconds_since(t0);
  c.require(secs < 600, "runtime");
  c.detail << "c.7 " << (s.literals().empty() ? "-" : s.literals()[0]) << ", offset "
           << (r.seed_offset ? std::to_string(*r.seed_offset) : "-") << ", " << copies << " copies, " << secs << " s";
  return c;
}

Check criterion4() {
  Check c;
  const Rational tol = pow10(-20);
  RInterval C = c_point({}, tol);
  c.require(C.certainly_above(parse_rational("3.70969985975024")), "C above 3.70969985975024");
  c.require(C.certainly_below(parse_rational("3.70969985975028")), "C below 3.70969985975028");
  GapInterval J = interval_J();
  c.require(C.certainly_above(J.lo.enclose(tol)), "C above j0");
  c.require(C.certainly_below(J.hi.enclose(tol)), "C below j1");
  c.detail << "C in " << C.to_string(16);
  return c;
}

Check criterion5() {
  Check c;
  const std::set<std::string> listed{"0.174813", "0.281266", "0.172825", "0.25966", "0.177645", "0.167655"};
  auto systems = load_cover_systems(kData / "cover");
  c.require(systems.size() == 10, "ten cover systems");
  Rational worst = 0;
  for (const auto& cs : systems) {
    c.require(listed.count(to_exact_decimal(cs.s)) == 1, cs.id + " s not a listed value");
    RInterval m = case_sum(cs, cs.s);
    c.require(m.certainly_below(Rational(1)), cs.id + " case sum not < 1");
    c.require(m.hi() <= cs.margin + pow10(-5), cs.id + " margin");
    worst = std::max(worst, Rational(m.hi()));
    Threshold t = solve_threshold(cs, pow10(-6));
    c.require(t.s_star <= cs.s + pow10(-4), cs.id + " s*");
  }
  c.detail << systems.size() << " systems, largest case sum " << to_decimal(worst, 8, Rounding::Up);
  return c;
}

Check criterion6() {
  Check c;
  auto value = [&](const Report& r, const std::string& id) {
    const ReportItem* it = r.find(id);
    return it ? it->value : std::string("missing");
  };
  Report t2 = report_theorem2(config());
  c.require(t2.verdict == Verdict3::Pass, "theorem2 verdict");
  for (auto [id, v] : std::vector<std::pair<std::string, std::string>>{{"sqrt10-sqrt13", "0.706104"},
                                                                       {"sqrt13-3.84", "0.986927"},
                                                                       {"3.84-sqrt20", "0.986927"},
                                                                       {"sqrt20-sqrt21", "0.961772"},
                                                                       {"theorem2.global", "0.986927"}}) {
    c.require(value(t2, id) == v, id + " = " + value(t2, id));
  }
  Report b = report_appendixB(config());
  c.require(b.verdict == Verdict3::Pass, "appendixB verdict");
  for (auto [id, v] : std::vector<std::pair<std::string, std::string>>{{"h-below-sqrt13", "0.73"},
                                                                       {"h-sqrt13-3.84", "0.856"},
                                                                       {"h-3.84-3.92", "0.872"},
                                                                       {"h-3.92-4.01", "0.828"},
                                                                       {"h-4.01-sqrt20", "0.873316"},
                                                                       {"h-sqrt20-sqrt21", "0.888"},
                                                                       {"appendixB.global", "0.888"}}) {
    c.require(value(b, id) == v, id + " = " + value(b, id));
    const ReportItem* it = b.find(id);
    c.require(it && std::find(it->flags.begin(), it->flags.end(), "HEURISTIC") != it->flags.end(), id + " flag");
  }
  c.detail << "theorem2 " << value(t2, "theorem2.global") << ", appendixB " << value(b, "appendixB.global");
  return c;
}

Check criterion7() {
  Check c;
  auto t0 = Clock::now();
  SubshiftSpec e2 = build_subshift(Alphabet{1, 2}, {});
  double d2 = dimension_at(e2, 24);
  double secs = seconds_since(t0);
  // Ten significant digits of 0.53128050627...
  c.require(std::fabs(d2 - 0.5312805062772051) < 5e-11, "E2 digits");
  c.require(secs < 30, "E2 runtime");
  double d3 = dimension(build_subshift(Alphabet{1, 2, 3}, {})).value;
  double d4 = dimension(build_subshift(Alphabet{1, 2, 3, 4}, {})).value;
  c.require(std::fabs(d3 - 0.705661) < 1e-3, "E3");
  c.require(std::fabs(d4 - 0.788947) < 1e-3, "E4");
  int capped = 0;
  for (const auto& f : load_subshift_files(kData / "subshifts")) {
    if (!f.cap) continue;
    ++capped;
    double d = dimension(f.spec).value;
    c.require(d <= Rational(*f.cap + Rational(5, 1000)).get_d(), f.spec.name + " above cap");
  }
  c.require(capped == 5, "five capped sets");
  c.detail.precision(16);
  c.detail << "E2 " << d2 << " (" << secs << " s), E3 " << d3 << ", E4 " << d4;
  return c;
}

// Compact re-run of the property checks, each against an independent reference.
Check criterion8() {
  Check c;
  std::mt19937_64 rng(8);
  const Rational tol = pow10(-24);

  auto literal = [&] {
    auto part = [&](int lo_len, int hi_len) {
      std::uniform_int_distribution<int> len(lo_len, hi_len);
      return oracle::to_string(oracle::random_word(rng, 1, 3, len(rng)));
    };
    std::string origin = part(1, 1);
    return "(" + part(1, 4) + ")" + part(0, 5) + origin + "*" + part(0, 5) + "(" + part(1, 4) + ")";
  };
  int transposed = 0;
  for (int k = 0; k < 1000; ++k) {
    BiSeq a = parse_sequence(literal());
    transposed += markov_value(a, tol).overlaps(markov_value(a.transpose(), tol));
  }
  c.require(transposed == 1000, "transpose invariance");

  std::uniform_int_distribution<int> digit(1, 3);
  int dominated = 0, samples = 0;
  for (const char* lit : {"3*1", "23*2", "33*3", "33*21", "233*223", "2?33*2?1"}) {
    WindowPattern w = WindowPattern::parse(lit, Alphabet{1, 2, 3});
    RInterval hi = lambda_extreme(w, 0, Objective::Maximize).enclose(pow10(-20));
    RInterval lo = lambda_extreme(w, 0, Objective::Minimize).enclose(pow10(-20));
    for (int k = 0; k < 200; ++k, ++samples) {
      oracle::Digits right, left;
      for (long p = 1; p <= 60; ++p) right.push_back(w.digit(p).value_or(digit(rng)));
      for (long p = -1; p >= -60; --p) left.push_back(w.digit(p).value_or(digit(rng)));
      long double v = oracle::lambda0(*w.digit(0), right, {}, left, {});
      dominated += v <= hi.hi().get_d() + 1e-15 && v >= lo.lo().get_d() - 1e-15;
    }
  }
  c.require(dominated == samples, "extremal-tail domination");

  int ratios = 0;
  for (int k = 0; k < 1000; ++k) {
    auto prefix = oracle::random_word(rng, 1, 4, 1 + static_cast<int>(rng() % 8));
    auto w = oracle::random_word(rng, 1, 4, 1 + static_cast<int>(rng() % 6));
    oracle::Digits joined = prefix;
    joined.insert(joined.end(), w.begin(), w.end());
    auto exact = [](const oracle::Digits& d) {
      oracle::Digits shorter(d.begin(), d.end() - 1);
      Int q(std::to_string(oracle::continuant(d))), qp(std::to_string(oracle::continuant(shorter)));
      return Rational(Int(1), Int(q * (q + qp)));
    };
    Word pw(prefix.begin(), prefix.end()), ww(w.begin(), w.end());
    ratios += ratio_function(ww)(prefix_ratio(pw)) == Rational(exact(joined) / exact(prefix));
  }
  c.require(ratios == 1000, "continuant/ratio consistency");

  const std::vector<Word> gens{parse_word("11"), parse_word("22")};
  const Real c_bound = Real(Surd::sqrt(Int(2))) + Real(Surd::sqrt(Int(3)));
  int splices = 0;
  for (const char* lit : {"(21)", "(2)"}) {
    for (int k = 4; k <= 16; ++k) {
      SpliceResult r = key_lemma_splice(parse_sequence(lit), gens, Alphabet{1, 2}, k, pow10(-30), std::nullopt, c_bound);
      bool ok = r.e2 && r.e3.value_or(false) && r.e4 && r.sandwich;
      c.require(ok, std::string("splice ") + lit + " k=" + std::to_string(k));
      splices += ok;
    }
  }

  Rational lo = parse_rational("3.7096992"), hi = parse_rational("3.7096999");
  std::vector<SurvivorSet> sets;
  for (long r = 3; r <= 9; ++r) sets.push_back(survivors(lo, hi, r, Alphabet{1, 2, 3}));
  for (std::size_t k = 1; k < sets.size(); ++k) {
    for (const auto& w : sets[k].windows) {
      bool inside = std::any_of(sets[k - 1].windows.begin(), sets[k - 1].windows.end(),
                                [&](const SymbolicWindow& v) { return w.refines(v) || w.transposed().refines(v); });
      c.require(inside, "survivor nesting " + w.to_literal());
    }
  }

  std::vector<double> grid;
  for (int k = 0; k <= 20; ++k) grid.push_back(k / 20.0);
  for (const auto& f : load_subshift_files(kData / "subshifts")) {
    PressureCurve curve = pressure_curve(f.spec, grid);
    for (std::size_t k = 1; k < curve.samples.size(); ++k) {
      c.require(curve.samples[k].value < curve.samples[k - 1].value, "pressure monotone " + f.spec.name);
    }
  }
  SubshiftSpec e2 = build_subshift(Alphabet{1, 2}, {});
  double prev = 1;
  for (int n : {2, 4, 6, 8, 12}) {
    double err = std::fabs(dimension_at(e2, n) - 0.5312805062772051);
    c.require(err < prev, "order convergence at " + std::to_string(n));
    prev = std::max(err, 1e-15);
  }

  c.detail << transposed << " transposes, " << samples << " completions, " << ratios << " ratios, " << splices
           << " splices, radii 3..9, " << grid.size() << "-point pressure grids";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::function<Check()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                     criterion5, criterion6, criterion7, criterion8};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check c;
    try {
      c = criteria[k]();
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << k + 1 << ": " << (c.passed() ? "PASS" : "FAIL") << "  " << c.detail.str();
    for (const auto& f : c.failures) std::cout << " [" << f << "]";
    std::cout << std::endl;
    failed += !c.passed();
  }
  return failed == 0 ? 0 : 1;
}
