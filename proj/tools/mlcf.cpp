// mlcf: command-line front end for the continued-fraction toolkit.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mlcf/cf.hpp"
#include "mlcf/error.hpp"
#include "mlcf/report.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace mlcf;

struct Globals {
  long precision = 128;
  std::string tol = "1e-20";
  int jobs = 1;
  std::string data_dir;
  std::string out;
  std::string format = "json";
};

RunConfig make_config(const Globals& g) {
  RunConfig c;
  c.precision = g.precision;
  c.tol = parse_rational(g.tol);
  c.jobs = g.jobs;
  if (!g.data_dir.empty()) c.data_dir = g.data_dir;
  if (!g.out.empty()) c.out = g.out;
  c.resolve();
  return c;
}

void emit(const Globals& g, const std::string& json, const std::string& text) {
  const std::string& body = g.format == "text" ? text : json;
  if (g.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw Error("cannot write " + g.out);
  f << body;
}

std::string digits_of(const Rational& tol) {
  int d = 0;
  Rational t = tol;
  while (t < 1 && d < 60) {
    t *= 10;
    ++d;
  }
  return std::to_string(d + 2);
}

int cmd_eval(const Globals& g, const std::string& literal) {
  Rational tol = parse_rational(g.tol);
  int digits = std::stoi(digits_of(tol));
  BiSeq a = parse_sequence(literal);
  Json j;
  j["sequence"] = literal;
  std::ostringstream text;
  text << literal << "\n";
  auto put = [&](const std::string& name, const RInterval& x) {
    j[name] = {{"lo", x.lo_string(digits)}, {"hi", x.hi_string(digits)}};
    text << "  " << name << "  " << x.to_string(digits) << "\n";
  };
  if (a.complete()) {
    Real exact = lambda_exact(a, 0);
    j["lambda_0_exact"] = exact.to_string();
    text << "  lambda_0 = " << exact << "\n";
    put("lambda_0", lambda_at(a, 0, tol));
    put("markov", markov_value(a, tol));
    put("lagrange", lagrange_value(a, tol));
  } else {
    throw DomainError("eval needs periodic tails on both sides, e.g. (21)2*(12)");
  }
  emit(g, j.dump(2) + "\n", text.str());
  return 0;
}

int cmd_prove(const Globals& g, const std::string& id, const std::string& pattern, const std::string& kind,
              const std::string& thresholds, const std::string& indices, const std::string& alphabet) {
  RunConfig cfg = make_config(g);
  std::vector<Claim> claims;
  if (!id.empty()) {
    claims = select_claims(Ledger::load(cfg.ledger_file), id);
    if (claims.empty()) throw DomainError("no claim " + id);
  } else {
    std::string line = "cli | " + pattern + " | " + kind + " | " + thresholds + " | " + indices + " | | " + alphabet;
    claims = Ledger::parse(line).claims;
  }
  LedgerOptions lo;
  lo.jobs = cfg.jobs;
  LedgerReport r = run_ledger(claims, lo);
  emit(g, r.to_json() + "\n", r.to_text());
  return r.passed() ? 0 : 1;
}

int cmd_ledger(const Globals& g, const std::string& prefix) {
  RunConfig cfg = make_config(g);
  Ledger ledger = Ledger::load(cfg.ledger_file);
  std::vector<Claim> claims = prefix.empty() ? ledger.claims : select_claims(ledger, prefix);
  LedgerOptions lo;
  lo.jobs = cfg.jobs;
  LedgerReport r = run_ledger(claims, lo);
  emit(g, r.to_json() + "\n", r.to_text());
  return r.passed() ? 0 : 1;
}

CrossCheck run_cross_check(const RunConfig& cfg, const std::vector<Elimination>& elims, const CrossCheckConstraints& cc) {
  Ledger ledger = Ledger::load(cfg.ledger_file);
  LedgerOptions lo;
  lo.jobs = cfg.jobs;
  LedgerReport lr = run_ledger(ledger.claims, lo);
  std::vector<Claim> proved;
  for (std::size_t i = 0; i < lr.entries.size(); ++i) {
    if (lr.entries[i].status() == Status::Proved) proved.push_back(ledger.claims[i]);
  }
  return cross_check(elims, cc, proved);
}

int cmd_force(const Globals& g, const std::string& lo, const std::string& hi, long radius, const std::string& alphabet,
              bool check) {
  RunConfig cfg = make_config(g);
  ForcingOptions fo;
  fo.jobs = cfg.jobs;
  fo.record_eliminations = check;
  Alphabet a = Alphabet::parse(alphabet);
  SurvivorSet s = survivors(parse_rational(lo), parse_rational(hi), radius, a, fo);
  std::optional<CrossCheck> cc;
  if (check) cc = run_cross_check(cfg, s.eliminations, CrossCheckConstraints{s.lo, true, s.hi, radius, a});
  std::ostringstream text;
  text << "survivors of " << lo << " < lambda_0, lambda_i < " << hi << " for |i| <= " << radius << ":\n";
  for (const auto& l : s.literals()) text << "  " << l << "\n";
  text << "core " << s.core.trimmed().to_literal() << "\n";
  if (cc) text << "cross-check: " << cc->matched << " matched, " << cc->auxiliary << " auxiliary, " << cc->unverified << " unverified\n";
  emit(g, to_json(s, cc ? &*cc : nullptr) + "\n", text.str());
  return cc && !cc->passed() ? 1 : 0;
}

int cmd_replicate(const Globals& g, const std::string& bound, const std::string& window, int iterations, bool check) {
  RunConfig cfg = make_config(g);
  ForcingOptions fo;
  fo.jobs = cfg.jobs;
  fo.record_eliminations = check;
  SymbolicWindow w = SymbolicWindow::parse(window);
  Rational b = parse_rational(bound);
  if (iterations > 1) {
    ReplicationChain chain = iterate_replication(w, b, iterations, Alphabet{1, 2, 3}, fo);
    int copies = count_left_copies(chain.window, parse_word("3322212"), 0);
    Json j;
    j["bound"] = bound;
    j["iterations"] = std::to_string(iterations);
    j["forced"] = chain.forced;
    j["window"] = chain.window.trimmed().to_literal();
    j["copies_3322212"] = std::to_string(copies);
    std::ostringstream text;
    text << (chain.forced ? "forced" : "not forced") << " after " << chain.steps.size() << " step(s)\n"
         << chain.window.trimmed().to_literal() << "\n" << copies << " copies of 3322212 on the left\n";
    emit(g, j.dump(2) + "\n", text.str());
    return chain.forced ? 0 : 1;
  }
  Replication r = replicate_left(w, b, Alphabet{1, 2, 3}, kReplicationRadius, fo);
  std::optional<CrossCheck> cc;
  if (check) cc = run_cross_check(cfg, r.eliminations, CrossCheckConstraints{0, false, b, r.radius, Alphabet{1, 2, 3}});
  std::ostringstream text;
  text << (r.forced ? "forced: " : "not forced: ") << r.core.trimmed().to_literal() << "\n";
  if (r.seed_offset) text << "seed recurs at offset " << *r.seed_offset << "\n";
  for (const auto& br : r.branches) text << "  branch " << br.to_literal() << "\n";
  emit(g, to_json(r, cc ? &*cc : nullptr) + "\n", text.str());
  return r.forced ? 0 : 1;
}

int cmd_cover(const Globals& g, const std::string& system, const std::string& s_text, bool joint, const std::string& tol) {
  RunConfig cfg = make_config(g);
  CoverOptions co;
  co.bits = cfg.precision;
  if (joint) co.mode = CoverMode::Joint;
  Json arr = Json::array();
  std::ostringstream text;
  bool ok = true;
  for (const auto& cs : load_cover_systems(cfg.cover_dir)) {
    if (!system.empty() && cs.id != system) continue;
    Rational s = s_text.empty() ? cs.s : parse_rational(s_text);
    Json j;
    j["id"] = cs.id;
    j["region"] = cs.label;
    j["mode"] = joint ? "joint" : "per-term";
    j["s"] = to_exact_decimal(s);
    Json sums = Json::object();
    text << cs.id << " " << cs.label << (cs.heuristic ? " HEURISTIC" : "") << "\n";
    for (const auto& c : case_sums(cs, s, co)) {
      sums[c.name] = {{"lo", c.value.lo_string(12)}, {"hi", c.value.hi_string(12)}};
      text << "  " << c.name << "(" << to_exact_decimal(s) << ") in " << c.value.to_string(12) << "\n";
    }
    j["case_sums"] = sums;
    RInterval m = case_sum(cs, s, co);
    bool below = m.certainly_below(cs.margin);
    if (s == cs.s) {
      j["margin"] = to_exact_decimal(cs.margin);
      j["below_margin"] = below;
      ok = ok && below;
      text << "  max < " << to_exact_decimal(cs.margin) << ": " << (below ? "yes" : "NO") << "\n";
    }
    Threshold th = solve_threshold(cs, parse_rational(tol), co);
    j["s_star"] = to_exact_decimal(th.s_star);
    text << "  s* = " << to_exact_decimal(th.s_star) << "\n";
    Json stated = Json::array();
    for (const auto& c : check_stated_bounds(cs)) {
      stated.push_back({{"word", to_string(c.bound.word)}, {"bound", c.bound.text}, {"holds", c.holds}});
      text << "  sup rho_" << to_string(c.bound.word) << " = " << c.sup << (c.bound.strict ? " < " : " <= ") << c.bound.text
           << (c.holds ? "" : "  FAILS") << "\n";
      ok = ok && c.holds;
    }
    j["stated"] = stated;
    arr.push_back(std::move(j));
  }
  if (arr.empty()) throw DomainError("no cover system " + system);
  emit(g, arr.dump(2) + "\n", text.str());
  return ok ? 0 : 1;
}

int cmd_dim(const Globals& g, const std::string& spec, int order, const std::string& record) {
  RunConfig cfg = make_config(g);
  Json arr = Json::array();
  std::ostringstream text;
  bool ok = true;
  for (const auto& f : load_subshift_files(cfg.subshift_dir)) {
    if (!spec.empty() && f.spec.name != spec) continue;
    DimensionEstimate e = dimension(f.spec, order);
    bool below = !f.cap || e.value <= Rational(*f.cap + Rational(5, 1000)).get_d();
    ok = ok && below;
    Json j;
    j["name"] = e.name;
    j["estimate"] = to_decimal(Rational(e.value), 16);
    j["uncertainty"] = to_decimal(Rational(e.uncertainty), 3, Rounding::Up);
    j["order"] = std::to_string(e.order);
    j["states"] = std::to_string(f.spec.states.size());
    if (f.cap) j["cap"] = f.cap_text;
    j["flag"] = "HEURISTIC";
    arr.push_back(std::move(j));
    text << dimension_record(e) << (f.cap ? "  cap " + f.cap_text : "") << "\n";
    if (!record.empty()) append_dimension_record(record, e);
  }
  if (arr.empty()) throw DomainError("no subshift spec " + spec);
  emit(g, arr.dump(2) + "\n", text.str());
  return ok ? 0 : 1;
}

int cmd_cantor(const Globals& g) {
  RunConfig cfg = make_config(g);
  Rational tol = cfg.tol;
  Json j;
  std::ostringstream text;
  auto put = [&](const std::string& name, const RInterval& x) {
    j[name] = {{"lo", x.lo_string(20)}, {"hi", x.hi_string(20)}};
    text << name << "  " << x.to_string(20) << "\n";
  };
  GapInterval J = interval_J();
  put("j0", J.lo.enclose(tol));
  put("j1", J.hi.enclose(tol));
  put("C", c_point({}, tol));
  Upsilon u = upsilon(Ledger::load(cfg.ledger_file), tol);
  put("upsilon", u.enclosure);
  j["upsilon_chain_proved"] = u.chain_proved();
  text << "upsilon forcing chain " << (u.chain_proved() ? "proved" : "NOT proved") << "\n";
  emit(g, j.dump(2) + "\n", text.str());
  return u.chain_proved() ? 0 : 1;
}

int cmd_constants(const Globals& g) {
  RunConfig cfg = make_config(g);
  ConstantTable t = load_constants(cfg.constants_file);
  Json arr = Json::array();
  std::ostringstream text;
  for (const auto& c : t.entries) {
    arr.push_back({{"name", c.name}, {"value", c.value.text}, {"kind", to_string(c.kind)}, {"locus", c.locus},
                   {"provenance", c.provenance}});
    text << c.name << "  " << c.value.text << "  " << to_string(c.kind) << "  " << c.provenance << "\n";
  }
  emit(g, arr.dump(2) + "\n", text.str());
  return 0;
}

int cmd_omega(const Globals& g, bool build) {
  RunConfig cfg = make_config(g);
  OmegaSpec o = omega_spec(Ledger::load(cfg.ledger_file), build);
  std::string body = omega_spec_file(o);
  if (build) {
    body += "# states " + std::to_string(o.subshift.states.size()) + ", depth " + std::to_string(o.subshift.depth) + "\n";
  }
  emit(g, body, body);
  return 0;
}

Tamper parse_tamper(const std::string& text, bool relative) {
  auto colon = text.rfind(':');
  if (colon == std::string::npos) throw DomainError("tamper expects id:delta, got " + text);
  return Tamper{text.substr(0, colon), parse_rational(text.substr(colon + 1)), relative};
}

int cmd_report(const Globals& g, const std::string& which, const std::string& region, long radius, int order,
               const std::vector<std::string>& tampers, const std::vector<std::string>& bound_tampers) {
  RunConfig cfg = make_config(g);
  cfg.survivor_radius = radius;
  cfg.dim_order = order;
  if (!region.empty()) cfg.region = region;
  for (const auto& t : tampers) cfg.tampers.push_back(parse_tamper(t, false));
  for (const auto& t : bound_tampers) cfg.tampers.push_back(parse_tamper(t, true));
  Report r;
  if (which == "theorem1") {
    r = report_theorem1(cfg);
  } else if (which == "theorem2") {
    r = report_theorem2(cfg);
  } else if (which == "appendixB") {
    r = report_appendixB(cfg);
  } else {
    throw DomainError("unknown report " + which);
  }
  auto problems = lint_report(r);
  for (const auto& p : problems) std::cerr << "lint: " << p << "\n";
  emit(g, r.to_json(), r.to_text());
  return r.verdict == Verdict3::Pass && problems.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continued-fraction toolkit for the Markov and Lagrange spectra"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--precision", g.precision, "Working precision in bits for MPFR powers")->capture_default_str();
  app.add_option("--tol", g.tol, "Enclosure width")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads")->capture_default_str();
  app.add_option("--data-dir", g.data_dir, "Directory with ledger, cover, subshift and constants files");
  app.add_option("--out", g.out, "Write output here instead of stdout");
  app.add_option("--format", g.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  std::string literal;
  auto* eval = app.add_subcommand("eval", "Evaluate lambda_0, Markov and Lagrange values of a sequence literal");
  eval->add_option("sequence", literal, "e.g. (3322212) or (21)2*(12)")->required();

  std::string claim_id, pattern, kind = "UPPER", thresholds, indices, alphabet;
  auto* prove = app.add_subcommand("prove", "Prove a ledger claim by id or an ad-hoc claim");
  prove->add_option("id", claim_id, "Ledger id or prefix");
  prove->add_option("--pattern", pattern);
  prove->add_option("--kind", kind)->check(CLI::IsMember({"UPPER", "LOWER", "DISJUNCTIVE"}));
  prove->add_option("--threshold", thresholds);
  prove->add_option("--indices", indices);
  prove->add_option("--alphabet", alphabet);

  std::string prefix;
  auto* ledger = app.add_subcommand("ledger", "Run the claim ledger");
  ledger->add_option("--prefix", prefix, "Only ids with this prefix");

  std::string lo = "3.7096992", hi = "3.7096999", falpha = "123";
  long radius = 9;
  bool check = false;
  auto* force = app.add_subcommand("force", "Surviving windows under lo < lambda_0 and lambda_i < hi");
  force->add_option("--lo", lo)->capture_default_str();
  force->add_option("--hi", hi)->capture_default_str();
  force->add_option("--radius", radius)->capture_default_str();
  force->add_option("--alphabet", falpha)->capture_default_str();
  force->add_flag("--cross-check", check, "Match every elimination against proved ledger claims");

  std::string bound = "3.70969985975033", window = kReplicationSeed;
  int iterations = 1;
  bool rcheck = false;
  auto* rep = app.add_subcommand("replicate", "Force the left continuation of the seed window");
  rep->add_option("--bound", bound)->capture_default_str();
  rep->add_option("--window", window)->capture_default_str();
  rep->add_option("--iterations", iterations)->capture_default_str();
  rep->add_flag("--cross-check", rcheck);

  std::string system, s_text, cover_tol = "1e-6";
  bool joint = false;
  auto* cover = app.add_subcommand("cover", "Case sums, thresholds and stated term bounds of the cover systems");
  cover->add_option("--system", system);
  cover->add_option("--s", s_text, "Exponent; defaults to the system's own");
  cover->add_flag("--joint", joint, "Maximize each case sum jointly over r");
  cover->add_option("--threshold-tol", cover_tol)->capture_default_str();

  std::string spec, record;
  int order = 8;
  auto* dim = app.add_subcommand("dim", "Heuristic Hausdorff dimension of Gauss-Cantor sets");
  dim->add_option("--spec", spec, "Subshift name, e.g. X3.13.31");
  dim->add_option("--order", order)->capture_default_str();
  dim->add_option("--record", record, "Append the results to this constants file");

  auto* cantor = app.add_subcommand("cantor", "Enclosures of j0, j1, the Cantor set C and Upsilon");
  auto* constants = app.add_subcommand("constants", "List the cited constants");

  bool build = false;
  auto* omega = app.add_subcommand("omega-spec", "Forbidden-word spec of Omega generated from the ledger");
  omega->add_flag("--build", build, "Also build the subshift (large)");

  std::string which, region;
  long rradius = 9;
  int rorder = 8;
  std::vector<std::string> tampers, bound_tampers;
  auto* report = app.add_subcommand("report", "Assemble a headline report");
  report->add_option("which", which)->required()->check(CLI::IsMember({"theorem1", "theorem2", "appendixB"}));
  report->add_option("--region", region, "Restrict to one region id");
  report->add_option("--radius", rradius, "Survivor radius")->capture_default_str();
  report->add_option("--order", rorder, "Collocation order")->capture_default_str();
  report->add_option("--tamper", tampers, "id:delta, shift a ledger threshold");
  report->add_option("--tamper-bound", bound_tampers, "id:delta, move a threshold to the achieved bound plus delta");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*eval) return cmd_eval(g, literal);
    if (*prove) return cmd_prove(g, claim_id, pattern, kind, thresholds, indices, alphabet);
    if (*ledger) return cmd_ledger(g, prefix);
    if (*force) return cmd_force(g, lo, hi, radius, falpha, check);
    if (*rep) return cmd_replicate(g, bound, window, iterations, rcheck);
    if (*cover) return cmd_cover(g, system, s_text, joint, cover_tol);
    if (*dim) return cmd_dim(g, spec, order, record);
    if (*cantor) return cmd_cantor(g);
    if (*constants) return cmd_constants(g);
    if (*omega) return cmd_omega(g, build);
    if (*report) return cmd_report(g, which, region, rradius, rorder, tampers, bound_tampers);
  } catch (const mlcf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
