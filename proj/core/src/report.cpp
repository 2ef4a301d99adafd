#include "mlcf/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "mlcf/error.hpp"
#include "text.hpp"

namespace mlcf {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kDigits = 16;
constexpr const char* kC7Window = "2332221233*222123322";
constexpr const char* kReplicationExtension = "23322212332221233*222123322212";
constexpr const char* kReplicationBound = "3.70969985975033";
constexpr const char* kReplicationBlock = "3322212";
constexpr const char* kJ0Period = "3322212";  // (33*22212): a_p = block[(p + 1) mod 7]

struct Target {
  std::string value;
  std::string locus;
};

std::map<std::string, Target> load_targets(const std::filesystem::path& path) {
  std::map<std::string, Target> out;
  for (const auto& [n, line] : detail::content_lines(detail::read_file(path))) {
    auto f = detail::split(line, '|');
    if (f.size() != 3) throw ParseError("targets line " + std::to_string(n) + ": expected 3 fields", n);
    out[f[0]] = Target{f[1], f[2]};
  }
  return out;
}

const Target& target(const std::map<std::string, Target>& t, const std::string& id) {
  auto it = t.find(id);
  if (it == t.end()) throw DomainError("no target for " + id);
  return it->second;
}

std::string exact(const Rational& q) { return to_exact_decimal(q); }

ReportItem exact_item(const std::string& id, ItemStatus status, const Rational& q, const std::string& locus) {
  ReportItem it;
  it.id = id;
  it.status = status;
  it.value = it.lo = it.hi = exact(q);
  it.locus = locus;
  return it;
}

ReportItem note_item(const std::string& id, ItemStatus status, const std::string& locus, const std::string& detail) {
  ReportItem it;
  it.id = id;
  it.status = status;
  it.locus = locus;
  it.detail = detail;
  return it;
}

ItemStatus pass_if(bool ok) { return ok ? ItemStatus::Pass : ItemStatus::Fail; }

bool is_pass(ItemStatus s) { return s == ItemStatus::Pass || s == ItemStatus::Cited || s == ItemStatus::Heuristic; }

Rational real_hi(const Real& x, const Rational& tol) { return x.enclose(tol).hi(); }


ForcingOptions forcing_options(const RunConfig& cfg) {
  ForcingOptions o;
  o.jobs = cfg.jobs;
  return o;
}

LedgerOptions ledger_options(const RunConfig& cfg) {
  LedgerOptions o;
  o.jobs = cfg.jobs;
  return o;
}

ReportSection ledger_section(const RunConfig& cfg, Ledger& ledger) {
  ReportSection sec{"ledger", {}};
  LedgerOptions lo = ledger_options(cfg);
  apply_tampers(ledger, cfg.tampers, lo);
  LedgerReport lr = run_ledger(ledger.claims, lo);
  for (const auto& e : lr.entries) {
    ReportItem it;
    it.id = e.id;
    Status s = e.status();
    it.status = s == Status::Inconclusive ? ItemStatus::Incomplete : pass_if(e.passed());
    it.lo = e.verdict.bound.lo_string(20);
    it.hi = e.verdict.bound.hi_string(20);
    it.value = e.kind == ClaimKind::Upper ? e.verdict.bound.hi_string(kDigits) : e.verdict.bound.lo_string(kDigits);
    it.locus = e.id;
    it.detail = to_string(e.kind) + " " + to_string(s);
    if (!e.printed.empty()) it.detail += ", printed " + e.printed + (e.printed_ok ? " reproduced" : " not reproduced");
    sec.items.push_back(std::move(it));
  }
  return sec;
}

bool consistent_with_period(const SymbolicWindow& w, const Word& block) {
  long n = static_cast<long>(block.size());
  for (long p = w.first; p <= w.last(); ++p) {
    if (!w.known(p)) continue;
    long k = ((p + 1) % n + n) % n;
    if (w.at(p) != block[static_cast<std::size_t>(k)]) return false;
  }
  return true;
}

ReportSection forcing_section(const RunConfig& cfg) {
  ReportSection sec{"forcing", {}};
  ForcingOptions fo = forcing_options(cfg);
  {
    SurvivorSet s = survivors(parse_rational("3.7096992"), parse_rational("3.7096999"), cfg.survivor_radius,
                              Alphabet{1, 2, 3}, fo);
    SymbolicWindow expected = canonicalize(SymbolicWindow::parse(kC7Window));
    ReportItem it = note_item("c.7", ItemStatus::Fail, "c.7", {});
    bool exact_match = s.windows.size() == 1 && s.windows[0].trimmed() == expected.trimmed();
    bool superset = std::any_of(s.windows.begin(), s.windows.end(), [&](const SymbolicWindow& w) {
      return expected.refines(w) || expected.transposed().refines(w);
    });
    if (exact_match) {
      it.status = ItemStatus::Pass;
    } else if (superset && cfg.survivor_radius < 9) {
      it.status = ItemStatus::Incomplete;
    }
    std::ostringstream d;
    d << "radius " << s.radius << ", " << s.windows.size() << " window(s):";
    for (const auto& l : s.literals()) d << " " << l;
    if (it.status == ItemStatus::Incomplete) d << "; superset of " << kC7Window;
    it.detail = d.str();
    sec.items.push_back(std::move(it));
  }
  Rational bound = parse_rational(kReplicationBound);
  SymbolicWindow seed = SymbolicWindow::parse(kReplicationSeed);
  {
    Replication r = replicate_left(seed, bound, Alphabet{1, 2, 3}, kReplicationRadius, fo);
    bool ok = r.forced && r.seed_offset == kReplicationShift && r.core.refines(SymbolicWindow::parse(kReplicationExtension));
    ReportItem it = note_item("c.replication", pass_if(ok), "c.replication", {});
    it.detail = "forced " + std::string(r.forced ? "yes" : "no") + ", core " + r.core.trimmed().to_literal() +
                (r.seed_offset ? ", seed at offset " + std::to_string(*r.seed_offset) : std::string(", seed not found"));
    sec.items.push_back(std::move(it));
  }
  {
    ReplicationChain chain = iterate_replication(seed, bound, cfg.replication_iterations, Alphabet{1, 2, 3}, fo);
    int copies = count_left_copies(chain.window, parse_word(kReplicationBlock), 0);
    bool ok = chain.forced && copies >= cfg.replication_iterations;
    ReportItem it = note_item("c.replication.iterate", pass_if(ok), "c.replication", {});
    it.detail = std::to_string(chain.steps.size()) + " steps, " + std::to_string(copies) + " copies of " + kReplicationBlock +
                " on the left";
    sec.items.push_back(std::move(it));

    GapInterval J = interval_J();
    bool periodic = consistent_with_period(chain.window, parse_word(kJ0Period));
    bool below = real_hi(J.lo, cfg.tol) < bound;
    ReportItem fp = enclosure_item("replication.fixed-point", pass_if(periodic && below), J.lo.enclose(cfg.tol), 20, "l.replication");
    fp.detail = std::string("forced digits ") + (periodic ? "agree" : "disagree") + " with (33*22212); m = j0 " +
                (below ? "<" : "not certified <") + " " + kReplicationBound;
    sec.items.push_back(std::move(fp));
  }
  return sec;
}

ReportSection cantor_section(const RunConfig& cfg, const Ledger& ledger) {
  ReportSection sec{"cantor-set", {}};
  GapInterval J = interval_J();
  RInterval j0 = J.lo.enclose(cfg.tol), j1 = J.hi.enclose(cfg.tol);
  sec.items.push_back(enclosure_item("j0", pass_if(matches_printed(j0, "3.70969985967967")), j0, 20, "j0"));
  sec.items.push_back(enclosure_item("j1", pass_if(matches_printed(j1, "3.70969985975042")), j1, 20, "j1"));

  RInterval c = c_point({}, cfg.tol);
  bool in_p2 = c.lo() > parse_rational("3.70969985975024") && c.hi() < parse_rational("3.70969985975028");
  ReportItem p2 = enclosure_item("p.2", pass_if(in_p2), c, 20, "p.2");
  p2.detail = "C inside (3.70969985975024, 3.70969985975028)";
  sec.items.push_back(std::move(p2));

  bool in_J = c.lo() > j0.hi() && c.hi() < j1.lo();
  ReportItem cj = enclosure_item("C-in-J", pass_if(in_J), c, 20, "J");
  cj.detail = "j0 < C < j1, strict";
  sec.items.push_back(std::move(cj));

  bool gap = j0.hi() < parse_rational("3.70969985968") && j1.lo() > parse_rational(kReplicationBound);
  ReportItem p1 = note_item("p.1", pass_if(gap), "p.1", "(3.70969985968, 3.70969985975033) inside J = (j0, j1)");
  sec.items.push_back(std::move(p1));

  Upsilon u = upsilon(ledger, cfg.tol, ledger_options(cfg));
  bool u_ok = u.chain_proved() && matches_printed(u.enclosure, "3.7096998597503806") && u.enclosure.lo() > c.hi() &&
              u.enclosure.hi() < j1.lo();
  ReportItem ui = enclosure_item("upsilon", pass_if(u_ok), u.enclosure, 20, "upsilon");
  ui.detail = std::to_string(u.chain.entries.size()) + " forcing claims " + (u.chain.passed() ? "proved" : "not proved");
  sec.items.push_back(std::move(ui));
  return sec;
}

ReportItem double_item(const std::string& id, ItemStatus status, double value, double radius, const std::string& locus) {
  ReportItem it;
  it.id = id;
  it.status = status;
  it.value = to_decimal(Rational(value), kDigits);
  it.lo = to_decimal(Rational(value - radius), kDigits, Rounding::Down);
  it.hi = to_decimal(Rational(value + radius), kDigits, Rounding::Up);
  it.locus = locus;
  it.flags.push_back("HEURISTIC");
  return it;
}

ReportItem constant_item(const CitedConstant& c, const Rational& tol) {
  ReportItem it;
  it.id = c.name;
  it.status = c.kind == ConstantKind::Cited ? ItemStatus::Cited : ItemStatus::Heuristic;
  RInterval x = c.value.value.enclose(tol);
  bool rational = x.lo() == x.hi();
  it.value = rational ? exact(x.lo()) : x.lo_string(kDigits);
  it.lo = rational ? it.value : x.lo_string(kDigits);
  it.hi = rational ? it.value : x.hi_string(kDigits);
  it.locus = c.locus;
  it.flags.push_back(c.kind == ConstantKind::Cited ? "CITED" : "HEURISTIC");
  it.detail = c.provenance;
  return it;
}

ReportSection dimension_section_theorem1(const RunConfig& cfg, const ConstantTable& constants,
                                         const std::map<std::string, Target>& targets) {
  ReportSection sec{"dimension", {}};
  const CitedConstant& jp = constants.find("jp.E2");
  sec.items.push_back(constant_item(jp, cfg.tol));
  Rational jp_value = constants.rational("jp.E2");
  DimensionEstimate e = dimension(build_subshift(Alphabet{1, 2}, {}, "E2"), cfg.dim_order);
  bool agrees = std::abs(e.value - jp_value.get_d()) < 1e-10;
  ReportItem est = double_item("dim.E2", agrees ? ItemStatus::Heuristic : ItemStatus::Fail, e.value,
                               std::max(e.uncertainty, 1e-15), "t.A");
  est.detail = "order " + std::to_string(e.order) + "/" + std::to_string(2 * e.order) + ", compared with jp.E2 to 1e-10";
  sec.items.push_back(std::move(est));
  const Target& t = target(targets, "theorem1.dimension");
  Rational claimed = parse_rational(t.value);
  ReportItem th = exact_item("theorem1.dimension", pass_if(jp_value >= claimed), claimed, t.locus);
  th.detail = "HD(M \\ L) >= HD(K({1,2})) = jp.E2 >= " + t.value;
  sec.items.push_back(std::move(th));
  return sec;
}

struct RegionResult {
  std::string id;
  Rational value;
  bool ok = false;
};

RegionResult region_items(const RunConfig& cfg, const CoverSystem& cs, const ConstantTable& constants,
                          const std::vector<SymmetricBlockSpec>& blocks, const std::map<std::string, Target>& targets,
                          ReportSection& sec) {
  CoverOptions co;
  co.bits = cfg.precision;
  std::vector<std::string> heuristic_flag;
  if (cs.heuristic) heuristic_flag.push_back("HEURISTIC");
  const Target& t = target(targets, cs.id);

  if (!cs.block.empty()) {
    auto b = std::find_if(blocks.begin(), blocks.end(), [&](const SymmetricBlockSpec& s) { return s.id == cs.block; });
    if (b == blocks.end()) throw DomainError(cs.id + ": unknown block " + cs.block);
    BlockCheck bc = check_block(*b, cfg.tol);
    ReportItem it;
    it.id = cs.id + ".block";
    it.locus = b->id;
    if (bc.stated_only) {
      it.status = ItemStatus::Cited;
      it.flags.push_back("STATED");
      it.detail = "c(B,C) < " + b->bounds.back().text + " recorded as stated";
    } else {
      it.status = pass_if(bc.verified);
      if (bc.value) {
        it.value = bc.value->hi_string(kDigits);
        it.lo = bc.value->lo_string(kDigits);
        it.hi = bc.value->hi_string(kDigits);
      }
      it.detail = bc.message;
    }
    sec.items.push_back(std::move(it));
  }

  auto sums = case_sums(cs, cs.s, co);
  RInterval worst = sums.front().value;
  for (const auto& cv : sums) worst = max(worst, cv.value);
  ReportItem sum = enclosure_item(cs.id + ".case-sum", pass_if(worst.certainly_below(cs.margin)), worst, 12, t.locus);
  std::ostringstream d;
  d << "s = " << exact(cs.s) << ", max over";
  for (const auto& cv : sums) d << " " << cv.name << "=" << cv.value.hi_string(10);
  d << " < " << exact(cs.margin);
  sum.detail = d.str();
  sum.flags = heuristic_flag;
  bool ok = is_pass(sum.status);
  sec.items.push_back(std::move(sum));

  auto stated = check_stated_bounds(cs);
  bool all_stated = std::all_of(stated.begin(), stated.end(), [](const StatedCheck& c) { return c.holds; });
  std::ostringstream sd;
  for (const auto& c : stated) {
    sd << (sd.tellp() > 0 ? "; " : "") << to_string(c.bound.word) << (c.bound.strict ? " < " : " <= ") << c.bound.text
       << (c.holds ? "" : " FAILS");
  }
  ReportItem st = note_item(cs.id + ".stated", pass_if(all_stated), t.locus, sd.str());
  sec.items.push_back(std::move(st));
  ok = ok && all_stated;

  Threshold th = solve_threshold(cs, pow10(-6), co);
  ReportItem thi = exact_item(cs.id + ".threshold", pass_if(th.s_star <= cs.s), th.s_star, t.locus);
  thi.detail = "case sums certified < 1 at s* and >= 1 at s* - 10^-6: " + th.below.lo_string(10);
  thi.flags = heuristic_flag;
  sec.items.push_back(std::move(thi));
  ok = ok && th.s_star <= cs.s;

  Rational base = constants.rational(cs.base);
  Rational assembled = assemble_region_bound(RInterval(base), cs.s).hi();
  Rational shown = cs.round_places ? round_up(assembled, *cs.round_places) : assembled;
  bool matches = exact(shown) == t.value;
  ReportItem r = exact_item(cs.id, pass_if(ok && matches), shown, t.locus);
  if (cs.heuristic && r.status == ItemStatus::Pass) r.status = ItemStatus::Heuristic;
  r.flags = heuristic_flag;
  r.detail = cs.base + " " + exact(base) + " + s " + exact(cs.s) + " = " + exact(assembled);
  if (cs.round_places) r.detail += ", rounded up to " + std::to_string(*cs.round_places) + " places";
  r.detail += "; region " + cs.label;
  for (const auto& n : cs.notes) r.detail += "; " + n;
  sec.items.push_back(std::move(r));
  return RegionResult{cs.id, shown, ok && matches};
}

std::vector<CoverSystem> regions_of_kind(const RunConfig& cfg, bool heuristic) {
  std::vector<CoverSystem> out;
  for (auto& cs : load_cover_systems(cfg.cover_dir)) {
    if (cs.heuristic != heuristic) continue;
    if (cfg.region && cs.id != *cfg.region) continue;
    out.push_back(std::move(cs));
  }
  std::sort(out.begin(), out.end(), [&](const CoverSystem& a, const CoverSystem& b) {
    return a.region_lo.value.enclose(cfg.tol).lo() < b.region_lo.value.enclose(cfg.tol).lo();
  });
  return out;
}

ReportItem global_item(const std::string& id, const Rational& value, const Target& t, bool heuristic, const std::string& detail) {
  bool matches = exact(value) == t.value;
  ReportItem g = exact_item(id, pass_if(matches), value, t.locus);
  if (heuristic) {
    g.flags.push_back("HEURISTIC");
    if (matches) g.status = ItemStatus::Heuristic;
  }
  g.detail = detail;
  return g;
}

}  // namespace

constexpr int kTamperRounds = 16;

void apply_tampers(Ledger& ledger, const std::vector<Tamper>& tampers, const LedgerOptions& options) {
  for (const Tamper& t : tampers) {
    Claim& c = ledger.find(t.claim_id);
    if (!t.relative_to_bound) {
      for (auto& th : c.thresholds) th += t.delta;
    } else if (c.kind != ClaimKind::Disjunctive) {
      Verdict v = prove_adaptive(c, options);
      Rational extremum = c.kind == ClaimKind::Upper ? v.bound.hi() : v.bound.lo();
      c.thresholds.assign(1, extremum + t.delta);
    } else {
      // Every threshold moves together, so the weakest leaf is left short by
      // delta. Splitting that leaf further can clear it again; repeat against
      // the new weakest leaf until the claim no longer holds.
      for (int round = 0; round < kTamperRounds; ++round) {
        Verdict v = prove_adaptive(c, options);
        if (v.status != Status::Proved) break;
        if (!v.clearing_index) throw DomainError(c.id + ": no clearing index to tamper against");
        auto k = static_cast<std::size_t>(std::find(c.indices.begin(), c.indices.end(), *v.clearing_index) - c.indices.begin());
        Rational shift = v.bound.lo() - c.threshold(c.thresholds.size() == 1 ? 0 : k) + t.delta;
        for (auto& th : c.thresholds) th += shift;
      }
    }
    for (auto& text : c.threshold_text) text += " (tampered)";
  }
}


std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("MLCF_DATA_DIR"); env && *env) return env;
#ifdef MLCF_DEFAULT_DATA_DIR
  return MLCF_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

std::string to_string(ItemStatus s) {
  switch (s) {
    case ItemStatus::Pass: return "PASS";
    case ItemStatus::Fail: return "FAIL";
    case ItemStatus::Incomplete: return "INCOMPLETE";
    case ItemStatus::Cited: return "CITED";
    case ItemStatus::Heuristic: return "HEURISTIC";
  }
  return "?";
}

std::string to_string(Verdict3 v) {
  switch (v) {
    case Verdict3::Pass: return "PASS";
    case Verdict3::Fail: return "FAIL";
    case Verdict3::Incomplete: return "INCOMPLETE";
  }
  return "?";
}

void RunConfig::resolve() {
  if (ledger_file.empty()) ledger_file = data_dir / "ledger.txt";
  if (blocks_file.empty()) blocks_file = data_dir / "blocks.txt";
  if (constants_file.empty()) constants_file = data_dir / "cited_constants.txt";
  if (cover_dir.empty()) cover_dir = data_dir / "cover";
  if (subshift_dir.empty()) subshift_dir = data_dir / "subshifts";
}

void RunConfig::validate() const {
  if (tol <= 0) throw DomainError("tolerance must be positive");
  if (precision < 32) throw DomainError("precision must be at least 32 bits");
  if (jobs < 1) throw DomainError("jobs must be at least 1");
  for (const auto& p : {ledger_file, blocks_file, constants_file, cover_dir, subshift_dir, data_dir / "targets.txt"}) {
    if (!std::filesystem::exists(p)) throw DomainError("missing data file " + p.string());
  }
}

void Report::finalize() {
  culprits.clear();
  bool fail = false, incomplete = false;
  for (const auto& s : sections) {
    for (const auto& it : s.items) {
      if (it.status == ItemStatus::Fail) {
        fail = true;
        culprits.push_back(it.id);
      } else if (it.status == ItemStatus::Incomplete) {
        incomplete = true;
        culprits.push_back(it.id);
      }
    }
  }
  verdict = fail ? Verdict3::Fail : incomplete ? Verdict3::Incomplete : Verdict3::Pass;
}

const ReportItem* Report::find(const std::string& id) const {
  for (const auto& s : sections) {
    for (const auto& it : s.items) {
      if (it.id == id) return &it;
    }
  }
  return nullptr;
}

std::string Report::to_json() const {
  Json j;
  j["report"] = name;
  j["verdict"] = to_string(verdict);
  j["culprits"] = culprits;
  Json secs = Json::array();
  for (const auto& s : sections) {
    Json js;
    js["name"] = s.name;
    Json items = Json::array();
    for (const auto& it : s.items) {
      Json ji;
      ji["id"] = it.id;
      ji["status"] = to_string(it.status);
      if (!it.value.empty()) {
        ji["value"] = it.value;
        ji["lo"] = it.lo;
        ji["hi"] = it.hi;
      }
      ji["locus"] = it.locus;
      if (!it.flags.empty()) ji["flags"] = it.flags;
      if (!it.detail.empty()) ji["detail"] = it.detail;
      items.push_back(std::move(ji));
    }
    js["items"] = std::move(items);
    secs.push_back(std::move(js));
  }
  j["sections"] = std::move(secs);
  return j.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << name << ": " << to_string(verdict);
  if (!culprits.empty()) {
    os << " (";
    for (std::size_t i = 0; i < culprits.size(); ++i) os << (i ? ", " : "") << culprits[i];
    os << ")";
  }
  os << "\n";
  for (const auto& s : sections) {
    os << "\n== " << s.name << " ==\n";
    for (const auto& it : s.items) {
      std::string st = to_string(it.status);
      os << "  " << st << std::string(st.size() < 11 ? 11 - st.size() : 1, ' ') << it.id;
      if (!it.value.empty()) {
        os << "  " << it.value;
        if (it.lo != it.value || it.hi != it.value) os << "  [" << it.lo << ", " << it.hi << "]";
      }
      os << "  (" << it.locus << ")";
      for (const auto& f : it.flags) os << " " << f;
      os << "\n";
      if (!it.detail.empty()) os << "             " << it.detail << "\n";
    }
  }
  return os.str();
}

ReportItem enclosure_item(const std::string& id, ItemStatus status, const RInterval& x, int digits, const std::string& locus) {
  ReportItem it;
  it.id = id;
  it.status = status;
  it.value = to_decimal(x.mid(), digits);
  it.lo = x.lo_string(digits);
  it.hi = x.hi_string(digits);
  it.locus = locus;
  return it;
}

std::vector<std::string> lint_report(const Report& r) {
  std::vector<std::string> problems;
  for (const auto& s : r.sections) {
    for (const auto& it : s.items) {
      if (it.locus.empty()) problems.push_back(it.id + ": no locus");
      if (it.value.empty()) continue;
      if (it.lo.empty() || it.hi.empty()) problems.push_back(it.id + ": value without enclosure");
      for (const auto* v : {&it.value, &it.lo, &it.hi}) {
        try {
          parse_rational(*v);
        } catch (const Error&) {
          problems.push_back(it.id + ": not a decimal string: " + *v);
        }
      }
    }
  }
  auto more = lint_json(r.to_json());
  problems.insert(problems.end(), more.begin(), more.end());
  return problems;
}

std::vector<std::string> lint_json(const std::string& json) {
  std::vector<std::string> problems;
  std::function<void(const Json&, const std::string&)> walk = [&](const Json& j, const std::string& path) {
    if (j.is_number()) {
      problems.push_back(path + ": bare number " + j.dump());
    } else if (j.is_object()) {
      for (auto it = j.begin(); it != j.end(); ++it) walk(it.value(), path + "/" + it.key());
    } else if (j.is_array()) {
      for (std::size_t i = 0; i < j.size(); ++i) walk(j[i], path + "/" + std::to_string(i));
    }
  };
  walk(Json::parse(json), "");
  return problems;
}

Report report_theorem1(const RunConfig& config) {
  RunConfig cfg = config;
  cfg.resolve();
  cfg.validate();
  auto targets = load_targets(cfg.data_dir / "targets.txt");
  ConstantTable constants = load_constants(cfg.constants_file);
  Ledger ledger = Ledger::load(cfg.ledger_file);
  Report r;
  r.name = "theorem1";
  r.sections.push_back(ledger_section(cfg, ledger));
  r.sections.push_back(forcing_section(cfg));
  r.sections.push_back(cantor_section(cfg, ledger));
  r.sections.push_back(dimension_section_theorem1(cfg, constants, targets));
  r.finalize();
  return r;
}

Report report_theorem2(const RunConfig& config) {
  RunConfig cfg = config;
  cfg.resolve();
  cfg.validate();
  auto targets = load_targets(cfg.data_dir / "targets.txt");
  ConstantTable constants = load_constants(cfg.constants_file);
  auto blocks = load_blocks(cfg.blocks_file);
  Report r;
  r.name = "theorem2";
  auto systems = regions_of_kind(cfg, false);
  if (systems.empty()) throw DomainError("no rigorous region matches " + cfg.region.value_or("(all)"));

  ReportSection cited{"cited", {}};
  std::vector<std::string> bases;
  for (const auto& cs : systems) {
    if (std::find(bases.begin(), bases.end(), cs.base) == bases.end()) bases.push_back(cs.base);
  }
  for (const auto& b : bases) cited.items.push_back(constant_item(constants.find(b), cfg.tol));

  ReportSection regions{"regions", {}};
  Rational global = 0;
  for (const auto& cs : systems) {
    RegionResult rr = region_items(cfg, cs, constants, blocks, targets, regions);
    global = std::max(global, rr.value);
  }
  r.sections.push_back(std::move(cited));
  r.sections.push_back(std::move(regions));

  if (!cfg.region) {
    ReportSection g{"global", {}};
    const CitedConstant& hall = constants.find("hall.below-sqrt10");
    const CitedConstant& fs = constants.find("freiman-schecker.half-line");
    g.items.push_back(constant_item(hall, cfg.tol));
    g.items.push_back(constant_item(fs, cfg.tol));
    Rational value = std::max(global, constants.rational(hall.name));
    g.items.push_back(global_item("theorem2.global", value, target(targets, "theorem2.global"), false,
                                  "max of hall.below-sqrt10 and the region bounds; nothing above sqrt(21)"));
    r.sections.push_back(std::move(g));
  }
  r.finalize();
  return r;
}

Report report_appendixB(const RunConfig& config) {
  RunConfig cfg = config;
  cfg.resolve();
  cfg.validate();
  auto targets = load_targets(cfg.data_dir / "targets.txt");
  ConstantTable constants = load_constants(cfg.constants_file);
  auto blocks = load_blocks(cfg.blocks_file);
  Report r;
  r.name = "appendixB";

  ReportSection dims{"dimensions", {}};
  for (const auto& f : load_subshift_files(cfg.subshift_dir)) {
    if (!f.cap) continue;
    std::string cname = "jp." + f.spec.name;
    const CitedConstant& cap = constants.find(cname);
    dims.items.push_back(constant_item(cap, cfg.tol));
    DimensionEstimate e = dimension(f.spec, cfg.dim_order);
    bool below = e.value <= Rational(*f.cap + Rational(5, 1000)).get_d() && constants.rational(cname) == *f.cap;
    ReportItem it = double_item("dim." + f.spec.name, below ? ItemStatus::Heuristic : ItemStatus::Fail, e.value,
                                std::max(e.uncertainty, 1e-15), cap.locus);
    it.detail = "estimate at order " + std::to_string(e.order) + "/" + std::to_string(2 * e.order) + " against cap " +
                f.cap_text + " (+0.005)";
    dims.items.push_back(std::move(it));
  }
  r.sections.push_back(std::move(dims));

  auto systems = regions_of_kind(cfg, true);
  if (systems.empty()) throw DomainError("no heuristic region matches " + cfg.region.value_or("(all)"));
  ReportSection regions{"regions", {}};
  std::map<std::string, Rational> values;
  for (const auto& cs : systems) {
    RegionResult rr = region_items(cfg, cs, constants, blocks, targets, regions);
    values[rr.id] = rr.value;
  }
  r.sections.push_back(std::move(regions));

  if (!cfg.region) {
    ReportSection g{"global", {}};
    const CitedConstant& jackson = constants.find("jackson.3.06");
    const CitedConstant& x2 = constants.find("jp.X2.121.212");
    g.items.push_back(constant_item(jackson, cfg.tol));
    Rational below306 = 2 * constants.rational(x2.name);
    g.items.push_back(global_item("h-below-3.06", below306, target(targets, "h-below-3.06"), true,
                                  "2 * " + x2.name + ": both halves avoid 121 and 212 below 3.06"));
    Rational below13 = std::max(below306, values.at("h-3.06-sqrt13"));
    g.items.push_back(global_item("h-below-sqrt13", below13, target(targets, "h-below-sqrt13"), true,
                                  "max of h-below-3.06 and h-3.06-sqrt13"));
    Rational global = below13;
    for (const auto& [id, v] : values) {
      if (id != "h-3.06-sqrt13") global = std::max(global, v);
    }
    g.items.push_back(constant_item(constants.find("freiman-schecker.half-line"), cfg.tol));
    g.items.push_back(global_item("appendixB.global", global, target(targets, "appendixB.global"), true,
                                  "max over the regions below sqrt(21); nothing above sqrt(21)"));
    r.sections.push_back(std::move(g));
  }
  r.finalize();
  return r;
}

}  // namespace mlcf
