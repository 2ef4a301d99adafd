#include <doctest.h>

#include <algorithm>
#include <json.hpp>

#include "mlcf/error.hpp"
#include "mlcf/report.hpp"

using namespace mlcf;

namespace {

RunConfig config() {
  RunConfig c;
  c.data_dir = MLCF_TEST_DATA_DIR;
  c.resolve();
  return c;
}

std::string value_of(const Report& r, const std::string& id) {
  const ReportItem* it = r.find(id);
  REQUIRE_MESSAGE(it != nullptr, id);
  return it->value;
}

bool culprit(const Report& r, const std::string& id) {
  return std::find(r.culprits.begin(), r.culprits.end(), id) != r.culprits.end();
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("theorem2 assembles the region bounds") {
    Report r = report_theorem2(config());
    CHECK(r.verdict == Verdict3::Pass);
    CHECK(value_of(r, "sqrt10-sqrt13") == "0.706104");
    CHECK(value_of(r, "sqrt13-3.84") == "0.986927");
    CHECK(value_of(r, "3.84-sqrt20") == "0.986927");
    CHECK(value_of(r, "sqrt20-sqrt21") == "0.961772");
    CHECK(value_of(r, "theorem2.global") == "0.986927");
    CHECK(r.find("hall.below-sqrt10")->status == ItemStatus::Cited);
    CHECK(r.find("freiman-schecker.half-line")->status == ItemStatus::Cited);
  }

  TEST_CASE("theorem2 restricted to one region") {
    RunConfig c = config();
    c.region = "sqrt20-sqrt21";
    Report r = report_theorem2(c);
    CHECK(r.verdict == Verdict3::Pass);
    CHECK(value_of(r, "sqrt20-sqrt21") == "0.961772");
    CHECK(r.find("sqrt10-sqrt13") == nullptr);
    c.region = "sqrt10-sqrt13";
    CHECK(value_of(report_theorem2(c), "sqrt10-sqrt13") == "0.706104");
  }

  TEST_CASE("unknown region is an error") {
    RunConfig c = config();
    c.region = "nowhere";
    CHECK_THROWS_AS(report_theorem2(c), DomainError);
  }

  TEST_CASE("appendixB heuristic bounds") {
    Report r = report_appendixB(config());
    CHECK(r.verdict == Verdict3::Pass);
    CHECK(value_of(r, "h-below-sqrt13") == "0.73");
    CHECK(value_of(r, "h-sqrt13-3.84") == "0.856");
    CHECK(value_of(r, "h-3.84-3.92") == "0.872");
    CHECK(value_of(r, "h-3.92-4.01") == "0.828");
    CHECK(value_of(r, "h-4.01-sqrt20") == "0.873316");
    CHECK(value_of(r, "h-sqrt20-sqrt21") == "0.888");
    CHECK(value_of(r, "appendixB.global") == "0.888");
    for (const char* id : {"h-below-sqrt13", "h-sqrt13-3.84", "h-3.84-3.92", "h-3.92-4.01", "h-4.01-sqrt20", "h-sqrt20-sqrt21",
                           "appendixB.global"}) {
      const ReportItem* it = r.find(id);
      CHECK(it->status == ItemStatus::Heuristic);
      CHECK(std::find(it->flags.begin(), it->flags.end(), "HEURISTIC") != it->flags.end());
    }
  }

  TEST_CASE("theorem1 passes by default") {
    Report r = report_theorem1(config());
    CHECK(r.verdict == Verdict3::Pass);
    CHECK(r.culprits.empty());
    CHECK(r.find("c.7")->status == ItemStatus::Pass);
    CHECK(r.find("C-in-J")->status == ItemStatus::Pass);
    CHECK(value_of(r, "theorem1.dimension") == "0.53128");
  }

  TEST_CASE("a tampered ledger threshold fails theorem1 and names the claim") {
    RunConfig c = config();
    c.tampers.push_back(Tamper{"l1.i", pow10(-6), true});
    Report r = report_theorem1(c);
    CHECK(r.verdict == Verdict3::Fail);
    CHECK(culprit(r, "l1.i"));
  }

  TEST_CASE("a reduced radius leaves the chain incomplete") {
    RunConfig c = config();
    c.survivor_radius = 3;
    Report r = report_theorem1(c);
    CHECK(r.verdict == Verdict3::Incomplete);
    CHECK(r.find("c.7")->status == ItemStatus::Incomplete);
    CHECK(culprit(r, "c.7"));
  }

  TEST_CASE("reports are deterministic across runs and thread counts") {
    RunConfig one = config(), many = config();
    many.jobs = 4;
    CHECK(report_theorem1(one).to_json() == report_theorem1(many).to_json());
    CHECK(report_theorem2(one).to_json() == report_theorem2(one).to_json());
    CHECK(report_appendixB(one).to_json() == report_appendixB(many).to_json());
  }

  TEST_CASE("report JSON carries strings only and passes the linter") {
    for (const Report& r : {report_theorem1(config()), report_theorem2(config()), report_appendixB(config())}) {
      CHECK(lint_report(r).empty());
      std::string js = r.to_json();
      CHECK(lint_json(js).empty());
      auto doc = nlohmann::json::parse(js);
      CHECK(doc["verdict"] == "PASS");
      for (const auto& sec : doc["sections"]) {
        for (const auto& it : sec["items"]) {
          if (!it.value("value", std::string()).empty()) CHECK_FALSE(it.value("locus", std::string()).empty());
        }
      }
    }
  }

  TEST_CASE("the linter rejects bare numbers and unlocated values") {
    CHECK_FALSE(lint_json(R"({"a": "1", "b": 0.5})").empty());
    CHECK_FALSE(lint_json(R"({"a": [1, 2]})").empty());
    CHECK(lint_json(R"({"a": "0.5", "b": true})").empty());
    Report r;
    r.name = "x";
    ReportItem it;
    it.id = "v";
    it.value = "0.5";
    r.sections.push_back(ReportSection{"s", {it}});
    r.finalize();
    CHECK_FALSE(lint_report(r).empty());
  }

  TEST_CASE("text rendering lists every item") {
    Report r = report_theorem2(config());
    std::string t = r.to_text();
    CHECK(t.rfind("theorem2: PASS", 0) == 0);
    for (const auto& sec : r.sections) {
      for (const auto& it : sec.items) CHECK_MESSAGE(t.find(it.id) != std::string::npos, it.id);
    }
  }

  TEST_CASE("run config validation") {
    RunConfig c = config();
    CHECK_NOTHROW(c.validate());
    c.tol = 0;
    CHECK_THROWS_AS(c.validate(), DomainError);
    RunConfig d = config();
    d.ledger_file = "/nonexistent/ledger.txt";
    CHECK_THROWS_AS(d.validate(), DomainError);
  }
}

TEST_SUITE("fault-injection") {
  TEST_CASE("every ledger claim flips when its threshold moves past the achieved bound") {
    RunConfig cfg = config();
    Ledger base = Ledger::load(cfg.ledger_file);
    for (const Claim& claim : base.claims) {
      Ledger l = base;
      // Fragile direction: down for UPPER, up for LOWER and DISJUNCTIVE.
      Rational delta = claim.kind == ClaimKind::Upper ? Rational(-pow10(-6)) : pow10(-6);
      apply_tampers(l, {Tamper{claim.id, delta, true}});
      LedgerReport r = run_ledger({l.find(claim.id)});
      CHECK_MESSAGE(!r.passed(), claim.id);
    }
  }

  TEST_CASE("the opposite direction keeps every claim") {
    RunConfig cfg = config();
    Ledger base = Ledger::load(cfg.ledger_file);
    for (const Claim& claim : base.claims) {
      Ledger l = base;
      Rational delta = claim.kind == ClaimKind::Upper ? pow10(-6) : Rational(-pow10(-6));
      apply_tampers(l, {Tamper{claim.id, delta, false}});
      LedgerEntry e = run_ledger({l.find(claim.id)}).entries.at(0);
      CHECK_MESSAGE(e.status() == Status::Proved, claim.id);
    }
  }
}
