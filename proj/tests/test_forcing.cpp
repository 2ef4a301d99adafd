#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "mlcf/error.hpp"
#include "mlcf/forcing.hpp"
#include "mlcf/spectra.hpp"
#include "oracle.hpp"

using namespace mlcf;

namespace {

const std::filesystem::path kData = MLCF_TEST_DATA_DIR;

Ledger data_ledger() { return Ledger::load(kData / "ledger.txt"); }

}  // namespace

TEST_SUITE("ledger") {
  TEST_CASE("parse claim lines") {
    Ledger l = Ledger::parse(
        "# comment\n"
        "@alphabet 12\n"
        "a.1 | 2*1 | UPPER | 3.5 | | 3.4\n"
        "a.2 | 22*11 | DISJUNCTIVE | 3,3.1 | 0,-2..-1 | | 123\n");
    REQUIRE(l.claims.size() == 2);
    CHECK(l.claims[0].pattern.alphabet == Alphabet{1, 2});
    CHECK(l.claims[0].printed == "3.4");
    CHECK(l.claims[1].kind == ClaimKind::Disjunctive);
    CHECK(l.claims[1].indices == std::vector<long>{-2, -1, 0});
    CHECK(l.claims[1].pattern.alphabet == Alphabet{1, 2, 3});
    const Claim& a2 = l.find("a.2");
    CHECK(a2.threshold(0) == parse_rational("3.1"));
    CHECK(a2.threshold(1) == parse_rational("3.1"));
    CHECK(a2.threshold(2) == 3);
    CHECK_THROWS(l.find("missing"));
  }

  TEST_CASE("malformed lines are rejected") {
    CHECK_THROWS_AS(Ledger::parse("x | 2*1 | SIDEWAYS | 3.5 |\n"), ParseError);
    CHECK_THROWS_AS(Ledger::parse("x | 2*1 | UPPER\n"), ParseError);
  }

  TEST_CASE("prefix selection stops at separators") {
    Ledger l = data_ledger();
    auto ix = select_claims(l, "l3.ix");
    REQUIRE(ix.size() == 2);
    CHECK(ix[0].id == "l3.ix");
    CHECK(ix[1].id == "l3.ix.a");
    for (const auto& c : select_claims(l, "l1")) CHECK(c.id.rfind("l1.", 0) == 0);
    CHECK(select_claims(l, "l1.i").size() == 1);
  }

  TEST_CASE("first lemma reproduces its printed decimals") {
    LedgerReport r = run_ledger(select_claims(data_ledger(), "l1"));
    REQUIRE(r.entries.size() == 3);
    CHECK(r.passed());
    for (const auto& e : r.entries) {
      CHECK(e.printed_ok);
      REQUIRE(e.transposed.has_value());
      CHECK(e.transposed->status == Status::Proved);
    }
  }

  TEST_CASE("a shifted threshold is reported") {
    Ledger l = data_ledger();
    Claim c = l.find("l1.iii");
    c.thresholds = {parse_rational("3.6127")};
    LedgerReport r = run_ledger({c});
    CHECK_FALSE(r.passed());
    CHECK(r.failures() == std::vector<std::string>{"l1.iii"});
  }

  TEST_CASE("parallel and serial runs agree") {
    Ledger l = data_ledger();
    LedgerOptions serial, parallel;
    parallel.jobs = 4;
    CHECK(run_ledger(l.claims, serial).to_json() == run_ledger(l.claims, parallel).to_json());
  }
}

TEST_SUITE("forcing") {
  TEST_CASE("symbolic windows") {
    SymbolicWindow w = SymbolicWindow::parse("??1233*222??");
    CHECK(w.first == -5);
    CHECK(w.at(-3) == 1);
    CHECK_FALSE(w.known(-5));
    CHECK(w.trimmed().to_literal() == "1233*222");
    CHECK(w.transposed().trimmed().to_literal() == "2223*321");
    CHECK(SymbolicWindow::parse("1233*2221").refines(w.trimmed()));
    CHECK_FALSE(w.trimmed().refines(SymbolicWindow::parse("1233*2221")));
    CHECK(w.consistent(SymbolicWindow::parse("33*2")));
    CHECK_FALSE(w.consistent(SymbolicWindow::parse("13*2")));
  }

  TEST_CASE("canonical form puts the larger neighbour on the left") {
    CHECK(canonicalize(SymbolicWindow::parse("23*3")).to_literal() == "33*2");
    CHECK(canonicalize(SymbolicWindow::parse("2*33")).to_literal() == "332*");
    CHECK(canonicalize(SymbolicWindow::parse("33*2")).to_literal() == "33*2");
  }

  TEST_CASE("wildcard compaction and common core") {
    Alphabet a{1, 2, 3};
    std::vector<SymbolicWindow> ws{SymbolicWindow::parse("133*2"), SymbolicWindow::parse("233*2"),
                                   SymbolicWindow::parse("333*2")};
    auto c = compact_wildcards(ws, a);
    REQUIRE(c.size() == 1);
    CHECK(c[0].trimmed().to_literal() == "33*2");
    ws.pop_back();
    CHECK(compact_wildcards(ws, a).size() == 2);
    CHECK(common_core(ws).trimmed().to_literal() == "33*2");
  }

  TEST_CASE("survivors in the narrow interval form a single window") {
    SurvivorSet s = survivors(parse_rational("3.7096992"), parse_rational("3.7096999"), 9, Alphabet{1, 2, 3});
    REQUIRE(s.windows.size() == 1);
    CHECK(s.literals() == std::vector<std::string>{"2332221233*222123322"});
  }

  TEST_CASE("survivor sets are nested in the radius") {
    Rational lo = parse_rational("3.7096992"), hi = parse_rational("3.7096999");
    std::vector<SurvivorSet> sets;
    for (long r = 3; r <= 9; ++r) sets.push_back(survivors(lo, hi, r, Alphabet{1, 2, 3}));
    for (std::size_t k = 1; k < sets.size(); ++k) {
      for (const auto& w : sets[k].windows) {
        bool inside = std::any_of(sets[k - 1].windows.begin(), sets[k - 1].windows.end(), [&](const SymbolicWindow& v) {
          return w.refines(v) || w.transposed().refines(v);
        });
        CHECK_MESSAGE(inside, w.to_literal());
      }
    }
  }

  TEST_CASE("eliminations are accounted for by proved claims") {
    ForcingOptions fo;
    fo.record_eliminations = true;
    Rational lo = parse_rational("3.7096992"), hi = parse_rational("3.7096999");
    SurvivorSet s = survivors(lo, hi, 5, Alphabet{1, 2, 3}, fo);
    REQUIRE(!s.eliminations.empty());
    LedgerReport lr = run_ledger(data_ledger().claims);
    std::vector<Claim> proved;
    Ledger l = data_ledger();
    for (std::size_t i = 0; i < lr.entries.size(); ++i) {
      if (lr.entries[i].status() == Status::Proved) proved.push_back(l.claims[i]);
    }
    CrossCheck cc = cross_check(s.eliminations, {lo, true, hi, 5, Alphabet{1, 2, 3}}, proved);
    CHECK(cc.passed());
    CHECK(cc.matched + cc.auxiliary == s.eliminations.size());
    CHECK(cc.matched > 0);
  }

  TEST_CASE("left replication of the seed") {
    Replication r = replicate_left(SymbolicWindow::parse(kReplicationSeed), parse_rational("3.70969985975033"));
    CHECK(r.forced);
    REQUIRE(r.seed_offset.has_value());
    CHECK(*r.seed_offset == kReplicationShift);
    CHECK(r.core.refines(SymbolicWindow::parse("23322212332221233*222123322212")));
  }

  TEST_CASE("ten replications stack ten copies") {
    ReplicationChain c = iterate_replication(SymbolicWindow::parse(kReplicationSeed), parse_rational("3.70969985975033"), 10);
    CHECK(c.forced);
    CHECK(c.steps.size() == 10);
    CHECK(count_left_copies(c.window, parse_word("3322212"), 0) >= 10);
  }

  TEST_CASE("copy counting") {
    SymbolicWindow w = SymbolicWindow::parse("1233221233221233*2");
    CHECK(count_left_copies(w, parse_word("332212"), 0) == 2);
    CHECK(count_left_copies(w, parse_word("332212"), -6) == 1);
  }

  TEST_CASE("replication fails for a bound below j0") {
    Replication r = replicate_left(SymbolicWindow::parse(kReplicationSeed), parse_rational("3.7096998"));
    CHECK_FALSE(r.forced);
  }
}

TEST_SUITE("spectra") {
  TEST_CASE("endpoints of J") {
    GapInterval J = interval_J();
    RInterval j0 = J.lo.enclose(pow10(-20)), j1 = J.hi.enclose(pow10(-20));
    CHECK(matches_printed(j0, "3.70969985967967"));
    CHECK(matches_printed(j1, "3.70969985975042"));
    CHECK(j0.certainly_below(j1));
    long double ref = oracle::periodic_markov({3, 3, 2, 2, 2, 1, 2});
    CHECK(std::fabs(j0.mid().get_d() - static_cast<double>(ref)) < 1e-14);
  }

  TEST_CASE("the Cantor set lies in the stated window") {
    RInterval c = c_point({}, pow10(-20));
    CHECK(c.certainly_above(parse_rational("3.70969985975024")));
    CHECK(c.certainly_below(parse_rational("3.70969985975028")));
    GapInterval J = interval_J();
    CHECK(c.certainly_above(J.lo.enclose(pow10(-20))));
    CHECK(c.certainly_below(J.hi.enclose(pow10(-20))));
  }

  TEST_CASE("longer theta prefixes refine the enclosure") {
    RInterval whole = c_point({}, pow10(-22));
    for (const char* p : {"1", "2", "12", "21", "1122"}) {
      RInterval part = c_point(parse_word(p), pow10(-22));
      CHECK(whole.contains(part));
      CHECK(part.width() < whole.width());
    }
  }

  TEST_CASE("upsilon") {
    Upsilon u = upsilon(data_ledger(), pow10(-20));
    CHECK(matches_printed(u.enclosure, "3.7096998597503806"));
    CHECK(u.chain_proved());
    CHECK(u.chain.entries.size() >= 6);
  }

  TEST_CASE("block constants sit below their bounds") {
    auto blocks = load_blocks(kData / "blocks.txt");
    for (const auto& b : blocks) {
      BlockCheck c = check_block(b, pow10(-20));
      if (c.stated_only) {
        CHECK_FALSE(c.value.has_value());
        continue;
      }
      CHECK_MESSAGE(c.verified, b.id);
    }
    auto it = std::find_if(blocks.begin(), blocks.end(), [](const auto& b) { return b.id == "r.sqrt10"; });
    REQUIRE(it != blocks.end());
    RInterval v = verify_block_constant(*it, pow10(-20));
    CHECK(std::fabs(v.mid().get_d() - (std::sqrt(2.0) + std::sqrt(3.0))) < 1e-15);
  }

  TEST_CASE("a bound the expression exceeds is caught") {
    auto blocks = parse_blocks("x | (a,b) | 11,22 | 12 | (21)2*(2) | 3.14\n");
    CHECK_THROWS_AS(verify_block_constant(blocks.at(0), pow10(-20)), VerificationFailure);
    CHECK_FALSE(check_block(blocks.at(0), pow10(-20)).verified);
  }

  TEST_CASE("block admissibility and bridges") {
    std::vector<Word> gens{parse_word("11"), parse_word("22")};
    CHECK(block_admissible(gens, parse_word("1122")));
    CHECK(block_admissible(gens, parse_word("1221")));
    CHECK_FALSE(block_admissible(gens, parse_word("121")));
    auto b = block_bridge(gens, parse_word("1"), parse_word("2"));
    REQUIRE(b.has_value());
    CHECK(block_admissible(gens, parse_word("1" + to_string(*b) + "2")));
  }
}
