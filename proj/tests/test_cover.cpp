#include <doctest.h>

#include <cmath>
#include <random>

#include "mlcf/constants.hpp"
#include "mlcf/cover.hpp"
#include "mlcf/error.hpp"
#include "oracle.hpp"

using namespace mlcf;

namespace {

const std::filesystem::path kData = MLCF_TEST_DATA_DIR;

Int big(std::uint64_t v) { return Int(std::to_string(v)); }

// 1 / (q (q + q')) from the recurrence, q' the continuant without the last digit.
Rational exact_cylinder(const oracle::Digits& w) {
  oracle::Digits shorter(w.begin(), w.end() - 1);
  Int q = big(oracle::continuant(w)), qp = big(oracle::continuant(shorter));
  return Rational(Int(1), Int(q * (q + qp)));
}

// Max of ρ over a fine grid of r in [0, 1], in long double.
long double grid_sup(const RatioFunc& f) {
  long double A = f.A.get_d(), B = f.B.get_d(), C = f.C.get_d(), D = f.D.get_d(), best = 0;
  for (int k = 0; k <= 200000; ++k) {
    long double r = k / 200000.0L;
    best = std::max(best, (r + 1) / ((A * r + B) * (C * r + D)));
  }
  return best;
}

long double to_ld(const Surd& s) {
  return s.a().get_d() + s.b().get_d() * std::sqrt(static_cast<long double>(s.d().get_d()));
}

CoverSystem shipped(const std::string& id) { return load_cover_system(kData / "cover" / (id + ".txt")); }

}  // namespace

TEST_SUITE("cover") {
  TEST_CASE("ratio function equals the cylinder ratio on random pairs") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 1000; ++k) {
      auto prefix = oracle::random_word(rng, 1, 4, 1 + static_cast<int>(rng() % 8));
      auto w = oracle::random_word(rng, 1, 4, 1 + static_cast<int>(rng() % 6));
      oracle::Digits joined = prefix;
      joined.insert(joined.end(), w.begin(), w.end());
      Rational expected = exact_cylinder(joined) / exact_cylinder(prefix);
      Word pw(prefix.begin(), prefix.end()), ww(w.begin(), w.end());
      CHECK(ratio_function(ww)(prefix_ratio(pw)) == expected);
      CHECK(cylinder_length(pw) == exact_cylinder(prefix));
      CHECK(std::fabs(cylinder_length(ww).get_d() - static_cast<double>(oracle::cylinder_length(w))) < 1e-15);
    }
  }

  TEST_CASE("prefix ratio is q_{n-1} / q_n") {
    CHECK(prefix_ratio({}) == 0);
    CHECK(prefix_ratio(parse_word("1")) == 1);
    CHECK(prefix_ratio(parse_word("12")) == Rational(1, 3));
    CHECK_THROWS_AS(ratio_function({}), DomainError);
  }

  TEST_CASE("exact sups against a grid search") {
    for (const char* w : {"3", "112", "221", "21", "23", "1121", "33131", "3131", "2131", "1131", "34", "4", "331", "213"}) {
      RatioFunc f = ratio_function(parse_word(w));
      SupRatio s = sup_ratio(f);
      long double grid = grid_sup(f);
      CHECK_MESSAGE(std::fabs(static_cast<double>(to_ld(s.value) - grid)) < 1e-9, w);
      CHECK(to_ld(s.value) >= grid - 1e-15L);
    }
    CHECK(sup_ratio(ratio_function(parse_word("3"))).value == Surd(Rational(1, 10)));
    CHECK(sup_ratio(ratio_function(parse_word("112"))).value == Surd(Rational(1, 35)));
    CHECK(sup_ratio(ratio_function(parse_word("3131"))).value == Surd(Rational(1, 516)));
    CHECK(sup_ratio(ratio_function(parse_word("33131"))).value == Surd(Rational(2, 11745)));
    SupRatio s221 = sup_ratio(ratio_function(parse_word("221")));
    CHECK(s221.interior);
    CHECK(s221.value == Surd(41, -4, Int(105)));
  }

  TEST_CASE("sup dominates random evaluations") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> u(0, 1000000);
    for (int k = 0; k < 10000; ++k) {
      auto w = oracle::random_word(rng, 1, 4, 1 + static_cast<int>(rng() % 5));
      RatioFunc f = ratio_function(Word(w.begin(), w.end()));
      Rational r(u(rng), 1000000);
      r.canonicalize();
      CHECK(compare(sup_ratio(f).value, f(r)) >= 0);
    }
  }

  TEST_CASE("interval enclosure of the ratio function") {
    RatioFunc f = ratio_function(parse_word("221"));
    RInterval e = f.over(Rational(1, 4), Rational(3, 4));
    for (int k = 0; k <= 100; ++k) CHECK(e.contains(f(Rational(1, 4) + Rational(k, 200))));
  }

  TEST_CASE("cover file parsing") {
    CoverSystem cs = parse_cover_system(
        "id: demo\nregion: sqrt(10), 3.5\nkind: heuristic\nbase: hensley.E2\nblock: r.x\nround: 3\n"
        "s: 0.2\nmargin: 0.99\ncase g: 112, 221\ncase h: 3\nstated: 3 <= 1/10\nstated: 221 < 1/81.98\nnote: text\n");
    CHECK(cs.id == "demo");
    CHECK(cs.heuristic);
    CHECK(cs.round_places == 3);
    CHECK(cs.cases.size() == 2);
    CHECK(cs.cases[0].words.size() == 2);
    CHECK(cs.stated.size() == 2);
    CHECK(cs.stated[1].strict);
    CHECK(cs.stated[1].value == Rational(50, 4099));
    CHECK(cs.notes.size() == 1);
    CHECK_THROWS_AS(parse_cover_system("id: x\ns: 0.2\n"), ParseError);
    CHECK_THROWS_AS(parse_cover_system("id: x\nregion: 1, 2\ns: 0.2\nmargin: 1\nbase: b\ncase g: 1a\n"), ParseError);
  }

  TEST_CASE("all shipped systems load") {
    auto all = load_cover_systems(kData / "cover");
    CHECK(all.size() == 10);
    int heuristic = 0;
    for (const auto& cs : all) heuristic += cs.heuristic;
    CHECK(heuristic == 6);
  }

  TEST_CASE("case sums decrease in s") {
    for (const auto& cs : load_cover_systems(kData / "cover")) {
      RInterval prev = case_sum(cs, Rational(1, 20));
      for (int k = 2; k <= 20; ++k) {
        RInterval cur = case_sum(cs, Rational(k, 20));
        CHECK_MESSAGE(cur.certainly_below(prev), cs.id);
        prev = cur;
      }
    }
  }

  TEST_CASE("threshold brackets the crossing") {
    for (const auto& cs : load_cover_systems(kData / "cover")) {
      Threshold t = solve_threshold(cs, pow10(-6));
      CHECK_MESSAGE(t.at.certainly_below(Rational(1)), cs.id);
      CHECK_MESSAGE(t.below.lo() >= 1, cs.id);
      CHECK(t.s_star <= cs.s + pow10(-4));
      CHECK(Rational(t.s_star / pow10(-6)).get_den() == 1);
    }
  }

  TEST_CASE("joint maximization never exceeds the per-term sum") {
    CoverOptions joint;
    joint.mode = CoverMode::Joint;
    for (const auto& cs : load_cover_systems(kData / "cover")) {
      RInterval p = case_sum(cs, cs.s), j = case_sum(cs, cs.s, joint);
      CHECK_MESSAGE(j.hi() <= p.hi(), cs.id);
    }
  }

  TEST_CASE("stated term bounds hold and a wrong one is caught") {
    for (const auto& cs : load_cover_systems(kData / "cover")) {
      for (const auto& c : check_stated_bounds(cs)) CHECK_MESSAGE(c.holds, std::string(cs.id + " " + c.bound.text));
    }
    CoverSystem cs = shipped("sqrt10-sqrt13");
    cs.stated.push_back(StatedBound{parse_word("221"), true, Rational(1, 82), "1/82"});
    auto checks = check_stated_bounds(cs);
    CHECK_FALSE(checks.back().holds);
  }

  TEST_CASE("region assembly is exact decimal addition") {
    RInterval r = assemble_region_bound(RInterval(parse_rational("0.531291")), parse_rational("0.174813"));
    CHECK(r == RInterval(parse_rational("0.706104")));
    CHECK(round_up(parse_rational("0.855266"), 3) == parse_rational("0.856"));
    CHECK(round_up(parse_rational("0.856"), 3) == parse_rational("0.856"));
    CHECK(round_up(parse_rational("0.827645"), 3) == parse_rational("0.828"));
  }
}

TEST_SUITE("constants") {
  TEST_CASE("table parsing") {
    ConstantTable t = parse_constants("# c\na | 0.5 | cited | t.A | someone\nb | sqrt(21) | cap | e.x | run\n");
    REQUIRE(t.entries.size() == 2);
    CHECK(t.contains("a"));
    CHECK(t.rational("a") == Rational(1, 2));
    CHECK(t.find("b").kind == ConstantKind::Cap);
    CHECK_THROWS_AS(t.rational("b"), DomainError);
    CHECK_THROWS(t.find("c"));
    CHECK_THROWS_AS(parse_constants("a | 0.5 | guessed | t | p\n"), ParseError);
  }

  TEST_CASE("shipped constants carry provenance") {
    ConstantTable t = load_constants(kData / "cited_constants.txt");
    for (const auto& c : t.entries) {
      CHECK_FALSE(c.provenance.empty());
      CHECK_FALSE(c.locus.empty());
    }
    CHECK(t.rational("hensley.E2") == parse_rational("0.531291"));
    CHECK(t.find("jp.E2").value.text.size() > 40);
  }
}
