#include <benchmark/benchmark.h>

#include "mlcf/cf.hpp"
#include "mlcf/cover.hpp"
#include "mlcf/dim.hpp"
#include "mlcf/forcing.hpp"
#include "mlcf/ledger.hpp"
#include "mlcf/spectra.hpp"

using namespace mlcf;

namespace {

const std::filesystem::path kData = MLCF_BENCH_DATA_DIR;

void BM_LambdaEnclosure(benchmark::State& state) {
  BiSeq a = parse_sequence(kUpsilonSequence);
  Rational tol = pow10(-static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lambda_at(a, 0, tol));
}
BENCHMARK(BM_LambdaEnclosure)->Arg(20)->Arg(50)->Arg(100);

void BM_MarkovValue(benchmark::State& state) {
  BiSeq a = parse_sequence(kJ1Sequence);
  for (auto _ : state) benchmark::DoNotOptimize(markov_value(a, pow10(-20)));
}
BENCHMARK(BM_MarkovValue);

void BM_ProveClaim(benchmark::State& state) {
  Ledger l = Ledger::load(kData / "ledger.txt");
  const Claim& c = l.find(state.range(0) == 0 ? "l1.i" : "l3.vii");
  for (auto _ : state) benchmark::DoNotOptimize(prove_claim(c));
}
BENCHMARK(BM_ProveClaim)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_FullLedger(benchmark::State& state) {
  Ledger l = Ledger::load(kData / "ledger.txt");
  LedgerOptions o;
  o.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_ledger(l.claims, o));
}
BENCHMARK(BM_FullLedger)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Survivors(benchmark::State& state) {
  Rational lo = parse_rational("3.7096992"), hi = parse_rational("3.7096999");
  for (auto _ : state) benchmark::DoNotOptimize(survivors(lo, hi, state.range(0), Alphabet{1, 2, 3}));
}
BENCHMARK(BM_Survivors)->DenseRange(5, 9, 2)->Unit(benchmark::kMillisecond);

void BM_Replication(benchmark::State& state) {
  Rational bound = parse_rational("3.70969985975033");
  for (auto _ : state) {
    benchmark::DoNotOptimize(iterate_replication(SymbolicWindow::parse(kReplicationSeed), bound, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_Replication)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_CaseSum(benchmark::State& state) {
  CoverSystem cs = load_cover_system(kData / "cover" / "sqrt13-3.84.txt");
  for (auto _ : state) benchmark::DoNotOptimize(case_sum(cs, cs.s));
}
BENCHMARK(BM_CaseSum)->Unit(benchmark::kMicrosecond);

void BM_SolveThreshold(benchmark::State& state) {
  CoverSystem cs = load_cover_system(kData / "cover" / "sqrt10-sqrt13.txt");
  for (auto _ : state) benchmark::DoNotOptimize(solve_threshold(cs, pow10(-6)));
}
BENCHMARK(BM_SolveThreshold)->Unit(benchmark::kMillisecond);

void BM_DimensionE2(benchmark::State& state) {
  SubshiftSpec e2 = build_subshift(Alphabet{1, 2}, {});
  for (auto _ : state) benchmark::DoNotOptimize(dimension_at(e2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DimensionE2)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMicrosecond);

void BM_DimensionCapped(benchmark::State& state) {
  SubshiftSpec s = load_subshift_file(kData / "subshifts" / "X3.131.313.2312.2132.txt").spec;
  for (auto _ : state) benchmark::DoNotOptimize(dimension(s));
}
BENCHMARK(BM_DimensionCapped)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
