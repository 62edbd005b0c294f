// Transition matrices and Hall-Littlewood functions are memoized inside the
// library, so apart from the oracle these time the warm paths.

#include <benchmark/benchmark.h>

#include "symq/gporacle.hpp"
#include "symq/hl.hpp"
#include "symq/sncharacter.hpp"

using namespace symq;

namespace {

void BM_QRatArithmetic(benchmark::State& state) {
  const QPoly q = QPoly::q_power(1);
  const QRat a(QPoly(1) + q, QPoly(1) - q * q * q);
  const QRat b(q * q - QPoly(3), QPoly(1) - q);
  for (auto _ : state) benchmark::DoNotOptimize((a + b) * (a - b) / (a * b + QRat(1)));
}
BENCHMARK(BM_QRatArithmetic);

void BM_CharacterValues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ps = partitions_of(n);
  for (auto _ : state) {
    long long acc = 0;
    for (const auto& lambda : ps) acc += character_value(lambda, ps[ps.size() / 2]);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_CharacterValues)->DenseRange(6, 12, 3);

void BM_MolienRow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ps = partitions_of(n);
  for (auto _ : state) {
    for (const auto& mu : ps) benchmark::DoNotOptimize(molien_mult(ps[1], mu));
  }
}
BENCHMARK(BM_MolienRow)->DenseRange(3, 6);

void BM_QToBigSchur(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Partition lambda = partitions_of(n)[1];
  for (auto _ : state) benchmark::DoNotOptimize(to_basis(SymFunc::basis_element(Basis::Q, lambda), Basis::S));
}
BENCHMARK(BM_QToBigSchur)->DenseRange(3, 7, 2);

void BM_HallInnerPQ(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ps = partitions_of(n);
  const SymFunc P = to_basis(SymFunc::basis_element(Basis::P, ps[1]), Basis::p);
  const SymFunc Q = to_basis(SymFunc::basis_element(Basis::Q, ps[1]), Basis::p);
  for (auto _ : state) benchmark::DoNotOptimize(hall_inner(P, Q));
}
BENCHMARK(BM_HallInnerPQ)->DenseRange(4, 7, 3);

void BM_KostkaTriangular(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kostka_triangular(n));
}
BENCHMARK(BM_KostkaTriangular)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_KostkaOrthogonality(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kostka_orthogonality(n));
}
BENCHMARK(BM_KostkaOrthogonality)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_OracleQuotient(benchmark::State& state) {
  const Partition lambda = state.range(0) == 4 ? Partition{2, 1, 1} : state.range(0) == 5 ? Partition{2, 2, 1} : Partition{2, 2, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(build_quotient(lambda));
}
BENCHMARK(BM_OracleQuotient)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
