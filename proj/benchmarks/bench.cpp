#include <benchmark/benchmark.h>

#include "spinform/bilinear.hpp"
#include "spinform/isotropy.hpp"
#include "spinform/killing.hpp"

using namespace spinform;

namespace {

void BM_ScalarMul(benchmark::State& state) {
  Scalar x(rat(3, 7), rat(-2, 5), rat(11, 3), rat(1, 2));
  Scalar y(rat(-5, 4), rat(9, 2), rat(0), rat(7, 6));
  for (auto _ : state) {
    Scalar z = x * y;
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_ScalarMul);

void BM_ScalarInv(benchmark::State& state) {
  Scalar x(rat(3, 7), rat(-2, 5), rat(11, 3), rat(1, 2));
  for (auto _ : state) {
    Scalar z = inv(x);
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_ScalarInv);

void BM_WedgeProduct(benchmark::State& state) {
  SpinParams p(static_cast<int>(state.range(0)));
  Spinor w = omegaPower(p, p.n / 2);
  Spinor psi = psiK(p, p.n - 1);
  for (auto _ : state) {
    Spinor z = wedgeProduct(w, psi);
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_WedgeProduct)->Arg(3)->Arg(5);

void BM_CliffordFormAction(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SpinParams p(n);
  SasakiFrame f = buildFrame(n);
  Spinor psi = psiK(p, n - 1);
  for (auto _ : state) {
    Spinor z = cliffForm(p, f.torsion, psi);
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_CliffordFormAction)->Arg(2)->Arg(4)->Arg(6);

void BM_KillingKernel(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  KillingConfig cfg = makeKillingConfig(n);
  for (auto _ : state) {
    KernelBasis kb = killingKernel(cfg);
    benchmark::DoNotOptimize(kb.rank);
  }
}
BENCHMARK(BM_KillingKernel)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EMinusKernel(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SasakiFrame f = buildFrame(n);
  for (auto _ : state) {
    KernelBasis kb = eMinusKernel(f, 2);
    benchmark::DoNotOptimize(kb.rank);
  }
}
BENCHMARK(BM_EMinusKernel)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_InvariantSpinors(benchmark::State& state) {
  SpinParams p(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto inv = invariantSpinors(p);
    benchmark::DoNotOptimize(inv.size());
  }
}
BENCHMARK(BM_InvariantSpinors)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Recovery(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SasakiFrame f = buildFrame(n);
  Spinor psi = eMinusClosedForm(f.params, 2, 0);
  const Scalar half = Scalar::ofRational(rat(1, 2));
  for (auto _ : state) {
    SasakiRecovery rec = recoverSasaki(f, half, 2, psi);
    benchmark::DoNotOptimize(rec.structureIndex);
  }
}
BENCHMARK(BM_Recovery)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
