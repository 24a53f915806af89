#include <benchmark/benchmark.h>

#include "hpt/factory.hpp"
#include "hpt/perturbation.hpp"

using namespace hpt;

namespace {

const DgAlgebra& torus_algebra() {
  static const DgAlgebra dga = cochain_dga(torus_description(), Field());
  return dga;
}

const DgAlgebra& massey_algebra() {
  static const DgAlgebra dga = massey_instance(Field()).dga;
  return dga;
}

void bench_gaussian_contraction(benchmark::State& state) {
  const DgAlgebra& dga = torus_algebra();
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_contraction(dga.complex));
}
BENCHMARK(bench_gaussian_contraction);

void bench_homology_basis(benchmark::State& state) {
  const DgAlgebra& dga = torus_algebra();
  for (auto _ : state) benchmark::DoNotOptimize(homology_basis(dga.complex));
}
BENCHMARK(bench_homology_basis);

/* The whole pipeline on the 9-dimensional triple-product instance, by
   truncation arity. Arity is the dominant cost: bar powers grow as dim^n. */
void bench_transfer_massey(benchmark::State& state) {
  const DgAlgebra& dga = massey_algebra();
  const int arity = static_cast<int>(state.range(0));
  Contraction c = gaussian_contraction(dga.complex);
  for (auto _ : state) {
    BarContextPtr ctx = make_bar_context(dga.complex, arity);
    benchmark::DoNotOptimize(transfer(c, from_dga(ctx, dga.product), arity));
  }
}
BENCHMARK(bench_transfer_massey)->Arg(2)->Arg(3)->Arg(4);

/* Transfer on the 27-dimensional torus cochain algebra. */
void bench_transfer_torus(benchmark::State& state) {
  const DgAlgebra& dga = torus_algebra();
  const int arity = static_cast<int>(state.range(0));
  Contraction c = gaussian_contraction(dga.complex);
  for (auto _ : state) {
    BarContextPtr ctx = make_bar_context(dga.complex, arity);
    benchmark::DoNotOptimize(transfer(c, from_dga(ctx, dga.product), arity));
  }
}
BENCHMARK(bench_transfer_torus)->Arg(2)->Arg(3);

/* Squaring the coderivation table is the core of every verification pass. */
void bench_coderivation_square(benchmark::State& state) {
  const DgAlgebra& dga = massey_algebra();
  const int arity = static_cast<int>(state.range(0));
  BarContextPtr ctx = make_bar_context(dga.complex, arity);
  BarMap b = bar_differential(from_dga(ctx, dga.product));
  for (auto _ : state) benchmark::DoNotOptimize(compose_bar(b, b));
}
BENCHMARK(bench_coderivation_square)->Arg(3)->Arg(4);

void bench_verify_transfer(benchmark::State& state) {
  const DgAlgebra& dga = massey_algebra();
  const int arity = static_cast<int>(state.range(0));
  Contraction c = gaussian_contraction(dga.complex);
  TransferResult res = transfer(c, from_dga(make_bar_context(dga.complex, arity), dga.product), arity);
  for (auto _ : state) benchmark::DoNotOptimize(verify_transfer(res));
}
BENCHMARK(bench_verify_transfer)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
