#include "wittlab/algebra.hpp"
#include "wittlab/automorphisms.hpp"
#include "wittlab/cohomology.hpp"
#include "wittlab/derivations.hpp"
#include "wittlab/linalg.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace wittlab;

namespace {

void BM_BracketBasis(benchmark::State& state) {
  const Element x = Element::L(5) + Element::I(-3) * Rational(BigInt(7), BigInt(2));
  const Element y = Element::L(-5) - Element::I(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bracket(x, y, AlgebraKind::wtilde));
  }
}
BENCHMARK(BM_BracketBasis);

void BM_JacobiSweep(benchmark::State& state) {
  const Window window(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_jacobi(AlgebraKind::wtilde, window));
  }
}
BENCHMARK(BM_JacobiSweep)->Arg(4)->Arg(6)->Arg(8);

void BM_H2Window(benchmark::State& state) {
  const Window window(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_h2_window(AlgebraKind::w, window, 0));
  }
}
BENCHMARK(BM_H2Window)->Arg(4)->Arg(6)->Arg(8);

void BM_DerivationSpace(benchmark::State& state) {
  const Window window(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_der_space(
        AlgebraKind::w, DerivationTarget::algebra_valued, 0, window));
  }
}
BENCHMARK(BM_DerivationSpace)->Arg(4)->Arg(6)->Arg(8);

void BM_Nullspace(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  RationalMatrix m(n, n / 2);
  std::uniform_int_distribution<int> v(-6, 6);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (v(rng) > 2) m.at(r, c) = Rational(v(rng));
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(nullspace(m));
  }
}
BENCHMARK(BM_Nullspace)->Arg(32)->Arg(64)->Arg(128);

void BM_SigmaApply(benchmark::State& state) {
  const SigmaParams p(-1, Rational(BigInt(1), BigInt(2)), Rational(BigInt(2), BigInt(3)),
                      Rational(5));
  const Element x = Element::L(7) + Element::I(-7) * Rational(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_sigma(p, x));
  }
}
BENCHMARK(BM_SigmaApply);

void BM_NormalFormCompose(benchmark::State& state) {
  AutomorphismNF f, g;
  f.inner.add_factor(3, Rational(2));
  f.inner.add_factor(-1, Rational(BigInt(1), BigInt(2)));
  f.sigma = SigmaParams(-1, 1, 2, 3);
  g.inner.add_factor(2, Rational(5));
  g.sigma = SigmaParams(1, Rational(BigInt(1), BigInt(3)), Rational(BigInt(1), BigInt(2)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose_nf(f, g));
  }
}
BENCHMARK(BM_NormalFormCompose);

}  // namespace

BENCHMARK_MAIN();
