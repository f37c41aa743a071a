#include <benchmark/benchmark.h>

#include "qnss/nss.hpp"
#include "qnss/submodule.hpp"

namespace {

using namespace qnss;

void bm_quaternion_mul(benchmark::State& state) {
  Quaternion p(Rat(1, 2), Rat(3), Rat(-2, 5), Rat(7));
  Quaternion q(Rat(-4), Rat(1, 3), Rat(2), Rat(-1, 7));
  for (auto _ : state) {
    Quaternion r = p * q;
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(bm_quaternion_mul);

void bm_qpoly_mul(benchmark::State& state) {
  QPoly x = QPoly::variable(2, 0), y = QPoly::variable(2, 1);
  QPoly i = QPoly::constant(2, Quaternion::i());
  QPoly f = x * x + i * x * y - y + QPoly::constant(2, Quaternion(Rat(1, 2)));
  QPoly g = y * y - i * x + QPoly::constant(2, Quaternion::k()) * x * y;
  for (auto _ : state) {
    QPoly r = f * g;
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(bm_qpoly_mul);

void bm_groebner_twisted_rows(benchmark::State& state) {
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  QRow g1 = {QPoly::from_poly(x * x), QPoly::from_poly(x * y)};
  QRow g2 = {QPoly::from_poly(x * y), QPoly::from_poly(y * y)};
  for (auto _ : state) {
    Submodule n(RingTag::Rational, 2, 2, {g1, g2});
    benchmark::DoNotOptimize(n.canonical_basis());
  }
}
BENCHMARK(bm_groebner_twisted_rows);

void bm_groebner_quaternionic(benchmark::State& state) {
  QPoly x = QPoly::variable(1, 0);
  QPoly i = QPoly::constant(1, Quaternion::i());
  QPoly j = QPoly::constant(1, Quaternion::j());
  QRow g1 = {x * x + i * x, j};
  QRow g2 = {i * x, x - j};
  for (auto _ : state) {
    Submodule n(RingTag::QuaternionCentral, 1, 2, {g1, g2});
    benchmark::DoNotOptimize(n.canonical_basis());
  }
}
BENCHMARK(bm_groebner_quaternionic);

void bm_closure_sum_of_squares(benchmark::State& state) {
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  std::vector<QRow> gens = {{QPoly::from_poly(x * x + y * y)}};
  ZeroSet zeros;
  zeros.pairs.push_back({{Quaternion(), Quaternion()}, {Quaternion::one()}});
  for (auto _ : state) {
    VanishingResult vanishing = vanishing_module(zeros, RingTag::Rational, 2, 1);
    std::vector<QRow> pool = default_candidate_pool(gens, &vanishing.module, 2, 1, 2);
    ClosureResult closure = real_closure_bounded(gens, RingTag::Rational, 2, 1, pool, 2);
    benchmark::DoNotOptimize(closure.module.is_zero_module());
  }
}
BENCHMARK(bm_closure_sum_of_squares);

}  // namespace

BENCHMARK_MAIN();
