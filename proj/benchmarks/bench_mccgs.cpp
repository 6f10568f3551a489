#include <benchmark/benchmark.h>

#include "mccgs/mccgs.hpp"

using namespace mccgs;

namespace {

std::vector<Poly> parse_all(const std::vector<std::string>& texts, const RingPtr& R) {
  std::vector<Poly> out;
  for (const auto& t : texts) out.push_back(parse_poly(t, R));
  return out;
}

ParametricRings conic_rings() { return ParametricRings::make({{"x", "y"}, {"b", "c", "d"}}, OrderKind::Lex, OrderKind::Lex); }

std::vector<std::string> nine_point() {
  return {"(b-d)*x + (c-a)*y + 2*a*d - 2*b*c", "(c-a)*x + (d-b)*y", "(a-x0)^2 + (b-y0)^2 - r2",
          "(c-x0)^2 + (d-y0)^2 - r2", "(a+c-x0)^2 + (b+d-y0)^2 - r2", "(x-x0)^2 + (y-y0)^2 - r2"};
}

void BM_ReducedGbCyclic4(benchmark::State& state) {
  auto R = make_ring({"a", "b", "c", "d"}, static_cast<OrderKind>(state.range(0)));
  auto F = parse_all({"a+b+c+d", "a*b+b*c+c*d+d*a", "a*b*c+b*c*d+c*d*a+d*a*b", "a*b*c*d-1"}, R);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_gb(F));
}
BENCHMARK(BM_ReducedGbCyclic4)->Arg(static_cast<int>(OrderKind::Grevlex))->Arg(static_cast<int>(OrderKind::Lex))
    ->Unit(benchmark::kMillisecond);

void BM_FactorQuartic(benchmark::State& state) {
  auto R = make_ring({"a", "b", "c", "d"}, OrderKind::Lex);
  Poly p = parse_poly("(a*d - b*c)*((a-c)^2 + (b-d)^2)*(a + b + c + d + 1)", R);
  FactorOptions opts;
  opts.max_total_degree = 30;
  int k = 0;
  for (auto _ : state) {
    // A fresh factor per iteration keeps the memo from answering.
    Poly q = p * (Poly::variable(R, 0) + Poly(R, ++k) * Poly::variable(R, 3) + Poly(R, 1));
    benchmark::DoNotOptimize(factor(q, opts));
  }
}
BENCHMARK(BM_FactorQuartic)->Unit(benchmark::kMillisecond);

void BM_MinimalPrimes(benchmark::State& state) {
  auto R = make_ring({"a", "b", "c", "d"}, OrderKind::Lex);
  Ideal I(R, parse_all({"a^2*d - a*b*c", "a*d^2 - b*c*d", "(a-c)^2 + (b-d)^2"}, R));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_primes(I));
}
BENCHMARK(BM_MinimalPrimes)->Unit(benchmark::kMillisecond);

void BM_ConicMccgs(benchmark::State& state) {
  auto R = conic_rings();
  auto F = parse_all({"x^2 + b*y^2 + 2*c*x*y + d*x", "2*x + 2*c*y + d", "2*b*y + 2*c*x"}, R.full);
  for (auto _ : state) benchmark::DoNotOptimize(compute_mccgs(F, R));
}
BENCHMARK(BM_ConicMccgs)->Unit(benchmark::kMillisecond);

void BM_NinePointBuildtree(benchmark::State& state) {
  auto R = ParametricRings::make({{"x", "y", "x0", "y0", "r2"}, {"a", "b", "c", "d"}}, OrderKind::Grevlex,
                                 OrderKind::Lex);
  auto F = parse_all(nine_point(), R.full);
  for (auto _ : state) benchmark::DoNotOptimize(buildtree(F, R));
}
BENCHMARK(BM_NinePointBuildtree)->Unit(benchmark::kMillisecond);

void BM_NinePointMccgs(benchmark::State& state) {
  auto R = ParametricRings::make({{"x", "y", "x0", "y0", "r2"}, {"a", "b", "c", "d"}}, OrderKind::Grevlex,
                                 OrderKind::Lex);
  auto F = parse_all(nine_point(), R.full);
  for (auto _ : state) benchmark::DoNotOptimize(compute_mccgs(F, R));
}
BENCHMARK(BM_NinePointMccgs)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
