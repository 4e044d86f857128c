#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "glued/finite_pv.hpp"
#include "glued/lef.hpp"
#include "glued/pv.hpp"
#include "glued/schreier_sims.hpp"

using namespace glued;

namespace
{

PvContext fast_context(GroupHandle g, GroupHandle h)
{
  PvOptions opts;
  opts.verify_products = false;
  return PvContext(std::move(g), std::move(h), opts);
}

void multiply_zz(benchmark::State &state)
{
  auto ctx = fast_context(make_integers(), make_integers());
  std::mt19937_64 rng(1);
  std::vector<PvElement> xs;
  for (int i = 0; i < 256; ++i)
    xs.push_back(ctx.random_element(rng, state.range(0),
                                    static_cast<unsigned>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ctx.multiply(xs[i % 256], xs[(i + 1) % 256]));
    ++i;
  }
}
BENCHMARK(multiply_zz)->Arg(2)->Arg(4)->Arg(8);

void multiply_free(benchmark::State &state)
{
  auto ctx = fast_context(make_free(2), make_integers());
  std::mt19937_64 rng(2);
  std::vector<PvElement> xs;
  for (int i = 0; i < 256; ++i)
    xs.push_back(ctx.random_element(rng, 4, 3));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ctx.multiply(xs[i % 256], xs[(i + 1) % 256]));
    ++i;
  }
}
BENCHMARK(multiply_free);

void schreier_sims(benchmark::State &state)
{
  auto g = make_cyclic(static_cast<std::uint64_t>(state.range(0)));
  auto h = make_cyclic(3);
  auto gens = realize_finite(g, h);
  for (auto _ : state)
    benchmark::DoNotOptimize(schreier_sims_order(gens));
}
BENCHMARK(schreier_sims)->Arg(3)->Arg(5)->Arg(8);

void phi(benchmark::State &state)
{
  auto ctx = fast_context(make_integers(), make_integers());
  auto approx = LefApprox::standard(ctx, state.range(0));
  std::mt19937_64 rng(3);
  std::vector<PvElement> xs;
  for (int i = 0; i < 256; ++i)
    xs.push_back(approx.random_window_element(rng, 2 * state.range(0)));
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(approx.phi(xs[i++ % 256]));
}
BENCHMARK(phi)->Arg(1)->Arg(2);

} // namespace

BENCHMARK_MAIN();
