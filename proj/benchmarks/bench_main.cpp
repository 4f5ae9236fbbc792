#include <benchmark/benchmark.h>

#include "semilen/code.hpp"
#include "semilen/cyclic.hpp"
#include "semilen/embedding.hpp"
#include "semilen/orbit.hpp"

namespace {

using namespace semilen;

void BM_EnumerateM(benchmark::State& state) {
  const auto max_len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_m(max_len));
}
BENCHMARK(BM_EnumerateM)->DenseRange(16, 24, 4);

void BM_CheckOverlapM(benchmark::State& state) {
  auto words = enumerate_m(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_overlap(words));
  state.counters["words"] = static_cast<double>(words.size());
}
BENCHMARK(BM_CheckOverlapM)->DenseRange(16, 22, 2);

void BM_Factorize(benchmark::State& state) {
  auto code = m_code(18);
  std::vector<Word> parts;
  for (std::size_t i = 0; i < 200; ++i) parts.push_back(code.word((i * 7919) % code.size()));
  auto text = concat(parts);
  for (auto _ : state) benchmark::DoNotOptimize(code.factorize(text));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.length()));
}
BENCHMARK(BM_Factorize);

void BM_LengthInH(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto s = FiniteSemigroup::cyclic_group(n);
  std::vector<Length> l(n);
  for (std::size_t k = 0; k < n; ++k) l[k] = 8 + (k * 5) % 7;
  auto asg = assign_exact(s, l);
  for (auto _ : state) benchmark::DoNotOptimize(length_in_h(s, asg));
}
BENCHMARK(BM_LengthInH)->RangeMultiplier(2)->Range(4, 64);

void BM_CyclicTable(benchmark::State& state) {
  auto inst = make_cyclic(parse_formula("pow:pi-e"), static_cast<std::size_t>(state.range(0)));
  auto asg = assign_cyclic(inst, AssignmentMode::Exact);
  for (auto _ : state) benchmark::DoNotOptimize(cyclic_length_table(inst, asg));
}
BENCHMARK(BM_CyclicTable)->Arg(300)->Arg(1000);

void BM_Orbit(benchmark::State& state) {
  auto s = FiniteSemigroup::cyclic_group(3);
  std::vector<Length> l{2, 1, 2};
  auto asg = assign_equiv(s, l, m_code_for(l), Rational(16));
  auto p = build_presentation(s, asg);
  auto caps = OrbitCaps::defaults_for(asg);
  for (auto _ : state) benchmark::DoNotOptimize(xi_orbit(p, asg.codeword(0), caps));
}
BENCHMARK(BM_Orbit);

}  // namespace

BENCHMARK_MAIN();
