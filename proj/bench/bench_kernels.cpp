// Parallel kernels against their single-threaded references on partial maps
// of growing size. Run with OMP_NUM_THREADS to vary the thread count.

#include "hyperdet/exactdet.hpp"
#include "hyperdet/partial.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

namespace {

const std::vector<std::vector<std::size_t>> kFormats{
    {4, 3, 2}, {5, 3, 3}, {5, 2, 2, 2, 2}, {6, 3, 2, 2, 2}};

hdet::MultiMatrix random_tensor(const std::vector<std::size_t>& dims) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dist(-9, 9);
  hdet::Format f(dims);
  std::vector<hdet::Scalar> e(f.size());
  for (auto& x : e) x = dist(rng);
  return hdet::MultiMatrix::from_entries(f, std::move(e));
}

const hdet::SquareMatrix& partial_for(std::size_t which) {
  static std::vector<hdet::SquareMatrix> cache = [] {
    std::vector<hdet::SquareMatrix> out;
    for (const auto& dims : kFormats) out.push_back(hdet::build_partial(random_tensor(dims)).matrix);
    return out;
  }();
  return cache[which];
}

template <hdet::Scalar (*Kernel)(const hdet::SquareMatrix&)>
void run(benchmark::State& state) {
  const auto& m = partial_for(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(m));
  state.counters["N"] = static_cast<double>(m.size());
}

void BM_BuildPartial(benchmark::State& state) {
  const auto a = random_tensor(kFormats[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(hdet::build_partial(a));
}

void formats(benchmark::internal::Benchmark* b) {
  for (std::size_t i = 0; i < kFormats.size(); ++i) b->Arg(static_cast<long>(i));
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(run<hdet::det_bareiss>)->Name("Bareiss/parallel")->Apply(formats);
BENCHMARK(run<hdet::reference::det_bareiss>)->Name("Bareiss/reference")->Apply(formats);
BENCHMARK(run<hdet::det_modular_crt>)->Name("CRT/parallel")->Apply(formats);
BENCHMARK(run<hdet::reference::det_modular_crt>)->Name("CRT/reference")->Apply(formats);
BENCHMARK(BM_BuildPartial)->Apply(formats);

BENCHMARK_MAIN();
