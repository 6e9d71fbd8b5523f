#include <benchmark/benchmark.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "kcrank/action.hpp"
#include "kcrank/charpoly.hpp"
#include "kcrank/oracle.hpp"
#include "kcrank/rank_formulas.hpp"
#include "kcrank/smith.hpp"

namespace {

using namespace kcrank;

// Companion matrix of the d-th cyclotomic polynomial for the small d
// used here (hand-entered coefficients keep the benchmark self-contained).
IntMatrix cyclo(unsigned long d) {
  switch (d) {
    case 2:
      return IntMatrix{{-1}};
    case 3:
      return IntMatrix{{0, -1}, {1, -1}};
    case 5:
      return IntMatrix{
          {0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}};
    case 6:
      return IntMatrix{{0, -1}, {1, 1}};
    default:
      throw std::logic_error("unsupported block order");
  }
}

IntMatrix block_sum(const std::vector<IntMatrix>& blocks) {
  std::size_t n = 0;
  for (const IntMatrix& b : blocks) n += b.rows();
  IntMatrix sum(n, n);
  std::size_t base = 0;
  for (const IntMatrix& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        sum(base + i, base + j) = b(i, j);
      }
    }
    base += b.rows();
  }
  return sum;
}

ActionSpec perf30() {
  // n = 10, m = 30: the shape used by the performance gate.
  return validate_action(
      block_sum({cyclo(2), cyclo(3), cyclo(5), cyclo(6), cyclo(2)}), 30,
      "performance-30");
}

IntMatrix random_square(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = static_cast<long>(rng() % 19) - 9;
    }
  }
  return m;
}

void BM_CrossCheckPerf30(benchmark::State& state) {
  const ActionSpec spec = perf30();
  for (auto _ : state) {
    benchmark::DoNotOptimize(cross_check(spec));
  }
}
BENCHMARK(BM_CrossCheckPerf30)->Unit(benchmark::kMillisecond);

void BM_OraclePerf30(benchmark::State& state) {
  const ActionSpec spec = perf30();
  for (auto _ : state) {
    benchmark::DoNotOptimize(delocalized_rank(spec));
  }
}
BENCHMARK(BM_OraclePerf30)->Unit(benchmark::kMillisecond);

void BM_OracleHexagonal(benchmark::State& state) {
  const ActionSpec spec =
      validate_action(IntMatrix{{1, -1}, {1, 0}}, 6, "hexagonal");
  for (auto _ : state) {
    benchmark::DoNotOptimize(delocalized_rank(spec));
  }
}
BENCHMARK(BM_OracleHexagonal)->Unit(benchmark::kMicrosecond);

void BM_AssembledPerf30(benchmark::State& state) {
  const ActionSpec spec = perf30();
  for (auto _ : state) {
    benchmark::DoNotOptimize(assembled_rank(spec, 3));
  }
}
BENCHMARK(BM_AssembledPerf30)->Unit(benchmark::kMillisecond);

void BM_SmithNormalForm8(benchmark::State& state) {
  const IntMatrix m = random_square(8, 1234);
  for (auto _ : state) {
    benchmark::DoNotOptimize(smith_normal_form(m));
  }
}
BENCHMARK(BM_SmithNormalForm8)->Unit(benchmark::kMicrosecond);

void BM_CharPoly10(benchmark::State& state) {
  const IntMatrix m = random_square(10, 5678);
  for (auto _ : state) {
    benchmark::DoNotOptimize(char_poly(m));
  }
}
BENCHMARK(BM_CharPoly10)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
