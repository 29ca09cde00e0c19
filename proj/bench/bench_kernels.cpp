// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <vector>

#include "fratio/affine_family.hpp"
#include "fratio/arrangement.hpp"
#include "fratio/catalog.hpp"
#include "fratio/criteria.hpp"
#include "fratio/enumerate.hpp"

using namespace fratio;

namespace {

const IntList &big_list() {
  static const IntList a = IntList::make({210, 330, 462, -105, -165, -231, -385, -116});
  return a;
}

const AffineList &family() {
  static const AffineList f = parse_family("3(a+b),3b,2a,2b,-(2a+3b),-(a+2b),-(a+b),-a,-b,-b");
  return f;
}

std::vector<Form2> forms() {
  std::vector<Form2> out;
  for (const Coeffs &c : family().entries) {
    out.push_back({c[0], c[1]});
  }
  return out;
}

void BM_IntegralRatio(benchmark::State &state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_integral_ratio(big_list()));
  }
}

void BM_IntegralRatioReference(benchmark::State &state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_integral_ratio_reference(big_list()));
  }
}

void BM_Arrangement(benchmark::State &state) {
  const auto fs = forms();
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_arrangement(fs, -10, 10));
  }
}

void BM_ArrangementReference(benchmark::State &state) {
  const auto fs = forms();
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_arrangement_reference(fs, -10, 10));
  }
}

void BM_Enumerate(benchmark::State &state) {
  const auto sporadic = Catalog::builtin().sporadic_lists();
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_small_norm(4, static_cast<int>(state.range(0)), Rat(31, 180), sporadic));
  }
}

void BM_EnumerateReference(benchmark::State &state) {
  const auto sporadic = Catalog::builtin().sporadic_lists();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        enumerate_small_norm_reference(4, static_cast<int>(state.range(0)), Rat(31, 180), sporadic));
  }
}

} // namespace

BENCHMARK(BM_IntegralRatio)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntegralRatioReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Arrangement)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ArrangementReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateReference)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
