#include "ecassoc/certificate.hpp"
#include "ecassoc/harness.hpp"
#include "ecassoc/linalg.hpp"

#include <benchmark/benchmark.h>

using namespace ecassoc;

namespace {

WeierstrassCurve curve(const Field& f, std::string_view spec) { return WeierstrassCurve::parse(f, spec); }

void BM_Star(benchmark::State& state) {
  const auto e = curve(Field::prime(5), "0,0,0,1,1");
  const auto pts = enumerate_points(e);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(star(e, pts[i % pts.size()], pts[(i * 7 + 3) % pts.size()]));
    ++i;
  }
}
BENCHMARK(BM_Star);

void BM_StarExtension(benchmark::State& state) {
  const auto f = Field::finite(2, 3);
  const auto e = exhaustive_curves(f)[17];
  const auto pts = enumerate_points(e);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(star(e, pts[i % pts.size()], pts[(i * 5 + 1) % pts.size()]));
    ++i;
  }
}
BENCHMARK(BM_StarExtension);

// Certifies every triple of one curve; items are triples.
void BM_CertifyCurve(benchmark::State& state) {
  const auto e = curve(Field::prime(static_cast<std::uint64_t>(state.range(0))), "0,0,0,1,1");
  const auto pts = enumerate_points(e);
  for (auto _ : state) {
    for (const auto& p : pts) {
      for (const auto& q : pts) {
        for (const auto& r : pts) benchmark::DoNotOptimize(certify(e, p, q, r));
      }
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pts.size() * pts.size() * pts.size()));
}
BENCHMARK(BM_CertifyCurve)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_RankKernel(benchmark::State& state) {
  const auto e = curve(Field::prime(7), "0,0,0,1,3");
  const auto pts = enumerate_points(e);
  std::optional<MatrixH> h;
  for (const auto& p : pts) {
    for (const auto& q : pts) {
      const auto tp = build_ten_points(e, p, q, pts[pts.size() / 2]);
      if (classify_obvious(e, tp) || has_triple_coincidence(tp, 9)) continue;
      h = build_matrix_H(e, tp, build_index_sets(tp, 9));
      break;
    }
    if (h) break;
  }
  if (!h) {
    state.SkipWithError("no prop1 triple on the benchmark curve");
    return;
  }
  for (auto _ : state) benchmark::DoNotOptimize(rank_kernel(h->m));
}
BENCHMARK(BM_RankKernel);

void BM_SweepF3(benchmark::State& state) {
  const auto f = Field::prime(3);
  for (auto _ : state) benchmark::DoNotOptimize(sweep_field(f));
}
BENCHMARK(BM_SweepF3)->Unit(benchmark::kMillisecond);

void BM_RationalSpotCheck(benchmark::State& state) {
  const auto e = curve(Field::rationals(), "0,0,1,-1,0");
  const auto g = e.point("(0,0)");
  for (auto _ : state) benchmark::DoNotOptimize(rational_spot_check(e, g, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_RationalSpotCheck)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
