#include "pasting/glue.hpp"
#include "pasting/scheme.hpp"
#include "pasting/io.hpp"
#include "pasting/orders.hpp"
#include "pasting/terms.hpp"
#include "pasting/verify.hpp"

#include <benchmark/benchmark.h>

using namespace pasting;

namespace {

std::string fixture(const std::string &name) {
  return std::string(PASTING_FIXTURE_DIR) + "/" + name;
}

void BM_EnumerateOrdersSeries(benchmark::State &state) {
  PastingScheme s = requireValid(loadScheme(fixture("series.json")));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerateOrders(s));
}
BENCHMARK(BM_EnumerateOrdersSeries);

void BM_EnumerateOrdersCorpus(benchmark::State &state) {
  auto schemes = corpus(50, static_cast<std::size_t>(state.range(0)), 1);
  std::size_t total = 0;
  for (auto _ : state)
    for (const auto &s : schemes)
      total += enumerateOrders(s).size();
  benchmark::DoNotOptimize(total);
  state.SetItemsProcessed(state.iterations() * schemes.size());
}
BENCHMARK(BM_EnumerateOrdersCorpus)->Arg(4)->Arg(6);

// Two routes around the braid hexagon of the series scheme.
void BM_EqualUpToBraid(benchmark::State &state) {
  Labelling lab = loadLabelling(fixture("series.lab.json"));
  const auto &s = lab.scheme();
  CompOrder from = parseOrder("F,H,G"), to = parseOrder("G,H,F");
  CompOrder left = parseOrder("H,F,G"), right = parseOrder("F,G,H");
  auto route = [&](const CompOrder &via) {
    auto path = connectOrders(s, from, via);
    auto rest = connectOrders(s, via, to);
    path.insert(path.end(), rest.begin(), rest.end());
    return gammaWord(lab, from, path);
  };
  MoveWord a = route(left), b = route(right);
  for (auto _ : state)
    benchmark::DoNotOptimize(equalUpTo(a, b));
}
BENCHMARK(BM_EqualUpToBraid);

void BM_OctagonDoubleStack(benchmark::State &state) {
  Labelling lab = loadLabelling(fixture("double-stack.lab.json"));
  std::vector<JChoice> choices{JChoice::PullLower, JChoice::PushUpper,
                               JChoice::FirstGlued};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        checkOctagon(lab, *lab.decl("Pi"), *lab.decl("Omega"), choices));
}
BENCHMARK(BM_OctagonDoubleStack)->Unit(benchmark::kMillisecond);

void BM_HeptagonSeries(benchmark::State &state) {
  Labelling lab = loadLabelling(fixture("series.lab.json"));
  auto assignments = heptagonAssignments(lab.scheme(), 64, 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(checkHeptagon(lab, *lab.decl("Gamma"),
                                           *lab.decl("Delta"), assignments));
}
BENCHMARK(BM_HeptagonSeries)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
