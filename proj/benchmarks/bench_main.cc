#include <benchmark/benchmark.h>

#include <random>

#include "hlparse/ensemble.h"
#include "hlparse/eval.h"
#include "hlparse/parser.h"
#include "hlparse/project.h"
#include "synth/synth.h"

namespace hlparse {
namespace {

std::vector<HeadlinePair> Pairs(int n) {
  std::vector<HeadlinePair> pairs;
  for (auto& item : synth::NewsCorpusWithAligned(n, 1)) pairs.push_back({item.headline, item.lead});
  return pairs;
}

void BM_BuildSilverCorpus(benchmark::State& state) {
  auto pairs = Pairs(1000);
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(BuildSilverCorpus(pairs, {.jobs = jobs}));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pairs.size()));
}
BENCHMARK(BM_BuildSilverCorpus)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

const ParserModel& Model() {
  static const ParserModel model = [] {
    std::vector<TrainingStage> stages = {{synth::GoldCorpus(1000, 2), 5}};
    return Train(stages);
  }();
  return model;
}

void BM_Parse(benchmark::State& state) {
  Treebank test;
  for (auto& item : synth::NewsCorpus(500, 3)) test.trees.push_back(item.headline_gold);
  const ParserModel& model = Model();
  for (auto _ : state) benchmark::DoNotOptimize(ParseTreebank(model, test));
  state.SetItemsProcessed(state.iterations() * test.token_count());
}
BENCHMARK(BM_Parse)->Unit(benchmark::kMillisecond);

void BM_Train(benchmark::State& state) {
  std::vector<TrainingStage> stages = {{synth::GoldCorpus(500, 4), 1}};
  for (auto _ : state) benchmark::DoNotOptimize(Train(stages));
}
BENCHMARK(BM_Train)->Unit(benchmark::kMillisecond);

void BM_Reparse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(5);
  VoteGraph v;
  v.n = n;
  v.voters = 5;
  v.weights.resize((n + 1) * (n + 1));
  for (int h = 0; h <= n; ++h)
    for (int d = 1; d <= n; ++d)
      if (h != d) v.weights[h * (n + 1) + d] = static_cast<double>(rng() % 6);
  for (auto _ : state) benchmark::DoNotOptimize(ReparseVotes(v));
}
BENCHMARK(BM_Reparse)->Arg(8)->Arg(16)->Arg(40);

void BM_Score(benchmark::State& state) {
  Treebank gold = synth::GoldCorpus(2000, 6);
  for (auto _ : state) benchmark::DoNotOptimize(Score(gold, gold));
  state.SetItemsProcessed(state.iterations() * gold.token_count());
}
BENCHMARK(BM_Score)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace hlparse

BENCHMARK_MAIN();
