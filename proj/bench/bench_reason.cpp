// Serial reference vs OpenMP corpus driver on a synthetic corpus.

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "cverdict/corpus.hpp"
#include "cverdict/providers.hpp"

using namespace cverdict;

namespace {

const std::vector<std::string> kPhrases = {
    "heavy rainfall",       "river flooding",      "crop failure",        "food prices rising",
    "public unrest",        "policy change",       "new irrigation",      "stable harvests",
    "daily exercise",       "muscle fatigue",      "better sleep",        "lower stress",
    "vaccination campaign", "infection rates",     "hospital admissions", "economic growth",
};

std::vector<ClaimCase> make_corpus(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> phrase(0, kPhrases.size() - 1);
  std::uniform_int_distribution<int> rel(0, 3);
  std::uniform_int_distribution<int> count(2, 6);
  auto pick_rel = [&] { return kAllRelations[static_cast<std::size_t>(rel(rng))]; };

  std::vector<ClaimCase> out;
  for (std::size_t i = 0; i < n; ++i) {
    ClaimCase c;
    c.id = "synthetic-" + std::to_string(i);
    const auto a = kPhrases[phrase(rng)], b = kPhrases[phrase(rng)];
    c.claim_text = a + " leads to " + b;
    c.claim_triples.push_back({Event(a, Provenance::claim()), pick_rel(), Event(b, Provenance::claim()),
                               Provenance::claim()});
    const int items = count(rng);
    for (int k = 0; k < items; ++k) {
      EvidenceItem item;
      const auto src = Provenance::evidence(static_cast<std::size_t>(k));
      const auto x = kPhrases[phrase(rng)], y = kPhrases[phrase(rng)];
      item.text = x + " because of " + y;
      item.triples.push_back({Event(x, item.text, src), pick_rel(), Event(y, item.text, src), src});
      c.evidence.push_back(std::move(item));
    }
    out.push_back(std::move(c));
  }
  return out;
}

const LexicalSimilarity kSim;
const LexiconPolarity kPol;
const CueRelation kRel;

ProviderSet lexical(std::size_t) { return {&kSim, &kPol, &kRel}; }

void BM_ReasonSerial(benchmark::State& state) {
  const auto corpus = make_corpus(static_cast<std::size_t>(state.range(0)), 7);
  const ReasonerConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(reason_corpus_serial(corpus, lexical, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ReasonParallel(benchmark::State& state) {
  const auto corpus = make_corpus(static_cast<std::size_t>(state.range(0)), 7);
  const ReasonerConfig cfg;
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(reason_corpus(corpus, lexical, cfg, jobs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_ReasonSerial)->Arg(200)->Arg(2000)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReasonParallel)
    ->ArgsProduct({{200, 2000}, {1, 2, 4, 8}})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
