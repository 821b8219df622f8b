#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cverdict/error.hpp"
#include "cverdict/evaluate.hpp"
#include "metrics_fixture.hpp"
#include "oracles.hpp"

using namespace cverdict;

TEST_CASE("10 cases, 6 answered, 4 correct") {
  const auto preds = metrics_fixture::ten_six_four();
  const auto tolerant = score(preds, {EvalMode::Tolerant, Aggregation::Micro});
  CHECK(tolerant.precision == doctest::Approx(0.6667).epsilon(1e-4));
  CHECK(tolerant.recall == doctest::Approx(0.6).epsilon(1e-4));
  CHECK(tolerant.f1 == doctest::Approx(0.6316).epsilon(1e-4));
  const auto strict = score(preds, {EvalMode::Strict, Aggregation::Micro});
  CHECK(strict.precision == doctest::Approx(0.6667).epsilon(1e-4));
  CHECK(strict.recall == doctest::Approx(0.4).epsilon(1e-4));
  CHECK(strict.f1 == doctest::Approx(0.5).epsilon(1e-4));
  CHECK(strict.total == 10);
  CHECK(strict.answered == 6);
  CHECK(strict.correct == 4);
  CHECK(strict.abstained == 4);
}

TEST_CASE("micro metrics match direct counting on random sets") {
  std::mt19937 rng(42);
  for (int i = 0; i < 1000; ++i) {
    const auto preds = metrics_fixture::random_set(rng);
    int answered = 0, correct = 0;
    for (const auto& [p, g] : preds) {
      answered += p != VerdictLabel::Abstain;
      correct += p == g;
    }
    const int total = static_cast<int>(preds.size());
    for (bool strict : {true, false}) {
      const auto m = score(preds, {strict ? EvalMode::Strict : EvalMode::Tolerant, Aggregation::Micro});
      const auto o = oracle::count_metrics(total, answered, correct, strict);
      CHECK(m.precision == doctest::Approx(o.precision));
      CHECK(m.recall == doctest::Approx(o.recall));
      CHECK(m.f1 == doctest::Approx(o.f1));
    }
    const double strict_r = score(preds, {EvalMode::Strict, Aggregation::Micro}).recall;
    const double tolerant_r = score(preds, {EvalMode::Tolerant, Aggregation::Micro}).recall;
    CHECK(strict_r <= tolerant_r + 1e-12);
  }
}

TEST_CASE("macro aggregation averages one-vs-rest scores over gold labels") {
  const auto preds = metrics_fixture::ten_six_four();
  const auto m = score(preds, {EvalMode::Strict, Aggregation::MacroPerLabel});
  // Supported: tp 2, fp 1 (S predicted for gold C), fn 2 -> P 2/3, R 1/2
  // Refuted:   tp 1, fp 1, fn 1                        -> P 1/2, R 1/3
  // Conflicting: tp 1, fp 0, fn 2                      -> P 1,   R 1/3
  REQUIRE(m.per_label.size() == 3);
  CHECK(m.per_label.at(VerdictLabel::Supported).precision == doctest::Approx(2.0 / 3.0));
  CHECK(m.per_label.at(VerdictLabel::Supported).recall == doctest::Approx(0.5));
  CHECK(m.per_label.at(VerdictLabel::Refuted).precision == doctest::Approx(0.5));
  CHECK(m.per_label.at(VerdictLabel::Refuted).recall == doctest::Approx(1.0 / 3.0));
  CHECK(m.per_label.at(VerdictLabel::Conflicting).precision == doctest::Approx(1.0));
  CHECK(m.per_label.at(VerdictLabel::Conflicting).recall == doctest::Approx(1.0 / 3.0));
  const double p = (2.0 / 3.0 + 0.5 + 1.0) / 3.0;
  const double r = (0.5 + 1.0 / 3.0 + 1.0 / 3.0) / 3.0;
  CHECK(m.precision == doctest::Approx(p));
  CHECK(m.recall == doctest::Approx(r));
  CHECK(m.f1 == doctest::Approx(2 * p * r / (p + r)));
  CHECK(m.per_label.at(VerdictLabel::Supported).support == 4);

  // Tolerant drops abstentions from the false negatives.
  const auto t = score(preds, {EvalMode::Tolerant, Aggregation::MacroPerLabel});
  CHECK(t.per_label.at(VerdictLabel::Supported).recall == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("degenerate inputs") {
  const std::vector<LabeledPrediction> none;
  const auto m = score(none, {});
  CHECK(m.precision == 0.0);
  CHECK(m.recall == 0.0);
  CHECK(m.f1 == 0.0);
  const std::vector<LabeledPrediction> abstained{{VerdictLabel::Abstain, VerdictLabel::Supported}};
  CHECK(score(abstained, {EvalMode::Tolerant, Aggregation::Micro}).precision == 0.0);
  const std::vector<LabeledPrediction> bad{{VerdictLabel::Supported, VerdictLabel::Abstain}};
  CHECK_THROWS_AS(score(bad, {}), PreconditionError);
  CHECK(f1_score(0, 0) == 0.0);
}

TEST_CASE("report rendering") {
  const auto preds = metrics_fixture::ten_six_four();
  std::vector<ReportEntry> entries = {
      {"AVeriTeC", "LLMs", EvalMode::Strict, score(preds, {EvalMode::Strict, Aggregation::Micro})},
      {"AVeriTeC", "LLMs", EvalMode::Tolerant, score(preds, {EvalMode::Tolerant, Aggregation::Micro})}};
  CHECK(render_csv(entries) ==
        "test_set,knowledge_source,P,R,F1\n"
        "AVeriTeC (S),LLMs,0.6667,0.4000,0.5000\n"
        "AVeriTeC (T),LLMs,0.6667,0.6000,0.6316\n");
  const std::string table = render_table(entries);
  CHECK(table.find("AVeriTeC (T) | LLMs") != std::string::npos);

  const auto dir = std::filesystem::temp_directory_path() / "cverdict_report_test";
  std::filesystem::create_directories(dir);
  render_report(entries, dir / "metrics.csv");
  std::ifstream csv(dir / "metrics.csv"), txt(dir / "metrics.txt");
  std::stringstream a, b;
  a << csv.rdbuf();
  b << txt.rdbuf();
  CHECK(a.str() == render_csv(entries));
  CHECK(b.str() == table);
  std::filesystem::remove_all(dir);

  CHECK_THROWS_AS(render_report({}, dir / "x.csv"), PreconditionError);
  CHECK_THROWS_AS(render_report(entries, "/nonexistent-dir/sub/metrics.csv"), Error);
}

TEST_CASE("mode and aggregation names") {
  CHECK(parse_eval_mode("strict") == EvalMode::Strict);
  CHECK(parse_eval_mode("Tolerant") == EvalMode::Tolerant);
  CHECK(parse_aggregation("macro") == Aggregation::MacroPerLabel);
  CHECK_THROWS_AS(parse_eval_mode("lenient"), PreconditionError);
}
