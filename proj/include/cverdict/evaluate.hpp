#pragma once

// Precision / recall / F1 under the Strict and Tolerant regimes, and the
// CSV / text report tables.

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cverdict/model.hpp"

namespace cverdict {

enum class EvalMode { Strict, Tolerant };
enum class Aggregation { Micro, MacroPerLabel };

std::string_view to_string(EvalMode m);
std::string_view to_string(Aggregation a);
EvalMode parse_eval_mode(std::string_view s);        // "strict" | "tolerant"
Aggregation parse_aggregation(std::string_view s);   // "micro" | "macro"

struct EvalConfig {
  EvalMode mode = EvalMode::Strict;
  Aggregation aggregation = Aggregation::Micro;
};

struct LabelScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;  // gold cases with this label
};

struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t total = 0;
  std::size_t answered = 0;
  std::size_t correct = 0;
  std::size_t abstained = 0;
  std::map<VerdictLabel, LabelScores> per_label;  // filled for MacroPerLabel
};

/// (predicted, gold) pairs. Throws PreconditionError on a gold Abstain.
using LabeledPrediction = std::pair<VerdictLabel, VerdictLabel>;

Metrics score(std::span<const LabeledPrediction> predictions, const EvalConfig& cfg);

/// Harmonic mean; 0 when both inputs are 0.
double f1_score(double precision, double recall);

struct ReportEntry {
  std::string test_set;          // e.g. "AVeriTeC"
  std::string knowledge_source;  // e.g. "LLMs"
  EvalMode mode = EvalMode::Strict;
  Metrics metrics;
};

/// Header "test_set,knowledge_source,P,R,F1"; test sets carry "(S)" or "(T)".
std::string render_csv(std::span<const ReportEntry> entries);
/// Fixed-width table with the same rows and columns.
std::string render_table(std::span<const ReportEntry> entries);

/// Writes `<stem>.csv` content to `csv_path` and the text table next to it
/// with extension ".txt". Throws PreconditionError on empty input and Error
/// when a destination is not writable.
void render_report(std::span<const ReportEntry> entries, const std::filesystem::path& csv_path);

}  // namespace cverdict
