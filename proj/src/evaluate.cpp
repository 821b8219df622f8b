#include "cverdict/evaluate.hpp"

#include "cverdict/error.hpp"
#include "cverdict/text.hpp"

namespace cverdict {

std::string_view to_string(EvalMode m) { return m == EvalMode::Strict ? "strict" : "tolerant"; }

std::string_view to_string(Aggregation a) {
  return a == Aggregation::Micro ? "micro" : "macro";
}

EvalMode parse_eval_mode(std::string_view s) {
  const std::string key = text::normalize(s);
  if (key == "strict") return EvalMode::Strict;
  if (key == "tolerant") return EvalMode::Tolerant;
  throw PreconditionError("unknown evaluation mode '" + std::string(s) + "'");
}

Aggregation parse_aggregation(std::string_view s) {
  const std::string key = text::normalize(s);
  if (key == "micro") return Aggregation::Micro;
  if (key == "macro" || key == "macro-per-label") return Aggregation::MacroPerLabel;
  throw PreconditionError("unknown aggregation '" + std::string(s) + "'");
}

double f1_score(double precision, double recall) {
  const double sum = precision + recall;
  return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

Metrics score(std::span<const LabeledPrediction> predictions, const EvalConfig& cfg) {
  Metrics m;
  for (const auto& [pred, gold] : predictions) {
    if (gold == VerdictLabel::Abstain)
      throw PreconditionError("gold labels must not be Abstain");
    ++m.total;
    if (pred == VerdictLabel::Abstain) {
      ++m.abstained;
      continue;
    }
    ++m.answered;
    if (pred == gold) ++m.correct;
  }

  if (cfg.aggregation == Aggregation::Micro) {
    m.precision = ratio(m.correct, m.answered);
    m.recall = cfg.mode == EvalMode::Tolerant ? ratio(m.answered, m.total)
                                              : ratio(m.correct, m.total);
    m.f1 = f1_score(m.precision, m.recall);
    return m;
  }

  // One-vs-rest per gold label present. Tolerant ignores abstained cases;
  // Strict counts them as false negatives of their gold label.
  struct Counts {
    std::size_t tp = 0, fp = 0, fn = 0, support = 0;
  };
  std::map<VerdictLabel, Counts> counts;
  for (const auto& [pred, gold] : predictions) ++counts[gold].support;
  for (const auto& [pred, gold] : predictions) {
    if (pred == VerdictLabel::Abstain) {
      if (cfg.mode == EvalMode::Strict) ++counts[gold].fn;
      continue;
    }
    if (pred == gold) {
      ++counts[gold].tp;
    } else {
      ++counts[gold].fn;
      if (auto it = counts.find(pred); it != counts.end()) ++it->second.fp;
    }
  }
  double p_sum = 0.0, r_sum = 0.0;
  for (const auto& [label, c] : counts) {
    LabelScores s;
    s.precision = ratio(c.tp, c.tp + c.fp);
    s.recall = ratio(c.tp, c.tp + c.fn);
    s.f1 = f1_score(s.precision, s.recall);
    s.support = c.support;
    m.per_label[label] = s;
    p_sum += s.precision;
    r_sum += s.recall;
  }
  if (!counts.empty()) {
    m.precision = p_sum / static_cast<double>(counts.size());
    m.recall = r_sum / static_cast<double>(counts.size());
  }
  m.f1 = f1_score(m.precision, m.recall);
  return m;
}

}  // namespace cverdict
