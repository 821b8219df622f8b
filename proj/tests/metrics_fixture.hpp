#pragma once

#include <random>
#include <vector>

#include "cverdict/evaluate.hpp"

namespace metrics_fixture {

using cverdict::LabeledPrediction;
using cverdict::VerdictLabel;

// 10 cases: 4 abstentions, 6 answers of which 4 are right.
inline std::vector<LabeledPrediction> ten_six_four() {
  const auto S = VerdictLabel::Supported, R = VerdictLabel::Refuted,
             C = VerdictLabel::Conflicting, A = VerdictLabel::Abstain;
  return {{S, S}, {R, R}, {C, C}, {S, S}, {R, S}, {S, C},
          {A, S}, {A, R}, {A, C}, {A, R}};
}

inline std::vector<LabeledPrediction> random_set(std::mt19937& rng) {
  std::uniform_int_distribution<int> size(1, 40), pred(0, 3), gold(0, 2);
  std::vector<LabeledPrediction> out(static_cast<std::size_t>(size(rng)));
  for (auto& [p, g] : out) {
    p = static_cast<VerdictLabel>(pred(rng));
    g = static_cast<VerdictLabel>(gold(rng));
  }
  return out;
}

}  // namespace metrics_fixture
