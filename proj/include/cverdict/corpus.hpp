#pragma once

// Corpus-level reasoning: an OpenMP case-parallel driver and the serial
// reference it is tested against.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cverdict/reasoner.hpp"

namespace cverdict {

/// Providers to use for case `index`. Called concurrently.
using ProviderResolver = std::function<ProviderSet(std::size_t index)>;

struct CaseOutcome {
  std::string id;
  std::optional<VerdictResult> result;  // empty when the case failed
  std::string error;
};

std::vector<CaseOutcome> reason_corpus_serial(std::span<const ClaimCase> cases,
                                              const ProviderResolver& providers,
                                              const ReasonerConfig& cfg);

/// Same output as the serial path, in input order, for any `jobs` >= 1.
std::vector<CaseOutcome> reason_corpus(std::span<const ClaimCase> cases,
                                       const ProviderResolver& providers,
                                       const ReasonerConfig& cfg, int jobs);

}  // namespace cverdict
