#include "cverdict/corpus.hpp"

#include <omp.h>

#include "cverdict/error.hpp"

namespace cverdict {

namespace {

CaseOutcome reason_one(const ClaimCase& c, std::size_t index, const ProviderResolver& providers,
                       const ReasonerConfig& cfg) {
  CaseOutcome out;
  out.id = c.id;
  try {
    out.result = predict_verdict(c, providers(index), cfg);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace

std::vector<CaseOutcome> reason_corpus_serial(std::span<const ClaimCase> cases,
                                              const ProviderResolver& providers,
                                              const ReasonerConfig& cfg) {
  cfg.validate();
  std::vector<CaseOutcome> out;
  out.reserve(cases.size());
  for (std::size_t i = 0; i < cases.size(); ++i)
    out.push_back(reason_one(cases[i], i, providers, cfg));
  return out;
}

std::vector<CaseOutcome> reason_corpus(std::span<const ClaimCase> cases,
                                       const ProviderResolver& providers,
                                       const ReasonerConfig& cfg, int jobs) {
  cfg.validate();
  if (jobs < 1) throw PreconditionError("jobs must be >= 1");
  std::vector<CaseOutcome> out(cases.size());
  const long n = static_cast<long>(cases.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (long i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    out[idx] = reason_one(cases[idx], idx, providers, cfg);
  }
  return out;
}

}  // namespace cverdict
