#pragma once

#include <string>
#include <vector>

#include "cverdict/providers.hpp"

namespace cverdict {

struct ConformanceCheck {
  std::string name;
  bool passed = true;
  std::string detail;  // first violation, empty on success
};

struct ConformanceReport {
  std::vector<ConformanceCheck> checks;
  bool passed() const;
  std::string render() const;  // one "PASS|FAIL name: detail" line per check
};

struct ConformanceOptions {
  double reflexivity_tolerance = 1e-9;
  double symmetry_tolerance = 1e-9;
};

/// Probes each provider present in `providers` with a bundled set of texts:
/// reflexivity, symmetry, score range, label validity, determinism. Provider
/// exceptions are recorded as failures of the check that raised them.
ConformanceReport run_conformance(const ProviderSet& providers,
                                  const ConformanceOptions& options = {});

}  // namespace cverdict
