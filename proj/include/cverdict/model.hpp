#pragma once

// Core value types shared by matching, reasoning, ingest and evaluation.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cverdict/relation.hpp"

namespace cverdict {

/// Where an event or triple came from. Cross-link triples are inferred
/// between a claim event and an event of evidence item `index`.
struct Provenance {
  enum class Kind { Claim, Evidence, CrossLink };
  Kind kind = Kind::Claim;
  std::size_t index = 0;

  static Provenance claim() { return {Kind::Claim, 0}; }
  static Provenance evidence(std::size_t i) { return {Kind::Evidence, i}; }
  static Provenance cross_link(std::size_t i) { return {Kind::CrossLink, i}; }

  bool operator==(const Provenance&) const = default;
};

struct Event {
  std::string span;
  std::string context;  // full sentence containing span; equals span when absent
  Provenance source;

  Event() = default;
  Event(std::string span_, std::string context_, Provenance source_);
  /// Synthetic event: context := span.
  Event(std::string span_, Provenance source_);

  bool operator==(const Event&) const = default;
};

struct Triple {
  Event subject;
  Relation relation = Relation::Cause;
  Event object;
  Provenance provenance;

  bool operator==(const Triple&) const = default;
};

enum class VerdictLabel { Supported, Refuted, Conflicting, Abstain };

std::string_view to_string(VerdictLabel label);
std::optional<VerdictLabel> parse_verdict(std::string_view text);

struct EvidenceItem {
  std::string text;
  std::vector<Triple> triples;
};

struct ClaimCase {
  std::string id;
  std::string claim_text;
  std::vector<Triple> claim_triples;
  std::vector<EvidenceItem> evidence;
  std::optional<VerdictLabel> gold;
};

}  // namespace cverdict
