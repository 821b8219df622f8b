#pragma once

// Rule checks over claim and evidence triples (alignment / misalignment,
// causal loops, cherry-picking) and their aggregation into a verdict with a
// replayable derivation trace.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cverdict/matching.hpp"
#include "cverdict/model.hpp"
#include "cverdict/providers.hpp"

namespace cverdict {

enum class Rule { Alignment, Misalignment, CausalLoop, CherryPicking, CrossLink, MatchDecision };

std::string_view to_string(Rule rule);

/// A similarity decision between two events used by a step.
struct MatchRecord {
  Event left;
  Event right;
  MatchVerdict verdict;

  bool operator==(const MatchRecord& o) const {
    return left == o.left && right == o.right && verdict.kind == o.verdict.kind &&
           verdict.score == o.verdict.score && verdict.polarities == o.verdict.polarities;
  }
};

struct TraceStep {
  Rule rule = Rule::Alignment;
  /// Relation premises in path order; `inferred` is their chain (negated when
  /// `object_opposite` is set).
  std::vector<Triple> premises;
  std::vector<MatchRecord> matches;
  std::optional<Relation> inferred;
  bool object_opposite = false;
  std::optional<VerdictLabel> signal;
  std::optional<std::size_t> evidence_item;
  std::string sentence;

  bool operator==(const TraceStep&) const = default;
};

struct VerdictResult {
  VerdictLabel label = VerdictLabel::Abstain;
  std::vector<TraceStep> trace;

  bool operator==(const VerdictResult&) const = default;
};

struct ReasonerConfig {
  MatchConfig match;
  int max_hops = 4;
  bool cherry_loose = false;

  void validate() const;
};

/// Memoizing front end over the similarity and polarity providers for one
/// case. Not thread-safe; create one per case.
class Matcher {
 public:
  Matcher(ProviderSet providers, MatchConfig cfg);

  const MatchVerdict& events(const Event& a, const Event& b);
  const MatchVerdict& triples(const Triple& a, const Triple& b);

  const ProviderSet& providers() const { return providers_; }
  const MatchConfig& config() const { return cfg_; }

 private:
  ProviderSet providers_;
  MatchConfig cfg_;
  std::map<std::pair<std::string, std::string>, MatchVerdict> memo_;
};

/// Stable identity of an event inside one case: provenance plus normalized span.
std::string event_key(const Event& e);

/// Equivalences (Similar / Opposite / Dissimilar decisions for every claim x
/// evidence event pair) and relation links across claim and evidence.
class LinkSet {
 public:
  void add_match(MatchRecord record);
  void add_cross(Triple link);

  /// Decision for (claim event, evidence event), either argument order.
  const MatchRecord* match(const Event& a, const Event& b) const;
  /// Cross-link from `from` to `to`, if one was extracted.
  const Triple* cross(const Event& from, const Event& to) const;

  const std::vector<MatchRecord>& matches() const { return matches_; }
  const std::vector<Triple>& cross_links() const { return cross_; }

 private:
  std::vector<MatchRecord> matches_;
  std::vector<Triple> cross_;
  std::map<std::pair<std::string, std::string>, std::size_t> match_index_;
  std::map<std::pair<std::string, std::string>, std::size_t> cross_index_;
};

/// One fired rule: its signal, the evidence item it came from (none for
/// cherry-picking), and the steps to append to the trace.
struct RuleFiring {
  VerdictLabel label = VerdictLabel::Abstain;
  std::optional<std::size_t> evidence_item;
  std::vector<TraceStep> steps;
};

/// Classifies every (claim event, evidence event) pair; pairs that are not
/// Similar are queried in both directions with the relation provider and
/// non-NoRelation answers become cross-link triples.
LinkSet build_cross_links(std::span<const Triple> claim_triples,
                          std::span<const Triple> evidence_triples, Matcher& matcher);

/// Same-relation or axiom-violating agreement between the claim triple and
/// each evidence triple, directly or through a cross-link at one end.
std::vector<RuleFiring> check_alignment(const Triple& claim,
                                        std::span<const Triple> evidence_triples,
                                        const LinkSet& links, Matcher& matcher);

/// Searches each evidence item for a path from the claim subject to the claim
/// object whose chained relation equals the claim relation.
std::vector<RuleFiring> check_causal_loop(const Triple& claim,
                                          std::span<const Triple> evidence_triples,
                                          const LinkSet& links, int max_hops);

/// Flags evidence triple pairs with the same relation where one endpoint pair
/// is Similar and the other Opposite (or, when `loose`, Dissimilar with
/// differing polarities).
std::optional<RuleFiring> check_cherry_picking(std::span<const Triple> evidence_triples,
                                               Matcher& matcher, bool loose);

/// Runs all checks and aggregates: Conflicting > Refuted > Supported > Abstain.
VerdictResult predict_verdict(const ClaimCase& c, const ProviderSet& providers,
                              const ReasonerConfig& cfg);

/// All evidence triples of a case, in item order.
std::vector<Triple> flatten_evidence(const ClaimCase& c);

}  // namespace cverdict
