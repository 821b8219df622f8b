#pragma once

// Lookup-table providers. Used as oracle providers in tests and by the
// `fixture` provider mode, where each case carries its own tables.

#include <map>
#include <string>
#include <utility>

#include "cverdict/providers.hpp"

namespace cverdict {

/// Keys are normalized texts; pairs are unordered. Unlisted pairs score 1.0
/// when the normalized texts are equal and `fallback` otherwise.
class TableSimilarity final : public SimilarityProvider {
 public:
  explicit TableSimilarity(double fallback = 0.0) : fallback_(fallback) {}
  void set(std::string_view a, std::string_view b, double score);
  double score(std::string_view a, std::string_view b) const override;
  bool empty() const { return scores_.empty(); }

 private:
  std::map<std::pair<std::string, std::string>, double> scores_;
  double fallback_;
};

/// Unlisted texts are Positive.
class TablePolarity final : public PolarityProvider {
 public:
  void set(std::string_view text, Polarity p);
  PolarityResult polarity(std::string_view text) const override;

 private:
  std::map<std::string, Polarity> labels_;
};

/// Directed, keyed by normalized spans. Unlisted pairs are NoRelation.
class TableRelation final : public RelationProvider {
 public:
  void set(std::string_view from_span, std::string_view to_span, Relation r);
  Relation relation(const Event& a, const Event& b) const override;

 private:
  std::map<std::pair<std::string, std::string>, Relation> links_;
};

struct TableProviders {
  TableSimilarity similarity;
  TablePolarity polarity;
  TableRelation relation;

  ProviderSet view() const { return {&similarity, &polarity, &relation}; }
};

}  // namespace cverdict
