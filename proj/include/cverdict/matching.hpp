#pragma once

// Similar / Dissimilar / Opposite classification of event and triple pairs
// from a similarity score and a polarity pair.

#include <string>
#include <string_view>
#include <utility>

#include "cverdict/model.hpp"
#include "cverdict/providers.hpp"

namespace cverdict {

enum class MatchKind { Similar, Dissimilar, Opposite };

std::string_view to_string(MatchKind kind);

struct MatchVerdict {
  MatchKind kind = MatchKind::Dissimilar;
  double score = 0.0;
  std::pair<Polarity, Polarity> polarities{Polarity::Positive, Polarity::Positive};
};

struct MatchConfig {
  static constexpr double kDefaultTheta = 0.54;
  double theta = kDefaultTheta;

  /// Throws PreconditionError unless 0 < theta < 1.
  void validate() const;
};

/// The three-way rule. A score equal to theta is Dissimilar.
MatchKind classify_scores(double score, Polarity a, Polarity b, double theta);

/// Bare spans when the normalized spans coincide, otherwise each span
/// followed by its context sentence.
std::pair<std::string, std::string> select_comparison_text(const Event& a, const Event& b);

/// "subject verb object", e.g. "strict dress codes causes decline in morale".
std::string render_triple(const Triple& t);

/// Scores and labels two texts. Polarity is taken on the same texts.
MatchVerdict classify_texts(std::string_view a, std::string_view b, const ProviderSet& providers,
                            const MatchConfig& cfg);

MatchVerdict classify_pair(const Event& a, const Event& b, const ProviderSet& providers,
                           const MatchConfig& cfg);

MatchVerdict classify_triple_pair(const Triple& a, const Triple& b, const ProviderSet& providers,
                                  const MatchConfig& cfg);

}  // namespace cverdict
