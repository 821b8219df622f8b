#pragma once

// Provider interfaces for the three model-backed signals, plus the bundled
// offline baselines. Implementations must be safe to call concurrently.

#include <memory>
#include <string>
#include <string_view>

#include "cverdict/model.hpp"
#include "cverdict/relation.hpp"

namespace cverdict {

enum class Polarity { Positive, Negative };

std::string_view to_string(Polarity p);  // "P" / "N"

struct PolarityResult {
  Polarity label = Polarity::Positive;
  double confidence = 1.0;
};

class SimilarityProvider {
 public:
  virtual ~SimilarityProvider() = default;
  /// Score in [0, 1]; 1 for identical inputs, symmetric.
  virtual double score(std::string_view a, std::string_view b) const = 0;
};

class PolarityProvider {
 public:
  virtual ~PolarityProvider() = default;
  virtual PolarityResult polarity(std::string_view text) const = 0;
};

class RelationProvider {
 public:
  virtual ~RelationProvider() = default;
  /// Directed relation from `a` to `b`; one of the five extractable kinds.
  virtual Relation relation(const Event& a, const Event& b) const = 0;
};

/// Borrowed view over one provider of each kind.
struct ProviderSet {
  const SimilarityProvider* similarity = nullptr;
  const PolarityProvider* polarity = nullptr;
  const RelationProvider* relation = nullptr;
};

// Lexical baselines ---------------------------------------------------------

/// Cosine of L2-normalized term-frequency vectors over word tokens.
double lexical_similarity(std::string_view a, std::string_view b);

/// Lexicon vote; a negation token up to three words before a hit flips it.
/// Ties and no hits are Positive.
Polarity lexicon_polarity(std::string_view text);

/// Cue-word scan of the contexts between the two spans. Claim contexts
/// locate spans but never supply the cue.
Relation baseline_relation(const Event& a, const Event& b);

class LexicalSimilarity final : public SimilarityProvider {
 public:
  double score(std::string_view a, std::string_view b) const override {
    return lexical_similarity(a, b);
  }
};

class LexiconPolarity final : public PolarityProvider {
 public:
  PolarityResult polarity(std::string_view text) const override {
    return {lexicon_polarity(text), 1.0};
  }
};

class CueRelation final : public RelationProvider {
 public:
  Relation relation(const Event& a, const Event& b) const override {
    return baseline_relation(a, b);
  }
};

}  // namespace cverdict
