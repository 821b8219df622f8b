#include "cverdict/matching.hpp"

#include <cmath>

#include "cverdict/error.hpp"
#include "cverdict/text.hpp"

namespace cverdict {

std::string_view to_string(MatchKind kind) {
  switch (kind) {
    case MatchKind::Similar: return "similar";
    case MatchKind::Dissimilar: return "dissimilar";
    case MatchKind::Opposite: return "opposite";
  }
  return "dissimilar";
}

void MatchConfig::validate() const {
  if (!(theta > 0.0 && theta < 1.0))
    throw PreconditionError("similarity threshold must lie in (0, 1), got " +
                            std::to_string(theta));
}

MatchKind classify_scores(double score, Polarity a, Polarity b, double theta) {
  if (!(score > theta)) return MatchKind::Dissimilar;
  return a == b ? MatchKind::Similar : MatchKind::Opposite;
}

std::pair<std::string, std::string> select_comparison_text(const Event& a, const Event& b) {
  if (text::normalize(a.span) == text::normalize(b.span)) return {a.span, b.span};
  auto with_context = [](const Event& e) {
    if (e.context.empty() || text::normalize(e.context) == text::normalize(e.span)) return e.span;
    return e.span + " " + e.context;
  };
  return {with_context(a), with_context(b)};
}

std::string render_triple(const Triple& t) {
  std::string out = t.subject.span;
  out += ' ';
  out += relation_verb(t.relation);
  out += ' ';
  out += t.object.span;
  return out;
}

MatchVerdict classify_texts(std::string_view a, std::string_view b, const ProviderSet& providers,
                            const MatchConfig& cfg) {
  if (!providers.similarity || !providers.polarity)
    throw PreconditionError("classify: similarity and polarity providers are required");
  const double score = providers.similarity->score(a, b);
  if (!std::isfinite(score) || score < 0.0 || score > 1.0)
    throw ProviderError(ProviderErrorKind::OutOfRange,
                        "similarity score " + std::to_string(score) + " outside [0, 1]");
  const Polarity pa = providers.polarity->polarity(a).label;
  const Polarity pb = providers.polarity->polarity(b).label;
  return {classify_scores(score, pa, pb, cfg.theta), score, {pa, pb}};
}

MatchVerdict classify_pair(const Event& a, const Event& b, const ProviderSet& providers,
                           const MatchConfig& cfg) {
  const auto [ta, tb] = select_comparison_text(a, b);
  return classify_texts(ta, tb, providers, cfg);
}

MatchVerdict classify_triple_pair(const Triple& a, const Triple& b, const ProviderSet& providers,
                                  const MatchConfig& cfg) {
  return classify_texts(render_triple(a), render_triple(b), providers, cfg);
}

}  // namespace cverdict
