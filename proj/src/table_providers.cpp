#include "cverdict/table_providers.hpp"

#include "cverdict/text.hpp"

namespace cverdict {

namespace {

std::pair<std::string, std::string> unordered_key(std::string_view a, std::string_view b) {
  auto na = text::normalize(a);
  auto nb = text::normalize(b);
  if (nb < na) std::swap(na, nb);
  return {std::move(na), std::move(nb)};
}

}  // namespace

void TableSimilarity::set(std::string_view a, std::string_view b, double score) {
  scores_[unordered_key(a, b)] = score;
}

double TableSimilarity::score(std::string_view a, std::string_view b) const {
  auto key = unordered_key(a, b);
  if (auto it = scores_.find(key); it != scores_.end()) return it->second;
  return key.first == key.second ? 1.0 : fallback_;
}

void TablePolarity::set(std::string_view text, Polarity p) { labels_[text::normalize(text)] = p; }

PolarityResult TablePolarity::polarity(std::string_view text) const {
  if (auto it = labels_.find(text::normalize(text)); it != labels_.end()) return {it->second, 1.0};
  return {Polarity::Positive, 1.0};
}

void TableRelation::set(std::string_view from_span, std::string_view to_span, Relation r) {
  links_[{text::normalize(from_span), text::normalize(to_span)}] = r;
}

Relation TableRelation::relation(const Event& a, const Event& b) const {
  if (auto it = links_.find({text::normalize(a.span), text::normalize(b.span)});
      it != links_.end())
    return it->second;
  return Relation::NoRelation;
}

}  // namespace cverdict
