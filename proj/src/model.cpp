#include "cverdict/model.hpp"

#include <utility>

#include "cverdict/text.hpp"

namespace cverdict {

Event::Event(std::string span_, std::string context_, Provenance source_)
    : span(std::move(span_)), context(std::move(context_)), source(source_) {
  if (context.empty()) context = span;
}

Event::Event(std::string span_, Provenance source_)
    : span(std::move(span_)), context(span), source(source_) {}

std::string_view to_string(VerdictLabel label) {
  switch (label) {
    case VerdictLabel::Supported: return "Supported";
    case VerdictLabel::Refuted: return "Refuted";
    case VerdictLabel::Conflicting: return "Conflicting";
    case VerdictLabel::Abstain: return "Abstain";
  }
  return "Abstain";
}

std::optional<VerdictLabel> parse_verdict(std::string_view s) {
  const std::string key = text::normalize(s);
  if (key == "supported") return VerdictLabel::Supported;
  if (key == "refuted") return VerdictLabel::Refuted;
  if (key == "conflicting") return VerdictLabel::Conflicting;
  if (key == "abstain" || key == "none") return VerdictLabel::Abstain;
  return std::nullopt;
}

}  // namespace cverdict
