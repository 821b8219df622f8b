#include "cverdict/trace.hpp"

namespace cverdict {

std::string rule_tag(Rule rule) {
  switch (rule) {
    case Rule::Alignment: return "Alignment";
    case Rule::Misalignment: return "Misalignment";
    case Rule::CausalLoop: return "CausalLoop";
    case Rule::CherryPicking: return "CherryPicking";
    case Rule::CrossLink: return "CrossLink";
    case Rule::MatchDecision: return "MatchDecision";
  }
  return "Alignment";
}

std::string render_plain(const VerdictResult& result) {
  if (result.trace.empty()) return "no rule fired: verdict " +
                                   std::string(to_string(result.label)) + "\n";
  std::string out;
  for (const TraceStep& step : result.trace) {
    out += step.sentence;
    out += " [";
    out += rule_tag(step.rule);
    out += "]\n";
  }
  return out;
}

}  // namespace cverdict
