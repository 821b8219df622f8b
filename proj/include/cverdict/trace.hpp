#pragma once

#include <string>

#include "cverdict/reasoner.hpp"

namespace cverdict {

/// "Alignment", "CausalLoop", ... as shown in plain-text derivations.
std::string rule_tag(Rule rule);

/// One line per step: "<sentence> [Rule]". Abstentions render a single
/// "no rule fired" line.
std::string render_plain(const VerdictResult& result);

}  // namespace cverdict
