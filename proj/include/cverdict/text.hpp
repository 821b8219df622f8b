#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cverdict::text {

/// Lowercase and collapse runs of whitespace to a single space; trims ends.
std::string normalize(std::string_view s);

/// Lowercased alphanumeric word tokens; punctuation splits and is dropped.
std::vector<std::string> word_tokens(std::string_view s);

}  // namespace cverdict::text
