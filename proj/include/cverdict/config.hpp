#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "cverdict/reasoner.hpp"

namespace cverdict {

enum class ProviderKind { Lexical, Http, Fixture };

std::string_view to_string(ProviderKind k);
ProviderKind parse_provider_kind(std::string_view s);  // lexical | http | fixture

struct RunConfig {
  ProviderKind provider = ProviderKind::Lexical;
  /// Where cross-text relations come from: the selected provider, or the
  /// per-case oracle tables of the cases file.
  ProviderKind relation_source = ProviderKind::Lexical;
  std::string service_url;
  double timeout_secs = 10.0;
  double theta = MatchConfig::kDefaultTheta;
  int max_hops = 4;
  bool cherry_loose = false;
  int jobs = 1;
  std::uint64_t seed = 0;

  ReasonerConfig reasoner() const;
  void validate() const;  // throws PreconditionError
};

/// Optional command-line values; set fields win over everything else.
struct ConfigOverrides {
  std::optional<std::string> provider;
  std::optional<std::string> relations;
  std::optional<std::string> service_url;
  std::optional<double> timeout_secs;
  std::optional<double> theta;
  std::optional<int> max_hops;
  std::optional<bool> cherry_loose;
  std::optional<int> jobs;
  std::optional<std::uint64_t> seed;
};

/// Applies a JSON config object. Keys: provider, relations, service_url,
/// timeout_secs, similarity_threshold, max_hops, cherry_loose, jobs, seed.
void apply_config_json(RunConfig& cfg, const nlohmann::json& j);

/// Applies NLP_SERVICE_URL and NLP_TIMEOUT_SECS when set.
void apply_environment(RunConfig& cfg);

void apply_overrides(RunConfig& cfg, const ConfigOverrides& o);

/// defaults < config file < environment < flags; validated.
RunConfig resolve_config(const std::optional<std::filesystem::path>& config_file,
                         const ConfigOverrides& overrides);

nlohmann::json to_json(const RunConfig& cfg);

}  // namespace cverdict
