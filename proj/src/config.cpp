#include "cverdict/config.hpp"

#include <cstdlib>
#include <fstream>

#include "cverdict/error.hpp"
#include "cverdict/text.hpp"

namespace cverdict {

using nlohmann::json;

std::string_view to_string(ProviderKind k) {
  switch (k) {
    case ProviderKind::Lexical: return "lexical";
    case ProviderKind::Http: return "http";
    case ProviderKind::Fixture: return "fixture";
  }
  return "lexical";
}

ProviderKind parse_provider_kind(std::string_view s) {
  const std::string key = text::normalize(s);
  if (key == "lexical") return ProviderKind::Lexical;
  if (key == "http") return ProviderKind::Http;
  if (key == "fixture") return ProviderKind::Fixture;
  throw PreconditionError("unknown provider '" + std::string(s) + "' (lexical|http|fixture)");
}

ReasonerConfig RunConfig::reasoner() const {
  ReasonerConfig r;
  r.match.theta = theta;
  r.max_hops = max_hops;
  r.cherry_loose = cherry_loose;
  return r;
}

void RunConfig::validate() const {
  reasoner().validate();
  if (jobs < 1) throw PreconditionError("jobs must be >= 1");
  if (!(timeout_secs > 0.0)) throw PreconditionError("timeout must be positive");
  if ((provider == ProviderKind::Http || relation_source == ProviderKind::Http) &&
      service_url.empty())
    throw PreconditionError("http provider selected but no service URL (--service-url or "
                            "NLP_SERVICE_URL)");
}

void apply_config_json(RunConfig& cfg, const json& j) {
  if (!j.is_object()) throw PreconditionError("config file must hold a JSON object");
  try {
    if (j.contains("provider")) {
      cfg.provider = parse_provider_kind(j.at("provider").get<std::string>());
      cfg.relation_source = cfg.provider;
    }
    if (j.contains("relations"))
      cfg.relation_source = parse_provider_kind(j.at("relations").get<std::string>());
    if (j.contains("service_url")) cfg.service_url = j.at("service_url").get<std::string>();
    if (j.contains("timeout_secs")) cfg.timeout_secs = j.at("timeout_secs").get<double>();
    if (j.contains("similarity_threshold")) cfg.theta = j.at("similarity_threshold").get<double>();
    if (j.contains("max_hops")) cfg.max_hops = j.at("max_hops").get<int>();
    if (j.contains("cherry_loose")) cfg.cherry_loose = j.at("cherry_loose").get<bool>();
    if (j.contains("jobs")) cfg.jobs = j.at("jobs").get<int>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("bad config value: ") + e.what());
  }
}

void apply_environment(RunConfig& cfg) {
  if (const char* url = std::getenv("NLP_SERVICE_URL"); url && *url) cfg.service_url = url;
  if (const char* t = std::getenv("NLP_TIMEOUT_SECS"); t && *t) {
    char* end = nullptr;
    const double v = std::strtod(t, &end);
    if (end == t || *end != '\0')
      throw PreconditionError(std::string("NLP_TIMEOUT_SECS is not a number: ") + t);
    cfg.timeout_secs = v;
  }
}

void apply_overrides(RunConfig& cfg, const ConfigOverrides& o) {
  if (o.provider) {
    cfg.provider = parse_provider_kind(*o.provider);
    cfg.relation_source = cfg.provider;
  }
  if (o.relations) cfg.relation_source = parse_provider_kind(*o.relations);
  if (o.service_url) cfg.service_url = *o.service_url;
  if (o.timeout_secs) cfg.timeout_secs = *o.timeout_secs;
  if (o.theta) cfg.theta = *o.theta;
  if (o.max_hops) cfg.max_hops = *o.max_hops;
  if (o.cherry_loose) cfg.cherry_loose = *o.cherry_loose;
  if (o.jobs) cfg.jobs = *o.jobs;
  if (o.seed) cfg.seed = *o.seed;
}

RunConfig resolve_config(const std::optional<std::filesystem::path>& config_file,
                         const ConfigOverrides& overrides) {
  RunConfig cfg;
  if (config_file) {
    std::ifstream in(*config_file);
    if (!in) throw PreconditionError("cannot open config file " + config_file->string());
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded())
      throw PreconditionError("config file " + config_file->string() + " is not valid JSON");
    apply_config_json(cfg, j);
  }
  apply_environment(cfg);
  apply_overrides(cfg, overrides);
  cfg.validate();
  return cfg;
}

json to_json(const RunConfig& cfg) {
  return {{"provider", std::string(to_string(cfg.provider))},
          {"relations", std::string(to_string(cfg.relation_source))},
          {"service_url", cfg.service_url},
          {"timeout_secs", cfg.timeout_secs},
          {"similarity_threshold", cfg.theta},
          {"max_hops", cfg.max_hops},
          {"cherry_loose", cfg.cherry_loose},
          {"jobs", cfg.jobs},
          {"seed", cfg.seed}};
}

}  // namespace cverdict
