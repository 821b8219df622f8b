#include "cverdict/http_provider.hpp"

#include <cmath>
#include <thread>

#include <httplib.h>

#include "cverdict/error.hpp"

namespace cverdict {

using nlohmann::json;

const char* to_string(ProviderErrorKind kind) {
  switch (kind) {
    case ProviderErrorKind::Transport: return "transport error";
    case ProviderErrorKind::Timeout: return "timeout";
    case ProviderErrorKind::Schema: return "schema violation";
    case ProviderErrorKind::OutOfRange: return "out of range";
    case ProviderErrorKind::Unavailable: return "provider unavailable";
  }
  return "provider error";
}

std::optional<json> ResponseCache::get(const std::string& key) {
  std::lock_guard lock(mutex_);
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  order_.splice(order_.begin(), order_, it->second);
  return it->second->second;
}

void ResponseCache::put(const std::string& key, json value) {
  if (capacity_ == 0) return;
  std::lock_guard lock(mutex_);
  if (auto it = index_.find(key); it != index_.end()) {
    it->second->second = std::move(value);
    order_.splice(order_.begin(), order_, it->second);
    return;
  }
  order_.emplace_front(key, std::move(value));
  index_[key] = order_.begin();
  if (order_.size() > capacity_) {
    index_.erase(order_.back().first);
    order_.pop_back();
  }
}

std::size_t ResponseCache::size() const {
  std::lock_guard lock(mutex_);
  return order_.size();
}

namespace {

// Splits "http://host:port/prefix" into ("http://host:port", "/prefix").
std::pair<std::string, std::string> split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  const auto path_start = url.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
  if (path_start == std::string::npos) return {url, ""};
  std::string prefix = url.substr(path_start);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  return {url.substr(0, path_start), prefix};
}

struct Failure {
  ProviderErrorKind kind;
  std::string message;
  bool retryable;
};

}  // namespace

HttpClient::HttpClient(HttpOptions options)
    : options_(std::move(options)), cache_(options_.cache_capacity) {
  if (options_.url.empty())
    throw ProviderError(ProviderErrorKind::Unavailable, "no service URL configured");
  if (!(options_.timeout_secs > 0.0))
    throw PreconditionError("HTTP timeout must be positive");
  if (options_.retries < 0) throw PreconditionError("HTTP retry count must be >= 0");
  std::tie(host_, prefix_) = split_url(options_.url);
}

std::chrono::milliseconds HttpClient::worst_case_duration() const {
  const auto per_attempt =
      std::chrono::milliseconds(static_cast<long>(std::ceil(options_.timeout_secs * 1000.0)));
  std::chrono::milliseconds backoff_sum{0};
  auto step = options_.backoff;
  for (int i = 0; i < options_.retries; ++i) {
    backoff_sum += step;
    step *= 2;
  }
  return per_attempt * (1 + options_.retries) + backoff_sum;
}

json HttpClient::post_once(const std::string& endpoint, const std::string& body) const {
  httplib::Client client(host_);
  // Connect and read share the per-attempt budget.
  const auto half = std::chrono::microseconds(
      static_cast<long>(options_.timeout_secs * 1e6 / 2.0));
  client.set_connection_timeout(std::chrono::duration_cast<std::chrono::seconds>(half).count(),
                                static_cast<time_t>(half.count() % 1000000));
  client.set_read_timeout(std::chrono::duration_cast<std::chrono::seconds>(half).count(),
                          static_cast<time_t>(half.count() % 1000000));
  client.set_write_timeout(std::chrono::duration_cast<std::chrono::seconds>(half).count(),
                           static_cast<time_t>(half.count() % 1000000));

  const auto started = std::chrono::steady_clock::now();
  auto result = client.Post(prefix_ + endpoint, body, "application/json");
  if (!result) {
    const auto elapsed = std::chrono::steady_clock::now() - started;
    const bool timed_out = result.error() == httplib::Error::ConnectionTimeout ||
                           elapsed >= half - std::chrono::milliseconds(5);
    throw Failure{timed_out ? ProviderErrorKind::Timeout : ProviderErrorKind::Transport,
                  endpoint + ": " + httplib::to_string(result.error()), true};
  }
  if (result->status >= 500)
    throw Failure{ProviderErrorKind::Transport,
                  endpoint + ": HTTP " + std::to_string(result->status) + " " + result->body, true};
  if (result->status != 200)
    throw Failure{ProviderErrorKind::Transport,
                  endpoint + ": HTTP " + std::to_string(result->status) + " " + result->body, false};
  json parsed = json::parse(result->body, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_object())
    throw Failure{ProviderErrorKind::Schema, endpoint + ": response is not a JSON object", false};
  return parsed;
}

json HttpClient::post(const std::string& endpoint, const json& request) const {
  const std::string body = request.dump();
  const std::string key = endpoint + '\n' + body;
  if (auto hit = cache_.get(key)) return *hit;

  auto backoff = options_.backoff;
  for (int attempt = 0;; ++attempt) {
    try {
      json response = post_once(endpoint, body);
      cache_.put(key, response);
      return response;
    } catch (const Failure& f) {
      if (!f.retryable || attempt >= options_.retries) throw ProviderError(f.kind, f.message);
    }
    std::this_thread::sleep_for(backoff);
    backoff *= 2;
  }
}

namespace {

const json& require_field(const json& response, const char* field, const char* endpoint) {
  auto it = response.find(field);
  if (it == response.end())
    throw ProviderError(ProviderErrorKind::Schema,
                        std::string(endpoint) + ": missing field '" + field + "'");
  return *it;
}

}  // namespace

double HttpSimilarity::score(std::string_view a, std::string_view b) const {
  const json response = client_->post("/similarity", {{"text_a", a}, {"text_b", b}});
  const json& score = require_field(response, "score", "/similarity");
  if (!score.is_number())
    throw ProviderError(ProviderErrorKind::Schema, "/similarity: 'score' is not a number");
  const double value = score.get<double>();
  if (!std::isfinite(value) || value < 0.0 || value > 1.0)
    throw ProviderError(ProviderErrorKind::OutOfRange,
                        "/similarity: score " + std::to_string(value) + " outside [0, 1]");
  return value;
}

PolarityResult HttpPolarity::polarity(std::string_view text) const {
  const json response = client_->post("/polarity", {{"text", text}});
  const json& label = require_field(response, "label", "/polarity");
  PolarityResult out;
  if (label == "P") out.label = Polarity::Positive;
  else if (label == "N") out.label = Polarity::Negative;
  else
    throw ProviderError(ProviderErrorKind::Schema, "/polarity: label must be \"P\" or \"N\"");
  const json& confidence = require_field(response, "confidence", "/polarity");
  if (!confidence.is_number())
    throw ProviderError(ProviderErrorKind::Schema, "/polarity: 'confidence' is not a number");
  out.confidence = confidence.get<double>();
  if (!(out.confidence >= 0.0 && out.confidence <= 1.0))
    throw ProviderError(ProviderErrorKind::OutOfRange,
                        "/polarity: confidence " + std::to_string(out.confidence) +
                            " outside [0, 1]");
  return out;
}

Relation HttpRelation::relation(const Event& a, const Event& b) const {
  const json response = client_->post("/relation", {{"event_a", a.span},
                                                    {"context_a", a.context},
                                                    {"event_b", b.span},
                                                    {"context_b", b.context}});
  const json& value = require_field(response, "relation", "/relation");
  if (!value.is_string())
    throw ProviderError(ProviderErrorKind::Schema, "/relation: 'relation' is not a string");
  const auto parsed = parse_relation(value.get<std::string>());
  if (!parsed || !is_extractable(*parsed))
    throw ProviderError(ProviderErrorKind::Schema,
                        "/relation: unknown relation '" + value.get<std::string>() + "'");
  return *parsed;
}

}  // namespace cverdict
