#pragma once

// JSON-over-HTTP client for an external NLP service implementing
// POST /similarity, /polarity and /relation.

#include <chrono>
#include <cstddef>
#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include <json.hpp>

#include "cverdict/providers.hpp"

namespace cverdict {

struct HttpOptions {
  std::string url;  // "http://host:port[/prefix]"
  double timeout_secs = 10.0;
  int retries = 2;
  std::chrono::milliseconds backoff{200};  // doubled after every retry
  std::size_t cache_capacity = 100000;
};

/// Thread-safe LRU keyed by (endpoint, request body).
class ResponseCache {
 public:
  explicit ResponseCache(std::size_t capacity) : capacity_(capacity) {}
  std::optional<nlohmann::json> get(const std::string& key);
  void put(const std::string& key, nlohmann::json value);
  std::size_t size() const;

 private:
  using Entry = std::pair<std::string, nlohmann::json>;
  std::size_t capacity_;
  mutable std::mutex mutex_;
  std::list<Entry> order_;  // most recent first
  std::unordered_map<std::string, std::list<Entry>::iterator> index_;
};

class HttpClient {
 public:
  explicit HttpClient(HttpOptions options);

  /// POSTs `request` to `endpoint` (e.g. "/similarity") and returns the parsed
  /// JSON body. Retries transport failures and 5xx responses with exponential
  /// backoff. Throws ProviderError.
  nlohmann::json post(const std::string& endpoint, const nlohmann::json& request) const;

  /// Upper bound on wall time spent inside one post() call.
  std::chrono::milliseconds worst_case_duration() const;

  const HttpOptions& options() const { return options_; }
  std::size_t cached_responses() const { return cache_.size(); }

 private:
  nlohmann::json post_once(const std::string& endpoint, const std::string& body) const;

  HttpOptions options_;
  std::string host_;    // scheme://host:port
  std::string prefix_;  // path prefix without trailing '/'
  mutable ResponseCache cache_;
};

class HttpSimilarity final : public SimilarityProvider {
 public:
  explicit HttpSimilarity(std::shared_ptr<const HttpClient> client) : client_(std::move(client)) {}
  double score(std::string_view a, std::string_view b) const override;

 private:
  std::shared_ptr<const HttpClient> client_;
};

class HttpPolarity final : public PolarityProvider {
 public:
  explicit HttpPolarity(std::shared_ptr<const HttpClient> client) : client_(std::move(client)) {}
  PolarityResult polarity(std::string_view text) const override;

 private:
  std::shared_ptr<const HttpClient> client_;
};

class HttpRelation final : public RelationProvider {
 public:
  explicit HttpRelation(std::shared_ptr<const HttpClient> client) : client_(std::move(client)) {}
  Relation relation(const Event& a, const Event& b) const override;

 private:
  std::shared_ptr<const HttpClient> client_;
};

}  // namespace cverdict
