#include <doctest.h>

#include <atomic>
#include <chrono>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "cverdict/conformance.hpp"
#include "cverdict/error.hpp"
#include "cverdict/http_provider.hpp"
#include "cverdict/providers.hpp"

using namespace cverdict;
using nlohmann::json;

namespace {

// Minimal stand-in for the NLP service. Behaviour is switched per test.
struct MockService {
  enum class Mode { Good, OutOfRange, Asymmetric, Slow, Flaky, BadSchema };

  httplib::Server server;
  std::thread thread;
  int port = 0;
  std::atomic<Mode> mode{Mode::Good};
  std::atomic<int> hits{0};
  std::atomic<int> flaky_failures{0};

  MockService() {
    server.Post("/similarity", [this](const httplib::Request& req, httplib::Response& res) {
      ++hits;
      const auto body = json::parse(req.body);
      const std::string a = body.at("text_a"), b = body.at("text_b");
      double score = a == b ? 1.0 : 0.42;
      switch (mode.load()) {
        case Mode::OutOfRange: score = 1.2; break;
        case Mode::Asymmetric: score = a == b ? 1.0 : (a < b ? 0.2 : 0.8); break;
        case Mode::Slow: std::this_thread::sleep_for(std::chrono::milliseconds(1500)); break;
        case Mode::Flaky:
          if (flaky_failures.fetch_add(1) < 2) {
            res.status = 503;
            return;
          }
          break;
        case Mode::BadSchema:
          res.set_content(R"({"value": 3})", "application/json");
          return;
        case Mode::Good: break;
      }
      res.set_content(json{{"score", score}}.dump(), "application/json");
    });
    server.Post("/polarity", [this](const httplib::Request& req, httplib::Response& res) {
      ++hits;
      const std::string t = json::parse(req.body).at("text");
      const bool negative = t.find("bad") != std::string::npos;
      res.set_content(json{{"label", negative ? "N" : "P"}, {"confidence", 0.9}}.dump(),
                      "application/json");
    });
    server.Post("/relation", [this](const httplib::Request& req, httplib::Response& res) {
      ++hits;
      const auto body = json::parse(req.body);
      const std::string a = body.at("event_a");
      res.set_content(json{{"relation", a == "rain" ? "cause" : "no_relation"}}.dump(),
                      "application/json");
    });
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~MockService() {
    server.stop();
    thread.join();
  }

  std::string url() const { return "http://127.0.0.1:" + std::to_string(port); }
};

HttpOptions fast_options(const std::string& url) {
  HttpOptions o;
  o.url = url;
  o.timeout_secs = 1.0;
  o.retries = 2;
  o.backoff = std::chrono::milliseconds(10);
  return o;
}

}  // namespace

TEST_CASE("http providers speak the wire format") {
  MockService svc;
  auto client = std::make_shared<const HttpClient>(fast_options(svc.url()));
  HttpSimilarity sim(client);
  HttpPolarity pol(client);
  HttpRelation rel(client);

  CHECK(sim.score("x", "x") == doctest::Approx(1.0));
  CHECK(sim.score("x", "y") == doctest::Approx(0.42));
  CHECK(pol.polarity("a bad day").label == Polarity::Negative);
  CHECK(pol.polarity("a bad day").confidence == doctest::Approx(0.9));
  CHECK(pol.polarity("fine").label == Polarity::Positive);
  const auto src = Provenance::evidence(0);
  CHECK(rel.relation(Event("rain", src), Event("flood", src)) == Relation::Cause);
  CHECK(rel.relation(Event("flood", src), Event("rain", src)) == Relation::NoRelation);

  const auto report = run_conformance({&sim, &pol, &rel});
  INFO(report.render());
  CHECK(report.passed());
}

TEST_CASE("responses are cached by endpoint and body") {
  MockService svc;
  auto client = std::make_shared<const HttpClient>(fast_options(svc.url()));
  HttpSimilarity sim(client);
  sim.score("p", "q");
  const int after_first = svc.hits.load();
  sim.score("p", "q");
  CHECK(svc.hits.load() == after_first);
  CHECK(client->cached_responses() == 1);
}

TEST_CASE("score outside [0, 1] is rejected") {
  MockService svc;
  svc.mode = MockService::Mode::OutOfRange;
  HttpSimilarity sim(std::make_shared<const HttpClient>(fast_options(svc.url())));
  try {
    sim.score("a", "b");
    FAIL("expected ProviderError");
  } catch (const ProviderError& e) {
    CHECK(e.kind() == ProviderErrorKind::OutOfRange);
  }
}

TEST_CASE("schema violations are rejected") {
  MockService svc;
  svc.mode = MockService::Mode::BadSchema;
  HttpSimilarity sim(std::make_shared<const HttpClient>(fast_options(svc.url())));
  try {
    sim.score("a", "b");
    FAIL("expected ProviderError");
  } catch (const ProviderError& e) {
    CHECK(e.kind() == ProviderErrorKind::Schema);
  }
}

TEST_CASE("asymmetric service fails the symmetry conformance check") {
  MockService svc;
  svc.mode = MockService::Mode::Asymmetric;
  HttpSimilarity sim(std::make_shared<const HttpClient>(fast_options(svc.url())));
  const auto report = run_conformance({&sim, nullptr, nullptr}, {1e-3, 1e-6});
  CHECK_FALSE(report.passed());
}

TEST_CASE("transient 5xx responses are retried") {
  MockService svc;
  svc.mode = MockService::Mode::Flaky;
  HttpSimilarity sim(std::make_shared<const HttpClient>(fast_options(svc.url())));
  CHECK(sim.score("a", "b") == doctest::Approx(0.42));
  CHECK(svc.flaky_failures.load() == 3);
}

TEST_CASE("slow service times out within the configured bound") {
  MockService svc;
  svc.mode = MockService::Mode::Slow;
  auto opts = fast_options(svc.url());
  opts.timeout_secs = 0.4;
  opts.retries = 1;
  auto client = std::make_shared<const HttpClient>(opts);
  HttpSimilarity sim(client);
  const auto start = std::chrono::steady_clock::now();
  try {
    sim.score("a", "b");
    FAIL("expected ProviderError");
  } catch (const ProviderError& e) {
    CHECK(e.kind() == ProviderErrorKind::Timeout);
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  CHECK(elapsed <= client->worst_case_duration() + std::chrono::milliseconds(250));
}

TEST_CASE("unreachable service raises a transport error") {
  int port = 0;
  {
    httplib::Server probe;
    port = probe.bind_to_any_port("127.0.0.1");
  }
  auto opts = fast_options("http://127.0.0.1:" + std::to_string(port));
  HttpSimilarity sim(std::make_shared<const HttpClient>(opts));
  CHECK_THROWS_AS(sim.score("a", "b"), ProviderError);
}

TEST_CASE("client options are validated") {
  CHECK_THROWS_AS(HttpClient{HttpOptions{}}, ProviderError);
  HttpOptions bad;
  bad.url = "http://127.0.0.1:1";
  bad.timeout_secs = 0;
  CHECK_THROWS_AS(HttpClient{bad}, PreconditionError);
}

TEST_CASE("LRU cache evicts the least recently used entry") {
  ResponseCache cache(2);
  cache.put("a", 1);
  cache.put("b", 2);
  CHECK(cache.get("a").has_value());
  cache.put("c", 3);
  CHECK_FALSE(cache.get("b").has_value());
  CHECK(cache.get("a").has_value());
  CHECK(cache.get("c").has_value());
  CHECK(cache.size() == 2);
}
