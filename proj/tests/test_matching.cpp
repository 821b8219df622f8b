#include <doctest.h>

#include "cverdict/error.hpp"
#include "cverdict/matching.hpp"
#include "cverdict/table_providers.hpp"

using namespace cverdict;

namespace {
constexpr Polarity P = Polarity::Positive;
constexpr Polarity N = Polarity::Negative;
}  // namespace

TEST_CASE("three-way rule on a 101-point grid") {
  const double theta = MatchConfig::kDefaultTheta;
  for (int i = 0; i <= 100; ++i) {
    const double s = i / 100.0;
    for (Polarity a : {P, N})
      for (Polarity b : {P, N}) {
        const MatchKind expected =
            s <= theta ? MatchKind::Dissimilar : (a == b ? MatchKind::Similar : MatchKind::Opposite);
        CHECK(classify_scores(s, a, b, theta) == expected);
      }
  }
}

TEST_CASE("threshold boundary and worked scores") {
  CHECK(classify_scores(0.54, P, P, 0.54) == MatchKind::Dissimilar);
  CHECK(classify_scores(0.5400001, P, P, 0.54) == MatchKind::Similar);
  CHECK(classify_scores(0.3235, P, P, 0.54) == MatchKind::Dissimilar);
  CHECK(classify_scores(0.7632, P, P, 0.54) == MatchKind::Similar);
  CHECK(classify_scores(0.7632, P, N, 0.54) == MatchKind::Opposite);
}

TEST_CASE("threshold validation") {
  CHECK_THROWS_AS(MatchConfig{0.0}.validate(), PreconditionError);
  CHECK_THROWS_AS(MatchConfig{1.0}.validate(), PreconditionError);
  CHECK_THROWS_AS(MatchConfig{-0.2}.validate(), PreconditionError);
  CHECK_NOTHROW(MatchConfig{0.54}.validate());
}

TEST_CASE("comparison text selection") {
  const auto src = Provenance::evidence(0);
  const Event a("Muscle Fatigue", "exercise causes muscle fatigue", Provenance::claim());
  const Event b("muscle  fatigue", "recovery prevents muscle fatigue", src);
  const auto same = select_comparison_text(a, b);
  CHECK(same.first == "Muscle Fatigue");
  CHECK(same.second == "muscle  fatigue");

  const Event c("recovery", "recovery prevents muscle fatigue", src);
  const auto differ = select_comparison_text(a, c);
  CHECK(differ.first == "Muscle Fatigue exercise causes muscle fatigue");
  CHECK(differ.second == "recovery recovery prevents muscle fatigue");

  const Event bare("recovery", src);
  CHECK(select_comparison_text(a, bare).second == "recovery");
}

TEST_CASE("triple rendering uses relation verbs") {
  const auto c = Provenance::claim();
  const Triple t{Event("strict dress codes", c), Relation::Cause, Event("decline in morale", c), c};
  CHECK(render_triple(t) == "strict dress codes causes decline in morale");
  Triple u = t;
  u.relation = Relation::NotCause;
  CHECK(render_triple(u) == "strict dress codes does-not-cause decline in morale");
}

TEST_CASE("classify_pair consults the providers") {
  TableProviders tp;
  tp.similarity.set("testing", "trial", 0.9);
  tp.polarity.set("trial", N);
  const Event a("testing", Provenance::claim());
  const Event b("trial", Provenance::evidence(0));
  const auto v = classify_pair(a, b, tp.view(), {});
  CHECK(v.kind == MatchKind::Opposite);
  CHECK(v.score == doctest::Approx(0.9));
  CHECK(v.polarities == std::pair{P, N});
}

TEST_CASE("out-of-range similarity is a provider error") {
  struct Broken final : SimilarityProvider {
    double score(std::string_view, std::string_view) const override { return 1.2; }
  } broken;
  TablePolarity pol;
  const ProviderSet ps{&broken, &pol, nullptr};
  CHECK_THROWS_AS(classify_texts("a", "b", ps, {}), ProviderError);
}
