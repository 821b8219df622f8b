#include <doctest.h>

#include "cverdict/error.hpp"
#include "cverdict/relation.hpp"
#include "oracles.hpp"

using namespace cverdict;

TEST_CASE("negate maps the cause/prevent pair and collapses the rest") {
  CHECK(negate(Relation::Cause) == Relation::Prevent);
  CHECK(negate(Relation::Prevent) == Relation::Cause);
  CHECK(negate(Relation::Intend) == Relation::NotCause);
  CHECK(negate(Relation::Enable) == Relation::NotCause);
  CHECK(negate(Relation::NotCause) == Relation::NoRelation);
  CHECK(negate(Relation::NoRelation) == Relation::NoRelation);
  CHECK(negate(negate(Relation::Cause)) == Relation::Cause);
  CHECK(negate(negate(Relation::Prevent)) == Relation::Prevent);
}

TEST_CASE("compose matches the hand-enumerated table on all 36 cells") {
  const auto& cells = oracle::composition_cells();
  REQUIRE(cells.size() == 36);
  for (Relation a : kAllRelations)
    for (Relation b : kAllRelations) {
      const auto it = cells.find({std::string(to_string(a)), std::string(to_string(b))});
      REQUIRE(it != cells.end());
      CAPTURE(to_string(a));
      CAPTURE(to_string(b));
      CHECK(to_string(compose(a, b)) == it->second);
    }
}

TEST_CASE("worked composition examples") {
  CHECK(compose(Relation::Cause, Relation::Cause) == Relation::Cause);
  CHECK(compose(Relation::Cause, Relation::Prevent) == Relation::Prevent);
  CHECK(compose(Relation::Prevent, Relation::Prevent) == Relation::Cause);
  CHECK(compose(Relation::Enable, Relation::Cause) == Relation::Enable);
}

TEST_CASE("NoRelation absorbs composition") {
  for (Relation r : kAllRelations) {
    CHECK(compose(r, Relation::NoRelation) == Relation::NoRelation);
    CHECK(compose(Relation::NoRelation, r) == Relation::NoRelation);
  }
}

TEST_CASE("prevent in second position negates the cause composition for Cause") {
  CHECK(compose(Relation::Cause, Relation::Prevent) ==
        negate(compose(Relation::Cause, Relation::Cause)));
  // Weaker modalities keep the prevent polarity rather than collapsing to NotCause.
  CHECK(compose(Relation::Enable, Relation::Prevent) == Relation::Prevent);
  CHECK(compose(Relation::Intend, Relation::Prevent) == Relation::Prevent);
}

TEST_CASE("is_contradictory follows the disjointness axioms") {
  CHECK(is_contradictory(Relation::Cause, Relation::Prevent));
  CHECK_FALSE(is_contradictory(Relation::Cause, Relation::Cause));
  CHECK(is_contradictory(Relation::Enable, Relation::NotCause));
  CHECK(is_contradictory(Relation::Intend, Relation::Prevent));
  CHECK(is_contradictory(Relation::Cause, Relation::NotCause));
  CHECK_FALSE(is_contradictory(Relation::Prevent, Relation::NotCause));
  CHECK_FALSE(is_contradictory(Relation::Cause, Relation::Enable));
  CHECK_FALSE(is_contradictory(Relation::NoRelation, Relation::Cause));

  for (Relation a : kAllRelations)
    for (Relation b : kAllRelations) CHECK(is_contradictory(a, b) == is_contradictory(b, a));
  for (Relation r : {Relation::Cause, Relation::Prevent, Relation::Intend, Relation::Enable})
    CHECK_FALSE(is_contradictory(r, r));
}

TEST_CASE("chain_relation folds compose") {
  const std::vector<Relation> three_causes{Relation::Cause, Relation::Cause, Relation::Cause};
  CHECK(chain_relation(three_causes) == Relation::Cause);
  const std::vector<Relation> double_prevent{Relation::Prevent, Relation::Prevent};
  CHECK(chain_relation(double_prevent) == Relation::Cause);
  const std::vector<Relation> single{Relation::Cause};
  CHECK(chain_relation(single) == Relation::Cause);
  CHECK_THROWS_AS(chain_relation(std::span<const Relation>{}), PreconditionError);
}

TEST_CASE("chain_relation agrees with the closed-form oracle on all paths up to length 4") {
  for (std::size_t len = 1; len <= 4; ++len)
    for (const auto& path : oracle::all_paths(len)) CHECK(chain_relation(path) == oracle::chain_closed_form(path));
}

TEST_CASE("prevent parity over positive/prevent paths") {
  for (std::size_t len = 1; len <= 4; ++len) {
    for (const auto& path : oracle::all_paths(len)) {
      int prevents = 0;
      bool eligible = true;
      for (Relation r : path) {
        if (r == Relation::Prevent) ++prevents;
        else if (!is_positive(r)) eligible = false;
      }
      if (!eligible) continue;
      const Relation result = chain_relation(path);
      CHECK((result == Relation::Prevent) == (prevents % 2 == 1));
      if (prevents % 2 == 0) CHECK(is_positive(result));
    }
  }
}

TEST_CASE("relation names round-trip and aliases parse") {
  for (Relation r : kAllRelations) CHECK(parse_relation(to_string(r)) == r);
  CHECK(parse_relation("intends-to-cause") == Relation::Intend);
  CHECK(parse_relation("enables") == Relation::Enable);
  CHECK(parse_relation("direct-cause") == Relation::Cause);
  CHECK(parse_relation("Does Not Cause") == Relation::NotCause);
  CHECK_FALSE(parse_relation("maybe causal?").has_value());
}
