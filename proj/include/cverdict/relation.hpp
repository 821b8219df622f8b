#pragma once

// Fine-grained event relations and their algebra: negation, composition,
// disjointness, and chain folding.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace cverdict {

enum class Relation : unsigned char { Cause, Prevent, Intend, Enable, NotCause, NoRelation };

inline constexpr std::array<Relation, 6> kAllRelations = {
    Relation::Cause,  Relation::Prevent,  Relation::Intend,
    Relation::Enable, Relation::NotCause, Relation::NoRelation};

/// Cause, Enable or Intend.
constexpr bool is_positive(Relation r) {
  return r == Relation::Cause || r == Relation::Enable || r == Relation::Intend;
}

/// Relations the cross-text extractors may return.
constexpr bool is_extractable(Relation r) { return r != Relation::NotCause; }

Relation negate(Relation r);

/// Relation inferred for (A, B) from `first` on (A, X) and `second` on (X, B).
Relation compose(Relation first, Relation second);

/// True iff asserting both relations on the same ordered pair violates a
/// disjointness axiom. Symmetric.
bool is_contradictory(Relation a, Relation b);

/// Left fold of compose. Throws PreconditionError on an empty path.
Relation chain_relation(std::span<const Relation> path);

/// Canonical lowercase name: "cause", "prevent", ..., "no_relation".
std::string_view to_string(Relation r);

/// Verb form used in rendered derivations ("causes", "prevents", ...).
std::string_view relation_verb(Relation r);

/// Accepts canonical names plus the ontology aliases ("direct-cause",
/// "intends-to-cause", "enables", ...). Case-insensitive.
std::optional<Relation> parse_relation(std::string_view text);

}  // namespace cverdict
