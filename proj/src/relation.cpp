#include "cverdict/relation.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "cverdict/error.hpp"

namespace cverdict {

namespace {

constexpr Relation C = Relation::Cause;
constexpr Relation P = Relation::Prevent;
constexpr Relation I = Relation::Intend;
constexpr Relation E = Relation::Enable;
constexpr Relation NR = Relation::NoRelation;

// Row = first relation, column = second, both in enum order
// (Cause, Prevent, Intend, Enable, NotCause, NoRelation).
// Positive chains keep the weakest modality (Cause > Enable > Intend);
// any Prevent flips polarity and a second Prevent restores Cause.
// NotCause and NoRelation do not chain.
constexpr Relation kComposeTable[6][6] = {
    /* Cause    */ {C, P, I, E, NR, NR},
    /* Prevent  */ {P, C, P, P, NR, NR},
    /* Intend   */ {I, P, I, I, NR, NR},
    /* Enable   */ {E, P, I, E, NR, NR},
    /* NotCause */ {NR, NR, NR, NR, NR, NR},
    /* NoRel    */ {NR, NR, NR, NR, NR, NR},
};

constexpr int index_of(Relation r) { return static_cast<int>(r); }

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

Relation negate(Relation r) {
  switch (r) {
    case Relation::Cause: return Relation::Prevent;
    case Relation::Prevent: return Relation::Cause;
    case Relation::Intend:
    case Relation::Enable: return Relation::NotCause;
    case Relation::NotCause:
    case Relation::NoRelation: return Relation::NoRelation;
  }
  return Relation::NoRelation;
}

Relation compose(Relation first, Relation second) {
  return kComposeTable[index_of(first)][index_of(second)];
}

bool is_contradictory(Relation a, Relation b) {
  auto pair_is = [&](Relation x, Relation y) {
    return (a == x && b == y) || (a == y && b == x);
  };
  return pair_is(Relation::Cause, Relation::Prevent) ||
         pair_is(Relation::Intend, Relation::Prevent) ||
         pair_is(Relation::Enable, Relation::Prevent) ||
         pair_is(Relation::Intend, Relation::NotCause) ||
         pair_is(Relation::Enable, Relation::NotCause) ||
         pair_is(Relation::Cause, Relation::NotCause);
}

Relation chain_relation(std::span<const Relation> path) {
  if (path.empty()) throw PreconditionError("chain_relation: empty relation path");
  Relation acc = path.front();
  for (auto it = path.begin() + 1; it != path.end(); ++it) acc = compose(acc, *it);
  return acc;
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Cause: return "cause";
    case Relation::Prevent: return "prevent";
    case Relation::Intend: return "intend";
    case Relation::Enable: return "enable";
    case Relation::NotCause: return "not_cause";
    case Relation::NoRelation: return "no_relation";
  }
  return "no_relation";
}

std::string_view relation_verb(Relation r) {
  switch (r) {
    case Relation::Cause: return "causes";
    case Relation::Prevent: return "prevents";
    case Relation::Intend: return "intends";
    case Relation::Enable: return "enables";
    case Relation::NotCause: return "does-not-cause";
    case Relation::NoRelation: return "no-relation";
  }
  return "no-relation";
}

std::optional<Relation> parse_relation(std::string_view text) {
  std::string key = lower(text);
  std::replace(key.begin(), key.end(), ' ', '_');
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "cause" || key == "causes" || key == "direct_cause") return Relation::Cause;
  if (key == "prevent" || key == "prevents") return Relation::Prevent;
  if (key == "intend" || key == "intends" || key == "intends_to_cause") return Relation::Intend;
  if (key == "enable" || key == "enables") return Relation::Enable;
  if (key == "not_cause" || key == "does_not_cause") return Relation::NotCause;
  if (key == "no_relation" || key == "none") return Relation::NoRelation;
  return std::nullopt;
}

}  // namespace cverdict
