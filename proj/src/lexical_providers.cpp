#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cverdict/providers.hpp"
#include "cverdict/text.hpp"

namespace cverdict {

std::string_view to_string(Polarity p) { return p == Polarity::Positive ? "P" : "N"; }

double lexical_similarity(std::string_view a, std::string_view b) {
  const auto ta = text::word_tokens(a);
  const auto tb = text::word_tokens(b);
  if (ta.empty() && tb.empty()) return 1.0;
  if (ta.empty() || tb.empty()) return 0.0;

  std::map<std::string, double> fa, fb;
  for (const auto& t : ta) fa[t] += 1.0;
  for (const auto& t : tb) fb[t] += 1.0;
  double na = 0.0, nb = 0.0, dot = 0.0;
  for (const auto& [t, c] : fa) {
    na += c * c;
    if (auto it = fb.find(t); it != fb.end()) dot += c * it->second;
  }
  for (const auto& [t, c] : fb) nb += c * c;
  const double cosine = dot / (std::sqrt(na) * std::sqrt(nb));
  return std::clamp(cosine, 0.0, 1.0);
}

namespace {

const std::set<std::string>& positive_words() {
  static const std::set<std::string> words = {
      "benefit",  "benefits",     "beneficial", "boost",     "boosts",   "effective",
      "gain",     "gains",        "good",       "growth",    "happy",    "healthy",
      "help",     "helps",        "helped",     "higher",    "improve",  "improves",
      "improved", "improving",    "improvement", "increase", "increased", "protect",
      "protects", "protection",   "recovery",   "safe",      "safety",   "satisfaction",
      "stamina",  "strong",       "success",    "successful", "support", "supports",
      "tracing",  "win",          "wins",       "better",    "best",     "positive",
      "relief",   "relaxed",      "prosperity", "cure",      "heal",     "healing"};
  return words;
}

const std::set<std::string>& negative_words() {
  static const std::set<std::string> words = {
      "bad",        "collapse",   "crisis",     "damage",     "danger",    "dangerous",
      "death",      "deaths",     "decline",    "declines",   "decrease",  "decreased",
      "destroy",    "disease",    "disruption", "disruptions", "failure",  "failures",
      "fatigue",    "fear",       "harm",       "harmful",    "illness",   "infection",
      "injustice",  "injury",     "loss",       "losses",     "lower",     "poor",
      "poverty",    "reduced",    "risk",       "sick",       "sidelining", "strict",
      "unemployment", "violence", "war",        "worse",      "worst",     "negative",
      "inefficiencies", "drought", "fraud",     "guilty",     "corruption", "kill",
      "killed",     "infertility", "cancer",    "spreading",  "virus"};
  return words;
}

const std::set<std::string>& negation_words() {
  static const std::set<std::string> words = {
      "not",  "no",    "never", "without", "cannot", "none", "nor", "hardly",
      "didn", "doesn", "don",   "isn",     "wasn",   "aren", "weren", "won"};
  return words;
}

}  // namespace

Polarity lexicon_polarity(std::string_view input) {
  const auto tokens = text::word_tokens(input);
  int positive = 0, negative = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    int sign = 0;
    if (positive_words().count(tokens[i])) sign = 1;
    else if (negative_words().count(tokens[i])) sign = -1;
    if (sign == 0) continue;
    const std::size_t from = i >= 3 ? i - 3 : 0;
    for (std::size_t j = from; j < i; ++j) {
      if (negation_words().count(tokens[j])) {
        sign = -sign;
        break;
      }
    }
    (sign > 0 ? positive : negative) += 1;
  }
  return negative > positive ? Polarity::Negative : Polarity::Positive;
}

namespace {

struct Cue {
  std::vector<std::string> tokens;
  Relation relation;
};

const std::vector<Cue>& cues() {
  static const std::vector<Cue> table = [] {
    std::vector<Cue> out;
    auto add = [&](Relation r, std::initializer_list<const char*> phrases) {
      for (const char* p : phrases) out.push_back({text::word_tokens(p), r});
    };
    add(Relation::Prevent, {"prevent", "prevents", "prevented", "preventing", "block", "blocks",
                            "blocked", "blocking", "stop", "stops", "stopped", "stopping"});
    add(Relation::Enable, {"enable", "enables", "enabled", "enabling", "allow", "allows",
                           "allowed", "allowing", "grant", "grants", "granted", "granting"});
    add(Relation::Intend, {"intend", "intends", "intended", "intending", "aim", "aims", "aimed",
                           "aiming", "to boost"});
    add(Relation::Cause, {"cause", "causes", "caused", "causing", "lead to", "leads to",
                          "led to", "leading to", "result in", "results in", "resulted in",
                          "resulting in", "trigger", "triggers", "triggered", "triggering"});
    return out;
  }();
  return table;
}

bool matches_at(const std::vector<std::string>& hay, std::size_t pos,
                const std::vector<std::string>& needle) {
  if (needle.empty() || pos + needle.size() > hay.size()) return false;
  return std::equal(needle.begin(), needle.end(), hay.begin() + static_cast<long>(pos));
}

std::optional<std::size_t> find_tokens(const std::vector<std::string>& hay,
                                       const std::vector<std::string>& needle,
                                       std::size_t from) {
  for (std::size_t i = from; i < hay.size(); ++i)
    if (matches_at(hay, i, needle)) return i;
  return std::nullopt;
}

}  // namespace

Relation baseline_relation(const Event& a, const Event& b) {
  // Cue words are only read from evidence text: a claim sentence states the
  // very relation under test and must not vouch for itself.
  std::vector<std::string> tokens = text::word_tokens(a.context);
  std::vector<bool> cue_allowed(tokens.size(), a.source.kind != Provenance::Kind::Claim);
  if (text::normalize(b.context) != text::normalize(a.context)) {
    const auto more = text::word_tokens(b.context);
    tokens.insert(tokens.end(), more.begin(), more.end());
    cue_allowed.resize(tokens.size(), b.source.kind != Provenance::Kind::Claim);
  }
  const auto span_a = text::word_tokens(a.span);
  const auto span_b = text::word_tokens(b.span);

  const auto pos_a = find_tokens(tokens, span_a, 0);
  if (!pos_a) return Relation::NoRelation;
  const std::size_t after_a = *pos_a + span_a.size();
  const auto pos_b = find_tokens(tokens, span_b, after_a);
  if (!pos_b) return Relation::NoRelation;

  for (std::size_t i = after_a; i < *pos_b; ++i) {
    if (!cue_allowed[i]) continue;
    for (const Cue& cue : cues()) {
      if (i + cue.tokens.size() <= *pos_b && matches_at(tokens, i, cue.tokens))
        return cue.relation;
    }
  }
  return Relation::NoRelation;
}

}  // namespace cverdict
