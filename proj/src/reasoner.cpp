#include "cverdict/reasoner.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "cverdict/error.hpp"
#include "cverdict/text.hpp"

namespace cverdict {

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::Alignment: return "alignment";
    case Rule::Misalignment: return "misalignment";
    case Rule::CausalLoop: return "causal_loop";
    case Rule::CherryPicking: return "cherry_picking";
    case Rule::CrossLink: return "cross_link";
    case Rule::MatchDecision: return "match_decision";
  }
  return "alignment";
}

void ReasonerConfig::validate() const {
  match.validate();
  if (max_hops < 1) throw PreconditionError("max hops must be >= 1");
}

// Matcher -------------------------------------------------------------------

Matcher::Matcher(ProviderSet providers, MatchConfig cfg) : providers_(providers), cfg_(cfg) {
  cfg_.validate();
}

const MatchVerdict& Matcher::events(const Event& a, const Event& b) {
  auto texts = select_comparison_text(a, b);
  auto it = memo_.find(texts);
  if (it != memo_.end()) return it->second;
  MatchVerdict v = classify_texts(texts.first, texts.second, providers_, cfg_);
  return memo_.emplace(std::move(texts), v).first->second;
}

const MatchVerdict& Matcher::triples(const Triple& a, const Triple& b) {
  std::pair<std::string, std::string> texts{render_triple(a), render_triple(b)};
  auto it = memo_.find(texts);
  if (it != memo_.end()) return it->second;
  MatchVerdict v = classify_texts(texts.first, texts.second, providers_, cfg_);
  return memo_.emplace(std::move(texts), v).first->second;
}

// LinkSet -------------------------------------------------------------------

std::string event_key(const Event& e) {
  std::string key;
  switch (e.source.kind) {
    case Provenance::Kind::Claim: key = "c"; break;
    case Provenance::Kind::Evidence: key = "e" + std::to_string(e.source.index); break;
    case Provenance::Kind::CrossLink: key = "x" + std::to_string(e.source.index); break;
  }
  key += ':';
  key += text::normalize(e.span);
  return key;
}

void LinkSet::add_match(MatchRecord record) {
  auto key = std::make_pair(event_key(record.left), event_key(record.right));
  if (match_index_.count(key)) return;
  match_index_[key] = matches_.size();
  matches_.push_back(std::move(record));
}

void LinkSet::add_cross(Triple link) {
  auto key = std::make_pair(event_key(link.subject), event_key(link.object));
  if (cross_index_.count(key)) return;
  cross_index_[key] = cross_.size();
  cross_.push_back(std::move(link));
}

const MatchRecord* LinkSet::match(const Event& a, const Event& b) const {
  const std::string ka = event_key(a), kb = event_key(b);
  if (auto it = match_index_.find({ka, kb}); it != match_index_.end()) return &matches_[it->second];
  if (auto it = match_index_.find({kb, ka}); it != match_index_.end()) return &matches_[it->second];
  return nullptr;
}

const Triple* LinkSet::cross(const Event& from, const Event& to) const {
  if (auto it = cross_index_.find({event_key(from), event_key(to)}); it != cross_index_.end())
    return &cross_[it->second];
  return nullptr;
}

namespace {

// Unique events of the given triples, in first-appearance order.
std::vector<Event> unique_events(std::span<const Triple> triples) {
  std::vector<Event> out;
  std::set<std::string> seen;
  for (const Triple& t : triples) {
    for (const Event* e : {&t.subject, &t.object})
      if (seen.insert(event_key(*e)).second) out.push_back(*e);
  }
  return out;
}

}  // namespace

LinkSet build_cross_links(std::span<const Triple> claim_triples,
                          std::span<const Triple> evidence_triples, Matcher& matcher) {
  LinkSet links;
  const auto claim_events = unique_events(claim_triples);
  const auto evidence_events = unique_events(evidence_triples);
  const RelationProvider* rel = matcher.providers().relation;
  for (const Event& c : claim_events) {
    for (const Event& e : evidence_events) {
      const MatchVerdict& v = matcher.events(c, e);
      links.add_match({c, e, v});
      if (v.kind == MatchKind::Similar || rel == nullptr) continue;
      const std::size_t item = e.source.index;
      if (Relation r = rel->relation(c, e); r != Relation::NoRelation)
        links.add_cross({c, r, e, Provenance::cross_link(item)});
      if (Relation r = rel->relation(e, c); r != Relation::NoRelation)
        links.add_cross({e, r, c, Provenance::cross_link(item)});
    }
  }
  return links;
}

namespace {

std::string arrow(const std::string& from, Relation r, const std::string& to) {
  std::string out = from;
  out += " --";
  out += relation_verb(r);
  out += "--> ";
  out += to;
  return out;
}

constexpr const char* kImplies = " ⟹ ";

// One hop of a derivation path: a relation edge or an endpoint match.
struct Hop {
  enum class Kind { Relation, Equivalent, Opposite } kind = Kind::Relation;
  const Triple* triple = nullptr;     // Relation hops
  const MatchRecord* match = nullptr; // Equivalent / Opposite hops
  std::string from;                   // spans as rendered
  std::string to;
};

struct ChainResult {
  std::optional<Relation> relation;  // chain over relation hops, negated by an Opposite hop
  std::vector<std::string> lines;
};

// Folds the hops left to right and renders one derivation line per
// inference, naming every relation by `start`.
ChainResult fold_hops(const std::string& start, const std::vector<Hop>& hops) {
  ChainResult out;
  std::optional<Relation> acc;
  std::string frontier = start;
  for (const Hop& hop : hops) {
    switch (hop.kind) {
      case Hop::Kind::Relation: {
        const Relation r = hop.triple->relation;
        if (!acc) {
          acc = r;
          if (hop.from != start)
            out.lines.push_back(start + " = " + hop.from + " and " + arrow(hop.from, r, hop.to) +
                                kImplies + arrow(start, r, hop.to));
        } else {
          const Relation next = compose(*acc, r);
          out.lines.push_back(arrow(start, *acc, hop.from) + " and " +
                              arrow(hop.from, r, hop.to) + kImplies + arrow(start, next, hop.to));
          acc = next;
        }
        frontier = hop.to;
        break;
      }
      case Hop::Kind::Equivalent:
        if (acc)
          out.lines.push_back(arrow(start, *acc, hop.from) + " and " + hop.from + " = " + hop.to +
                              kImplies + arrow(start, *acc, hop.to));
        frontier = hop.to;
        break;
      case Hop::Kind::Opposite:
        if (acc) {
          const Relation flipped = negate(*acc);
          out.lines.push_back(arrow(start, *acc, hop.from) + " and " + hop.from + " opposes " +
                              hop.to + kImplies + arrow(start, flipped, hop.to));
          acc = flipped;
        }
        frontier = hop.to;
        break;
    }
  }
  out.relation = acc;
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

TraceStep match_step(const MatchRecord& m) {
  TraceStep step;
  step.rule = Rule::MatchDecision;
  step.matches.push_back(m);
  char score[32];
  std::snprintf(score, sizeof score, "%.4f", m.verdict.score);
  const char* relation = m.verdict.kind == MatchKind::Similar    ? " = "
                         : m.verdict.kind == MatchKind::Opposite ? " opposes "
                                                                 : " differs from ";
  step.sentence = m.left.span + relation + m.right.span + " (" +
                  std::string(to_string(m.verdict.kind)) + ", score " + score + ", polarity " +
                  std::string(to_string(m.verdict.polarities.first)) +
                  std::string(to_string(m.verdict.polarities.second)) + ")";
  return step;
}

TraceStep cross_step(const Triple& link) {
  TraceStep step;
  step.rule = Rule::CrossLink;
  step.premises.push_back(link);
  step.inferred = link.relation;
  step.evidence_item = link.provenance.index;
  step.sentence = arrow(link.subject.span, link.relation, link.object.span) + " (cross-text link)";
  return step;
}

// Builds the supporting steps plus the rule step for a derivation path.
RuleFiring make_firing(Rule rule, VerdictLabel label, std::size_t item, const Triple& claim,
                       const std::vector<Hop>& hops, const ChainResult& chain,
                       const std::string& suffix) {
  RuleFiring firing;
  firing.label = label;
  firing.evidence_item = item;
  TraceStep step;
  step.rule = rule;
  step.signal = label;
  step.evidence_item = item;
  step.inferred = chain.relation;
  for (const Hop& hop : hops) {
    if (hop.kind == Hop::Kind::Relation) {
      if (hop.triple->provenance.kind == Provenance::Kind::CrossLink)
        firing.steps.push_back(cross_step(*hop.triple));
      step.premises.push_back(*hop.triple);
    } else {
      firing.steps.push_back(match_step(*hop.match));
      step.matches.push_back(*hop.match);
      if (hop.kind == Hop::Kind::Opposite) step.object_opposite = true;
    }
  }
  std::string body = chain.lines.empty()
                         ? arrow(claim.subject.span, *chain.relation, claim.object.span)
                         : join(chain.lines, "; ");
  step.sentence = body + suffix;
  firing.steps.push_back(std::move(step));
  return firing;
}

Hop relation_hop(const Triple& t) {
  return {Hop::Kind::Relation, &t, nullptr, t.subject.span, t.object.span};
}

Hop match_hop(Hop::Kind kind, const MatchRecord& m, const std::string& from,
              const std::string& to) {
  return {kind, nullptr, &m, from, to};
}

}  // namespace

std::vector<RuleFiring> check_alignment(const Triple& claim,
                                        std::span<const Triple> evidence_triples,
                                        const LinkSet& links, Matcher& matcher) {
  std::vector<RuleFiring> firings;
  const Event& a = claim.subject;
  const Event& b = claim.object;
  for (const Triple& ev : evidence_triples) {
    const Event& c = ev.subject;
    const Event& d = ev.object;
    const MatchRecord* head_match = links.match(a, c);
    const MatchRecord* tail_match = links.match(b, d);
    const bool head_similar = head_match && head_match->verdict.kind == MatchKind::Similar;
    const bool tail_similar = tail_match && tail_match->verdict.kind == MatchKind::Similar;
    const Triple* head_cross = links.cross(a, c);
    const Triple* tail_cross = links.cross(d, b);

    // Objects are opposite when the events themselves are, or when the whole
    // triples are (the granularity that best exposes polarity).
    bool tail_opposite = false;
    if (tail_match && !tail_similar) {
      tail_opposite = tail_match->verdict.kind == MatchKind::Opposite ||
                      matcher.triples(claim, ev).kind == MatchKind::Opposite;
    }

    enum class Head { Equivalent, Cross };
    enum class Tail { Equivalent, Opposite, Cross };
    const std::pair<Head, Tail> routes[] = {
        {Head::Equivalent, Tail::Equivalent}, {Head::Equivalent, Tail::Opposite},
        {Head::Cross, Tail::Equivalent},      {Head::Cross, Tail::Opposite},
        {Head::Equivalent, Tail::Cross},      {Head::Cross, Tail::Cross}};

    for (const auto& [head, tail] : routes) {
      if (head == Head::Equivalent && !head_similar) continue;
      if (head == Head::Cross && !head_cross) continue;
      if (tail == Tail::Equivalent && !tail_similar) continue;
      if (tail == Tail::Opposite && !tail_opposite) continue;
      if (tail == Tail::Cross && !tail_cross) continue;

      std::vector<Hop> hops;
      if (head == Head::Equivalent) hops.push_back(match_hop(Hop::Kind::Equivalent, *head_match, a.span, c.span));
      else hops.push_back(relation_hop(*head_cross));
      hops.push_back(relation_hop(ev));
      if (tail == Tail::Equivalent) hops.push_back(match_hop(Hop::Kind::Equivalent, *tail_match, d.span, b.span));
      else if (tail == Tail::Opposite) hops.push_back(match_hop(Hop::Kind::Opposite, *tail_match, d.span, b.span));
      else hops.push_back(relation_hop(*tail_cross));

      const ChainResult chain = fold_hops(a.span, hops);
      const Relation inferred = *chain.relation;
      const bool direct = head == Head::Equivalent && tail != Tail::Cross;
      if (inferred == claim.relation) {
        firings.push_back(make_firing(Rule::Alignment, VerdictLabel::Supported,
                                      ev.provenance.index, claim, hops, chain,
                                      direct ? " matches the claim"
                                             : " confirmed through transitivity"));
        break;
      }
      if (is_contradictory(claim.relation, inferred)) {
        firings.push_back(make_firing(Rule::Misalignment, VerdictLabel::Refuted,
                                      ev.provenance.index, claim, hops, chain,
                                      " contradicts the claim " +
                                          arrow(a.span, claim.relation, b.span)));
        break;
      }
    }
  }
  return firings;
}

std::vector<RuleFiring> check_causal_loop(const Triple& claim,
                                          std::span<const Triple> evidence_triples,
                                          const LinkSet& links, int max_hops) {
  std::vector<RuleFiring> firings;
  const Event& a = claim.subject;
  const Event& b = claim.object;
  const std::string target = event_key(b);

  std::vector<std::size_t> items;
  for (const Triple& t : evidence_triples)
    if (std::find(items.begin(), items.end(), t.provenance.index) == items.end())
      items.push_back(t.provenance.index);

  for (std::size_t item : items) {
    std::vector<const Triple*> item_triples;
    for (const Triple& t : evidence_triples)
      if (t.provenance.index == item) item_triples.push_back(&t);
    std::vector<Event> nodes;
    {
      std::set<std::string> seen;
      for (const Triple* t : item_triples)
        for (const Event* e : {&t->subject, &t->object})
          if (seen.insert(event_key(*e)).second) nodes.push_back(*e);
    }

    // Outgoing hops from `from`, in deterministic order.
    auto neighbours = [&](const Event& from, bool at_start) {
      std::vector<std::pair<Hop, const Event*>> out;
      if (at_start) {
        for (const Event& n : nodes) {
          if (const MatchRecord* m = links.match(from, n); m && m->verdict.kind == MatchKind::Similar)
            out.push_back({match_hop(Hop::Kind::Equivalent, *m, from.span, n.span), &n});
          if (const Triple* x = links.cross(from, n)) out.push_back({relation_hop(*x), &n});
        }
        return out;
      }
      for (const Triple* t : item_triples)
        if (event_key(t->subject) == event_key(from)) out.push_back({relation_hop(*t), &t->object});
      if (const MatchRecord* m = links.match(from, b); m && m->verdict.kind == MatchKind::Similar)
        out.push_back({match_hop(Hop::Kind::Equivalent, *m, from.span, b.span), &b});
      if (const Triple* x = links.cross(from, b)) out.push_back({relation_hop(*x), &b});
      return out;
    };

    std::vector<Hop> path;
    std::set<std::string> visited{event_key(a)};
    std::optional<RuleFiring> found;

    std::function<void(const Event&, int)> dfs = [&](const Event& at, int relation_hops) {
      if (found) return;
      for (auto& [hop, next] : neighbours(at, path.empty())) {
        if (found) return;
        const int hops_after = relation_hops + (hop.kind == Hop::Kind::Relation ? 1 : 0);
        if (hops_after > max_hops) continue;
        const std::string key = event_key(*next);
        if (key != target && visited.count(key)) continue;
        path.push_back(hop);
        if (key == target) {
          if (hops_after > 0) {
            const ChainResult chain = fold_hops(a.span, path);
            if (chain.relation == claim.relation)
              found = make_firing(Rule::CausalLoop, VerdictLabel::Supported, item, claim, path,
                                  chain, " (closed causal loop)");
          }
        } else {
          visited.insert(key);
          dfs(*next, hops_after);
          visited.erase(key);
        }
        path.pop_back();
      }
    };
    dfs(a, 0);
    if (found) firings.push_back(std::move(*found));
  }
  return firings;
}

std::optional<RuleFiring> check_cherry_picking(std::span<const Triple> evidence_triples,
                                               Matcher& matcher, bool loose) {
  RuleFiring firing;
  firing.label = VerdictLabel::Conflicting;
  for (std::size_t i = 0; i < evidence_triples.size(); ++i) {
    for (std::size_t j = i + 1; j < evidence_triples.size(); ++j) {
      const Triple& t1 = evidence_triples[i];
      const Triple& t2 = evidence_triples[j];
      if (t1.relation != t2.relation) continue;
      const MatchVerdict subjects = matcher.events(t1.subject, t2.subject);
      const MatchVerdict objects = matcher.events(t1.object, t2.object);

      // `same` is the Similar endpoint pair, `other` the one that may conflict.
      auto conflicting = [&](const MatchVerdict& same, const MatchVerdict& other) {
        if (same.kind != MatchKind::Similar || other.kind == MatchKind::Similar) return false;
        if (other.kind == MatchKind::Opposite) return true;
        if (matcher.triples(t1, t2).kind == MatchKind::Opposite) return true;
        return loose && other.polarities.first != other.polarities.second;
      };
      const bool via_objects = conflicting(subjects, objects);
      const bool via_subjects = !via_objects && conflicting(objects, subjects);
      if (!via_objects && !via_subjects) continue;

      TraceStep step;
      step.rule = Rule::CherryPicking;
      step.premises = {t1, t2};
      step.signal = VerdictLabel::Conflicting;
      const Event& s1 = via_objects ? t1.subject : t1.object;
      const Event& s2 = via_objects ? t2.subject : t2.object;
      const Event& o1 = via_objects ? t1.object : t1.subject;
      const Event& o2 = via_objects ? t2.object : t2.subject;
      const MatchVerdict& same = via_objects ? subjects : objects;
      const MatchVerdict& other = via_objects ? objects : subjects;
      step.matches = {{s1, s2, same}, {o1, o2, other}};
      const std::string part = via_objects ? "objects" : "subjects";
      step.sentence = arrow(t1.subject.span, t1.relation, t1.object.span) + " and " +
                      arrow(t2.subject.span, t2.relation, t2.object.span) +
                      " share the relation but their " + part + " conflict (" + o1.span + " vs " +
                      o2.span + ", polarity " + std::string(to_string(other.polarities.first)) +
                      std::string(to_string(other.polarities.second)) +
                      ")" + kImplies + "possible cherry-picking";
      firing.steps.push_back(std::move(step));
    }
  }
  if (firing.steps.empty()) return std::nullopt;
  return firing;
}

std::vector<Triple> flatten_evidence(const ClaimCase& c) {
  std::vector<Triple> out;
  for (const EvidenceItem& item : c.evidence)
    out.insert(out.end(), item.triples.begin(), item.triples.end());
  return out;
}

VerdictResult predict_verdict(const ClaimCase& c, const ProviderSet& providers,
                              const ReasonerConfig& cfg) {
  cfg.validate();
  if (c.claim_triples.empty())
    throw PreconditionError("case '" + c.id + "' has no claim triples");
  for (const Triple& t : c.claim_triples)
    if (t.relation == Relation::NoRelation)
      throw PreconditionError("case '" + c.id + "' stores a no_relation claim triple");

  const std::vector<Triple> evidence = flatten_evidence(c);
  for (const Triple& t : evidence)
    if (t.relation == Relation::NoRelation)
      throw PreconditionError("case '" + c.id + "' stores a no_relation evidence triple");

  Matcher matcher(providers, cfg.match);
  const LinkSet links = build_cross_links(c.claim_triples, evidence, matcher);

  std::vector<RuleFiring> firings;
  for (const Triple& claim : c.claim_triples) {
    for (auto& f : check_causal_loop(claim, evidence, links, cfg.max_hops))
      firings.push_back(std::move(f));
    for (auto& f : check_alignment(claim, evidence, links, matcher))
      firings.push_back(std::move(f));
  }
  if (evidence.size() >= 2) {
    if (auto f = check_cherry_picking(evidence, matcher, cfg.cherry_loose))
      firings.push_back(std::move(*f));
  }

  VerdictResult result;
  bool cherry = false;
  std::set<std::size_t> supporting, refuting;
  for (const RuleFiring& f : firings) {
    if (f.label == VerdictLabel::Conflicting) cherry = true;
    if (f.label == VerdictLabel::Supported && f.evidence_item) supporting.insert(*f.evidence_item);
    if (f.label == VerdictLabel::Refuted && f.evidence_item) refuting.insert(*f.evidence_item);
    for (const TraceStep& step : f.steps) {
      const bool support_step = step.rule == Rule::MatchDecision || step.rule == Rule::CrossLink;
      if (support_step &&
          std::find(result.trace.begin(), result.trace.end(), step) != result.trace.end())
        continue;
      result.trace.push_back(step);
    }
  }

  bool mixed = false;
  for (std::size_t s : supporting)
    for (std::size_t r : refuting)
      if (s != r) mixed = true;

  if (cherry || mixed) result.label = VerdictLabel::Conflicting;
  else if (!refuting.empty()) result.label = VerdictLabel::Refuted;
  else if (!supporting.empty()) result.label = VerdictLabel::Supported;
  else result.label = VerdictLabel::Abstain;
  return result;
}

}  // namespace cverdict
