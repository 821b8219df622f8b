#include "cverdict/case_io.hpp"

#include <fstream>
#include <sstream>

#include "cverdict/error.hpp"

namespace cverdict {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* field, std::size_t index, const char* what) {
  if (!j.is_object() || !j.contains(field))
    throw ParseError(std::string(what) + " " + std::to_string(index) + ": missing field '" +
                         field + "'",
                     index);
  return j.at(field);
}

Event event_from_json(const json& j, Provenance source, std::size_t index) {
  if (j.is_string()) return Event(j.get<std::string>(), source);
  if (j.is_object() && j.contains("span") && j.at("span").is_string()) {
    std::string context = j.value("context", std::string());
    return Event(j.at("span").get<std::string>(), std::move(context), source);
  }
  throw ParseError("case " + std::to_string(index) + ": event must be a string or {\"span\": ...}",
                   index);
}

json match_to_json(const MatchRecord& m) {
  return {{"left", m.left.span},
          {"right", m.right.span},
          {"kind", std::string(to_string(m.verdict.kind))},
          {"score", m.verdict.score},
          {"polarity", std::string(to_string(m.verdict.polarities.first)) +
                           std::string(to_string(m.verdict.polarities.second))}};
}

Polarity polarity_char(char c) { return c == 'N' ? Polarity::Negative : Polarity::Positive; }

MatchRecord match_from_json(const json& j) {
  MatchRecord m;
  m.left = Event(j.at("left").get<std::string>(), Provenance::claim());
  m.right = Event(j.at("right").get<std::string>(), Provenance::claim());
  const std::string kind = j.at("kind").get<std::string>();
  m.verdict.kind = kind == "similar"    ? MatchKind::Similar
                   : kind == "opposite" ? MatchKind::Opposite
                                        : MatchKind::Dissimilar;
  m.verdict.score = j.at("score").get<double>();
  const std::string pol = j.value("polarity", std::string("PP"));
  if (pol.size() == 2) m.verdict.polarities = {polarity_char(pol[0]), polarity_char(pol[1])};
  return m;
}

std::optional<Rule> parse_rule(const std::string& s) {
  for (Rule r : {Rule::Alignment, Rule::Misalignment, Rule::CausalLoop, Rule::CherryPicking,
                 Rule::CrossLink, Rule::MatchDecision})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

TableProviders oracle_from_json(const json& j, std::size_t index) {
  TableProviders tables;
  if (j.is_null()) return tables;
  try {
    for (const json& s : j.value("similarity", json::array()))
      tables.similarity.set(s.at("a").get<std::string>(), s.at("b").get<std::string>(),
                            s.at("score").get<double>());
    for (const json& p : j.value("polarity", json::array()))
      tables.polarity.set(p.at("text").get<std::string>(),
                          p.at("label").get<std::string>() == "N" ? Polarity::Negative
                                                                  : Polarity::Positive);
    for (const json& r : j.value("relation", json::array())) {
      const auto rel = parse_relation(r.at("relation").get<std::string>());
      if (!rel) throw ParseError("case " + std::to_string(index) + ": bad oracle relation", index);
      tables.relation.set(r.at("from").get<std::string>(), r.at("to").get<std::string>(), *rel);
    }
  } catch (const json::exception& e) {
    throw ParseError("case " + std::to_string(index) + ": malformed oracle block: " + e.what(),
                     index);
  }
  return tables;
}

}  // namespace

std::string provenance_string(const Provenance& p) {
  switch (p.kind) {
    case Provenance::Kind::Claim: return "claim";
    case Provenance::Kind::Evidence: return "evidence:" + std::to_string(p.index);
    case Provenance::Kind::CrossLink: return "cross:" + std::to_string(p.index);
  }
  return "claim";
}

Provenance parse_provenance(const std::string& s) {
  if (s == "claim") return Provenance::claim();
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("bad provenance '" + s + "'", std::nullopt);
  const std::size_t index = std::stoul(s.substr(colon + 1));
  const std::string kind = s.substr(0, colon);
  if (kind == "evidence") return Provenance::evidence(index);
  if (kind == "cross") return Provenance::cross_link(index);
  throw ParseError("bad provenance '" + s + "'", std::nullopt);
}

json to_json(const Event& e) {
  json j = {{"span", e.span}};
  if (e.context != e.span) j["context"] = e.context;
  return j;
}

json to_json(const Triple& t) {
  return {{"subject", to_json(t.subject)},
          {"relation", std::string(to_string(t.relation))},
          {"object", to_json(t.object)}};
}

json to_json(const ClaimCase& c) {
  json j = {{"id", c.id}, {"claim", c.claim_text}};
  if (c.gold) j["label"] = std::string(to_string(*c.gold));
  j["claim_triples"] = json::array();
  for (const Triple& t : c.claim_triples) j["claim_triples"].push_back(to_json(t));
  j["evidence"] = json::array();
  for (const EvidenceItem& item : c.evidence) {
    json triples = json::array();
    for (const Triple& t : item.triples) triples.push_back(to_json(t));
    j["evidence"].push_back({{"text", item.text}, {"triples", triples}});
  }
  return j;
}

Triple triple_from_json(const json& j, Provenance source) {
  const std::size_t index = 0;
  Triple t;
  t.subject = event_from_json(require(j, "subject", index, "triple"), source, index);
  t.object = event_from_json(require(j, "object", index, "triple"), source, index);
  const json& rel = require(j, "relation", index, "triple");
  const auto parsed = rel.is_string() ? parse_relation(rel.get<std::string>()) : std::nullopt;
  if (!parsed) throw ParseError("unknown relation " + rel.dump(), std::nullopt);
  t.relation = *parsed;
  t.provenance = source;
  return t;
}

ClaimCase case_from_json(const json& j, std::size_t index) {
  ClaimCase c;
  try {
    c.id = j.contains("id") ? j.at("id").get<std::string>() : std::to_string(index);
    c.claim_text = require(j, "claim", index, "case").get<std::string>();
    if (j.contains("label") && !j.at("label").is_null()) {
      const auto label = parse_verdict(j.at("label").get<std::string>());
      if (!label || *label == VerdictLabel::Abstain)
        throw ParseError("case " + std::to_string(index) + ": invalid gold label " +
                             j.at("label").dump(),
                         index);
      c.gold = label;
    }
    for (const json& t : require(j, "claim_triples", index, "case")) {
      Triple triple = triple_from_json(t, Provenance::claim());
      if (triple.relation != Relation::NoRelation) c.claim_triples.push_back(std::move(triple));
    }
    const json& evidence = require(j, "evidence", index, "case");
    for (std::size_t i = 0; i < evidence.size(); ++i) {
      EvidenceItem item;
      item.text = evidence[i].value("text", std::string());
      for (const json& t : evidence[i].value("triples", json::array())) {
        Triple triple = triple_from_json(t, Provenance::evidence(i));
        if (triple.relation != Relation::NoRelation) item.triples.push_back(std::move(triple));
      }
      c.evidence.push_back(std::move(item));
    }
  } catch (const ParseError& e) {
    if (e.record()) throw;
    throw ParseError("case " + std::to_string(index) + ": " + e.what(), index);
  } catch (const json::exception& e) {
    throw ParseError("case " + std::to_string(index) + ": " + e.what(), index);
  }
  return c;
}

LoadedCases parse_cases(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("cases file is not valid JSON: ") + e.what(), std::nullopt,
                     e.byte);
  }
  if (!doc.is_array()) throw ParseError("cases file must hold a JSON array", std::nullopt);
  LoadedCases out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    out.cases.push_back(case_from_json(doc[i], i));
    out.oracles.push_back(oracle_from_json(doc[i].value("oracle", json()), i));
  }
  return out;
}

LoadedCases load_cases(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open cases file " + path.string());
  return parse_cases(in);
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  out.flush();
  if (!out) throw Error("failed writing " + path.string());
}

void save_cases(const std::filesystem::path& path, const std::vector<ClaimCase>& cases) {
  json doc = json::array();
  for (const ClaimCase& c : cases) doc.push_back(to_json(c));
  write_text_file(path, doc.dump(2) + "\n");
}

json to_json(const TraceStep& s) {
  json premises = json::array();
  for (const Triple& t : s.premises) {
    json tj = to_json(t);
    tj["provenance"] = provenance_string(t.provenance);
    premises.push_back(std::move(tj));
  }
  json matches = json::array();
  for (const MatchRecord& m : s.matches) matches.push_back(match_to_json(m));
  return {{"rule", std::string(to_string(s.rule))},
          {"premises", premises},
          {"matches", matches},
          {"inferred", s.inferred ? json(std::string(to_string(*s.inferred))) : json()},
          {"object_opposite", s.object_opposite},
          {"signal", s.signal ? json(std::string(to_string(*s.signal))) : json()},
          {"evidence_item", s.evidence_item ? json(*s.evidence_item) : json()},
          {"sentence", s.sentence}};
}

TraceStep step_from_json(const json& j) {
  TraceStep s;
  const auto rule = parse_rule(j.at("rule").get<std::string>());
  if (!rule) throw ParseError("unknown trace rule " + j.at("rule").dump(), std::nullopt);
  s.rule = *rule;
  for (const json& p : j.at("premises"))
    s.premises.push_back(triple_from_json(p, parse_provenance(p.at("provenance"))));
  for (const json& m : j.value("matches", json::array())) s.matches.push_back(match_from_json(m));
  if (!j.at("inferred").is_null()) s.inferred = parse_relation(j.at("inferred").get<std::string>());
  s.object_opposite = j.value("object_opposite", false);
  if (j.contains("signal") && !j.at("signal").is_null())
    s.signal = parse_verdict(j.at("signal").get<std::string>());
  if (j.contains("evidence_item") && !j.at("evidence_item").is_null())
    s.evidence_item = j.at("evidence_item").get<std::size_t>();
  s.sentence = j.at("sentence").get<std::string>();
  return s;
}

json predictions_to_json(const std::vector<Prediction>& preds) {
  json doc = json::array();
  for (const Prediction& p : preds) {
    json trace = json::array();
    for (const TraceStep& s : p.result.trace) trace.push_back(to_json(s));
    doc.push_back({{"id", p.id}, {"label", std::string(to_string(p.result.label))},
                   {"trace", trace}});
  }
  return doc;
}

std::vector<Prediction> predictions_from_json(const json& doc) {
  if (!doc.is_array()) throw ParseError("predictions file must hold a JSON array", std::nullopt);
  std::vector<Prediction> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    try {
      Prediction p;
      p.id = doc[i].at("id").get<std::string>();
      const auto label = parse_verdict(doc[i].at("label").get<std::string>());
      if (!label) throw ParseError("bad label", i);
      p.result.label = *label;
      for (const json& s : doc[i].value("trace", json::array()))
        p.result.trace.push_back(step_from_json(s));
      out.push_back(std::move(p));
    } catch (const json::exception& e) {
      throw ParseError("prediction " + std::to_string(i) + ": " + e.what(), i);
    }
  }
  return out;
}

std::vector<Prediction> load_predictions(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open predictions file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("predictions file is not valid JSON: ") + e.what(), std::nullopt,
                     e.byte);
  }
  return predictions_from_json(doc);
}

}  // namespace cverdict
