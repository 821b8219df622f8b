#include "cverdict/ingest.hpp"

#include <set>

#include "cverdict/case_io.hpp"
#include "cverdict/error.hpp"
#include "cverdict/text.hpp"

namespace cverdict {

using nlohmann::json;

std::string_view to_string(DatasetKind kind) {
  return kind == DatasetKind::Averitec ? "averitec" : "feverous";
}

DatasetKind parse_dataset_kind(std::string_view name) {
  const std::string key = text::normalize(name);
  if (key == "averitec") return DatasetKind::Averitec;
  if (key == "feverous") return DatasetKind::Feverous;
  throw PreconditionError("unknown dataset kind '" + std::string(name) + "'");
}

namespace {

const std::set<std::string> kKnownFields = {"id", "claim", "label", "evidence", "triples"};

// Fills in the enclosing text as context for events parsed without one.
Triple with_default_context(Triple t, const std::string& context) {
  for (Event* e : {&t.subject, &t.object})
    if (e->context == e->span && !context.empty()) e->context = context;
  return t;
}

std::vector<Triple> parse_triple_list(const json& list, Provenance source,
                                      const std::string& context, std::size_t record) {
  std::vector<Triple> out;
  if (!list.is_array())
    throw ParseError("record " + std::to_string(record) + ": triples must be an array", record);
  for (const json& t : list) {
    Triple triple = triple_from_json(t, source);
    if (triple.relation == Relation::NoRelation) continue;
    out.push_back(with_default_context(std::move(triple), context));
  }
  return out;
}

RawClaimRecord parse_record(const json& j, std::size_t index) {
  auto missing = [&](const char* field) {
    return ParseError("record " + std::to_string(index) + ": missing mandatory field '" + field +
                          "'",
                      index);
  };
  if (!j.is_object()) throw ParseError("record " + std::to_string(index) + " is not an object", index);
  if (!j.contains("claim") || !j.at("claim").is_string()) throw missing("claim");
  if (!j.contains("label") || !j.at("label").is_string()) throw missing("label");
  if (!j.contains("evidence") || !j.at("evidence").is_array()) throw missing("evidence");

  RawClaimRecord r;
  r.id = j.contains("id") ? (j.at("id").is_string() ? j.at("id").get<std::string>()
                                                    : j.at("id").dump())
                          : std::to_string(index);
  r.claim = j.at("claim").get<std::string>();
  r.label = j.at("label").get<std::string>();
  try {
    const json& evidence = j.at("evidence");
    for (const json& e : evidence) {
      RawEvidence ev;
      if (e.is_string()) {
        ev.text = e.get<std::string>();
      } else {
        ev.text = e.value("text", std::string());
        ev.answer_type = text::normalize(e.value("answer_type", std::string()));
        ev.evidence_kind = text::normalize(e.value("evidence_kind", std::string()));
      }
      r.evidence.push_back(std::move(ev));
    }
    if (j.contains("triples") && !j.at("triples").is_null()) {
      const json& triples = j.at("triples");
      if (triples.contains("claim"))
        r.claim_triples =
            parse_triple_list(triples.at("claim"), Provenance::claim(), r.claim, index);
      if (triples.contains("evidence")) {
        const json& per_item = triples.at("evidence");
        if (!per_item.is_array() || per_item.size() > r.evidence.size())
          throw ParseError("record " + std::to_string(index) +
                               ": triples.evidence must align with the evidence list",
                           index);
        for (std::size_t i = 0; i < per_item.size(); ++i)
          r.evidence[i].triples = parse_triple_list(per_item[i], Provenance::evidence(i),
                                                    r.evidence[i].text, index);
      }
    }
  } catch (const ParseError& e) {
    if (e.record()) throw;
    throw ParseError("record " + std::to_string(index) + ": " + e.what(), index);
  } catch (const json::exception& e) {
    throw ParseError("record " + std::to_string(index) + ": " + e.what(), index);
  }
  for (const auto& [key, value] : j.items())
    if (!kKnownFields.count(key)) r.extras[key] = value;
  return r;
}

bool is_not_enough_evidence(std::string_view label) {
  const std::string key = text::normalize(label);
  return key == "not enough evidence" || key == "not enough info" || key == "nei" ||
         key == "not_enough_info" || key == "not enough information";
}

bool is_table_evidence(const RawEvidence& e) {
  return e.evidence_kind == "table-cell" || e.evidence_kind == "table_cell" ||
         e.evidence_kind == "table cell" || e.evidence_kind == "table";
}

bool is_uninformative_answer(const RawEvidence& e) {
  return e.answer_type == "boolean" || e.answer_type == "unanswerable";
}

// Renumbers evidence provenance after items were dropped.
void reindex(RawClaimRecord& r) {
  for (std::size_t i = 0; i < r.evidence.size(); ++i) {
    for (Triple& t : r.evidence[i].triples) {
      t.provenance = Provenance::evidence(i);
      t.subject.source = t.provenance;
      t.object.source = t.provenance;
    }
  }
}

}  // namespace

std::vector<RawClaimRecord> parse_records(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " +
                         e.what(),
                     std::nullopt, e.byte);
  }
  if (!doc.is_array()) throw ParseError("input must be a JSON array of claim records", std::nullopt);
  std::vector<RawClaimRecord> out;
  out.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) out.push_back(parse_record(doc[i], i));
  return out;
}

std::vector<RawClaimRecord> parse_averitec(std::istream& in) { return parse_records(in); }
std::vector<RawClaimRecord> parse_feverous(std::istream& in) { return parse_records(in); }

json to_json(const RawClaimRecord& r) {
  json j = r.extras;
  j["id"] = r.id;
  j["claim"] = r.claim;
  j["label"] = r.label;
  j["evidence"] = json::array();
  json evidence_triples = json::array();
  for (const RawEvidence& e : r.evidence) {
    json ej = {{"text", e.text}};
    if (!e.answer_type.empty()) ej["answer_type"] = e.answer_type;
    if (!e.evidence_kind.empty()) ej["evidence_kind"] = e.evidence_kind;
    j["evidence"].push_back(std::move(ej));
    json ts = json::array();
    for (const Triple& t : e.triples) ts.push_back(to_json(t));
    evidence_triples.push_back(std::move(ts));
  }
  json claim_triples = json::array();
  for (const Triple& t : r.claim_triples) claim_triples.push_back(to_json(t));
  j["triples"] = {{"claim", claim_triples}, {"evidence", evidence_triples}};
  return j;
}

VerdictLabel map_labels(DatasetKind, std::string_view label) {
  const std::string key = text::normalize(label);
  if (key == "supported" || key == "supports") return VerdictLabel::Supported;
  if (key == "refuted" || key == "refutes") return VerdictLabel::Refuted;
  if (key == "conflicting evidence/cherrypicking" || key == "conflicting evidence/cherry-picking" ||
      key == "conflicting evidence (cherry-picking)" || key == "conflicting evidence" ||
      key == "conflicting")
    return VerdictLabel::Conflicting;
  if (is_not_enough_evidence(label))
    throw Error("label '" + std::string(label) + "' must be filtered before mapping");
  throw Error("unmapped label '" + std::string(label) + "'");
}

json to_json(const FilterReport& r) {
  json steps = json::array();
  for (const FilterStep& s : r.steps)
    steps.push_back({{"step", s.name}, {"claims_in", s.claims_in}, {"claims_out", s.claims_out}});
  return {{"dataset", std::string(to_string(r.dataset))},
          {"total_claims", r.total_claims},
          {"total_answers", r.total_answers},
          {"answer_types", r.answer_types},
          {"after_answer_filter", r.after_answer_filter},
          {"after_label_filter", r.after_label_filter},
          {"claims_without_relation", r.claims_without_relation},
          {"after_relation_filter", r.after_relation_filter},
          {"labels", r.labels},
          {"steps", steps}};
}

std::pair<std::vector<RawClaimRecord>, FilterReport> filter_records(
    const std::vector<RawClaimRecord>& records, DatasetKind kind) {
  FilterReport report;
  report.dataset = kind;
  report.total_claims = records.size();
  for (const RawClaimRecord& r : records) {
    report.total_answers += r.evidence.size();
    if (kind == DatasetKind::Averitec)
      for (const RawEvidence& e : r.evidence)
        ++report.answer_types[e.answer_type.empty() ? "unspecified" : e.answer_type];
  }

  // Step 1: answer types (AVeriTeC) or table-cell evidence (FEVEROUS).
  std::vector<RawClaimRecord> step1;
  for (const RawClaimRecord& r : records) {
    if (kind == DatasetKind::Averitec) {
      RawClaimRecord kept = r;
      kept.evidence.clear();
      for (const RawEvidence& e : r.evidence)
        if (!is_uninformative_answer(e)) kept.evidence.push_back(e);
      if (kept.evidence.empty()) continue;
      reindex(kept);
      step1.push_back(std::move(kept));
    } else {
      bool has_table = false;
      for (const RawEvidence& e : r.evidence) has_table = has_table || is_table_evidence(e);
      if (!has_table) step1.push_back(r);
    }
  }
  report.after_answer_filter = step1.size();
  report.steps.push_back({kind == DatasetKind::Averitec ? "exclude boolean and unanswerable answers"
                                                         : "exclude table-cell evidence",
                          records.size(), step1.size()});

  // Step 2: labels the reasoner cannot produce.
  std::vector<RawClaimRecord> step2;
  for (RawClaimRecord& r : step1)
    if (!is_not_enough_evidence(r.label)) step2.push_back(std::move(r));
  report.after_label_filter = step2.size();
  report.steps.push_back({"exclude not-enough-evidence labels", step1.size(), step2.size()});

  // Step 3: claims without any causal relation.
  std::vector<RawClaimRecord> step3;
  for (RawClaimRecord& r : step2)
    if (!r.claim_triples.empty()) step3.push_back(std::move(r));
  report.claims_without_relation = step2.size() - step3.size();
  report.after_relation_filter = step3.size();
  report.steps.push_back({"exclude claims with no relation", step2.size(), step3.size()});

  for (const RawClaimRecord& r : step3)
    ++report.labels[std::string(to_string(map_labels(kind, r.label)))];
  return {std::move(step3), std::move(report)};
}

std::pair<std::vector<ClaimCase>, FilterReport> filter_cases(
    const std::vector<RawClaimRecord>& records, DatasetKind kind) {
  auto [kept, report] = filter_records(records, kind);
  std::vector<ClaimCase> cases;
  cases.reserve(kept.size());
  for (RawClaimRecord& r : kept) {
    ClaimCase c;
    c.id = r.id;
    c.claim_text = r.claim;
    c.claim_triples = std::move(r.claim_triples);
    c.gold = map_labels(kind, r.label);
    for (RawEvidence& e : r.evidence) c.evidence.push_back({std::move(e.text), std::move(e.triples)});
    cases.push_back(std::move(c));
  }
  return {std::move(cases), std::move(report)};
}

}  // namespace cverdict
