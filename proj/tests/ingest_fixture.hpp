#pragma once

// Synthetic dataset records whose attrition through each filter step is
// known by construction.

#include <string>
#include <vector>

#include <json.hpp>

namespace ingest_fixture {

struct Expected {
  std::size_t total, after_answer, after_label, after_relation, answers;
  std::size_t supported, refuted, conflicting;
};

inline nlohmann::json triple(const std::string& s, const std::string& r, const std::string& o) {
  return {{"subject", s}, {"relation", r}, {"object", o}};
}

// Blocks of AVeriTeC-style records:
//   4 claims whose only answers are boolean/unanswerable   -> dropped at step 1
//   3 claims with one boolean and one extractive answer    -> kept, 1 answer removed
//   5 claims labelled Not Enough Evidence                  -> dropped at step 2
//   2 claims with no claim triples                         -> dropped at step 3
//   6 + 3 remaining claims: 4 Supported, 3 Refuted, 2 Conflicting
inline nlohmann::json averitec_records(Expected& expected) {
  nlohmann::json records = nlohmann::json::array();
  int n = 0;
  auto record = [&](const std::string& label, nlohmann::json evidence, bool with_triples) {
    const std::string id = "av-" + std::to_string(n++);
    nlohmann::json r = {{"id", id},
                        {"claim", "Claim " + id + ": heavy rain causes floods."},
                        {"label", label},
                        {"evidence", evidence},
                        {"speaker", "someone"}};
    nlohmann::json ev_triples = nlohmann::json::array();
    for (std::size_t i = 0; i < evidence.size(); ++i)
      ev_triples.push_back({triple("rain", "cause", "floods")});
    r["triples"] = {{"claim", with_triples ? nlohmann::json::array({triple("heavy rain", "cause", "floods")})
                                           : nlohmann::json::array()},
                    {"evidence", ev_triples}};
    records.push_back(r);
  };
  auto answer = [](const std::string& type) {
    return nlohmann::json{{"text", "Rain led to floods (" + type + ")."}, {"answer_type", type}};
  };
  using A = nlohmann::json;
  for (int i = 0; i < 4; ++i)
    record("Supported", A::array({answer(i % 2 ? "Boolean" : "unanswerable")}), true);
  const char* mixed_labels[] = {"Supported", "Refuted", "Conflicting Evidence/Cherrypicking"};
  for (const char* label : mixed_labels) record(label, A::array({answer("boolean"), answer("extractive")}), true);
  for (int i = 0; i < 5; ++i) record("Not Enough Evidence", A::array({answer("abstractive")}), true);
  for (int i = 0; i < 2; ++i) record("Refuted", A::array({answer("extractive")}), false);
  const char* rest[] = {"Supported", "Supported", "Supported", "Refuted", "Refuted",
                        "Conflicting Evidence/Cherrypicking"};
  for (const char* label : rest) record(label, A::array({answer("extractive")}), true);

  expected = {20, 16, 11, 9, 4 * 1 + 3 * 2 + 5 + 2 + 6, 4, 3, 2};
  return records;
}

// FEVEROUS-style: 3 of 12 claims cite a table cell, 2 of the rest are NEI,
// 1 has no claim triples.
inline nlohmann::json feverous_records(Expected& expected) {
  nlohmann::json records = nlohmann::json::array();
  for (int i = 0; i < 12; ++i) {
    const bool table = i < 3;
    const bool nei = i == 3 || i == 4;
    const bool no_triples = i == 5;
    nlohmann::json ev = nlohmann::json::array();
    ev.push_back({{"text", "Smoking causes cancer."}, {"evidence_kind", "text"}});
    if (table) ev.push_back({{"text", "cell"}, {"evidence_kind", "table-cell"}});
    records.push_back(
        {{"id", "fv-" + std::to_string(i)},
         {"claim", "Smoking causes cancer."},
         {"label", nei ? "NOT ENOUGH INFO" : (i % 2 ? "SUPPORTS" : "REFUTES")},
         {"evidence", ev},
         {"triples",
          {{"claim", no_triples ? nlohmann::json::array()
                                : nlohmann::json::array({triple("smoking", "cause", "cancer")})}}}});
  }
  // Survivors are i = 6..11: SUPPORTS for odd i, REFUTES for even i.
  expected = {12, 9, 7, 6, 15, 3, 3, 0};
  return records;
}

}  // namespace ingest_fixture
