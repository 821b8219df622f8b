#pragma once

// JSON serialization of cases (cases.json), predictions (preds.json) and
// derivation traces.

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cverdict/model.hpp"
#include "cverdict/reasoner.hpp"
#include "cverdict/table_providers.hpp"

namespace cverdict {

nlohmann::json to_json(const Event& e);
nlohmann::json to_json(const Triple& t);
nlohmann::json to_json(const ClaimCase& c);
nlohmann::json to_json(const TraceStep& s);

/// Parses a triple; `source` becomes the provenance of the triple and its events.
Triple triple_from_json(const nlohmann::json& j, Provenance source);
ClaimCase case_from_json(const nlohmann::json& j, std::size_t index);
TraceStep step_from_json(const nlohmann::json& j);

std::string provenance_string(const Provenance& p);  // "claim", "evidence:2", "cross:2"
Provenance parse_provenance(const std::string& s);

struct LoadedCases {
  std::vector<ClaimCase> cases;
  /// Per-case lookup tables from the optional "oracle" block; empty tables
  /// when a case has none.
  std::vector<TableProviders> oracles;
};

LoadedCases parse_cases(std::istream& in);
LoadedCases load_cases(const std::filesystem::path& path);
void save_cases(const std::filesystem::path& path, const std::vector<ClaimCase>& cases);

struct Prediction {
  std::string id;
  VerdictResult result;
};

nlohmann::json predictions_to_json(const std::vector<Prediction>& preds);
std::vector<Prediction> predictions_from_json(const nlohmann::json& j);
std::vector<Prediction> load_predictions(const std::filesystem::path& path);

/// Writes `content` to `path`, throwing Error when the file cannot be written.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace cverdict
