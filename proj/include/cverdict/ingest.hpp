#pragma once

// Dataset ingestion: AVeriTeC- and FEVEROUS-style claim records, the
// filtering pipeline that turns them into ClaimCases, and its report.

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cverdict/model.hpp"

namespace cverdict {

enum class DatasetKind { Averitec, Feverous };

std::string_view to_string(DatasetKind kind);
/// Throws PreconditionError for anything but "averitec" / "feverous".
DatasetKind parse_dataset_kind(std::string_view name);

struct RawEvidence {
  std::string text;
  std::string answer_type;    // extractive | abstractive | boolean | unanswerable | ""
  std::string evidence_kind;  // text | table-cell | ""
  std::vector<Triple> triples;
};

struct RawClaimRecord {
  std::string id;
  std::string claim;
  std::string label;
  std::vector<RawEvidence> evidence;
  std::vector<Triple> claim_triples;
  nlohmann::json extras = nlohmann::json::object();  // unrecognized top-level fields
};

/// Record schema:
///   {"id"?: str, "claim": str, "label": str,
///    "evidence": [{"text": str, "answer_type"?: str, "evidence_kind"?: str}],
///    "triples"?: {"claim": [triple], "evidence": [[triple], ...]}}
/// Events without an explicit context take the enclosing claim/evidence text.
std::vector<RawClaimRecord> parse_records(std::istream& in);
std::vector<RawClaimRecord> parse_averitec(std::istream& in);
std::vector<RawClaimRecord> parse_feverous(std::istream& in);

nlohmann::json to_json(const RawClaimRecord& r);

struct FilterStep {
  std::string name;
  std::size_t claims_in = 0;
  std::size_t claims_out = 0;
};

struct FilterReport {
  DatasetKind dataset = DatasetKind::Averitec;
  std::size_t total_claims = 0;
  std::size_t total_answers = 0;
  std::map<std::string, std::size_t> answer_types;
  std::size_t after_answer_filter = 0;    // boolean/unanswerable answers or table cells removed
  std::size_t after_label_filter = 0;     // not-enough-evidence labels removed
  std::size_t claims_without_relation = 0;
  std::size_t after_relation_filter = 0;
  std::map<std::string, std::size_t> labels;  // final label distribution
  std::vector<FilterStep> steps;              // in application order

  bool operator==(const FilterReport&) const = default;
};

nlohmann::json to_json(const FilterReport& r);

/// Dataset label string to verdict, case-insensitive. Throws Error for
/// not-enough-evidence and unknown labels.
VerdictLabel map_labels(DatasetKind kind, std::string_view label);

/// Applies, in order: answer-type (AVeriTeC) or table-cell (FEVEROUS)
/// exclusion, not-enough-evidence exclusion, no-relation exclusion.
std::pair<std::vector<RawClaimRecord>, FilterReport> filter_records(
    const std::vector<RawClaimRecord>& records, DatasetKind kind);

std::pair<std::vector<ClaimCase>, FilterReport> filter_cases(
    const std::vector<RawClaimRecord>& records, DatasetKind kind);

}  // namespace cverdict
