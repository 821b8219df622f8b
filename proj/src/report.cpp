#include <algorithm>
#include <cstdio>

#include "cverdict/case_io.hpp"
#include "cverdict/error.hpp"
#include "cverdict/evaluate.hpp"

namespace cverdict {

namespace {

std::string row_name(const ReportEntry& e) {
  return e.test_set + (e.mode == EvalMode::Strict ? " (S)" : " (T)");
}

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string render_csv(std::span<const ReportEntry> entries) {
  std::string out = "test_set,knowledge_source,P,R,F1\n";
  for (const ReportEntry& e : entries) {
    out += csv_field(row_name(e)) + "," + csv_field(e.knowledge_source) + "," +
           fixed4(e.metrics.precision) + "," + fixed4(e.metrics.recall) + "," +
           fixed4(e.metrics.f1) + "\n";
  }
  return out;
}

std::string render_table(std::span<const ReportEntry> entries) {
  std::size_t set_w = std::string("Test Set").size();
  std::size_t src_w = std::string("Knowledge Source").size();
  for (const ReportEntry& e : entries) {
    set_w = std::max(set_w, row_name(e).size());
    src_w = std::max(src_w, e.knowledge_source.size());
  }
  std::string out = pad("Test Set", set_w) + " | " + pad("Knowledge Source", src_w) +
                    " | P      | R      | F1\n";
  out += std::string(set_w, '-') + "-+-" + std::string(src_w, '-') + "-+--------+--------+-------\n";
  for (const ReportEntry& e : entries) {
    out += pad(row_name(e), set_w) + " | " + pad(e.knowledge_source, src_w) + " | " +
           fixed4(e.metrics.precision) + " | " + fixed4(e.metrics.recall) + " | " +
           fixed4(e.metrics.f1) + "\n";
  }
  return out;
}

void render_report(std::span<const ReportEntry> entries, const std::filesystem::path& csv_path) {
  if (entries.empty()) throw PreconditionError("render_report needs at least one metrics entry");
  write_text_file(csv_path, render_csv(entries));
  auto txt = csv_path;
  txt.replace_extension(".txt");
  write_text_file(txt, render_table(entries));
}

}  // namespace cverdict
