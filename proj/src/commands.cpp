#include "cverdict/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <memory>

#include "cverdict/case_io.hpp"
#include "cverdict/config.hpp"
#include "cverdict/conformance.hpp"
#include "cverdict/corpus.hpp"
#include "cverdict/error.hpp"
#include "cverdict/evaluate.hpp"
#include "cverdict/http_provider.hpp"
#include "cverdict/ingest.hpp"
#include "cverdict/table_providers.hpp"
#include "cverdict/trace.hpp"

namespace cverdict {

namespace {

using nlohmann::json;

constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;

// Owns the shared (non per-case) providers selected by a RunConfig.
struct ProviderBundle {
  LexicalSimilarity lexical_similarity;
  LexiconPolarity lexicon_polarity;
  CueRelation cue_relation;
  std::unique_ptr<HttpSimilarity> http_similarity;
  std::unique_ptr<HttpPolarity> http_polarity;
  std::unique_ptr<HttpRelation> http_relation;

  explicit ProviderBundle(const RunConfig& cfg) {
    if (cfg.provider == ProviderKind::Http || cfg.relation_source == ProviderKind::Http) {
      HttpOptions options;
      options.url = cfg.service_url;
      options.timeout_secs = cfg.timeout_secs;
      auto client = std::make_shared<const HttpClient>(options);
      http_similarity = std::make_unique<HttpSimilarity>(client);
      http_polarity = std::make_unique<HttpPolarity>(client);
      http_relation = std::make_unique<HttpRelation>(client);
    }
  }

  // Resolves providers for one case; `oracle` holds the case's fixture tables.
  ProviderSet resolve(const RunConfig& cfg, const TableProviders& oracle) const {
    ProviderSet set;
    switch (cfg.provider) {
      case ProviderKind::Lexical:
        set.similarity = &lexical_similarity;
        set.polarity = &lexicon_polarity;
        break;
      case ProviderKind::Http:
        set.similarity = http_similarity.get();
        set.polarity = http_polarity.get();
        break;
      case ProviderKind::Fixture:
        set.similarity = &oracle.similarity;
        set.polarity = &oracle.polarity;
        break;
    }
    switch (cfg.relation_source) {
      case ProviderKind::Lexical: set.relation = &cue_relation; break;
      case ProviderKind::Http: set.relation = http_relation.get(); break;
      case ProviderKind::Fixture: set.relation = &oracle.relation; break;
    }
    return set;
  }
};

int cmd_ingest(const std::string& dataset, const std::string& input, const std::string& out_path,
               const std::string& report_path, std::ostream& out) {
  const DatasetKind kind = parse_dataset_kind(dataset);
  std::ifstream in(input);
  if (!in) throw Error("cannot open input " + input);
  const auto records = kind == DatasetKind::Averitec ? parse_averitec(in) : parse_feverous(in);
  const auto [cases, report] = filter_cases(records, kind);
  save_cases(out_path, cases);
  if (!report_path.empty()) write_text_file(report_path, to_json(report).dump(2) + "\n");
  out << "ingested " << records.size() << " records, kept " << cases.size() << " cases\n";
  return 0;
}

int cmd_reason(const RunConfig& cfg, const std::string& cases_path, const std::string& out_path,
               const std::string& explain_dir, std::ostream& out, std::ostream& err) {
  const LoadedCases loaded = load_cases(cases_path);
  const ProviderBundle bundle(cfg);
  const ProviderResolver resolver = [&](std::size_t i) {
    return bundle.resolve(cfg, loaded.oracles[i]);
  };
  const auto outcomes = reason_corpus(loaded.cases, resolver, cfg.reasoner(), cfg.jobs);

  std::vector<Prediction> predictions;
  std::size_t failures = 0;
  for (const CaseOutcome& o : outcomes) {
    if (!o.result) {
      err << "case " << o.id << ": " << o.error << "\n";
      ++failures;
      continue;
    }
    predictions.push_back({o.id, *o.result});
  }
  if (failures) {
    err << failures << " of " << outcomes.size() << " cases failed; no predictions written\n";
    return kExitFailure;
  }
  write_text_file(out_path, predictions_to_json(predictions).dump(2) + "\n");
  if (!explain_dir.empty()) {
    std::filesystem::create_directories(explain_dir);
    for (const Prediction& p : predictions)
      write_text_file(std::filesystem::path(explain_dir) / (p.id + ".txt"),
                      render_plain(p.result));
  }
  out << "reasoned " << predictions.size() << " cases\n";
  return 0;
}

int cmd_explain(const std::string& id, const std::string& predictions_path, std::ostream& out,
                std::ostream& err) {
  for (const Prediction& p : load_predictions(predictions_path)) {
    if (p.id != id) continue;
    out << "case " << p.id << ": " << to_string(p.result.label) << "\n";
    out << render_plain(p.result);
    return 0;
  }
  err << "unknown case id '" << id << "'\n";
  return kExitUsage;
}

int cmd_eval(const std::string& cases_path, const std::string& predictions_path,
             const std::string& mode, const std::string& agg, const std::string& out_path,
             const std::string& test_set, const std::string& source, std::ostream& out) {
  const LoadedCases loaded = load_cases(cases_path);
  const auto predictions = load_predictions(predictions_path);
  std::map<std::string, VerdictLabel> predicted;
  for (const Prediction& p : predictions) predicted[p.id] = p.result.label;

  std::vector<LabeledPrediction> pairs;
  for (const ClaimCase& c : loaded.cases) {
    if (!c.gold) throw Error("case " + c.id + " has no gold label");
    auto it = predicted.find(c.id);
    pairs.emplace_back(it == predicted.end() ? VerdictLabel::Abstain : it->second, *c.gold);
  }

  std::vector<EvalMode> modes;
  if (mode == "both") modes = {EvalMode::Strict, EvalMode::Tolerant};
  else modes = {parse_eval_mode(mode)};
  const Aggregation aggregation = parse_aggregation(agg);

  std::vector<ReportEntry> entries;
  for (EvalMode m : modes)
    entries.push_back({test_set, source, m, score(pairs, {m, aggregation})});
  render_report(entries, out_path);
  out << render_table(entries);
  return 0;
}

int cmd_check_provider(const RunConfig& cfg, std::ostream& out) {
  const ProviderBundle bundle(cfg);
  const TableProviders empty;
  ConformanceOptions options;
  if (cfg.provider == ProviderKind::Http) {
    options.reflexivity_tolerance = 1e-3;
    options.symmetry_tolerance = 1e-6;
  }
  const ConformanceReport report = run_conformance(bundle.resolve(cfg, empty), options);
  out << report.render();
  out << (report.passed() ? "provider conforms\n" : "provider violates the contract\n");
  return report.passed() ? 0 : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Causal-relation verdict engine for claim/evidence fact checking", "cverdict"};
  app.require_subcommand(0, 1);

  std::string config_file;
  ConfigOverrides overrides;
  bool show_config = false;
  app.add_option("--config", config_file, "JSON config file");
  app.add_option_function<std::string>("--provider", [&](const std::string& v) { overrides.provider = v; },
                                       "lexical | http | fixture");
  app.add_option_function<std::string>("--relations", [&](const std::string& v) { overrides.relations = v; },
                                       "cross-text relation source: lexical | http | fixture");
  app.add_option_function<std::string>("--service-url", [&](const std::string& v) { overrides.service_url = v; },
                                       "NLP service base URL");
  app.add_option_function<double>("--timeout", [&](double v) { overrides.timeout_secs = v; },
                                  "per-request timeout in seconds");
  app.add_option_function<double>("--theta", [&](double v) { overrides.theta = v; },
                                  "similarity threshold (default 0.54)");
  app.add_option_function<int>("--max-hops", [&](int v) { overrides.max_hops = v; },
                               "causal loop hop bound (default 4)");
  app.add_flag_function("--cherry-loose", [&](std::int64_t) { overrides.cherry_loose = true; },
                        "also flag dissimilar endpoints with differing polarity");
  app.add_option_function<int>("--jobs", [&](int v) { overrides.jobs = v; }, "worker threads");
  app.add_option_function<std::uint64_t>("--seed", [&](std::uint64_t v) { overrides.seed = v; },
                                         "seed for sampling");
  app.add_flag("--show-config", show_config, "print the effective configuration");

  auto* ingest = app.add_subcommand("ingest", "parse and filter a dataset into cases.json");
  std::string dataset, input, cases_out, report_out;
  ingest->add_option("--dataset", dataset, "averitec | feverous")->required();
  ingest->add_option("--input", input)->required();
  ingest->add_option("--out", cases_out)->required();
  ingest->add_option("--report", report_out);

  auto* reason = app.add_subcommand("reason", "predict verdicts for every case");
  std::string cases_in, preds_out, explain_dir;
  reason->add_option("--cases", cases_in)->required();
  reason->add_option("--out", preds_out)->required();
  reason->add_option("--explain-dir", explain_dir, "write one plain-text derivation per case");

  auto* explain = app.add_subcommand("explain", "print the derivation of one case");
  std::string explain_id, explain_preds;
  explain->add_option("--id", explain_id)->required();
  explain->add_option("--predictions", explain_preds)->required();

  auto* eval = app.add_subcommand("eval", "score predictions against gold labels");
  std::string eval_cases, eval_preds, eval_out, mode = "strict", agg = "micro";
  std::string test_set = "dataset", source = "provider";
  eval->add_option("--cases", eval_cases)->required();
  eval->add_option("--predictions", eval_preds)->required();
  eval->add_option("--mode", mode, "strict | tolerant | both")->capture_default_str();
  eval->add_option("--agg", agg, "micro | macro")->capture_default_str();
  eval->add_option("--out", eval_out)->required();
  eval->add_option("--test-set", test_set)->capture_default_str();
  eval->add_option("--source", source, "knowledge source row label")->capture_default_str();

  auto* check = app.add_subcommand("check-provider", "run the provider conformance suite");

  for (CLI::App* sub : {ingest, reason, explain, eval, check}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const std::optional<std::filesystem::path> cfg_path =
        config_file.empty() ? std::nullopt : std::optional<std::filesystem::path>(config_file);
    const RunConfig cfg = resolve_config(cfg_path, overrides);
    if (show_config) out << to_json(cfg).dump(2) << "\n";

    if (ingest->parsed()) return cmd_ingest(dataset, input, cases_out, report_out, out);
    if (reason->parsed()) return cmd_reason(cfg, cases_in, preds_out, explain_dir, out, err);
    if (explain->parsed()) return cmd_explain(explain_id, explain_preds, out, err);
    if (eval->parsed())
      return cmd_eval(eval_cases, eval_preds, mode, agg, eval_out, test_set, source, out);
    if (check->parsed()) return cmd_check_provider(cfg, out);
    if (!show_config) out << app.help();
    return 0;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace cverdict
