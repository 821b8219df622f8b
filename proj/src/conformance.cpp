#include "cverdict/conformance.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "cverdict/error.hpp"

namespace cverdict {

namespace {

const std::vector<std::string>& probe_texts() {
  static const std::vector<std::string> texts = {
      "earthquake deaths",
      "The earthquake has left behind dozens of deaths in Japan.",
      "improving overall stamina",
      "decline in employee morale",
      "Testing the entire population would identify hidden carriers.",
      "access to reliable internet",
      "committed match-fixing",
      "forced to retire"};
  return texts;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// Runs `body`, converting the first violation or thrown error into a failure.
ConformanceCheck run_check(std::string name, const std::function<std::string()>& body) {
  ConformanceCheck check{std::move(name), true, {}};
  try {
    check.detail = body();
  } catch (const std::exception& e) {
    check.detail = e.what();
  }
  check.passed = check.detail.empty();
  return check;
}

}  // namespace

bool ConformanceReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string ConformanceReport::render() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) os << ": " << c.detail;
    os << '\n';
  }
  return os.str();
}

ConformanceReport run_conformance(const ProviderSet& providers,
                                  const ConformanceOptions& options) {
  ConformanceReport report;
  const auto& texts = probe_texts();

  if (const SimilarityProvider* sim = providers.similarity) {
    report.checks.push_back(run_check("similarity.reflexivity", [&]() -> std::string {
      for (const auto& t : texts) {
        const double s = sim->score(t, t);
        if (std::fabs(s - 1.0) > options.reflexivity_tolerance)
          return "score(\"" + t + "\", itself) = " + fmt(s);
      }
      return {};
    }));
    report.checks.push_back(run_check("similarity.symmetry", [&]() -> std::string {
      for (std::size_t i = 0; i < texts.size(); ++i)
        for (std::size_t j = i + 1; j < texts.size(); ++j) {
          const double ab = sim->score(texts[i], texts[j]);
          const double ba = sim->score(texts[j], texts[i]);
          if (std::fabs(ab - ba) > options.symmetry_tolerance)
            return "score(\"" + texts[i] + "\", \"" + texts[j] + "\") = " + fmt(ab) +
                   " but reversed = " + fmt(ba);
        }
      return {};
    }));
    report.checks.push_back(run_check("similarity.range", [&]() -> std::string {
      for (const auto& a : texts)
        for (const auto& b : texts) {
          double s = 0.0;
          try {
            s = sim->score(a, b);
          } catch (const ProviderError& e) {
            if (e.kind() == ProviderErrorKind::OutOfRange) return e.what();
            throw;
          }
          if (!std::isfinite(s) || s < 0.0 || s > 1.0)
            return "score(\"" + a + "\", \"" + b + "\") = " + fmt(s) + " outside [0, 1]";
        }
      return {};
    }));
    report.checks.push_back(run_check("similarity.determinism", [&]() -> std::string {
      for (const auto& t : texts) {
        const double first = sim->score(t, texts.front());
        const double second = sim->score(t, texts.front());
        if (first != second) return "repeated score for \"" + t + "\" differs";
      }
      return {};
    }));
  }

  if (const PolarityProvider* pol = providers.polarity) {
    report.checks.push_back(run_check("polarity.validity", [&]() -> std::string {
      for (const auto& t : texts) {
        const auto r = pol->polarity(t);
        if (r.label != Polarity::Positive && r.label != Polarity::Negative)
          return "invalid label for \"" + t + "\"";
        if (!(r.confidence >= 0.0 && r.confidence <= 1.0))
          return "confidence " + fmt(r.confidence) + " outside [0, 1]";
      }
      return {};
    }));
    report.checks.push_back(run_check("polarity.determinism", [&]() -> std::string {
      for (const auto& t : texts)
        if (pol->polarity(t).label != pol->polarity(t).label)
          return "repeated polarity for \"" + t + "\" differs";
      return {};
    }));
  }

  if (const RelationProvider* rel = providers.relation) {
    const Event quake("earthquake", "The earthquake has left behind dozens of deaths in Japan.",
                      Provenance::claim());
    const Event deaths("deaths", "The earthquake has left behind dozens of deaths in Japan.",
                       Provenance::evidence(0));
    const Event internet("access to reliable internet",
                         "having access to reliable internet grants students access to online "
                         "courses.",
                         Provenance::evidence(0));
    const std::vector<std::pair<Event, Event>> pairs = {
        {quake, deaths}, {deaths, quake}, {internet, deaths}, {quake, quake}};
    report.checks.push_back(run_check("relation.validity", [&]() -> std::string {
      for (const auto& [a, b] : pairs) {
        const Relation r = rel->relation(a, b);
        if (!is_extractable(r))
          return "relation(" + a.span + ", " + b.span + ") = " + std::string(to_string(r));
      }
      return {};
    }));
    report.checks.push_back(run_check("relation.determinism", [&]() -> std::string {
      for (const auto& [a, b] : pairs)
        if (rel->relation(a, b) != rel->relation(a, b))
          return "repeated relation(" + a.span + ", " + b.span + ") differs";
      return {};
    }));
  }
  return report;
}

}  // namespace cverdict
