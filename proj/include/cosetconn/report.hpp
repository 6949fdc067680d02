#ifndef COSETCONN_REPORT_HPP
#define COSETCONN_REPORT_HPP

#include <string>

#include <json.hpp>

#include "cosetconn/spec_document.hpp"
#include "cosetconn/theorem_suite.hpp"

namespace cosetconn {

struct AnalysisOutcome {
  nlohmann::ordered_json report;
  std::string summary;  // a few human-readable lines
  bool consistent;      // every cross-check agreed
};

// build -> degrees -> connectivity -> kappa (flow and group side) -> lambda
// -> atoms within the brute-force cap. Deterministic unless `timings` is set.
// Throws InputError, CapExceeded or InconsistencyError.
AnalysisOutcome analyze(const SpecDocument& doc, bool timings = false);

nlohmann::ordered_json to_json(const HypothesisReport& r);
std::string summarize(const HypothesisReport& r);

// Exports; byte-deterministic for a fixed digraph.
std::string export_dot(const CosetDigraph& cd);
std::string export_edges(const CosetDigraph& cd);

} // namespace cosetconn

#endif // COSETCONN_REPORT_HPP
