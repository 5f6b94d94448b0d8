#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "bcr/graph.hpp"
#include "bcr/solver.hpp"

namespace bcr::report {

using Document = nlohmann::ordered_json;

struct RunInfo {
  std::string command;  // "decide", "exact" or "census"
  std::string input;
  double wall_time_ms = 0.0;
};

// Every document carries the same keys in the same order:
//   command, input, n_x, n_y, m, k, decision, optimum, witness, stats,
//   method, census, wall_time_ms
// Inapplicable values are null. optimum is a number or "exceeds_budget";
// witness is {"x": [...ranks], "y": [...ranks]}.

Document solve_document(const RunInfo& run, const BipartiteGraph& g, const SolveReport& r);

Document census_document(const RunInfo& run, const BipartiteGraph& g, const CensusReport& c);

/// Plain aligned key/value listing of a document.
void write_table(std::ostream& out, const Document& doc);

}  // namespace bcr::report
