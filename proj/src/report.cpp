#include "bcr/report.hpp"

#include <ostream>

namespace bcr::report {

namespace {

Document base(const RunInfo& run, const BipartiteGraph& g, std::uint64_t k) {
  Document doc;
  doc["command"] = run.command;
  doc["input"] = run.input;
  doc["n_x"] = g.x_count();
  doc["n_y"] = g.y_count();
  doc["m"] = g.edge_count();
  doc["k"] = k;
  doc["decision"] = nullptr;
  doc["optimum"] = nullptr;
  doc["witness"] = nullptr;
  doc["stats"] = nullptr;
  doc["method"] = nullptr;
  doc["census"] = nullptr;
  doc["wall_time_ms"] = run.wall_time_ms;
  return doc;
}

Document witness_json(const Drawing& d) {
  Document w;
  w["x"] = d.fx.rank;
  w["y"] = d.fy.rank;
  return w;
}

Document stats_json(const SolveStats& s) {
  Document j;
  j["components"] = s.components;
  j["candidates_x"] = s.candidates_x;
  j["candidates_y"] = s.candidates_y;
  j["pairs_evaluated"] = s.pairs_evaluated;
  j["pruned"] = s.pruned;
  return j;
}

std::string scalar(const Document& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

Document solve_document(const RunInfo& run, const BipartiteGraph& g, const SolveReport& r) {
  Document doc = base(run, g, r.k);
  doc["decision"] = r.decision ? "yes" : "no";
  if (r.optimum) {
    doc["optimum"] = *r.optimum;
  } else {
    doc["optimum"] = "exceeds_budget";
  }
  if (r.witness) doc["witness"] = witness_json(*r.witness);
  doc["stats"] = stats_json(r.stats);
  doc["method"] = std::string(method_name(r.method));
  return doc;
}

Document census_document(const RunInfo& run, const BipartiteGraph& g, const CensusReport& c) {
  Document doc = base(run, g, c.k);
  const bool yes = c.count > 0;
  doc["decision"] = yes ? "yes" : "no";
  doc["optimum"] = c.best.optimum;
  if (yes) doc["witness"] = witness_json(c.best.witness);
  SolveStats stats;
  stats.components = connected_components(g).size();
  stats.pairs_evaluated = c.drawings;
  doc["stats"] = stats_json(stats);
  doc["method"] = std::string(method_name(Method::Oracle));
  Document census;
  census["count"] = c.count;
  census["drawings"] = c.drawings;
  census["bound"] = c.bound ? Document(c.bound->value) : Document(nullptr);
  census["bound_saturated"] = c.bound ? Document(c.bound->saturated) : Document(nullptr);
  census["bound_applies"] = c.bound_applies;
  doc["census"] = census;
  return doc;
}

void write_table(std::ostream& out, const Document& doc) {
  auto row = [&](const std::string& key, const std::string& value) {
    out << key << std::string(key.size() < 24 ? 24 - key.size() : 1, ' ') << value << '\n';
  };
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object()) {
      if (key == "witness") {
        row("witness.x", value["x"].dump());
        row("witness.y", value["y"].dump());
        continue;
      }
      for (const auto& [sub, v] : value.items()) row(key + "." + sub, scalar(v));
    } else {
      row(key, scalar(value));
    }
  }
}

}  // namespace bcr::report
