#include <doctest.h>

#include <algorithm>
#include <random>
#include <regex>
#include <sstream>
#include <string>

#include "bcr/io.hpp"
#include "bcr/report.hpp"
#include "bcr/svg.hpp"
#include "support/generators.hpp"

using namespace bcr;
using namespace bcr::testing;

namespace {

BipartiteGraph parse(const std::string& text) {
  std::istringstream in(text);
  return io::parse_graph(in);
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const io::ParseError& e) {
    return e.line();
  }
  return 0;
}

bool is_permutation_of_range(const report::Document& ranks, std::size_t n) {
  if (!ranks.is_array() || ranks.size() != n) return false;
  std::vector<std::uint32_t> r = ranks.get<std::vector<std::uint32_t>>();
  std::sort(r.begin(), r.end());
  for (std::size_t i = 0; i < n; ++i)
    if (r[i] != i) return false;
  return true;
}

struct Segment {
  long x1, y1, x2, y2;
};

std::vector<Segment> svg_lines(const std::string& svg) {
  static const std::regex line(R"re(<line x1="(-?\d+)" y1="(-?\d+)" x2="(-?\d+)" y2="(-?\d+)"/>)re");
  std::vector<Segment> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), line); it != std::sregex_iterator(); ++it) {
    out.push_back({std::stol((*it)[1]), std::stol((*it)[2]), std::stol((*it)[3]), std::stol((*it)[4])});
  }
  return out;
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("parse_graph native format") {
  const BipartiteGraph g = parse("# four cycle\nbigraph 2 2\nx0 y0\nx0 y1\n\nx1 y0\nx1 y1\n");
  CHECK(g == c4());

  const BipartiteGraph w = parse("bigraph 1 1\nx0 y0 5\n");
  REQUIRE(w.edge_count() == 1);
  CHECK(w.edge(0).weight == 5);

  CHECK(parse("bigraph 3 0\n").vertex_count() == 3);
}

TEST_CASE("parse_graph errors carry line numbers") {
  CHECK(error_line("bigraph 2 2\nx0 z1\n") == 2);
  CHECK(error_line("bigraph 2 2\n# note\nx0 y0\nx0 y0\n") == 4);
  CHECK(error_line("bigraph 2 2\nx0 y2\n") == 2);
  CHECK(error_line("bigraph 2 2\nx0 y0 0\n") == 2);
  CHECK(error_line("bigraph 2 2\nx0 y0 1 extra\n") == 2);
  CHECK(error_line("x0 y0\n") == 1);
  CHECK(error_line("bigraph 2 2\nbigraph 2 2\n") == 2);
  CHECK_THROWS_AS(parse(""), io::ParseError);

  try {
    parse("bigraph 2 2\nx0 y0\nx0 y0\n");
    FAIL("expected ParseError");
  } catch (const io::ParseError& e) {
    CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
  }
}

TEST_CASE("edge list import") {
  std::istringstream in("# c4\n0 0\n0 1\n1 0\n1 1\n");
  CHECK(io::parse_edge_list(in) == c4());
  std::istringstream weighted("0 2 7\n");
  const BipartiteGraph g = io::parse_edge_list(weighted);
  CHECK(g.x_count() == 1);
  CHECK(g.y_count() == 3);
  CHECK(g.edge(0).weight == 7);
  CHECK(io::parse_edge_list_file(BCR_TEST_DATA "/c4.edges") == c4());
  CHECK(io::parse_graph_file(BCR_TEST_DATA "/c4.graph") == c4());
  CHECK_THROWS_AS(io::parse_graph_file(BCR_TEST_DATA "/does_not_exist.graph"), io::ParseError);
}

TEST_CASE("write_graph round trips") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const BipartiteGraph g = weight_leaf_edges(rng, random_small_connected(rng, 14, 6), 9);
    std::ostringstream out;
    io::write_graph(out, g);
    std::istringstream in(out.str());
    CHECK(io::parse_graph(in) == g);
  }
  std::ostringstream out;
  io::write_graph(out, build_graph(1, 2, {{0, 0, 1}, {0, 1, 4}}));
  CHECK(out.str() == "bigraph 1 2\nx0 y0\nx0 y1 4\n");
}

TEST_CASE("solve documents always carry the full key set") {
  const std::vector<std::string> keys{"command", "input", "n_x", "n_y", "m", "k", "decision",
                                      "optimum", "witness", "stats", "method", "census", "wall_time_ms"};
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const BipartiteGraph g = random_small_connected(rng, 8, 3);
    const std::uint64_t k = std::uniform_int_distribution<std::uint64_t>(0, 3)(rng);
    const SolveReport r = bcr_decide(g, k);
    const report::Document doc = report::solve_document({"decide", "g", 1.5}, g, r);
    std::vector<std::string> seen;
    for (const auto& [key, value] : doc.items()) seen.push_back(key);
    CHECK(seen == keys);
    CHECK(doc["decision"] == (r.decision ? "yes" : "no"));
    if (r.decision) {
      CHECK(is_permutation_of_range(doc["witness"]["x"], g.x_count()));
      CHECK(is_permutation_of_range(doc["witness"]["y"], g.y_count()));
      CHECK(doc["optimum"].get<std::uint64_t>() <= k);
    } else {
      CHECK(doc["witness"].is_null());
      CHECK(doc["optimum"] == "exceeds_budget");
    }
    CHECK(doc["census"].is_null());
  }

  const CensusReport c = run_census(complete(1, 6), 0);
  const report::Document doc = report::census_document({"census", "k16", 0.0}, complete(1, 6), c);
  CHECK(doc["census"]["count"] == 720);
  CHECK(doc["method"] == "oracle");
  CHECK(doc["census"]["bound"].is_null());
}

TEST_CASE("reports are identical apart from timing") {
  const BipartiteGraph g = complete(3, 3);
  report::Document a = report::solve_document({"exact", "k33", 3.0}, g, bcr_exact(g, 10));
  report::Document b = report::solve_document({"exact", "k33", 8.0}, g, bcr_exact(g, 10));
  CHECK(a.dump() != b.dump());
  a["wall_time_ms"] = 0;
  b["wall_time_ms"] = 0;
  CHECK(a.dump(2) == b.dump(2));

  std::ostringstream table;
  report::write_table(table, a);
  CHECK(std::regex_search(table.str(), std::regex("\noptimum +9\n")));
}

TEST_CASE("svg output") {
  const SolveReport r = bcr_decide(c4(), 1);
  REQUIRE(r.witness);
  std::ostringstream first, second;
  svg::emit_svg(first, c4(), *r.witness);
  svg::emit_svg(second, c4(), *r.witness);
  CHECK(first.str() == second.str());
  CHECK(first.str().find("crossings: 1") != std::string::npos);
  CHECK(count(first.str(), "<circle") == 4);

  // count proper crossings between segments geometrically
  const std::vector<Segment> lines = svg_lines(first.str());
  REQUIRE(lines.size() == 4);
  int crossings = 0;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Segment& p = lines[i];
      const Segment& q = lines[j];
      if ((p.x1 - q.x1) * (p.x2 - q.x2) < 0) ++crossings;
    }
  CHECK(crossings == 1);

  const BipartiteGraph single = build_graph(1, 1, {{0, 0, 3}});
  std::ostringstream one;
  svg::emit_svg(one, single, Drawing{identity_layout(Side::X, 1), identity_layout(Side::Y, 1)});
  CHECK(count(one.str(), "<circle") == 2);
  CHECK(svg_lines(one.str()).size() == 1);
  CHECK(one.str().find(">3</text>") != std::string::npos);

  CHECK_THROWS_AS(svg::write_svg("/nonexistent-dir/out.svg", single,
                                 Drawing{identity_layout(Side::X, 1), identity_layout(Side::Y, 1)}),
                  std::runtime_error);
}
