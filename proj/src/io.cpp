#include "bcr/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace bcr::io {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool skippable(const std::vector<std::string_view>& tokens) {
  return tokens.empty() || tokens.front().front() == '#';
}

template <typename T>
bool to_number(std::string_view s, T& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::uint32_t vertex_token(std::string_view tok, char prefix, std::size_t line) {
  std::uint32_t v = 0;
  if (tok.size() < 2 || tok.front() != prefix || !to_number(tok.substr(1), v)) {
    throw ParseError(line, "expected vertex '" + std::string(1, prefix) + "<index>', got '" +
                               std::string(tok) + "'");
  }
  return v;
}

Weight weight_token(const std::vector<std::string_view>& tokens, std::size_t at, std::size_t line) {
  if (tokens.size() <= at) return 1;
  if (tokens.size() > at + 1) throw ParseError(line, "trailing tokens after edge");
  Weight w = 0;
  if (!to_number(tokens[at], w)) throw ParseError(line, "invalid weight '" + std::string(tokens[at]) + "'");
  if (w == 0) throw ParseError(line, "weight must be positive");
  return w;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot read " + path.string());
  return in;
}

BipartiteGraph assemble(std::uint32_t nx, std::uint32_t ny, std::vector<Edge> edges,
                        const std::vector<std::size_t>& lines) {
  // Report the first offending line for range and duplicate errors.
  std::vector<std::vector<std::uint32_t>> seen(nx);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.x >= nx || e.y >= ny) {
      throw ParseError(lines[i], "edge (x" + std::to_string(e.x) + ", y" + std::to_string(e.y) +
                                     ") out of range for bigraph " + std::to_string(nx) + " " +
                                     std::to_string(ny));
    }
    for (std::uint32_t y : seen[e.x]) {
      if (y == e.y) {
        throw ParseError(lines[i], "duplicate edge (x" + std::to_string(e.x) + ", y" + std::to_string(e.y) + ")");
      }
    }
    seen[e.x].push_back(e.y);
  }
  try {
    return BipartiteGraph(nx, ny, std::move(edges));
  } catch (const GraphError& err) {
    throw ParseError(0, err.what());
  }
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

BipartiteGraph parse_graph(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint32_t nx = 0;
  std::uint32_t ny = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  while (std::getline(in, text)) {
    ++line_no;
    const auto tokens = split(text);
    if (skippable(tokens)) continue;
    if (!have_header) {
      if (tokens.size() != 3 || tokens[0] != "bigraph" || !to_number(tokens[1], nx) || !to_number(tokens[2], ny)) {
        throw ParseError(line_no, "expected header 'bigraph <x_count> <y_count>'");
      }
      have_header = true;
      continue;
    }
    if (tokens.size() < 2) throw ParseError(line_no, "expected edge 'x<i> y<j> [weight]'");
    if (tokens[0] == "bigraph") throw ParseError(line_no, "repeated header");
    Edge e;
    e.x = vertex_token(tokens[0], 'x', line_no);
    e.y = vertex_token(tokens[1], 'y', line_no);
    e.weight = weight_token(tokens, 2, line_no);
    edges.push_back(e);
    lines.push_back(line_no);
  }
  if (!have_header) throw ParseError(line_no, "missing header 'bigraph <x_count> <y_count>'");
  return assemble(nx, ny, std::move(edges), lines);
}

BipartiteGraph parse_graph_file(const std::filesystem::path& path) {
  std::ifstream in = open(path);
  return parse_graph(in);
}

BipartiteGraph parse_edge_list(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;
  std::uint32_t nx = 0;
  std::uint32_t ny = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  while (std::getline(in, text)) {
    ++line_no;
    const auto tokens = split(text);
    if (skippable(tokens)) continue;
    Edge e;
    if (tokens.size() < 2 || !to_number(tokens[0], e.x) || !to_number(tokens[1], e.y) ||
        e.x == 0xffffffffu || e.y == 0xffffffffu) {
      throw ParseError(line_no, "expected edge '<i> <j> [weight]'");
    }
    e.weight = weight_token(tokens, 2, line_no);
    nx = std::max(nx, e.x + 1);
    ny = std::max(ny, e.y + 1);
    edges.push_back(e);
    lines.push_back(line_no);
  }
  return assemble(nx, ny, std::move(edges), lines);
}

BipartiteGraph parse_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in = open(path);
  return parse_edge_list(in);
}

void write_graph(std::ostream& out, const BipartiteGraph& g) {
  out << "bigraph " << g.x_count() << ' ' << g.y_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << 'x' << e.x << " y" << e.y;
    if (e.weight != 1) out << ' ' << e.weight;
    out << '\n';
  }
}

}  // namespace bcr::io
