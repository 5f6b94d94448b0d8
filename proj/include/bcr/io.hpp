#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "bcr/graph.hpp"

namespace bcr::io {

/// Malformed graph text. line() is 1-based; 0 when no single line is at fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Native format:
//
//   # comment
//   bigraph <x_count> <y_count>
//   x<i> y<j> [weight]
//
// Blank lines and lines starting with '#' are ignored anywhere. The header
// precedes all edges; indices are 0-based; weight defaults to 1.
BipartiteGraph parse_graph(std::istream& in);
BipartiteGraph parse_graph_file(const std::filesystem::path& path);

// Headerless edge list: "<i> <j> [weight]" per line, '#' comments allowed.
// Side sizes are one more than the largest index seen on each side.
BipartiteGraph parse_edge_list(std::istream& in);
BipartiteGraph parse_edge_list_file(const std::filesystem::path& path);

/// Canonical native text: header, then edges in (x, y) order; the weight is
/// written only when it differs from 1.
void write_graph(std::ostream& out, const BipartiteGraph& g);

}  // namespace bcr::io
