#pragma once

#include <filesystem>
#include <iosfwd>

#include "bcr/drawing.hpp"
#include "bcr/graph.hpp"

namespace bcr::svg {

// Static SVG 1.1: X on the upper layer, Y on the lower one, vertices evenly
// spaced by rank, straight edges, weight labels on edges heavier than 1 and a
// "crossings: N" caption. Output depends only on (g, d).
void emit_svg(std::ostream& out, const BipartiteGraph& g, const Drawing& d);

/// Throws std::runtime_error when the file cannot be written.
void write_svg(const std::filesystem::path& path, const BipartiteGraph& g, const Drawing& d);

}  // namespace bcr::svg
