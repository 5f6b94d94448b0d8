#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bcr/graph.hpp"

namespace bcr {

/// A layout on one side: rank[v] is the 0-based position of vertex v.
struct Layout {
  Side side = Side::X;
  std::vector<std::uint32_t> rank;

  std::size_t size() const noexcept { return rank.size(); }

  friend bool operator==(const Layout&, const Layout&) = default;
};

Layout identity_layout(Side side, std::size_t n);

/// Vertex order by rank (the inverse permutation). Requires a valid layout.
std::vector<std::uint32_t> order_of(const Layout& l);

bool validate_layout(std::span<const std::uint32_t> rank);
inline bool validate_layout(const Layout& l) { return validate_layout(l.rank); }

/// Two-layer drawing of a graph held alongside it: fx on X, fy on Y.
struct Drawing {
  Layout fx{Side::X, {}};
  Layout fy{Side::Y, {}};

  const Layout& layout(Side s) const { return s == Side::X ? fx : fy; }

  friend bool operator==(const Drawing&, const Drawing&) = default;
};

/// Sides and lengths match g and both layouts are permutations.
bool is_valid_drawing(const BipartiteGraph& g, const Drawing& d);

// Both counters return the weighted crossing number: the sum over crossing
// edge pairs of the product of their weights, each unordered pair counted
// once. Counting ordered pairs (x, y), (x', y') with fx(x) < fx(x') and
// fy(y') < fy(y) visits every crossing exactly once as well, so the two
// readings of the definition agree. Throw CountOverflow past 2^64 - 1 and
// std::invalid_argument on a drawing that does not fit g.

/// O(m^2) scan over edge pairs.
std::uint64_t crossing_number_naive(const BipartiteGraph& g, const Drawing& d);

/// O(m log m): weighted inversion count over edges sorted by (fx, fy) with a
/// Fenwick tree indexed by fy rank.
std::uint64_t crossing_number_fast(const BipartiteGraph& g, const Drawing& d);

/// A drawing with zero crossings, or nothing when g is not a caterpillar
/// forest. Components are placed left to right in connected_components order.
std::optional<Drawing> crossing_free_drawing(const BipartiteGraph& g);

/// Expands a drawing of a reduced graph to the graph it was reduced from,
/// keeping each merged group consecutive in ascending index order.
Drawing lift_drawing(const ReducedGraph& reduced, const Drawing& d);

}  // namespace bcr
