#pragma once

// Enumeration of every layout of one side that can occur in a two-layer
// drawing with at most k crossings, for connected graphs without sibling
// pairs.
//
// The side's vertices are tied together by a spine map T built from an
// Eulerian tour of the graph with every edge doubled: T(x) is the same-side
// vertex reached right after the last visit of x, through a middle vertex
// mid(x) on the other side. The pairs {x, T(x)} form a spanning tree of the
// side, each edge of the graph lies on at most two paths x - mid(x) - T(x),
// and in any drawing with c crossings the gaps
//
//     gap(x) = |rank(x) - rank(T(x))| - 1
//
// satisfy sum(gap(x) - 1) <= 4c. A layout is recovered from its gaps, the
// direction of each step and the rank of the root, so walking the spine tree
// from the root over all gap vectors with sum(gap) <= 4k + a - 1 (a = side
// size) reaches every layout of a drawing with at most k crossings.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bcr/drawing.hpp"
#include "bcr/errors.hpp"
#include "bcr/graph.hpp"

namespace bcr::fpt {

inline constexpr std::uint32_t kNoVertex = 0xffffffffu;

struct SpineMap {
  Side side = Side::X;
  std::uint32_t root = 0;
  std::vector<std::uint32_t> successor;  // T(x); kNoVertex at the root
  std::vector<std::uint32_t> witness;    // mid(x) on the other side; kNoVertex at the root

  std::size_t size() const noexcept { return successor.size(); }
};

/// Closed Eulerian tour of g with every edge doubled, starting and ending at
/// `start`. Hierholzer's algorithm, always taking the unused edge copy to the
/// smallest neighbour index first. Requires g connected.
std::vector<VertexId> doubled_euler_tour(const BipartiteGraph& g, VertexId start);

/// Throws GraphError when g is disconnected, when the side has fewer than two
/// vertices or the other side is empty, or when root is out of range.
SpineMap build_spine(const BipartiteGraph& g, Side side, std::uint32_t root = 0);

/// Independent check of the three spine properties: each x != root has a
/// length-two path x - mid(x) - T(x) in g; each edge of g lies on at most two
/// such paths; the pairs {x, T(x)} form a spanning tree of the side.
bool verify_spine(const BipartiteGraph& g, const SpineMap& s);

/// Root first; every vertex after its successor; siblings by index.
std::vector<std::uint32_t> spine_order(const SpineMap& s);

struct CandidateEncoding {
  std::vector<std::uint32_t> gap;   // ignored at the root
  std::vector<std::int8_t> sign;    // +1 / -1, ignored at the root
  std::uint32_t root_rank = 0;

  friend bool operator==(const CandidateEncoding&, const CandidateEncoding&) = default;
};

/// rank(root) = root_rank, rank(x) = rank(T(x)) + sign(x) * (gap(x) + 1).
/// Nothing when a rank leaves 0..a-1 or two vertices collide.
std::optional<Layout> decode_layout(const SpineMap& s, const CandidateEncoding& enc);

/// Inverse of decode_layout for a valid layout of the spine's side.
CandidateEncoding encode_layout(const SpineMap& s, const Layout& l);

/// sum over x != root of (gap(x) - 1).
std::int64_t gap_excess(const SpineMap& s, const CandidateEncoding& enc);

/// 4k + a - 1, the largest admissible gap sum. Throws ResourceError past
/// max_budget.
std::uint64_t gap_budget(std::size_t a, std::uint64_t k, std::uint64_t max_budget);

struct EnumerationLimits {
  std::uint64_t max_budget = std::uint64_t{1} << 16;
  std::uint64_t max_candidates = std::uint64_t{1} << 24;
};

using CandidateSink = std::function<void(std::span<const std::uint32_t> rank)>;

/// Streams every decodable layout with gap sum <= 4k + a - 1 to `sink`
/// exactly once and returns how many were produced. A fixed spine maps
/// distinct encodings to distinct layouts, so the stream has no duplicates.
/// Requires g connected with side size >= 2 (GraphError otherwise). The
/// stream covers every layout of a drawing with at most k crossings only when
/// g has no sibling pairs; that is the caller's responsibility. Throws
/// ResourceError when max_candidates is exceeded.
std::uint64_t for_each_candidate(const BipartiteGraph& g, Side side, std::uint64_t k,
                                 const CandidateSink& sink, const EnumerationLimits& limits = {});

std::vector<Layout> enumerate_candidates(const BipartiteGraph& g, Side side, std::uint64_t k,
                                         const EnumerationLimits& limits = {});

struct CountBound {
  std::uint64_t value = 0;
  bool saturated = false;
};

/// 2^(4k+2a-3) * 2^(a-1) * a, capped at `ceiling` (saturated = true when the
/// true value is larger). Requires a >= 2.
CountBound count_bound(std::size_t a, std::uint64_t k,
                       std::uint64_t ceiling = ~std::uint64_t{0});

}  // namespace bcr::fpt
