#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace bcr {

enum class Side : std::uint8_t { X, Y };

constexpr Side opposite(Side s) noexcept { return s == Side::X ? Side::Y : Side::X; }

constexpr std::string_view side_name(Side s) noexcept { return s == Side::X ? "x" : "y"; }

struct VertexId {
  Side side = Side::X;
  std::uint32_t index = 0;

  friend bool operator==(const VertexId&, const VertexId&) = default;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

using Weight = std::uint64_t;

struct Edge {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  Weight weight = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// One entry of an adjacency list: the neighbour on the other side and the
/// position of the connecting edge in BipartiteGraph::edges().
struct Incidence {
  std::uint32_t other;
  std::uint32_t edge;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple, edge-weighted bipartite graph with a fixed bipartition.
///
/// Vertices are dense 0-based indices per side. Edges are kept sorted by
/// (x, y); adjacency lists are sorted by neighbour index. Instances are
/// immutable once constructed.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Throws GraphError on out-of-range endpoints, zero weights and
  /// duplicate (x, y) pairs.
  BipartiteGraph(std::uint32_t x_count, std::uint32_t y_count, std::vector<Edge> edges);

  std::size_t x_count() const noexcept { return x_count_; }
  std::size_t y_count() const noexcept { return y_count_; }
  std::size_t side_count(Side s) const noexcept { return s == Side::X ? x_count_ : y_count_; }
  std::size_t vertex_count() const noexcept { return std::size_t{x_count_} + y_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  std::span<const Incidence> neighbors(Side s, std::uint32_t v) const;
  std::size_t degree(Side s, std::uint32_t v) const { return neighbors(s, v).size(); }

  /// Index into edges() of the edge (x, y), or npos.
  std::size_t find_edge(std::uint32_t x, std::uint32_t y) const;
  bool has_edge(std::uint32_t x, std::uint32_t y) const { return find_edge(x, y) != npos; }

  /// Every edge whose endpoints both have degree >= 2 has weight one.
  bool is_leaf_edge_weighted() const;

  bool is_unit_weighted() const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.x_count_ == b.x_count_ && a.y_count_ == b.y_count_ && a.edges_ == b.edges_;
  }

 private:
  std::uint32_t x_count_ = 0;
  std::uint32_t y_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> x_offset_{0};
  std::vector<std::uint32_t> y_offset_{0};
  std::vector<Incidence> x_adj_;
  std::vector<Incidence> y_adj_;
};

inline BipartiteGraph build_graph(std::uint32_t x_count, std::uint32_t y_count,
                                  std::vector<Edge> edges) {
  return BipartiteGraph(x_count, y_count, std::move(edges));
}

/// A connected component re-indexed densely; x_origin[i] / y_origin[j] give
/// the index of the vertex in the graph it was extracted from.
struct Component {
  BipartiteGraph graph;
  std::vector<std::uint32_t> x_origin;
  std::vector<std::uint32_t> y_origin;
};

/// Components ordered by smallest original X index, then smallest Y index.
/// Vertex order inside a component follows the original indices.
std::vector<Component> connected_components(const BipartiteGraph& g);

bool is_connected(const BipartiteGraph& g);

struct SiblingPair {
  VertexId leaf_a;
  VertexId leaf_b;
  VertexId parent;

  friend bool operator==(const SiblingPair&, const SiblingPair&) = default;
};

/// All unordered pairs of degree-1 vertices with a common neighbour,
/// leaf_a.index < leaf_b.index, grouped by parent.
std::vector<SiblingPair> find_sibling_pairs(const BipartiteGraph& g);

/// Result of merging sibling leaves. members[i] lists the vertices of the
/// source graph represented by reduced vertex i (ascending; the first entry is
/// the representative).
struct ReducedGraph {
  BipartiteGraph graph;
  std::vector<std::vector<std::uint32_t>> x_members;
  std::vector<std::vector<std::uint32_t>> y_members;

  const std::vector<std::vector<std::uint32_t>>& members(Side s) const {
    return s == Side::X ? x_members : y_members;
  }
};

/// Replaces all leaf neighbours of each non-leaf vertex by the smallest-index
/// leaf, carrying the summed edge weight. The result has no sibling pairs.
ReducedGraph merge_sibling_leaves(const BipartiteGraph& g);

/// max(0, m - n + c): each crossing-free two-layer graph is a forest.
std::uint64_t crossing_lower_bound(const BipartiteGraph& g);

/// True iff every component is a tree whose non-leaf vertices induce a path.
bool is_caterpillar_forest(const BipartiteGraph& g);

}  // namespace bcr
