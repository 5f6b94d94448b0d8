#include "bcr/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <tuple>

namespace bcr {

namespace {

void build_csr(std::uint32_t count, const std::vector<Edge>& edges, bool by_x,
               std::vector<std::uint32_t>& offset, std::vector<Incidence>& adj) {
  offset.assign(std::size_t{count} + 1, 0);
  for (const Edge& e : edges) ++offset[(by_x ? e.x : e.y) + 1];
  std::partial_sum(offset.begin(), offset.end(), offset.begin());
  adj.resize(edges.size());
  std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
  // Edges are sorted by (x, y), so both adjacency lists come out sorted by
  // neighbour index.
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    const std::uint32_t owner = by_x ? e.x : e.y;
    adj[fill[owner]++] = Incidence{by_x ? e.y : e.x, i};
  }
}

std::string edge_name(std::uint32_t x, std::uint32_t y) {
  return "(x" + std::to_string(x) + ", y" + std::to_string(y) + ")";
}

// Union of both sides as one index space: X i -> i, Y j -> x_count + j.
struct DisjointSets {
  std::vector<std::uint32_t> parent;

  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }

  std::uint32_t find(std::uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

std::size_t count_components(const BipartiteGraph& g) {
  DisjointSets sets(g.vertex_count());
  std::size_t merges = 0;
  for (const Edge& e : g.edges()) {
    if (sets.unite(e.x, static_cast<std::uint32_t>(g.x_count() + e.y))) ++merges;
  }
  return g.vertex_count() - merges;
}

}  // namespace

BipartiteGraph::BipartiteGraph(std::uint32_t x_count, std::uint32_t y_count,
                               std::vector<Edge> edges)
    : x_count_(x_count), y_count_(y_count), edges_(std::move(edges)) {
  if (edges_.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw GraphError("too many edges");
  }
  for (const Edge& e : edges_) {
    if (e.x >= x_count_ || e.y >= y_count_) {
      throw GraphError("edge " + edge_name(e.x, e.y) + " out of range for bigraph " +
                       std::to_string(x_count_) + " " + std::to_string(y_count_));
    }
    if (e.weight == 0) throw GraphError("edge " + edge_name(e.x, e.y) + " has weight 0");
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.x, a.y) < std::tie(b.x, b.y);
  });
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.x == b.x && a.y == b.y;
  });
  if (dup != edges_.end()) throw GraphError("duplicate edge " + edge_name(dup->x, dup->y));

  build_csr(x_count_, edges_, true, x_offset_, x_adj_);
  build_csr(y_count_, edges_, false, y_offset_, y_adj_);
}

std::span<const Incidence> BipartiteGraph::neighbors(Side s, std::uint32_t v) const {
  const auto& offset = s == Side::X ? x_offset_ : y_offset_;
  const auto& adj = s == Side::X ? x_adj_ : y_adj_;
  return std::span<const Incidence>(adj).subspan(offset[v], offset[v + 1] - offset[v]);
}

std::size_t BipartiteGraph::find_edge(std::uint32_t x, std::uint32_t y) const {
  if (x >= x_count_) return npos;
  const auto adj = neighbors(Side::X, x);
  const auto it = std::lower_bound(adj.begin(), adj.end(), y,
                                   [](const Incidence& inc, std::uint32_t v) { return inc.other < v; });
  return it != adj.end() && it->other == y ? it->edge : npos;
}

bool BipartiteGraph::is_leaf_edge_weighted() const {
  return std::all_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return e.weight == 1 || degree(Side::X, e.x) == 1 || degree(Side::Y, e.y) == 1;
  });
}

bool BipartiteGraph::is_unit_weighted() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight == 1; });
}

std::vector<Component> connected_components(const BipartiteGraph& g) {
  const auto nx = static_cast<std::uint32_t>(g.x_count());
  DisjointSets sets(g.vertex_count());
  for (const Edge& e : g.edges()) sets.unite(e.x, nx + e.y);

  // Roots are the smallest member in the joint index space, which orders
  // components by smallest X index first and X-free components by Y index.
  std::vector<std::uint32_t> slot(g.vertex_count(), std::numeric_limits<std::uint32_t>::max());
  std::vector<Component> out;
  std::vector<std::uint32_t> comp_of(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    const std::uint32_t root = sets.find(v);
    if (slot[root] == std::numeric_limits<std::uint32_t>::max()) {
      slot[root] = static_cast<std::uint32_t>(out.size());
      out.emplace_back();
    }
    comp_of[v] = slot[root];
  }

  std::vector<std::uint32_t> local(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    Component& c = out[comp_of[v]];
    if (v < nx) {
      local[v] = static_cast<std::uint32_t>(c.x_origin.size());
      c.x_origin.push_back(v);
    } else {
      local[v] = static_cast<std::uint32_t>(c.y_origin.size());
      c.y_origin.push_back(v - nx);
    }
  }

  std::vector<std::vector<Edge>> edges(out.size());
  for (const Edge& e : g.edges()) {
    edges[comp_of[e.x]].push_back(Edge{local[e.x], local[nx + e.y], e.weight});
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].graph = BipartiteGraph(static_cast<std::uint32_t>(out[i].x_origin.size()),
                                  static_cast<std::uint32_t>(out[i].y_origin.size()),
                                  std::move(edges[i]));
  }
  return out;
}

bool is_connected(const BipartiteGraph& g) { return count_components(g) <= 1; }

std::vector<SiblingPair> find_sibling_pairs(const BipartiteGraph& g) {
  std::vector<SiblingPair> pairs;
  for (Side parent_side : {Side::X, Side::Y}) {
    const Side leaf_side = opposite(parent_side);
    for (std::uint32_t p = 0; p < g.side_count(parent_side); ++p) {
      std::vector<std::uint32_t> leaves;
      for (const Incidence& inc : g.neighbors(parent_side, p)) {
        if (g.degree(leaf_side, inc.other) == 1) leaves.push_back(inc.other);
      }
      for (std::size_t i = 0; i < leaves.size(); ++i) {
        for (std::size_t j = i + 1; j < leaves.size(); ++j) {
          pairs.push_back(SiblingPair{{leaf_side, leaves[i]}, {leaf_side, leaves[j]}, {parent_side, p}});
        }
      }
    }
  }
  return pairs;
}

ReducedGraph merge_sibling_leaves(const BipartiteGraph& g) {
  // absorbed_into[side][v] = representative leaf index (in g) or v itself.
  std::vector<std::uint32_t> x_rep(g.x_count()), y_rep(g.y_count());
  std::iota(x_rep.begin(), x_rep.end(), 0u);
  std::iota(y_rep.begin(), y_rep.end(), 0u);

  for (Side parent_side : {Side::X, Side::Y}) {
    const Side leaf_side = opposite(parent_side);
    auto& rep = leaf_side == Side::X ? x_rep : y_rep;
    for (std::uint32_t p = 0; p < g.side_count(parent_side); ++p) {
      if (g.degree(parent_side, p) < 2) continue;
      std::uint32_t first = std::numeric_limits<std::uint32_t>::max();
      for (const Incidence& inc : g.neighbors(parent_side, p)) {
        if (g.degree(leaf_side, inc.other) != 1) continue;
        if (first == std::numeric_limits<std::uint32_t>::max()) first = inc.other;
        rep[inc.other] = first;
      }
    }
  }

  ReducedGraph out;
  std::vector<std::uint32_t> x_new(g.x_count()), y_new(g.y_count());
  for (std::uint32_t v = 0; v < g.x_count(); ++v) {
    if (x_rep[v] == v) {
      x_new[v] = static_cast<std::uint32_t>(out.x_members.size());
      out.x_members.push_back({v});
    } else {
      out.x_members[x_new[x_rep[v]]].push_back(v);
    }
  }
  for (std::uint32_t v = 0; v < g.y_count(); ++v) {
    if (y_rep[v] == v) {
      y_new[v] = static_cast<std::uint32_t>(out.y_members.size());
      out.y_members.push_back({v});
    } else {
      out.y_members[y_new[y_rep[v]]].push_back(v);
    }
  }

  // Merged leaves are only ever absorbed on one side of an edge, so each
  // surviving edge collects the weights of the edges folded into it.
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  std::vector<std::size_t> slot_of(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (x_rep[e.x] == e.x && y_rep[e.y] == e.y) {
      slot_of[i] = edges.size();
      edges.push_back(Edge{x_new[e.x], y_new[e.y], e.weight});
    }
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (x_rep[e.x] == e.x && y_rep[e.y] == e.y) continue;
    const std::size_t target = g.find_edge(x_rep[e.x], y_rep[e.y]);
    edges[slot_of[target]].weight += e.weight;
  }
  out.graph = BipartiteGraph(static_cast<std::uint32_t>(out.x_members.size()),
                             static_cast<std::uint32_t>(out.y_members.size()), std::move(edges));
  return out;
}

std::uint64_t crossing_lower_bound(const BipartiteGraph& g) {
  const std::uint64_t m = g.edge_count();
  const std::uint64_t forest = g.vertex_count() - count_components(g);
  return m > forest ? m - forest : 0;
}

bool is_caterpillar_forest(const BipartiteGraph& g) {
  if (crossing_lower_bound(g) > 0) return false;
  // Acyclic: the non-leaf vertices of each tree are connected, so they form
  // a path iff none has more than two non-leaf neighbours.
  for (Side s : {Side::X, Side::Y}) {
    const Side o = opposite(s);
    for (std::uint32_t v = 0; v < g.side_count(s); ++v) {
      if (g.degree(s, v) < 2) continue;
      std::size_t inner = 0;
      for (const Incidence& inc : g.neighbors(s, v)) {
        if (g.degree(o, inc.other) >= 2) ++inner;
      }
      if (inner > 2) return false;
    }
  }
  return true;
}

}  // namespace bcr
