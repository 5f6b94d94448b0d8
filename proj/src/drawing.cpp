#include "bcr/drawing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bcr/checked.hpp"
#include "bcr/fenwick_tree.hpp"

namespace bcr {

namespace {

void require_valid(const BipartiteGraph& g, const Drawing& d) {
  if (!is_valid_drawing(g, d)) throw std::invalid_argument("drawing does not match graph");
}

// Zero-crossing layout of one caterpillar: walk the spine, and after each
// spine vertex append its leaves to the opposite layer, then the next spine
// vertex to the opposite layer. Ranks on both layers then grow together
// along the edge sequence.
void place_caterpillar(const Component& c, std::uint32_t& next_x,
                       std::uint32_t& next_y, Drawing& out) {
  const BipartiteGraph& h = c.graph;
  auto place = [&](Side s, std::uint32_t v) {
    if (s == Side::X) {
      out.fx.rank[c.x_origin[v]] = next_x++;
    } else {
      out.fy.rank[c.y_origin[v]] = next_y++;
    }
  };

  if (h.edge_count() == 0) {
    for (std::uint32_t v = 0; v < h.x_count(); ++v) place(Side::X, v);
    for (std::uint32_t v = 0; v < h.y_count(); ++v) place(Side::Y, v);
    return;
  }

  auto inner = [&](Side s, std::uint32_t v) { return h.degree(s, v) >= 2; };
  auto inner_degree = [&](Side s, std::uint32_t v) {
    std::size_t n = 0;
    for (const Incidence& inc : h.neighbors(s, v)) n += inner(opposite(s), inc.other) ? 1 : 0;
    return n;
  };

  // Spine start: an inner vertex with at most one inner neighbour, or an
  // endpoint of the single edge when there is no inner vertex.
  Side side = Side::X;
  std::uint32_t start = 0;
  bool has_inner = false;
  for (Side s : {Side::X, Side::Y}) {
    for (std::uint32_t v = 0; v < h.side_count(s) && !has_inner; ++v) {
      if (inner(s, v) && inner_degree(s, v) <= 1) {
        side = s;
        start = v;
        has_inner = true;
      }
    }
  }
  if (!has_inner) {
    place(Side::X, 0);
    place(Side::Y, 0);
    return;
  }

  Side s = side;
  std::uint32_t v = start;
  std::optional<std::uint32_t> prev;
  place(s, v);
  while (true) {
    std::optional<std::uint32_t> next;
    for (const Incidence& inc : h.neighbors(s, v)) {
      if (inner(opposite(s), inc.other)) {
        if (inc.other != prev) next = inc.other;
      } else {
        place(opposite(s), inc.other);
      }
    }
    if (!next) break;
    prev = v;
    v = *next;
    s = opposite(s);
    place(s, v);
  }
}

}  // namespace

Layout identity_layout(Side side, std::size_t n) {
  Layout l{side, std::vector<std::uint32_t>(n)};
  std::iota(l.rank.begin(), l.rank.end(), 0u);
  return l;
}

std::vector<std::uint32_t> order_of(const Layout& l) {
  std::vector<std::uint32_t> order(l.size());
  for (std::uint32_t v = 0; v < l.size(); ++v) order[l.rank[v]] = v;
  return order;
}

bool validate_layout(std::span<const std::uint32_t> rank) {
  std::vector<bool> seen(rank.size(), false);
  for (std::uint32_t r : rank) {
    if (r >= rank.size() || seen[r]) return false;
    seen[r] = true;
  }
  return true;
}

bool is_valid_drawing(const BipartiteGraph& g, const Drawing& d) {
  return d.fx.side == Side::X && d.fy.side == Side::Y && d.fx.size() == g.x_count() &&
         d.fy.size() == g.y_count() && validate_layout(d.fx) && validate_layout(d.fy);
}

std::uint64_t crossing_number_naive(const BipartiteGraph& g, const Drawing& d) {
  require_valid(g, d);
  const auto edges = g.edges();
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::int64_t xi = d.fx.rank[edges[i].x];
    const std::int64_t yi = d.fy.rank[edges[i].y];
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const std::int64_t dx = xi - d.fx.rank[edges[j].x];
      const std::int64_t dy = yi - d.fy.rank[edges[j].y];
      if ((dx < 0 && dy > 0) || (dx > 0 && dy < 0)) {
        total = checked_add(total, checked_mul(edges[i].weight, edges[j].weight));
      }
    }
  }
  return total;
}

std::uint64_t crossing_number_fast(const BipartiteGraph& g, const Drawing& d) {
  require_valid(g, d);
  struct Placed {
    std::uint32_t rx, ry;
    Weight w;
  };
  std::vector<Placed> placed;
  placed.reserve(g.edge_count());
  std::uint64_t weight_total = 0;
  for (const Edge& e : g.edges()) {
    placed.push_back({d.fx.rank[e.x], d.fy.rank[e.y], e.weight});
    weight_total = checked_add(weight_total, e.weight);
  }
  std::sort(placed.begin(), placed.end(), [](const Placed& a, const Placed& b) {
    return a.rx != b.rx ? a.rx < b.rx : a.ry < b.ry;
  });

  // Edges sharing an X endpoint never cross: query a whole group before
  // inserting it. Edges sharing a Y endpoint fall into prefix(ry).
  FenwickTree<std::uint64_t> tree(g.y_count());
  std::uint64_t inserted = 0;
  std::uint64_t total = 0;
  for (std::size_t lo = 0; lo < placed.size();) {
    std::size_t hi = lo;
    while (hi < placed.size() && placed[hi].rx == placed[lo].rx) ++hi;
    for (std::size_t i = lo; i < hi; ++i) {
      const std::uint64_t above = inserted - tree.prefix(placed[i].ry);
      total = checked_add(total, checked_mul(placed[i].w, above));
    }
    for (std::size_t i = lo; i < hi; ++i) {
      tree.add(placed[i].ry, placed[i].w);
      inserted += placed[i].w;
    }
    lo = hi;
  }
  return total;
}

std::optional<Drawing> crossing_free_drawing(const BipartiteGraph& g) {
  if (!is_caterpillar_forest(g)) return std::nullopt;
  Drawing d{Layout{Side::X, std::vector<std::uint32_t>(g.x_count())},
            Layout{Side::Y, std::vector<std::uint32_t>(g.y_count())}};
  std::uint32_t next_x = 0;
  std::uint32_t next_y = 0;
  for (const Component& c : connected_components(g)) place_caterpillar(c, next_x, next_y, d);
  return d;
}

Drawing lift_drawing(const ReducedGraph& reduced, const Drawing& d) {
  Drawing out;
  for (Side s : {Side::X, Side::Y}) {
    const auto& members = reduced.members(s);
    const Layout& small = d.layout(s);
    std::size_t total = 0;
    for (const auto& group : members) total += group.size();
    Layout big{s, std::vector<std::uint32_t>(total)};
    std::uint32_t next = 0;
    for (std::uint32_t v : order_of(small)) {
      for (std::uint32_t original : members[v]) big.rank[original] = next++;
    }
    (s == Side::X ? out.fx : out.fy) = std::move(big);
  }
  return out;
}

}  // namespace bcr
