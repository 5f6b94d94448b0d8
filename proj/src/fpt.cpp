#include "bcr/fpt.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace bcr::fpt {

namespace {

struct Slot {
  std::uint32_t to;    // joint index
  std::uint32_t copy;  // 2 * edge + {0, 1}
};

void require_spine_preconditions(const BipartiteGraph& g, Side side, std::uint32_t root) {
  if (g.side_count(side) < 2 || g.side_count(opposite(side)) < 1) {
    throw GraphError("spine needs at least two vertices on side " + std::string(side_name(side)) +
                     " and one on the other side");
  }
  if (root >= g.side_count(side)) throw GraphError("spine root out of range");
  if (!is_connected(g)) throw GraphError("spine requires a connected graph");
}

class CandidateWalker {
 public:
  CandidateWalker(const SpineMap& spine, std::uint64_t budget, std::uint64_t limit,
                  const CandidateSink& sink)
      : spine_(spine),
        order_(spine_order(spine)),
        a_(static_cast<std::int64_t>(spine.size())),
        budget_(budget),
        limit_(limit),
        sink_(sink),
        rank_(spine.size(), 0),
        used_(spine.size(), false) {}

  std::uint64_t run() {
    for (std::int64_t r = 0; r < a_; ++r) {
      rank_[spine_.root] = static_cast<std::uint32_t>(r);
      used_[r] = true;
      descend(1, budget_);
      used_[r] = false;
    }
    return emitted_;
  }

 private:
  void descend(std::size_t depth, std::uint64_t remaining) {
    if (depth == order_.size()) {
      if (++emitted_ > limit_) {
        throw ResourceError("max_candidates", "candidate count exceeds limit of " +
                                                  std::to_string(limit_) + " layouts on side " +
                                                  std::string(side_name(spine_.side)));
      }
      sink_(rank_);
      return;
    }
    const std::uint32_t x = order_[depth];
    const std::int64_t anchor = rank_[spine_.successor[x]];
    for (std::uint64_t gap = 0; gap <= remaining; ++gap) {
      const std::int64_t step = static_cast<std::int64_t>(gap) + 1;
      const std::int64_t below = anchor - step;
      const std::int64_t above = anchor + step;
      if (below < 0 && above >= a_) break;
      for (const std::int64_t pos : {below, above}) {
        if (pos < 0 || pos >= a_ || used_[pos]) continue;
        used_[pos] = true;
        rank_[x] = static_cast<std::uint32_t>(pos);
        descend(depth + 1, remaining - gap);
        used_[pos] = false;
      }
    }
  }

  const SpineMap& spine_;
  std::vector<std::uint32_t> order_;
  std::int64_t a_;
  std::uint64_t budget_;
  std::uint64_t limit_;
  const CandidateSink& sink_;
  std::vector<std::uint32_t> rank_;
  std::vector<bool> used_;
  std::uint64_t emitted_ = 0;
};

}  // namespace

std::vector<VertexId> doubled_euler_tour(const BipartiteGraph& g, VertexId start) {
  const auto nx = static_cast<std::uint32_t>(g.x_count());
  const std::size_t n = g.vertex_count();
  auto joint = [nx](VertexId v) { return v.side == Side::X ? v.index : nx + v.index; };

  // Adjacency of the doubled multigraph, sorted by neighbour then copy.
  std::vector<std::vector<Slot>> adj(n);
  for (std::uint32_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    for (std::uint32_t c = 0; c < 2; ++c) {
      adj[e.x].push_back({nx + e.y, 2 * i + c});
      adj[nx + e.y].push_back({e.x, 2 * i + c});
    }
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end(),
              [](const Slot& a, const Slot& b) { return a.to != b.to ? a.to < b.to : a.copy < b.copy; });
  }

  std::vector<bool> used(2 * g.edge_count(), false);
  std::vector<std::size_t> next(n, 0);
  std::vector<std::uint32_t> stack{joint(start)};
  std::vector<std::uint32_t> circuit;
  circuit.reserve(2 * g.edge_count() + 1);
  while (!stack.empty()) {
    const std::uint32_t v = stack.back();
    auto& cursor = next[v];
    while (cursor < adj[v].size() && used[adj[v][cursor].copy]) ++cursor;
    if (cursor == adj[v].size()) {
      circuit.push_back(v);
      stack.pop_back();
    } else {
      const Slot& s = adj[v][cursor];
      used[s.copy] = true;
      stack.push_back(s.to);
    }
  }
  std::reverse(circuit.begin(), circuit.end());

  std::vector<VertexId> tour;
  tour.reserve(circuit.size());
  for (std::uint32_t v : circuit) {
    tour.push_back(v < nx ? VertexId{Side::X, v} : VertexId{Side::Y, v - nx});
  }
  return tour;
}

SpineMap build_spine(const BipartiteGraph& g, Side side, std::uint32_t root) {
  require_spine_preconditions(g, side, root);
  const std::vector<VertexId> tour = doubled_euler_tour(g, VertexId{side, root});

  const std::size_t a = g.side_count(side);
  std::vector<std::size_t> last(a, 0);
  for (std::size_t i = 0; i < tour.size(); ++i) {
    if (tour[i].side == side) last[tour[i].index] = i;
  }

  SpineMap s{side, root, std::vector<std::uint32_t>(a, kNoVertex),
             std::vector<std::uint32_t>(a, kNoVertex)};
  for (std::uint32_t x = 0; x < a; ++x) {
    if (x == root) continue;
    // The tour alternates sides and closes at the root, so the last visit of
    // any other vertex is followed by at least two more steps.
    s.witness[x] = tour[last[x] + 1].index;
    s.successor[x] = tour[last[x] + 2].index;
  }
  return s;
}

bool verify_spine(const BipartiteGraph& g, const SpineMap& s) {
  const std::size_t a = g.side_count(s.side);
  const std::size_t b = g.side_count(opposite(s.side));
  if (s.successor.size() != a || s.witness.size() != a || s.root >= a) return false;
  if (s.successor[s.root] != kNoVertex) return false;

  auto edge_index = [&](std::uint32_t same, std::uint32_t other) {
    return s.side == Side::X ? g.find_edge(same, other) : g.find_edge(other, same);
  };

  std::vector<std::uint32_t> usage(g.edge_count(), 0);
  std::vector<std::uint32_t> parent(a);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  for (std::uint32_t x = 0; x < a; ++x) {
    if (x == s.root) continue;
    const std::uint32_t t = s.successor[x];
    const std::uint32_t mid = s.witness[x];
    if (t >= a || mid >= b || t == x) return false;
    const std::size_t e1 = edge_index(x, mid);
    const std::size_t e2 = edge_index(t, mid);
    if (e1 == BipartiteGraph::npos || e2 == BipartiteGraph::npos) return false;
    if (++usage[e1] > 2 || ++usage[e2] > 2) return false;
    const std::uint32_t rx = find(x);
    const std::uint32_t rt = find(t);
    if (rx == rt) return false;  // cycle
    parent[rx] = rt;
  }
  // a - 1 acyclic pairs on a vertices: a spanning tree.
  return true;
}

std::vector<std::uint32_t> spine_order(const SpineMap& s) {
  std::vector<std::vector<std::uint32_t>> children(s.size());
  for (std::uint32_t x = 0; x < s.size(); ++x) {
    if (x != s.root && s.successor[x] < s.size()) children[s.successor[x]].push_back(x);
  }
  std::vector<std::uint32_t> order{s.root};
  order.reserve(s.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::uint32_t c : children[order[i]]) order.push_back(c);
  }
  return order;
}

std::optional<Layout> decode_layout(const SpineMap& s, const CandidateEncoding& enc) {
  const auto a = static_cast<std::int64_t>(s.size());
  if (enc.gap.size() != s.size() || enc.sign.size() != s.size() || enc.root_rank >= s.size()) {
    return std::nullopt;
  }
  const std::vector<std::uint32_t> order = spine_order(s);
  if (order.size() != s.size()) return std::nullopt;
  Layout l{s.side, std::vector<std::uint32_t>(s.size(), 0)};
  std::vector<bool> used(s.size(), false);
  for (const std::uint32_t x : order) {
    std::int64_t pos = enc.root_rank;
    if (x != s.root) {
      const std::int64_t step = static_cast<std::int64_t>(enc.gap[x]) + 1;
      pos = static_cast<std::int64_t>(l.rank[s.successor[x]]) + (enc.sign[x] < 0 ? -step : step);
    }
    if (pos < 0 || pos >= a || used[pos]) return std::nullopt;
    used[pos] = true;
    l.rank[x] = static_cast<std::uint32_t>(pos);
  }
  return l;
}

CandidateEncoding encode_layout(const SpineMap& s, const Layout& l) {
  CandidateEncoding enc{std::vector<std::uint32_t>(s.size(), 0), std::vector<std::int8_t>(s.size(), 1),
                        l.rank[s.root]};
  for (std::uint32_t x = 0; x < s.size(); ++x) {
    if (x == s.root) continue;
    const std::int64_t d = static_cast<std::int64_t>(l.rank[x]) - l.rank[s.successor[x]];
    enc.sign[x] = d < 0 ? -1 : 1;
    enc.gap[x] = static_cast<std::uint32_t>((d < 0 ? -d : d) - 1);
  }
  return enc;
}

std::int64_t gap_excess(const SpineMap& s, const CandidateEncoding& enc) {
  std::int64_t total = 0;
  for (std::uint32_t x = 0; x < s.size(); ++x) {
    if (x != s.root) total += static_cast<std::int64_t>(enc.gap[x]) - 1;
  }
  return total;
}

std::uint64_t gap_budget(std::size_t a, std::uint64_t k, std::uint64_t max_budget) {
  const std::uint64_t slack = a == 0 ? 0 : a - 1;
  if (k > (max_budget - std::min(slack, max_budget)) / 4) {
    throw ResourceError("max_budget", "gap budget 4k + a - 1 with k = " + std::to_string(k) +
                                          ", a = " + std::to_string(a) + " exceeds limit of " +
                                          std::to_string(max_budget));
  }
  return 4 * k + slack;
}

std::uint64_t for_each_candidate(const BipartiteGraph& g, Side side, std::uint64_t k,
                                 const CandidateSink& sink, const EnumerationLimits& limits) {
  const SpineMap spine = build_spine(g, side, 0);
  const std::uint64_t budget = gap_budget(spine.size(), k, limits.max_budget);
  return CandidateWalker(spine, budget, limits.max_candidates, sink).run();
}

std::vector<Layout> enumerate_candidates(const BipartiteGraph& g, Side side, std::uint64_t k,
                                         const EnumerationLimits& limits) {
  std::vector<Layout> out;
  for_each_candidate(
      g, side, k,
      [&](std::span<const std::uint32_t> rank) {
        out.push_back(Layout{side, std::vector<std::uint32_t>(rank.begin(), rank.end())});
      },
      limits);
  return out;
}

CountBound count_bound(std::size_t a, std::uint64_t k, std::uint64_t ceiling) {
  // a * 2^(4k + 3a - 4)
  if (a < 2) throw std::invalid_argument("count_bound requires a >= 2");
  const CountBound saturated{ceiling, true};
  if (k > 16 || a > 64) return saturated;
  const std::uint64_t exponent = 4 * k + 3 * a - 4;
  const auto a_bits = static_cast<std::uint64_t>(std::bit_width(static_cast<std::uint64_t>(a)));
  if (exponent + a_bits > 64) return saturated;
  const std::uint64_t value = static_cast<std::uint64_t>(a) << exponent;
  if (value > ceiling) return saturated;
  return {value, false};
}

}  // namespace bcr::fpt
