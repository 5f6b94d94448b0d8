#include "bcr/solver.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <string>
#include <thread>

#include "bcr/checked.hpp"

namespace bcr {

namespace {

// Candidate layouts of one side stored back to back, `width` ranks each.
struct CandidateTable {
  std::size_t width = 0;
  std::vector<std::uint32_t> ranks;

  std::size_t size() const { return width == 0 ? 0 : ranks.size() / width; }
  std::span<const std::uint32_t> operator[](std::size_t i) const {
    return std::span<const std::uint32_t>(ranks).subspan(i * width, width);
  }
};

CandidateTable collect_sorted(const BipartiteGraph& h, Side side, std::uint64_t budget,
                              const SolverOptions& options) {
  CandidateTable raw{h.side_count(side), {}};
  fpt::EnumerationLimits limits{options.max_gap_budget, options.max_candidates_per_side};
  fpt::for_each_candidate(
      h, side, budget,
      [&](std::span<const std::uint32_t> rank) { raw.ranks.insert(raw.ranks.end(), rank.begin(), rank.end()); },
      limits);

  std::vector<std::size_t> idx(raw.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const auto ra = raw[a];
    const auto rb = raw[b];
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
  });
  CandidateTable sorted{raw.width, {}};
  sorted.ranks.reserve(raw.ranks.size());
  for (std::size_t i : idx) {
    const auto r = raw[i];
    sorted.ranks.insert(sorted.ranks.end(), r.begin(), r.end());
  }
  return sorted;
}

// With the layout of `fixed` given, cost[u * n + v] is the weighted number of
// crossings between edges at free-side vertices u and v when u precedes v.
void pair_costs(const BipartiteGraph& h, Side fixed, std::span<const std::uint32_t> rank,
                std::vector<std::uint64_t>& cost) {
  const std::size_t n = h.side_count(opposite(fixed));
  cost.assign(n * n, 0);
  const auto edges = h.edges();
  for (const Edge& e : edges) {
    const std::uint32_t se = fixed == Side::X ? e.x : e.y;
    const std::uint32_t oe = fixed == Side::X ? e.y : e.x;
    for (const Edge& f : edges) {
      const std::uint32_t sf = fixed == Side::X ? f.x : f.y;
      const std::uint32_t of = fixed == Side::X ? f.y : f.x;
      if (oe != of && rank[se] > rank[sf]) {
        auto& c = cost[oe * n + of];
        c = checked_add(c, checked_mul(e.weight, f.weight));
      }
    }
  }
}

// Every ordering of the free side pays at least min(cost[u][v], cost[v][u])
// for each unordered pair.
std::uint64_t one_sided_bound(const std::vector<std::uint64_t>& cost, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      total = checked_add(total, std::min(cost[u * n + v], cost[v * n + u]));
    }
  }
  return total;
}

CandidateTable filter_by_bound(const BipartiteGraph& h, Side side, const CandidateTable& in,
                               std::uint64_t budget, std::uint64_t& pruned) {
  const std::size_t n = h.side_count(opposite(side));
  CandidateTable out{in.width, {}};
  std::vector<std::uint64_t> cost;
  for (std::size_t i = 0; i < in.size(); ++i) {
    pair_costs(h, side, in[i], cost);
    if (one_sided_bound(cost, n) > budget) {
      ++pruned;
      continue;
    }
    const auto r = in[i];
    out.ranks.insert(out.ranks.end(), r.begin(), r.end());
  }
  return out;
}

struct ChunkResult {
  std::optional<std::uint64_t> best;
  std::size_t ix = 0;
  std::size_t iy = 0;
  std::uint64_t pairs = 0;
  std::uint64_t pruned = 0;
  std::exception_ptr error;
};

// Scans X-candidates [begin, end) against all Y-candidates in lexicographic
// order; keeps the first pair reaching the smallest cost <= budget.
void search_chunk(const BipartiteGraph& h, const CandidateTable& xs,
                  const std::vector<std::uint32_t>& y_orders, std::size_t y_count, std::uint64_t budget,
                  std::uint64_t floor, std::size_t begin, std::size_t end, ChunkResult& out) {
  try {
    const std::size_t b = h.y_count();
    std::vector<std::uint64_t> cost;
    for (std::size_t ix = begin; ix < end; ++ix) {
      pair_costs(h, Side::X, xs[ix], cost);
      // Later pairs only replace the current best when strictly cheaper.
      const std::uint64_t cap = out.best ? *out.best - 1 : budget;
      if (one_sided_bound(cost, b) > cap) {
        ++out.pruned;
        continue;
      }
      for (std::size_t iy = 0; iy < y_count; ++iy) {
        const std::uint64_t limit = out.best ? *out.best - 1 : budget;
        const std::uint32_t* order = y_orders.data() + iy * b;
        ++out.pairs;
        std::uint64_t total = 0;
        bool over = false;
        for (std::size_t i = 0; i < b && !over; ++i) {
          const std::size_t row = std::size_t{order[i]} * b;
          for (std::size_t j = i + 1; j < b; ++j) {
            total = checked_add(total, cost[row + order[j]]);
            if (total > limit) {
              over = true;
              break;
            }
          }
        }
        if (over) continue;
        out.best = total;
        out.ix = ix;
        out.iy = iy;
        if (total <= floor) return;
      }
    }
  } catch (...) {
    out.error = std::current_exception();
  }
}

ComponentResult search_pairs(const ReducedGraph& red, std::uint64_t budget, const SolverOptions& options) {
  const BipartiteGraph& h = red.graph;
  ComponentResult result;
  result.method = Method::FptEnum;
  SolveStats& stats = result.stats;

  const CandidateTable raw_x = collect_sorted(h, Side::X, budget, options);
  const CandidateTable raw_y = collect_sorted(h, Side::Y, budget, options);
  stats.candidates_x = raw_x.size();
  stats.candidates_y = raw_y.size();

  const CandidateTable xs = filter_by_bound(h, Side::X, raw_x, budget, stats.pruned);
  const CandidateTable ys = filter_by_bound(h, Side::Y, raw_y, budget, stats.pruned);
  if (xs.size() == 0 || ys.size() == 0) return result;

  if (xs.size() > options.max_pair_evaluations / ys.size()) {
    throw ResourceError("max_pair_evaluations",
                        "candidate pairs " + std::to_string(xs.size()) + " x " + std::to_string(ys.size()) +
                            " exceed limit of " + std::to_string(options.max_pair_evaluations));
  }

  const std::size_t b = h.y_count();
  std::vector<std::uint32_t> y_orders(ys.size() * b);
  for (std::size_t iy = 0; iy < ys.size(); ++iy) {
    const auto r = ys[iy];
    for (std::uint32_t v = 0; v < b; ++v) y_orders[iy * b + r[v]] = v;
  }

  const std::uint64_t floor = crossing_lower_bound(h);
  const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, xs.size());
  std::vector<ChunkResult> chunks(workers);
  auto bounds = [&](std::size_t w) { return xs.size() * w / workers; };
  if (workers == 1) {
    search_chunk(h, xs, y_orders, ys.size(), budget, floor, 0, xs.size(), chunks[0]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        search_chunk(h, xs, y_orders, ys.size(), budget, floor, bounds(w), bounds(w + 1), chunks[w]);
      });
    }
  }

  // Chunks are contiguous and ascending, so the first chunk holding the
  // minimum holds the lexicographically smallest optimal pair.
  const ChunkResult* winner = nullptr;
  for (const ChunkResult& c : chunks) {
    if (c.error) std::rethrow_exception(c.error);
    stats.pairs_evaluated += c.pairs;
    stats.pruned += c.pruned;
    if (c.best && (!winner || *c.best < *winner->best)) winner = &c;
  }
  if (!winner) return result;

  Drawing d;
  d.fx = Layout{Side::X, std::vector<std::uint32_t>(xs[winner->ix].begin(), xs[winner->ix].end())};
  d.fy = Layout{Side::Y, std::vector<std::uint32_t>(ys[winner->iy].begin(), ys[winner->iy].end())};
  result.optimum = winner->best;
  result.witness = lift_drawing(red, d);
  return result;
}

Drawing placeholder_drawing(const BipartiteGraph& g) {
  return Drawing{identity_layout(Side::X, g.x_count()), identity_layout(Side::Y, g.y_count())};
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Oracle:
      return "oracle";
    case Method::FptEnum:
      return "fpt-enum";
    case Method::Fastpath:
      return "fastpath";
  }
  return "unknown";
}

SolveStats& SolveStats::operator+=(const SolveStats& o) {
  components += o.components;
  candidates_x += o.candidates_x;
  candidates_y += o.candidates_y;
  pairs_evaluated += o.pairs_evaluated;
  pruned += o.pruned;
  return *this;
}

void check_report(const BipartiteGraph& g, const SolveReport& r) {
  const bool within = r.optimum.has_value() && *r.optimum <= r.k;
  if (r.decision != within) throw std::logic_error("report decision disagrees with optimum");
  if (r.witness.has_value() != r.decision) throw std::logic_error("report witness presence mismatch");
  if (r.witness) {
    if (!is_valid_drawing(g, *r.witness)) throw std::logic_error("report witness is not a drawing of g");
    if (crossing_number_fast(g, *r.witness) != *r.optimum) {
      throw std::logic_error("report witness does not realise the optimum");
    }
  }
}

OracleResult bcr_bruteforce(const BipartiteGraph& g, const SolverOptions& options) {
  CensusResult c = census_bruteforce(g, 0, options);
  return c.best;
}

CensusResult census_bruteforce(const BipartiteGraph& g, std::uint64_t k, const SolverOptions& options) {
  if (g.x_count() > options.max_oracle_side || g.y_count() > options.max_oracle_side) {
    throw ResourceError("max_oracle_side", "exhaustive scan limited to " +
                                               std::to_string(options.max_oracle_side) +
                                               " vertices per side");
  }
  CensusResult out;
  Drawing d = placeholder_drawing(g);
  bool have = false;
  // next_permutation on the rank arrays walks them in lexicographic order.
  do {
    std::sort(d.fy.rank.begin(), d.fy.rank.end());
    do {
      const std::uint64_t c = crossing_number_fast(g, d);
      if (c <= k) ++out.count;
      if (!have || c < out.best.optimum) {
        out.best.optimum = c;
        out.best.witness = d;
        have = true;
      }
    } while (std::next_permutation(d.fy.rank.begin(), d.fy.rank.end()));
  } while (std::next_permutation(d.fx.rank.begin(), d.fx.rank.end()));
  return out;
}

CensusReport run_census(const BipartiteGraph& g, std::uint64_t k, const SolverOptions& options) {
  CensusReport r;
  r.k = k;
  CensusResult c = census_bruteforce(g, k, options);
  r.count = c.count;
  r.best = std::move(c.best);
  r.drawings = 1;
  for (std::uint64_t i = 2; i <= g.x_count(); ++i) r.drawings *= i;
  for (std::uint64_t i = 2; i <= g.y_count(); ++i) r.drawings *= i;
  if (g.x_count() >= 2 && g.y_count() >= 2) {
    const fpt::CountBound bx = fpt::count_bound(g.x_count(), k);
    const fpt::CountBound by = fpt::count_bound(g.y_count(), k);
    fpt::CountBound product{0, bx.saturated || by.saturated};
    if (__builtin_mul_overflow(bx.value, by.value, &product.value)) {
      product = {~std::uint64_t{0}, true};
    }
    r.bound = product;
    r.bound_applies = is_connected(g) && find_sibling_pairs(g).empty();
  }
  return r;
}

ComponentResult bcr_component(const BipartiteGraph& g, std::uint64_t budget, const SolverOptions& options) {
  if (!is_connected(g)) throw GraphError("bcr_component requires a connected graph");
  const ReducedGraph red = merge_sibling_leaves(g);
  const BipartiteGraph& h = red.graph;

  ComponentResult result;
  if (auto free = crossing_free_drawing(h)) {
    result.optimum = 0;
    result.witness = lift_drawing(red, *free);
    return result;
  }
  if (crossing_lower_bound(h) > budget) return result;
  if (h.x_count() <= 1 || h.y_count() <= 1) {
    // A star; already covered by the caterpillar test.
    result.optimum = 0;
    result.witness = lift_drawing(red, placeholder_drawing(h));
    return result;
  }
  return search_pairs(red, budget, options);
}

SolveReport bcr_decide(const BipartiteGraph& g, std::uint64_t k, const SolverOptions& options) {
  SolveReport report;
  report.k = k;
  const std::vector<Component> comps = connected_components(g);
  report.stats.components = comps.size();

  // Crossings only occur between edges of the same component in an optimal
  // drawing: placing whole components side by side adds none, so the
  // crossing number is the sum over components and a component may use
  // whatever budget the earlier ones left.
  Drawing composite{Layout{Side::X, std::vector<std::uint32_t>(g.x_count())},
                    Layout{Side::Y, std::vector<std::uint32_t>(g.y_count())}};
  std::uint64_t remaining = k;
  std::uint64_t total = 0;
  std::uint32_t offset_x = 0;
  std::uint32_t offset_y = 0;
  for (const Component& c : comps) {
    ComponentResult r = bcr_component(c.graph, remaining, options);
    report.stats += r.stats;
    if (r.method == Method::FptEnum) report.method = Method::FptEnum;
    if (!r.optimum) {
      report.decision = false;
      check_report(g, report);
      return report;
    }
    total += *r.optimum;
    remaining -= *r.optimum;
    for (std::uint32_t x = 0; x < c.x_origin.size(); ++x) {
      composite.fx.rank[c.x_origin[x]] = offset_x + r.witness->fx.rank[x];
    }
    for (std::uint32_t y = 0; y < c.y_origin.size(); ++y) {
      composite.fy.rank[c.y_origin[y]] = offset_y + r.witness->fy.rank[y];
    }
    offset_x += static_cast<std::uint32_t>(c.x_origin.size());
    offset_y += static_cast<std::uint32_t>(c.y_origin.size());
  }
  report.decision = true;
  report.optimum = total;
  report.witness = std::move(composite);
  check_report(g, report);
  return report;
}

SolveReport bcr_exact(const BipartiteGraph& g, std::uint64_t k_max, const SolverOptions& options) {
  SolveReport result;
  result.k = k_max;
  SolveStats total;
  // Every k below the forest bound is a certain no.
  for (std::uint64_t k = crossing_lower_bound(g); k <= k_max; ++k) {
    result = bcr_decide(g, k, options);
    total += result.stats;
    if (result.decision) break;
  }
  total.components = connected_components(g).size();
  result.stats = total;
  check_report(g, result);
  return result;
}

}  // namespace bcr
