#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "bcr/drawing.hpp"
#include "bcr/errors.hpp"
#include "bcr/fpt.hpp"
#include "bcr/graph.hpp"

namespace bcr {

struct SolverOptions {
  unsigned threads = 1;
  std::uint64_t max_candidates_per_side = std::uint64_t{1} << 24;
  std::uint64_t max_pair_evaluations = std::uint64_t{1} << 30;
  std::size_t max_oracle_side = 8;
  std::uint64_t max_gap_budget = std::uint64_t{1} << 16;
};

inline constexpr std::uint64_t kDefaultKMax = 32;

enum class Method { Oracle, FptEnum, Fastpath };

std::string_view method_name(Method m);

struct SolveStats {
  std::uint64_t components = 0;
  std::uint64_t candidates_x = 0;
  std::uint64_t candidates_y = 0;
  std::uint64_t pairs_evaluated = 0;
  std::uint64_t pruned = 0;

  SolveStats& operator+=(const SolveStats& o);
};

/// Outcome of a decision or optimisation query. optimum is empty when the
/// crossing number exceeds k; decision == (optimum <= k); the witness is
/// present exactly when decision is yes and realises the optimum.
struct SolveReport {
  std::uint64_t k = 0;
  bool decision = false;
  std::optional<std::uint64_t> optimum;
  std::optional<Drawing> witness;
  SolveStats stats;
  Method method = Method::Fastpath;
};

/// Throws std::logic_error when the report breaks its invariants for g.
void check_report(const BipartiteGraph& g, const SolveReport& r);

struct OracleResult {
  std::uint64_t optimum = 0;
  Drawing witness;
};

/// Exhaustive minimum over all |X|! * |Y|! layout pairs; ties go to the
/// lexicographically smallest (fx, fy) rank arrays. Throws ResourceError when
/// a side exceeds options.max_oracle_side.
OracleResult bcr_bruteforce(const BipartiteGraph& g, const SolverOptions& options = {});

/// Number of drawings (layout pairs) with at most k crossings, together with
/// the exhaustive minimum. Same size limit as bcr_bruteforce.
struct CensusResult {
  std::uint64_t count = 0;
  OracleResult best;
};

CensusResult census_bruteforce(const BipartiteGraph& g, std::uint64_t k,
                               const SolverOptions& options = {});

/// Exhaustive census for bound-validation runs. `bound` is
/// count_bound(|X|, k) * count_bound(|Y|, k), present when both sides have two
/// or more vertices; it is only guaranteed (bound_applies) for connected
/// graphs without sibling pairs.
struct CensusReport {
  std::uint64_t k = 0;
  std::uint64_t count = 0;
  std::uint64_t drawings = 0;
  OracleResult best;
  std::optional<fpt::CountBound> bound;
  bool bound_applies = false;
};

CensusReport run_census(const BipartiteGraph& g, std::uint64_t k, const SolverOptions& options = {});

struct ComponentResult {
  std::optional<std::uint64_t> optimum;  // empty: exceeds budget
  std::optional<Drawing> witness;
  SolveStats stats;
  Method method = Method::Fastpath;
};

/// Exact crossing number of a connected graph when it is at most `budget`.
/// Pipeline: merge sibling leaves; caterpillar fast path; lower-bound guard;
/// trivial single-vertex sides; otherwise search all pairs of enumerated X-
/// and Y-candidates. The witness refers to g (merged leaves expanded).
ComponentResult bcr_component(const BipartiteGraph& g, std::uint64_t budget,
                              const SolverOptions& options = {});

/// Decides bcr(g) <= k, solving components in order against the budget left
/// over by the previous ones.
SolveReport bcr_decide(const BipartiteGraph& g, std::uint64_t k, const SolverOptions& options = {});

/// Least k <= k_max with a yes decision, or a no report for k_max.
SolveReport bcr_exact(const BipartiteGraph& g, std::uint64_t k_max = kDefaultKMax,
                      const SolverOptions& options = {});

}  // namespace bcr
