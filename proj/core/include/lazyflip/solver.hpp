#ifndef LAZYFLIP_SOLVER_HPP
#define LAZYFLIP_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lazyflip/model.hpp"

namespace lazyflip {

enum class InitPolicy { unary_min, all_zero, given };

// One sample of solver progress. Emitted on every accepted flip and every
// change of search depth.
struct TraceRecord {
  double elapsed_seconds = 0.0;
  double best_energy = 0.0;
  std::size_t depth = 0;
  std::uint64_t flips_accepted = 0;
  std::uint64_t subsets_evaluated = 0;
  std::uint64_t cstree_nodes = 0;
};

using SolveTrace = std::vector<TraceRecord>;

struct SolveParams {
  std::size_t max_depth = 1;
  std::optional<double> time_limit;  // seconds
  InitPolicy init_policy = InitPolicy::unary_min;
  bool record_trace = true;

  // Throws std::invalid_argument unless max_depth >= 1 and any time limit is
  // positive.
  void validate() const;
};

struct SolveCounters {
  std::uint64_t flips_accepted = 0;
  std::uint64_t subsets_evaluated = 0;
  std::uint64_t cstree_nodes = 0;  // excluding the root
  std::uint64_t factor_evaluations = 0;

  bool operator==(const SolveCounters&) const = default;
};

struct SolveResult {
  Configuration configuration;
  // From-scratch energy of the final bits; configuration.energy is the
  // delta-accumulated value.
  double recomputed_energy = 0.0;
  std::size_t reached_depth = 0;
  // Largest n whose exploration and revisiting both finished. The returned
  // energy is a Hamming-completed_depth upper bound.
  std::size_t completed_depth = 0;
  bool time_limit_reached = false;
  // Some level had no connected subset left: the result is a global optimum.
  bool search_exhausted = false;
  SolveCounters counters;
  SolveTrace trace;
};

// Unary-minimizing (ties and variables without unaries pick 0), all-zero, or
// a validated copy of `given`.
Configuration initial_configuration(const FactorGraph& graph, InitPolicy policy,
                                    std::span<const Label> given = {});

// Depth-limited exhaustive search over connected subsets with greedy
// acceptance of strictly improving flips and tag-driven revisiting.
SolveResult lazy_flipper(const FactorGraph& graph, Configuration start,
                         const SolveParams& params);

// Iterated conditional modes: the depth-1 case of lazy_flipper.
SolveResult icm(const FactorGraph& graph, Configuration start);

// initial_configuration(params.init_policy, given) followed by lazy_flipper.
SolveResult solve(const FactorGraph& graph, const SolveParams& params,
                  std::span<const Label> given = {});

}  // namespace lazyflip

#endif  // LAZYFLIP_SOLVER_HPP
