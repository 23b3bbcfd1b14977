#include "lazyflip/solver.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lazyflip/cstree.hpp"
#include "lazyflip/taglist.hpp"

namespace lazyflip {

void SolveParams::validate() const {
  if (max_depth < 1) {
    throw std::invalid_argument("max_depth must be at least 1");
  }
  if (time_limit && !(*time_limit > 0.0)) {
    throw std::invalid_argument("time limit must be positive");
  }
}

Configuration initial_configuration(const FactorGraph& graph, InitPolicy policy,
                                    std::span<const Label> given) {
  const std::size_t m = graph.variable_count();
  switch (policy) {
    case InitPolicy::all_zero:
      return Configuration::evaluate(graph, std::vector<Label>(m, 0));
    case InitPolicy::given:
      if (given.size() != m) {
        throw ModelError("initial configuration has " + std::to_string(given.size()) +
                         " variables, model has " + std::to_string(m));
      }
      return Configuration::evaluate(graph, std::vector<Label>(given.begin(), given.end()));
    case InitPolicy::unary_min: {
      std::vector<double> cost0(m, 0.0);
      std::vector<double> cost1(m, 0.0);
      for (const Factor& factor : graph.factors()) {
        if (factor.arity() == 1) {
          cost0[factor.scope[0]] += factor.table[0];
          cost1[factor.scope[0]] += factor.table[1];
        }
      }
      std::vector<Label> bits(m, 0);
      for (std::size_t j = 0; j < m; ++j) {
        bits[j] = cost1[j] < cost0[j] ? 1 : 0;
      }
      return Configuration::evaluate(graph, std::move(bits));
    }
  }
  throw std::invalid_argument("unknown init policy");
}

namespace {

class LazyFlipperRun {
public:
  LazyFlipperRun(const FactorGraph& graph, Configuration start, const SolveParams& params)
      : graph_(graph),
        params_(params),
        tree_(graph),
        primary_(graph.variable_count()),
        secondary_(graph.variable_count()),
        evaluator_(graph),
        start_time_(Clock::now()) {
    result_.configuration = std::move(start);
  }

  SolveResult run() {
    std::size_t n = 1;
    for (;;) {
      NodeIndex s = tree_.first_subset_of_size(n);
      if (s == kNoNode) {
        result_.search_exhausted = true;
        break;
      }
      result_.reached_depth = n;
      depth_ = n;
      record();

      // Exploration: subsets of size n not seen before.
      while (s != kNoNode) {
        if (!assess(s, primary_)) return finish();
        s = tree_.next_subset_of_same_size(s);
      }

      // Revisiting: all built subsets touched by recent flips, until a sweep
      // accepts nothing.
      for (;;) {
        NodeIndex t = first_tagged_subset(primary_, tree_);
        if (t == kNoNode) break;
        while (t != kNoNode) {
          if (!assess(t, secondary_)) return finish();
          t = next_tagged_subset(primary_, tree_, t);
        }
        primary_.untag_all();
        swap(primary_, secondary_);
      }

      result_.completed_depth = n;
      if (n == params_.max_depth) break;
      ++n;
    }
    return finish();
  }

private:
  using Clock = std::chrono::steady_clock;

  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start_time_).count();
  }

  // Returns false once the time limit has expired; the subset is then left
  // unassessed.
  bool assess(NodeIndex s, TagList& affected) {
    if (params_.time_limit && elapsed() >= *params_.time_limit) {
      result_.time_limit_reached = true;
      return false;
    }
    Configuration& c = result_.configuration;
    tree_.subset_of(s, subset_);
    const double delta = evaluator_.delta(c.bits, subset_);
    ++result_.counters.subsets_evaluated;
    if (delta < 0.0) {
      flip(c, subset_, c.energy + delta);
      tag_connected_variables(affected, tree_, s);
      ++result_.counters.flips_accepted;
      record();
    }
    return true;
  }

  void record() {
    if (!params_.record_trace) return;
    TraceRecord r;
    r.elapsed_seconds = elapsed();
    r.best_energy = result_.configuration.energy;
    r.depth = depth_;
    r.flips_accepted = result_.counters.flips_accepted;
    r.subsets_evaluated = result_.counters.subsets_evaluated;
    r.cstree_nodes = tree_.node_count() - 1;
    if (!result_.trace.empty() && result_.trace.back().elapsed_seconds > r.elapsed_seconds) {
      r.elapsed_seconds = result_.trace.back().elapsed_seconds;
    }
    result_.trace.push_back(r);
  }

  SolveResult finish() {
    result_.counters.cstree_nodes = tree_.node_count() - 1;
    result_.counters.factor_evaluations = evaluator_.factor_evaluations();
    result_.recomputed_energy = graph_.energy(result_.configuration.bits);
    record();
    return std::move(result_);
  }

  const FactorGraph& graph_;
  const SolveParams& params_;
  CSTree tree_;
  TagList primary_;
  TagList secondary_;
  FlipEvaluator evaluator_;
  Clock::time_point start_time_;
  std::size_t depth_ = 0;
  std::vector<VariableIndex> subset_;
  SolveResult result_;
};

}  // namespace

SolveResult lazy_flipper(const FactorGraph& graph, Configuration start,
                         const SolveParams& params) {
  params.validate();
  if (start.bits.size() != graph.variable_count()) {
    throw ModelError("initial configuration has " + std::to_string(start.bits.size()) +
                     " variables, model has " + std::to_string(graph.variable_count()));
  }
  for (Label b : start.bits) {
    if (b > 1) throw ModelError("configuration values must be 0 or 1");
  }
  if (!std::isfinite(start.energy)) {
    throw ModelError("initial energy is not finite");
  }
  return LazyFlipperRun(graph, std::move(start), params).run();
}

SolveResult icm(const FactorGraph& graph, Configuration start) {
  SolveParams params;
  params.max_depth = 1;
  return lazy_flipper(graph, std::move(start), params);
}

SolveResult solve(const FactorGraph& graph, const SolveParams& params,
                  std::span<const Label> given) {
  params.validate();
  return lazy_flipper(graph, initial_configuration(graph, params.init_policy, given), params);
}

}  // namespace lazyflip
