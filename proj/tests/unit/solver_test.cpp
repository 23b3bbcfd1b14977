#include <gtest/gtest.h>

#include <cmath>

#include "lazyflip/generators.hpp"
#include "lazyflip/oracle.hpp"
#include "lazyflip/solver.hpp"
#include "support/test_models.hpp"

namespace lazyflip {
namespace {

using testing::random_model;
using testing::trap_model;

SolveParams depth(std::size_t n) {
  SolveParams params;
  params.max_depth = n;
  return params;
}

void expect_trace_monotone(const SolveTrace& trace) {
  for (std::size_t i = 1; i < trace.size(); ++i) {
    EXPECT_GE(trace[i].elapsed_seconds, trace[i - 1].elapsed_seconds);
    EXPECT_LE(trace[i].best_energy, trace[i - 1].best_energy);
    EXPECT_GE(trace[i].flips_accepted, trace[i - 1].flips_accepted);
    EXPECT_GE(trace[i].subsets_evaluated, trace[i - 1].subsets_evaluated);
    EXPECT_GE(trace[i].cstree_nodes, trace[i - 1].cstree_nodes);
  }
}

TEST(InitialConfiguration, UnaryMinimum) {
  EXPECT_EQ(initial_configuration(FactorGraph(1, {Factor{{0}, {0.3, 0.7}}}), InitPolicy::unary_min)
                .bits,
            (std::vector<Label>{0}));
  EXPECT_EQ(initial_configuration(FactorGraph(1, {Factor{{0}, {0.5, 0.5}}}), InitPolicy::unary_min)
                .bits,
            (std::vector<Label>{0}));
  const FactorGraph two(1, {Factor{{0}, {0.9, 0.1}}, Factor{{0}, {0.3, 0.2}}});
  const Configuration c = initial_configuration(two, InitPolicy::unary_min);
  EXPECT_EQ(c.bits, (std::vector<Label>{1}));
  EXPECT_DOUBLE_EQ(c.energy, 0.3);
  // A variable without unaries stays at 0.
  const FactorGraph pair(2, {Factor{{0, 1}, {1, 0, 0, 1}}});
  EXPECT_EQ(initial_configuration(pair, InitPolicy::unary_min).bits, (std::vector<Label>{0, 0}));
}

TEST(InitialConfiguration, ZerosAndGiven) {
  const FactorGraph g = trap_model();
  EXPECT_EQ(initial_configuration(g, InitPolicy::all_zero).bits, (std::vector<Label>{0, 0}));
  const std::vector<Label> given{1, 0};
  const Configuration c = initial_configuration(g, InitPolicy::given, given);
  EXPECT_EQ(c.bits, given);
  EXPECT_DOUBLE_EQ(c.energy, 2.5);
  EXPECT_THROW(initial_configuration(g, InitPolicy::given, std::vector<Label>{1}), ModelError);
}

TEST(SolveParams, Validation) {
  SolveParams params;
  params.max_depth = 0;
  EXPECT_THROW(params.validate(), std::invalid_argument);
  params.max_depth = 1;
  params.time_limit = 0.0;
  EXPECT_THROW(params.validate(), std::invalid_argument);
}

TEST(LazyFlipper, TrapNeedsDepthTwo) {
  const FactorGraph g = trap_model();
  const Configuration start = initial_configuration(g, InitPolicy::unary_min);
  ASSERT_EQ(start.bits, (std::vector<Label>{0, 0}));

  const SolveResult shallow = lazy_flipper(g, start, depth(1));
  EXPECT_EQ(shallow.configuration.bits, (std::vector<Label>{0, 0}));
  EXPECT_DOUBLE_EQ(shallow.configuration.energy, 2.0);
  EXPECT_EQ(shallow.counters.flips_accepted, 0u);
  EXPECT_EQ(shallow.completed_depth, 1u);

  const SolveResult deep = lazy_flipper(g, start, depth(2));
  EXPECT_EQ(deep.configuration.bits, (std::vector<Label>{1, 1}));
  EXPECT_DOUBLE_EQ(deep.configuration.energy, 1.0);
  EXPECT_EQ(deep.completed_depth, 2u);
  const auto best = oracle::brute_force_minimize(g);
  EXPECT_EQ(best.bits, deep.configuration.bits);

  const SolveResult beyond = lazy_flipper(g, start, depth(5));
  EXPECT_TRUE(beyond.search_exhausted);
  EXPECT_EQ(beyond.reached_depth, 2u);
  EXPECT_EQ(beyond.completed_depth, 2u);
  EXPECT_DOUBLE_EQ(beyond.recomputed_energy, 1.0);
}

TEST(LazyFlipper, SingleVariable) {
  const FactorGraph g(1, {Factor{{0}, {1.0, 0.0}}});
  for (std::size_t n : {1u, 2u, 7u}) {
    const SolveResult r = lazy_flipper(g, Configuration::evaluate(g, {0}), depth(n));
    EXPECT_EQ(r.configuration.bits, (std::vector<Label>{1}));
    EXPECT_EQ(r.configuration.energy, 0.0);
  }
}

TEST(LazyFlipper, EmptyModel) {
  const FactorGraph g(0, {});
  const SolveResult r = lazy_flipper(g, Configuration::evaluate(g, {}), depth(3));
  EXPECT_TRUE(r.search_exhausted);
  EXPECT_EQ(r.reached_depth, 0u);
  EXPECT_EQ(r.counters.subsets_evaluated, 0u);
}

TEST(LazyFlipper, UncoupledIsingIsSolvedByInitialization) {
  const FactorGraph g = generate_ising({4, 4, 0.0, 11});
  const SolveResult r = solve(g, depth(1));
  EXPECT_EQ(r.counters.flips_accepted, 0u);
  const auto best = oracle::brute_force_minimize(g);
  EXPECT_EQ(r.configuration.bits, best.bits);
  EXPECT_EQ(r.recomputed_energy, best.energy);
}

TEST(LazyFlipper, Ising4x4FullDepthMatchesBruteForce) {
  const FactorGraph g = generate_ising({4, 4, 0.5, 2024});
  const SolveResult r = solve(g, depth(16));
  const auto best = oracle::brute_force_minimize(g);
  EXPECT_EQ(r.recomputed_energy, best.energy);
  EXPECT_NEAR(r.configuration.energy, r.recomputed_energy, 1e-9 * std::abs(best.energy));
}

TEST(LazyFlipper, RejectsMismatchedStart) {
  const FactorGraph g = trap_model();
  EXPECT_THROW(lazy_flipper(g, Configuration{{0}, 0.0}, depth(1)), ModelError);
  EXPECT_THROW(lazy_flipper(g, Configuration{{0, 3}, 0.0}, depth(1)), ModelError);
}

TEST(LazyFlipper, TimeLimitStopsEarly) {
  const FactorGraph g = generate_ising({30, 30, 0.7, 3});
  SolveParams params = depth(6);
  params.time_limit = 1e-9;
  const SolveResult r = solve(g, params);
  EXPECT_TRUE(r.time_limit_reached);
  EXPECT_EQ(r.completed_depth, 0u);
  EXPECT_EQ(r.counters.subsets_evaluated, 0u);
  EXPECT_EQ(r.configuration.bits, initial_configuration(g, InitPolicy::unary_min).bits);

  params.time_limit = 60.0;
  params.max_depth = 2;
  const SolveResult full = solve(g, params);
  EXPECT_FALSE(full.time_limit_reached);
  EXPECT_EQ(full.completed_depth, 2u);
}

TEST(LazyFlipper, TraceRecordsFlipsAndDepths) {
  const FactorGraph g = generate_ising({6, 6, 0.9, 5});
  const SolveResult r = solve(g, depth(3));
  expect_trace_monotone(r.trace);
  // One record per depth entered, one per accepted flip, one at the end.
  EXPECT_EQ(r.trace.size(), r.reached_depth + r.counters.flips_accepted + 1);
  EXPECT_EQ(r.trace.back().flips_accepted, r.counters.flips_accepted);

  SolveParams quiet = depth(3);
  quiet.record_trace = false;
  EXPECT_TRUE(solve(g, quiet).trace.empty());
}

TEST(Icm, MatchesDepthOneAndStopsAtTrap) {
  const FactorGraph g = trap_model();
  const SolveResult r = icm(g, initial_configuration(g, InitPolicy::unary_min));
  EXPECT_EQ(r.configuration.bits, (std::vector<Label>{0, 0}));
  EXPECT_DOUBLE_EQ(r.configuration.energy, 2.0);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const FactorGraph model = random_model(4 + seed % 20, 4, seed);
    SeededRng rng(seed);
    std::vector<Label> bits(model.variable_count());
    for (auto& b : bits) b = static_cast<Label>(rng.below(2));
    const Configuration start = Configuration::evaluate(model, bits);
    const SolveResult a = icm(model, start);
    const SolveResult b = lazy_flipper(model, start, depth(1));
    EXPECT_EQ(a.configuration.bits, b.configuration.bits);
    EXPECT_EQ(a.configuration.energy, b.configuration.energy);
    EXPECT_EQ(a.counters, b.counters);
  }
}

// Global optimum at full depth, Hamming certificates at shallow depth,
// monotone depth dominance, and accumulated-energy drift bounds.
TEST(LazyFlipper, PropertyCertificates) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t m = 2 + seed % 13;
    const FactorGraph g = random_model(m, 4, seed);
    const auto best = oracle::brute_force_minimize(g);
    const Configuration start = initial_configuration(g, InitPolicy::unary_min);

    double previous = start.energy;
    for (std::size_t n = 1; n <= 3; ++n) {
      const SolveResult r = lazy_flipper(g, start, depth(n));
      EXPECT_TRUE(oracle::verify_hamming_bound(g, r.configuration.bits, r.completed_depth))
          << "seed " << seed << " depth " << n;
      EXPECT_LE(r.recomputed_energy, previous);
      EXPECT_LE(r.completed_depth, r.reached_depth);
      EXPECT_LE(r.reached_depth, n);
      expect_trace_monotone(r.trace);
      previous = r.recomputed_energy;
    }

    const SolveResult full = lazy_flipper(g, start, depth(m));
    EXPECT_EQ(full.recomputed_energy, best.energy) << "seed " << seed;
    EXPECT_NEAR(full.configuration.energy, full.recomputed_energy,
                1e-9 * std::max(1.0, std::abs(full.recomputed_energy)));
  }
}

}  // namespace
}  // namespace lazyflip
