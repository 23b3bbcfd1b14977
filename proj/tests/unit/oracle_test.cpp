#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "lazyflip/generators.hpp"
#include "lazyflip/oracle.hpp"
#include "lazyflip/solver.hpp"
#include "support/test_models.hpp"

namespace lazyflip::oracle {
namespace {

using lazyflip::testing::grid_2x3;
using lazyflip::testing::path_graph;
using lazyflip::testing::trap_model;

TEST(BruteForce, SmallModels) {
  const Minimum trap = brute_force_minimize(trap_model());
  EXPECT_EQ(trap.bits, (std::vector<Label>{1, 1}));
  EXPECT_DOUBLE_EQ(trap.energy, 1.0);

  const Minimum unary = brute_force_minimize(FactorGraph(1, {Factor{{0}, {0.3, 0.7}}}));
  EXPECT_EQ(unary.bits, (std::vector<Label>{0}));
  EXPECT_DOUBLE_EQ(unary.energy, 0.3);

  const FactorGraph ising = generate_ising({3, 4, 0.0, 9});
  EXPECT_EQ(brute_force_minimize(ising).bits,
            initial_configuration(ising, InitPolicy::unary_min).bits);
}

TEST(BruteForce, LexicographicTieBreak) {
  // Energy 0 for 01 and 10; 1 otherwise.
  const FactorGraph g(2, {Factor{{0, 1}, {1, 0, 0, 1}}});
  EXPECT_EQ(brute_force_minimize(g).bits, (std::vector<Label>{0, 1}));
}

TEST(BruteForce, Guard) {
  EXPECT_THROW(brute_force_minimize(FactorGraph(25, {})), GuardExceeded);
  EXPECT_THROW(brute_force_minimize(FactorGraph(5, {}), 4), GuardExceeded);
}

TEST(RecursiveEnumeration, GridAndPath) {
  const auto grid = enumerate_connected_subsets_recursive(grid_2x3());
  EXPECT_EQ(grid.total, 40u);
  EXPECT_EQ(grid.counts[1], 6u);
  EXPECT_EQ(grid.counts[2], 7u);
  EXPECT_EQ(std::accumulate(grid.counts.begin(), grid.counts.end(), std::uint64_t{0}),
            grid.total);

  const auto path = enumerate_connected_subsets_recursive(path_graph(3));
  EXPECT_EQ(path.counts, (std::vector<std::uint64_t>{0, 3, 2, 1}));
  EXPECT_EQ(path.total, 6u);

  const auto limited = enumerate_connected_subsets_recursive(grid_2x3(), 2);
  EXPECT_EQ(limited.total, 13u);
}

TEST(RecursiveEnumeration, Guard) {
  const FactorGraph g = generate_ising({5, 5, 1.0, 0});
  EXPECT_THROW(enumerate_connected_subsets_recursive(g, std::nullopt, false, 1000),
               GuardExceeded);
}

TEST(ConnectedSequences, GridRedundancy) {
  const std::vector<VariableIndex> all{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(count_connected_sequences(grid_2x3(), all), 208u);
  EXPECT_EQ(count_connected_sequences(grid_2x3(), std::vector<VariableIndex>{4}), 1u);
  EXPECT_EQ(count_connected_sequences(grid_2x3(), std::vector<VariableIndex>{0, 1}), 2u);
  EXPECT_EQ(count_connected_sequences(grid_2x3(), std::vector<VariableIndex>{0, 2}), 0u);
  EXPECT_THROW(count_connected_sequences(path_graph(10),
                                         std::vector<VariableIndex>{0, 1, 2, 3, 4, 5, 6, 7, 8}),
               GuardExceeded);
}

TEST(HammingBound, TrapModel) {
  const FactorGraph g = trap_model();
  const std::vector<Label> local{0, 0};
  EXPECT_TRUE(verify_hamming_bound(g, local, 0));
  EXPECT_TRUE(verify_hamming_bound(g, local, 1));
  EXPECT_FALSE(verify_hamming_bound(g, local, 2));
  EXPECT_TRUE(verify_hamming_bound(g, std::vector<Label>{1, 1}, 2));
}

TEST(HammingBound, OptimumHoldsAtFullRadius) {
  const FactorGraph g = lazyflip::testing::random_model(10, 4, 77);
  const Minimum best = brute_force_minimize(g);
  EXPECT_TRUE(verify_hamming_bound(g, best.bits, g.variable_count()));
}

TEST(HammingBound, Budget) {
  EXPECT_EQ(flips_within_radius(6, 2), 21u);
  EXPECT_EQ(flips_within_radius(4, 10), 15u);
  const FactorGraph g = generate_ising({10, 10, 0.5, 1});
  std::vector<Label> bits(100, 0);
  EXPECT_THROW(verify_hamming_bound(g, bits, 5, 1000), GuardExceeded);
}

}  // namespace
}  // namespace lazyflip::oracle
