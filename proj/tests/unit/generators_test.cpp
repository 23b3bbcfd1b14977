#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <bit>

#include "lazyflip/generators.hpp"

namespace lazyflip {
namespace {

std::size_t count_arity(const FactorGraph& g, std::size_t arity) {
  return std::count_if(g.factors().begin(), g.factors().end(),
                       [&](const Factor& f) { return f.arity() == arity; });
}

TEST(SeededRng, KnownStream) {
  // mt19937_64 with the standard's default seed yields 9981545732273789042
  // as its 10000th output.
  std::mt19937_64 reference;
  reference.discard(9999);
  EXPECT_EQ(reference(), 9981545732273789042ull);

  SeededRng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    const double x = a.uniform();
    EXPECT_EQ(x, b.uniform());
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
  for (int i = 0; i < 100; ++i) EXPECT_LT(a.below(7), 7u);
}

TEST(GenerateIsing, BenchmarkDimensions) {
  const FactorGraph g = generate_ising({50, 50, 0.5, 7});
  EXPECT_EQ(g.variable_count(), 2500u);
  EXPECT_EQ(count_arity(g, 1), 2500u);
  EXPECT_EQ(count_arity(g, 2), 4900u);
}

TEST(GenerateIsing, UnaryRuleAndCouplingTables) {
  const double alpha = 0.3;
  const FactorGraph g = generate_ising({7, 5, alpha, 99});
  for (const Factor& f : g.factors()) {
    if (f.arity() == 1) {
      EXPECT_EQ(f.table[0] + f.table[1], 1.0);
      EXPECT_GE(f.table[0], 0.0);
      EXPECT_LE(f.table[0], 1.0);
    } else {
      ASSERT_EQ(f.arity(), 2u);
      EXPECT_EQ(f.table, (std::vector<double>{0.0, alpha, alpha, 0.0}));
      const auto a = f.scope[0], b = f.scope[1];
      EXPECT_TRUE(b == a + 1 || b == a + 5);
    }
  }
  // Row-major grid: the corner has two neighbors, an interior point four.
  EXPECT_EQ(g.neighbors(0).size(), 2u);
  EXPECT_EQ(g.neighbors(6).size(), 4u);
}

TEST(GenerateIsing, SeedDeterminism) {
  EXPECT_EQ(generate_ising({9, 4, 0.7, 123}), generate_ising({9, 4, 0.7, 123}));
  EXPECT_NE(generate_ising({9, 4, 0.7, 123}), generate_ising({9, 4, 0.7, 124}));
  EXPECT_THROW(generate_ising({0, 4, 0.7, 1}), std::invalid_argument);
  EXPECT_THROW(generate_ising({2, 4, -0.1, 1}), std::invalid_argument);
}

TEST(JunctionPotential, Table) {
  EXPECT_EQ(subgraph_junction_potential(0), 0.0);
  EXPECT_EQ(subgraph_junction_potential(1), 100.0);
  EXPECT_EQ(subgraph_junction_potential(2), 0.6);
  EXPECT_EQ(subgraph_junction_potential(3), 1.2);
  EXPECT_EQ(subgraph_junction_potential(4), 2.4);
  EXPECT_THROW(subgraph_junction_potential(5), std::out_of_range);
  EXPECT_THROW(subgraph_junction_potential(-1), std::out_of_range);
}

TEST(GenerateSubgraphGrid, Dimensions) {
  const FactorGraph big = generate_subgraph_grid({100, 100, 1});
  EXPECT_EQ(big.variable_count(), 19800u);
  EXPECT_EQ(count_arity(big, 1), 19800u);
  EXPECT_EQ(count_arity(big, 4), 9801u);
  EXPECT_EQ(big.factor_count(), 19800u + 9801u);

  const FactorGraph small = generate_subgraph_grid({2, 2, 1});
  EXPECT_EQ(small.variable_count(), 4u);
  EXPECT_EQ(count_arity(small, 4), 1u);

  const FactorGraph wide = generate_subgraph_grid({3, 5, 1});
  EXPECT_EQ(wide.variable_count(), 3u * 4u + 5u * 2u);
  EXPECT_EQ(count_arity(wide, 4), 2u * 4u);
  EXPECT_THROW(generate_subgraph_grid({1, 5, 1}), std::invalid_argument);
}

TEST(GenerateSubgraphGrid, JunctionTablesAreSymmetric) {
  const FactorGraph g = generate_subgraph_grid({4, 6, 3});
  std::vector<Label> zeros(g.variable_count(), 0);
  for (const Factor& f : g.factors()) {
    if (f.arity() != 4) continue;
    EXPECT_EQ(f.table[f.table_index(zeros)], 0.0);
    for (unsigned index = 0; index < 16; ++index) {
      EXPECT_EQ(f.table[index], subgraph_junction_potential(std::popcount(index)));
    }
    // Every permutation of the four positions leaves the table unchanged.
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
      for (unsigned index = 0; index < 16; ++index) {
        unsigned permuted = 0;
        for (int bit = 0; bit < 4; ++bit) {
          if (index & (1u << bit)) permuted |= 1u << perm[bit];
        }
        EXPECT_EQ(f.table[index], f.table[permuted]);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST(GenerateSubgraphGrid, JunctionScopesFollowNumbering) {
  // 2x3 cells: 4 column boundaries (0..3), 3 row boundaries (4..6).
  const FactorGraph g = generate_subgraph_grid({2, 3, 0});
  std::vector<std::vector<VariableIndex>> scopes;
  for (const Factor& f : g.factors()) {
    if (f.arity() == 4) scopes.push_back(f.scope);
  }
  EXPECT_EQ(scopes, (std::vector<std::vector<VariableIndex>>{{0, 2, 4, 5}, {1, 3, 5, 6}}));
}

TEST(GenerateSubgraphGrid, Determinism) {
  EXPECT_EQ(generate_subgraph_grid({5, 4, 8}), generate_subgraph_grid({5, 4, 8}));
}

TEST(GenerateRandom, Shape) {
  const FactorGraph g = generate_random({10, 20, 4, true, 5});
  EXPECT_EQ(g.variable_count(), 10u);
  EXPECT_EQ(count_arity(g, 1), 10u);
  EXPECT_EQ(g.factor_count(), 30u);
  for (const Factor& f : g.factors()) {
    EXPECT_LE(f.arity(), 4u);
    for (double v : f.table) {
      EXPECT_GE(v, -1.0);
      EXPECT_LT(v, 1.0);
    }
  }
  EXPECT_EQ(generate_random({10, 20, 4, true, 5}), g);
}

}  // namespace
}  // namespace lazyflip
