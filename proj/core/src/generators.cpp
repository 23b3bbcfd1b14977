#include "lazyflip/generators.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace lazyflip {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  // Rejection sampling keeps the draw unbiased and platform independent.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

namespace {

Factor random_unary(VariableIndex v, SeededRng& rng) {
  const double u = rng.uniform();
  return Factor{{v}, {u, 1.0 - u}};
}

}  // namespace

FactorGraph generate_ising(const IsingSpec& spec) {
  if (spec.height == 0 || spec.width == 0) {
    throw std::invalid_argument("Ising grid must have at least one variable");
  }
  if (!(spec.alpha >= 0.0)) {
    throw std::invalid_argument("Ising coupling must be non-negative");
  }
  const std::size_t h = spec.height;
  const std::size_t w = spec.width;
  const std::size_t m = h * w;
  SeededRng rng(spec.seed);

  std::vector<Factor> factors;
  factors.reserve(m + h * (w - 1) + w * (h - 1));
  for (std::size_t j = 0; j < m; ++j) {
    factors.push_back(random_unary(static_cast<VariableIndex>(j), rng));
  }
  const std::vector<double> coupling{0.0, spec.alpha, spec.alpha, 0.0};
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      const auto j = static_cast<VariableIndex>(r * w + c);
      if (c + 1 < w) factors.push_back(Factor{{j, j + 1}, coupling});
      if (r + 1 < h) factors.push_back(Factor{{j, static_cast<VariableIndex>(j + w)}, coupling});
    }
  }
  return FactorGraph(m, std::move(factors));
}

double subgraph_junction_potential(int s) {
  switch (s) {
    case 0: return 0.0;
    case 1: return 100.0;
    case 2: return 0.6;
    case 3: return 1.2;
    case 4: return 2.4;
    default:
      throw std::out_of_range("junction degree " + std::to_string(s) + " not in 0..4");
  }
}

FactorGraph generate_subgraph_grid(const SubgraphGridSpec& spec) {
  if (spec.cell_height < 2 || spec.cell_width < 2) {
    throw std::invalid_argument("subgraph grid needs at least 2x2 cells");
  }
  const std::size_t h = spec.cell_height;
  const std::size_t w = spec.cell_width;
  const std::size_t between_columns = h * (w - 1);
  const std::size_t m = between_columns + w * (h - 1);
  SeededRng rng(spec.seed);

  std::vector<double> junction(16);
  for (unsigned index = 0; index < 16; ++index) {
    junction[index] = subgraph_junction_potential(std::popcount(index));
  }

  std::vector<Factor> factors;
  factors.reserve(m + (h - 1) * (w - 1));
  for (std::size_t j = 0; j < m; ++j) {
    factors.push_back(random_unary(static_cast<VariableIndex>(j), rng));
  }
  // Grid point below-right of cell (r, c).
  for (std::size_t r = 0; r + 1 < h; ++r) {
    for (std::size_t c = 0; c + 1 < w; ++c) {
      const auto above = static_cast<VariableIndex>(r * (w - 1) + c);
      const auto below = static_cast<VariableIndex>((r + 1) * (w - 1) + c);
      const auto left = static_cast<VariableIndex>(between_columns + r * w + c);
      const auto right = static_cast<VariableIndex>(between_columns + r * w + c + 1);
      std::vector<VariableIndex> scope{above, below, left, right};
      std::sort(scope.begin(), scope.end());
      factors.push_back(Factor{std::move(scope), junction});
    }
  }
  return FactorGraph(m, std::move(factors));
}

FactorGraph generate_random(const RandomModelSpec& spec) {
  const std::size_t m = spec.variables;
  if (spec.factors > 0 && m < 2) {
    throw std::invalid_argument("higher-order factors need at least two variables");
  }
  if (spec.factors > 0 && spec.max_arity < 2) {
    throw std::invalid_argument("max_arity must be at least 2");
  }
  SeededRng rng(spec.seed);
  std::vector<Factor> factors;
  auto draw_table = [&](std::size_t arity) {
    std::vector<double> table(std::size_t{1} << arity);
    for (double& value : table) value = 2.0 * rng.uniform() - 1.0;
    return table;
  };

  if (spec.unaries) {
    for (std::size_t j = 0; j < m; ++j) {
      factors.push_back(Factor{{static_cast<VariableIndex>(j)}, draw_table(1)});
    }
  }
  const std::size_t max_arity = std::min(spec.max_arity, m);
  std::vector<VariableIndex> pool(m);
  for (std::size_t f = 0; f < spec.factors; ++f) {
    const std::size_t arity = 2 + rng.below(max_arity - 1);
    for (std::size_t j = 0; j < m; ++j) pool[j] = static_cast<VariableIndex>(j);
    // Partial Fisher-Yates.
    for (std::size_t i = 0; i < arity; ++i) {
      const std::size_t k = i + rng.below(m - i);
      std::swap(pool[i], pool[k]);
    }
    std::vector<VariableIndex> scope(pool.begin(), pool.begin() + arity);
    factors.push_back(Factor{std::move(scope), draw_table(arity)});
  }
  return FactorGraph(m, std::move(factors));
}

}  // namespace lazyflip
