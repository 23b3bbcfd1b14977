#ifndef LAZYFLIP_GENERATORS_HPP
#define LAZYFLIP_GENERATORS_HPP

#include <cstdint>
#include <random>

#include "lazyflip/model.hpp"

namespace lazyflip {

// Portable uniform draws: std::mt19937_64 is fully specified by the standard,
// and the conversion to double below does not depend on the library's
// distribution implementations.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Uniform integer on [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);

private:
  std::mt19937_64 engine_;
};

// Ferromagnetic Ising model on a height x width grid. Variables are numbered
// row-major. Each variable gets a unary (u, 1-u) with u uniform on [0, 1);
// each 4-neighbor edge a pair factor alpha * (1 - delta(x_j, x_k)).
struct IsingSpec {
  std::size_t height = 1;
  std::size_t width = 1;
  double alpha = 0.0;
  std::uint64_t seed = 0;
};

FactorGraph generate_ising(const IsingSpec& spec);

// Penalty of a path junction as a function of how many of its four incident
// boundary variables are on: 0, 100, 0.6, 1.2, 2.4 for s = 0..4.
double subgraph_junction_potential(int s);

// Optimal-subgraph model over the interior cell boundaries of an H x W grid of
// cells. Variables 0 .. H(W-1)-1 are the boundaries between horizontally
// adjacent cells, row-major; the next W(H-1) are those between vertically
// adjacent cells, row-major. Each variable gets an Ising-style random unary;
// each interior grid point where four boundaries meet gets a fourth-order
// junction factor.
struct SubgraphGridSpec {
  std::size_t cell_height = 2;
  std::size_t cell_width = 2;
  std::uint64_t seed = 0;
};

FactorGraph generate_subgraph_grid(const SubgraphGridSpec& spec);

// Random higher-order models for differential testing. Every variable gets a
// unary factor when `unaries` is set; `factors` further factors have arity
// drawn from [2, max_arity] (capped at the variable count) over distinct
// random variables. Table entries are uniform on [-1, 1).
struct RandomModelSpec {
  std::size_t variables = 8;
  std::size_t factors = 8;
  std::size_t max_arity = 3;
  bool unaries = true;
  std::uint64_t seed = 0;
};

FactorGraph generate_random(const RandomModelSpec& spec);

}  // namespace lazyflip

#endif  // LAZYFLIP_GENERATORS_HPP
