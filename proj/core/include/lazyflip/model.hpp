#ifndef LAZYFLIP_MODEL_HPP
#define LAZYFLIP_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lazyflip {

using VariableIndex = std::uint32_t;
using Label = std::uint8_t;

class ModelError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A potential over a scope of binary variables. The table holds 2^arity
// entries; the last scope variable varies fastest.
struct Factor {
  std::vector<VariableIndex> scope;
  std::vector<double> table;

  std::size_t arity() const { return scope.size(); }

  template <typename Bits>
  std::size_t table_index(const Bits& bits) const {
    std::size_t index = 0;
    for (VariableIndex v : scope) {
      index = (index << 1) | (bits[v] ? 1u : 0u);
    }
    return index;
  }

  bool operator==(const Factor&) const = default;
};

// Binary-variable factor graph. Immutable after construction.
class FactorGraph {
public:
  FactorGraph() = default;

  // Throws ModelError on out-of-range or duplicated scope indices, table
  // length != 2^arity, or non-finite table values.
  FactorGraph(std::size_t variable_count, std::vector<Factor> factors);

  std::size_t variable_count() const { return variable_count_; }
  std::size_t factor_count() const { return factors_.size(); }
  const std::vector<Factor>& factors() const { return factors_; }
  const Factor& factor(std::size_t i) const { return factors_[i]; }

  // Sorted distinct variables sharing at least one factor with j.
  std::span<const VariableIndex> neighbors(VariableIndex j) const;
  // Indices of factors whose scope contains j, ascending.
  std::span<const std::uint32_t> incidence(VariableIndex j) const;

  bool adjacent(VariableIndex a, VariableIndex b) const;

  // Sum of all factor values in factor index order.
  double energy(std::span<const Label> bits) const;

  bool operator==(const FactorGraph& other) const {
    return variable_count_ == other.variable_count_ && factors_ == other.factors_;
  }

private:
  void check_index(VariableIndex j) const;

  std::size_t variable_count_ = 0;
  std::vector<Factor> factors_;
  // CSR layouts, one slice per variable.
  std::vector<std::size_t> adjacency_offsets_;
  std::vector<VariableIndex> adjacency_;
  std::vector<std::size_t> incidence_offsets_;
  std::vector<std::uint32_t> incidence_;
};

// An assignment together with its maintained total energy.
struct Configuration {
  std::vector<Label> bits;
  double energy = 0.0;

  static Configuration evaluate(const FactorGraph& graph, std::vector<Label> bits);
};

// Evaluates energy changes of subset flips by touching only the factors
// incident to the subset. Holds scratch marks sized to one graph, so one
// evaluator per solve.
class FlipEvaluator {
public:
  explicit FlipEvaluator(const FactorGraph& graph);

  // Energy change caused by flipping `subset` in `bits`. Each incident factor
  // is evaluated once at the current and once at the flipped assignment.
  double delta(std::span<const Label> bits, std::span<const VariableIndex> subset);

  double energy_after_flip(const Configuration& c, std::span<const VariableIndex> subset) {
    return c.energy + delta(c.bits, subset);
  }

  // Number of table lookups performed so far.
  std::uint64_t factor_evaluations() const { return evaluations_; }

private:
  const FactorGraph* graph_;
  std::vector<std::uint32_t> factor_stamp_;
  std::vector<std::uint32_t> variable_stamp_;
  std::vector<std::uint32_t> touched_;
  std::uint32_t stamp_ = 0;
  std::uint64_t evaluations_ = 0;
};

// Toggles the bits of `subset` and stores `new_energy` as the maintained energy.
void flip(Configuration& c, std::span<const VariableIndex> subset, double new_energy);

}  // namespace lazyflip

#endif  // LAZYFLIP_MODEL_HPP
