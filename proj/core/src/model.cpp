#include "lazyflip/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lazyflip {

namespace {

constexpr std::size_t kMaxArity = 30;

}  // namespace

FactorGraph::FactorGraph(std::size_t variable_count, std::vector<Factor> factors)
    : variable_count_(variable_count), factors_(std::move(factors)) {
  if (variable_count_ > std::numeric_limits<VariableIndex>::max()) {
    throw ModelError("variable count exceeds index range");
  }
  if (factors_.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw ModelError("factor count exceeds index range");
  }

  std::vector<std::vector<VariableIndex>> adjacency(variable_count_);
  std::vector<std::size_t> incidence_count(variable_count_, 0);

  for (std::size_t f = 0; f < factors_.size(); ++f) {
    const Factor& factor = factors_[f];
    const std::string where = "factor " + std::to_string(f) + ": ";
    if (factor.scope.empty()) {
      throw ModelError(where + "empty scope");
    }
    if (factor.arity() > kMaxArity) {
      throw ModelError(where + "arity " + std::to_string(factor.arity()) + " too large");
    }
    for (std::size_t i = 0; i < factor.scope.size(); ++i) {
      const VariableIndex v = factor.scope[i];
      if (v >= variable_count_) {
        throw ModelError(where + "variable index " + std::to_string(v) + " out of range");
      }
      for (std::size_t k = 0; k < i; ++k) {
        if (factor.scope[k] == v) {
          throw ModelError(where + "duplicate variable index " + std::to_string(v));
        }
      }
    }
    const std::size_t expected = std::size_t{1} << factor.arity();
    if (factor.table.size() != expected) {
      throw ModelError(where + "table has " + std::to_string(factor.table.size()) +
                       " entries, expected " + std::to_string(expected));
    }
    for (double value : factor.table) {
      if (!std::isfinite(value)) {
        throw ModelError(where + "non-finite table value");
      }
    }
    for (VariableIndex a : factor.scope) {
      ++incidence_count[a];
      for (VariableIndex b : factor.scope) {
        if (a != b) adjacency[a].push_back(b);
      }
    }
  }

  adjacency_offsets_.assign(variable_count_ + 1, 0);
  for (std::size_t j = 0; j < variable_count_; ++j) {
    auto& list = adjacency[j];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    adjacency_offsets_[j + 1] = adjacency_offsets_[j] + list.size();
  }
  adjacency_.reserve(adjacency_offsets_.back());
  for (const auto& list : adjacency) {
    adjacency_.insert(adjacency_.end(), list.begin(), list.end());
  }

  incidence_offsets_.assign(variable_count_ + 1, 0);
  for (std::size_t j = 0; j < variable_count_; ++j) {
    incidence_offsets_[j + 1] = incidence_offsets_[j] + incidence_count[j];
  }
  incidence_.resize(incidence_offsets_.back());
  std::vector<std::size_t> cursor(incidence_offsets_.begin(), incidence_offsets_.end() - 1);
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    for (VariableIndex v : factors_[f].scope) {
      incidence_[cursor[v]++] = static_cast<std::uint32_t>(f);
    }
  }
}

void FactorGraph::check_index(VariableIndex j) const {
  if (j >= variable_count_) {
    throw ModelError("variable index " + std::to_string(j) + " out of range");
  }
}

std::span<const VariableIndex> FactorGraph::neighbors(VariableIndex j) const {
  check_index(j);
  return {adjacency_.data() + adjacency_offsets_[j],
          adjacency_offsets_[j + 1] - adjacency_offsets_[j]};
}

std::span<const std::uint32_t> FactorGraph::incidence(VariableIndex j) const {
  check_index(j);
  return {incidence_.data() + incidence_offsets_[j],
          incidence_offsets_[j + 1] - incidence_offsets_[j]};
}

bool FactorGraph::adjacent(VariableIndex a, VariableIndex b) const {
  const auto list = neighbors(a);
  return std::binary_search(list.begin(), list.end(), b);
}

double FactorGraph::energy(std::span<const Label> bits) const {
  if (bits.size() != variable_count_) {
    throw ModelError("configuration has " + std::to_string(bits.size()) +
                     " variables, model has " + std::to_string(variable_count_));
  }
  double total = 0.0;
  for (const Factor& factor : factors_) {
    total += factor.table[factor.table_index(bits)];
  }
  return total;
}

Configuration Configuration::evaluate(const FactorGraph& graph, std::vector<Label> bits) {
  for (Label b : bits) {
    if (b > 1) throw ModelError("configuration values must be 0 or 1");
  }
  const double e = graph.energy(bits);
  return Configuration{std::move(bits), e};
}

FlipEvaluator::FlipEvaluator(const FactorGraph& graph)
    : graph_(&graph),
      factor_stamp_(graph.factor_count(), 0),
      variable_stamp_(graph.variable_count(), 0) {}

double FlipEvaluator::delta(std::span<const Label> bits, std::span<const VariableIndex> subset) {
  const FactorGraph& graph = *graph_;
  if (bits.size() != graph.variable_count()) {
    throw ModelError("configuration size does not match model");
  }
  if (subset.empty()) {
    throw ModelError("flip subset is empty");
  }
  if (++stamp_ == 0) {
    std::fill(factor_stamp_.begin(), factor_stamp_.end(), 0);
    std::fill(variable_stamp_.begin(), variable_stamp_.end(), 0);
    stamp_ = 1;
  }

  for (VariableIndex v : subset) {
    if (v >= graph.variable_count()) {
      throw ModelError("flip index " + std::to_string(v) + " out of range");
    }
    if (variable_stamp_[v] == stamp_) {
      throw ModelError("flip index " + std::to_string(v) + " repeated");
    }
    variable_stamp_[v] = stamp_;
  }

  touched_.clear();
  for (VariableIndex v : subset) {
    for (std::uint32_t f : graph.incidence(v)) {
      if (factor_stamp_[f] != stamp_) {
        factor_stamp_[f] = stamp_;
        touched_.push_back(f);
      }
    }
  }

  double change = 0.0;
  for (std::uint32_t f : touched_) {
    const Factor& factor = graph.factor(f);
    std::size_t current = 0;
    std::size_t flipped = 0;
    for (VariableIndex v : factor.scope) {
      const unsigned bit = bits[v] ? 1u : 0u;
      current = (current << 1) | bit;
      flipped = (flipped << 1) | (variable_stamp_[v] == stamp_ ? bit ^ 1u : bit);
    }
    change += factor.table[flipped] - factor.table[current];
  }
  evaluations_ += 2 * touched_.size();
  return change;
}

void flip(Configuration& c, std::span<const VariableIndex> subset, double new_energy) {
  for (VariableIndex v : subset) {
    if (v >= c.bits.size()) {
      throw ModelError("flip index " + std::to_string(v) + " out of range");
    }
  }
  for (VariableIndex v : subset) {
    c.bits[v] ^= 1;
  }
  c.energy = new_energy;
}

}  // namespace lazyflip
