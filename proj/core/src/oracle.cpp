#include "lazyflip/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

namespace lazyflip::oracle {

Minimum brute_force_minimize(const FactorGraph& graph, std::size_t max_variables) {
  const std::size_t m = graph.variable_count();
  if (m > max_variables || m >= 63) {
    throw GuardExceeded("brute force over " + std::to_string(m) + " variables exceeds guard of " +
                        std::to_string(max_variables));
  }
  std::vector<Label> bits(m, 0);
  Minimum best{bits, graph.energy(bits)};
  const std::uint64_t count = std::uint64_t{1} << m;
  // bits[0] is the most significant digit, so increasing x is lexicographic.
  for (std::uint64_t x = 1; x < count; ++x) {
    for (std::size_t j = 0; j < m; ++j) {
      bits[j] = static_cast<Label>((x >> (m - 1 - j)) & 1u);
    }
    const double e = graph.energy(bits);
    if (e < best.energy) {
      best.energy = e;
      best.bits = bits;
    }
  }
  return best;
}

namespace {

struct SubsetGrower {
  const FactorGraph& graph;
  std::size_t limit;
  std::uint64_t max_subsets;
  std::set<std::vector<VariableIndex>> seen;

  void grow(std::vector<VariableIndex>& members, VariableIndex minimum) {
    if (members.size() >= limit) return;
    std::vector<VariableIndex> frontier;
    for (VariableIndex u : members) {
      for (VariableIndex w : graph.neighbors(u)) {
        if (w > minimum && std::find(members.begin(), members.end(), w) == members.end()) {
          frontier.push_back(w);
        }
      }
    }
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    for (VariableIndex w : frontier) {
      std::vector<VariableIndex> next = members;
      next.insert(std::upper_bound(next.begin(), next.end(), w), w);
      if (!seen.insert(next).second) continue;
      if (seen.size() > max_subsets) {
        throw GuardExceeded("connected subset enumeration exceeds " +
                            std::to_string(max_subsets) + " subsets");
      }
      grow(next, minimum);
    }
  }
};

}  // namespace

EnumerationReport enumerate_connected_subsets_recursive(const FactorGraph& graph,
                                                        std::optional<std::size_t> max_size,
                                                        bool keep_subsets,
                                                        std::uint64_t max_subsets) {
  const std::size_t m = graph.variable_count();
  const std::size_t limit = max_size.value_or(m);
  SubsetGrower grower{graph, limit, max_subsets, {}};
  if (limit >= 1) {
    for (VariableIndex v = 0; v < m; ++v) {
      std::vector<VariableIndex> start{v};
      grower.seen.insert(start);
      grower.grow(start, v);
    }
  }

  EnumerationReport report;
  report.counts.assign(std::min(limit, m) + 1, 0);
  for (const auto& s : grower.seen) {
    ++report.counts[s.size()];
  }
  report.total = grower.seen.size();
  if (keep_subsets) {
    report.subsets.assign(grower.seen.begin(), grower.seen.end());
  }
  return report;
}

namespace {

std::uint64_t count_orderings(const FactorGraph& graph, std::span<const VariableIndex> variables,
                              std::vector<VariableIndex>& prefix, std::vector<bool>& used) {
  if (prefix.size() == variables.size()) return 1;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (used[i]) continue;
    const VariableIndex v = variables[i];
    const bool connected =
        prefix.empty() || std::any_of(prefix.begin(), prefix.end(),
                                      [&](VariableIndex u) { return graph.adjacent(u, v); });
    if (!connected) continue;
    used[i] = true;
    prefix.push_back(v);
    total += count_orderings(graph, variables, prefix, used);
    prefix.pop_back();
    used[i] = false;
  }
  return total;
}

}  // namespace

std::uint64_t count_connected_sequences(const FactorGraph& graph,
                                        std::span<const VariableIndex> variables,
                                        std::size_t max_size) {
  if (variables.size() > max_size) {
    throw GuardExceeded("sequence count over " + std::to_string(variables.size()) +
                        " variables exceeds guard of " + std::to_string(max_size));
  }
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i] >= graph.variable_count()) {
      throw ModelError("variable index out of range");
    }
    for (std::size_t k = 0; k < i; ++k) {
      if (variables[k] == variables[i]) throw ModelError("duplicate variable in set");
    }
  }
  if (variables.empty()) return 0;
  std::vector<VariableIndex> prefix;
  std::vector<bool> used(variables.size(), false);
  return count_orderings(graph, variables, prefix, used);
}

std::uint64_t flips_within_radius(std::size_t m, std::size_t n) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(m, k)
  for (std::size_t k = 1; k <= std::min(n, m); ++k) {
    const std::uint64_t factor = m - k + 1;
    if (binom > kMax / factor) return kMax;
    binom = binom * factor / k;
    if (total > kMax - binom) return kMax;
    total += binom;
  }
  return total;
}

bool verify_hamming_bound(const FactorGraph& graph, std::span<const Label> bits, std::size_t n,
                          std::uint64_t budget) {
  const std::size_t m = graph.variable_count();
  if (bits.size() != m) throw ModelError("configuration size does not match model");
  const std::size_t radius = std::min(n, m);
  if (flips_within_radius(m, radius) > budget) {
    throw GuardExceeded("Hamming-" + std::to_string(n) + " check over " + std::to_string(m) +
                        " variables exceeds budget");
  }

  std::vector<Label> work(bits.begin(), bits.end());
  const double base = graph.energy(work);
  std::vector<std::size_t> pick;
  for (std::size_t k = 1; k <= radius; ++k) {
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      for (std::size_t i : pick) work[i] ^= 1;
      const double e = graph.energy(work);
      for (std::size_t i : pick) work[i] ^= 1;
      if (e < base) return false;

      // Next k-combination of {0..m-1} in lexicographic order.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == m - k + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return true;
}

}  // namespace lazyflip::oracle
