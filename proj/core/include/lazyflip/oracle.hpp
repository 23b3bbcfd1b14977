#ifndef LAZYFLIP_ORACLE_HPP
#define LAZYFLIP_ORACLE_HPP

// Brute-force reference implementations. These share only FactorGraph with
// the solver path and deliberately avoid the CS-tree and tag lists.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lazyflip/model.hpp"

namespace lazyflip::oracle {

class GuardExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Minimum {
  std::vector<Label> bits;
  double energy = 0.0;
};

// Scans all 2^m assignments; returns the lexicographically smallest argmin.
Minimum brute_force_minimize(const FactorGraph& graph, std::size_t max_variables = 24);

struct EnumerationReport {
  // counts[n] = number of connected subsets of size n; counts[0] == 0.
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
  // Sorted variable sets, filled when requested.
  std::vector<std::vector<VariableIndex>> subsets;
};

// Grows every connected set from its minimum vertex and deduplicates
// explicitly.
EnumerationReport enumerate_connected_subsets_recursive(
    const FactorGraph& graph, std::optional<std::size_t> max_size = std::nullopt,
    bool keep_subsets = false, std::uint64_t max_subsets = 5'000'000);

// Orderings of `variables` in which each element after the first shares a
// factor with an earlier one.
std::uint64_t count_connected_sequences(const FactorGraph& graph,
                                        std::span<const VariableIndex> variables,
                                        std::size_t max_size = 8);

// True iff no flip of at most n variables, connected or not, strictly lowers
// the energy of `bits`. Throws GuardExceeded when more than `budget`
// candidate flips would be needed.
bool verify_hamming_bound(const FactorGraph& graph, std::span<const Label> bits, std::size_t n,
                          std::uint64_t budget = 50'000'000);

// Number of subsets of size 1..n of an m-set, saturating at UINT64_MAX.
std::uint64_t flips_within_radius(std::size_t m, std::size_t n);

}  // namespace lazyflip::oracle

#endif  // LAZYFLIP_ORACLE_HPP
