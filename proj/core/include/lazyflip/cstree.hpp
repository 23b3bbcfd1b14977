#ifndef LAZYFLIP_CSTREE_HPP
#define LAZYFLIP_CSTREE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "lazyflip/model.hpp"

namespace lazyflip {

using NodeIndex = std::uint32_t;

inline constexpr NodeIndex kNoNode = static_cast<NodeIndex>(-1);
inline constexpr NodeIndex kRootNode = 0;

// csrExtendable: true iff appending `v` to the canonical sequence `path`
// yields a canonical (connected subset representing) sequence. For an empty
// path every variable qualifies.
bool csr_extendable(const FactorGraph& graph, std::span<const VariableIndex> path,
                    VariableIndex v);

// Connected subgraph tree. Every root-to-node path spells the canonical
// sequence of exactly one connected variable subset. Nodes are created level
// by level, so node indices on each level are contiguous and in level order.
class CSTree {
public:
  struct Node {
    VariableIndex label;
    NodeIndex parent;
    NodeIndex next_same_level;
  };

  explicit CSTree(const FactorGraph& graph);

  const FactorGraph& graph() const { return *graph_; }

  // Appends to `p` the smallest variable not yet among its children that
  // extends p's sequence canonically. Returns kNoNode if none remains.
  NodeIndex grow_subset(NodeIndex p);

  // Creates and returns the first node of level n. Requires level n-1 to be
  // complete. Returns kNoNode if no connected subset of size n exists.
  NodeIndex first_subset_of_size(std::size_t n);

  // Creates and returns the length-lexicographic successor of `p`, which must
  // be the most recently created node of its level.
  NodeIndex next_subset_of_same_size(NodeIndex p);

  // Variables on the path from p to the root, in path order (p first).
  std::vector<VariableIndex> subset_of(NodeIndex p) const;
  // Same, written into `out` (cleared first).
  void subset_of(NodeIndex p, std::vector<VariableIndex>& out) const;
  // Canonical sequence of p, read root to node.
  std::vector<VariableIndex> sequence_of(NodeIndex p) const;

  const Node& node(NodeIndex i) const { return nodes_[i]; }
  // Including the root.
  std::size_t node_count() const { return nodes_.size(); }
  // Number of levels that have at least one node.
  std::size_t depth() const { return level_heads_.size() - 1; }
  // kNoNode if level n has no nodes yet.
  NodeIndex level_head(std::size_t n) const;
  NodeIndex level_tail(std::size_t n) const;
  std::size_t level_of(NodeIndex p) const;

  // Level-order successor across level boundaries, over built nodes only.
  NodeIndex next_in_level_order(NodeIndex p) const;

  // True once first_subset_of_size(n) returned kNoNode or level n was fully
  // grown.
  bool level_complete(std::size_t n) const;

  // "node_id parent_id label level" per line, root first with -1 fields.
  void dump(std::ostream& os) const;

private:
  NodeIndex append_child(NodeIndex parent, VariableIndex label);

  const FactorGraph* graph_;
  std::vector<Node> nodes_;
  // Label of the last child created under each node, or a sentinel. Children
  // are born in increasing label order so this bounds the next candidate.
  std::vector<std::int64_t> last_child_label_;
  // level_heads_[n] / level_tails_[n] for n >= 1; index 0 is the root level.
  std::vector<NodeIndex> level_heads_;
  std::vector<NodeIndex> level_tails_;
  // Largest level known to be complete.
  std::size_t complete_levels_ = 0;
  // Set when a level turned out empty: no deeper subsets exist.
  std::optional<std::size_t> empty_level_;

  std::vector<VariableIndex> scratch_path_;
  std::vector<VariableIndex> scratch_candidates_;
};

// Grows complete levels 1..max_size (or until a level is empty) and returns
// the node count of each level; element 0 is unused.
std::vector<std::uint64_t> grow_levels(CSTree& tree, std::size_t max_size);

}  // namespace lazyflip

#endif  // LAZYFLIP_CSTREE_HPP
