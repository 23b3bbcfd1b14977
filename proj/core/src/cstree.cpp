#include "lazyflip/cstree.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace lazyflip {

namespace {

constexpr std::int64_t kNoChild = -1;
constexpr std::int64_t kExhausted = -2;

}  // namespace

bool csr_extendable(const FactorGraph& graph, std::span<const VariableIndex> path,
                    VariableIndex v) {
  if (v >= graph.variable_count()) return false;
  if (path.empty()) return true;

  if (std::find(path.begin(), path.end(), v) != path.end()) return false;  // (i)
  if (v <= path.front()) return false;                                     // (iii)

  // (ii) and (iv): v must touch the sequence, and everything after the first
  // element it could have followed must be smaller than v.
  const std::size_t n = path.size();
  std::size_t first_adjacent = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (graph.adjacent(path[i], v)) {
      first_adjacent = i;
      break;
    }
  }
  if (first_adjacent == n) return false;
  for (std::size_t k = first_adjacent + 1; k < n; ++k) {
    if (path[k] > v) return false;
  }
  return true;
}

CSTree::CSTree(const FactorGraph& graph) : graph_(&graph) {
  nodes_.push_back(Node{0, kNoNode, kNoNode});
  last_child_label_.push_back(kNoChild);
  level_heads_.push_back(kRootNode);
  level_tails_.push_back(kRootNode);
}

NodeIndex CSTree::append_child(NodeIndex parent, VariableIndex label) {
  const auto index = static_cast<NodeIndex>(nodes_.size());
  if (index == kNoNode) throw std::length_error("CS-tree node index overflow");
  const std::size_t level = level_of(parent) + 1;

  nodes_.push_back(Node{label, parent, kNoNode});
  last_child_label_.push_back(kNoChild);
  last_child_label_[parent] = label;

  if (level == level_heads_.size()) {
    level_heads_.push_back(index);
    level_tails_.push_back(index);
  } else {
    nodes_[level_tails_[level]].next_same_level = index;
    level_tails_[level] = index;
  }
  return index;
}

NodeIndex CSTree::grow_subset(NodeIndex p) {
  if (p >= nodes_.size()) throw std::out_of_range("CS-tree node index out of range");
  const std::int64_t last = last_child_label_[p];
  if (last == kExhausted) return kNoNode;

  const FactorGraph& graph = *graph_;
  const std::int64_t floor = last == kNoChild ? -1 : last;

  if (p == kRootNode) {
    const std::int64_t v = floor + 1;
    if (v < static_cast<std::int64_t>(graph.variable_count())) {
      return append_child(p, static_cast<VariableIndex>(v));
    }
    last_child_label_[p] = kExhausted;
    return kNoNode;
  }

  // Candidates are neighbors of the sequence above the high-water mark.
  scratch_path_ = sequence_of(p);
  scratch_candidates_.clear();
  for (VariableIndex u : scratch_path_) {
    for (VariableIndex w : graph.neighbors(u)) {
      if (static_cast<std::int64_t>(w) > floor && w > scratch_path_.front()) {
        scratch_candidates_.push_back(w);
      }
    }
  }
  std::sort(scratch_candidates_.begin(), scratch_candidates_.end());
  scratch_candidates_.erase(std::unique(scratch_candidates_.begin(), scratch_candidates_.end()),
                            scratch_candidates_.end());

  for (VariableIndex w : scratch_candidates_) {
    if (csr_extendable(graph, scratch_path_, w)) {
      return append_child(p, w);
    }
  }
  last_child_label_[p] = kExhausted;
  return kNoNode;
}

NodeIndex CSTree::first_subset_of_size(std::size_t n) {
  if (n == 0) throw std::invalid_argument("subset size must be at least 1");
  if (n < level_heads_.size()) return level_heads_[n];
  if (empty_level_ && n >= *empty_level_) return kNoNode;
  if (n > 1 && !level_complete(n - 1)) {
    throw std::logic_error("level " + std::to_string(n - 1) +
                           " must be complete before growing level " + std::to_string(n));
  }

  for (NodeIndex q = level_heads_[n - 1]; q != kNoNode; q = nodes_[q].next_same_level) {
    const NodeIndex created = grow_subset(q);
    if (created != kNoNode) return created;
  }
  complete_levels_ = std::max(complete_levels_, n);
  empty_level_ = n;
  return kNoNode;
}

NodeIndex CSTree::next_subset_of_same_size(NodeIndex p) {
  if (p == kRootNode || p >= nodes_.size()) {
    throw std::out_of_range("next_subset_of_same_size needs a non-root node");
  }
  const std::size_t level = level_of(p);
  if (level_tails_[level] != p) {
    throw std::logic_error("next_subset_of_same_size must continue from the level tail");
  }
  for (NodeIndex q = nodes_[p].parent; q != kNoNode; q = nodes_[q].next_same_level) {
    const NodeIndex created = grow_subset(q);
    if (created != kNoNode) return created;
  }
  complete_levels_ = std::max(complete_levels_, level);
  return kNoNode;
}

void CSTree::subset_of(NodeIndex p, std::vector<VariableIndex>& out) const {
  if (p == kRootNode || p >= nodes_.size()) {
    throw std::out_of_range("subset_of needs a non-root node");
  }
  out.clear();
  for (NodeIndex q = p; q != kRootNode; q = nodes_[q].parent) {
    out.push_back(nodes_[q].label);
  }
}

std::vector<VariableIndex> CSTree::subset_of(NodeIndex p) const {
  std::vector<VariableIndex> out;
  subset_of(p, out);
  return out;
}

std::vector<VariableIndex> CSTree::sequence_of(NodeIndex p) const {
  auto out = subset_of(p);
  std::reverse(out.begin(), out.end());
  return out;
}

NodeIndex CSTree::level_head(std::size_t n) const {
  return n < level_heads_.size() ? level_heads_[n] : kNoNode;
}

NodeIndex CSTree::level_tail(std::size_t n) const {
  return n < level_tails_.size() ? level_tails_[n] : kNoNode;
}

std::size_t CSTree::level_of(NodeIndex p) const {
  if (p >= nodes_.size()) throw std::out_of_range("CS-tree node index out of range");
  const auto it = std::upper_bound(level_heads_.begin(), level_heads_.end(), p);
  return static_cast<std::size_t>(it - level_heads_.begin()) - 1;
}

NodeIndex CSTree::next_in_level_order(NodeIndex p) const {
  const NodeIndex next = nodes_.at(p).next_same_level;
  if (next != kNoNode) return next;
  return level_head(level_of(p) + 1);
}

bool CSTree::level_complete(std::size_t n) const {
  if (n == 0) return true;
  if (n <= complete_levels_) return true;
  return empty_level_ && n >= *empty_level_;
}

void CSTree::dump(std::ostream& os) const {
  os << "0 -1 -1 0\n";
  std::size_t level = 0;
  for (NodeIndex i = 1; i < nodes_.size(); ++i) {
    while (level + 1 < level_heads_.size() && level_heads_[level + 1] <= i) ++level;
    os << i << ' ' << nodes_[i].parent << ' ' << nodes_[i].label << ' ' << level << '\n';
  }
}

std::vector<std::uint64_t> grow_levels(CSTree& tree, std::size_t max_size) {
  std::vector<std::uint64_t> counts{0};
  for (std::size_t n = 1; n <= max_size; ++n) {
    NodeIndex s = tree.first_subset_of_size(n);
    if (s == kNoNode) break;
    std::uint64_t count = 0;
    while (s != kNoNode) {
      ++count;
      s = tree.next_subset_of_same_size(s);
    }
    counts.push_back(count);
  }
  return counts;
}

}  // namespace lazyflip
