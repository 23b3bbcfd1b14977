#include "lazyflip/taglist.hpp"

#include <stdexcept>

namespace lazyflip {

void TagList::tag(VariableIndex x) {
  if (x >= flags_.size()) throw std::out_of_range("tag index out of range");
  if (!flags_[x]) {
    flags_[x] = 1;
    tagged_.push_back(x);
  }
}

void TagList::untag_all() {
  for (VariableIndex x : tagged_) {
    flags_[x] = 0;
  }
  untag_writes_ += tagged_.size();
  tagged_.clear();
}

void tag_connected_variables(TagList& tags, const CSTree& tree, NodeIndex s) {
  if (s == kRootNode || s >= tree.node_count()) {
    throw std::out_of_range("tag_connected_variables needs a non-root node");
  }
  const FactorGraph& graph = tree.graph();
  for (NodeIndex q = s; q != kRootNode; q = tree.node(q).parent) {
    const VariableIndex v = tree.node(q).label;
    tags.tag(v);
    for (VariableIndex w : graph.neighbors(v)) {
      tags.tag(w);
    }
  }
}

NodeIndex first_tagged_subset(const TagList& tags, const CSTree& tree) {
  if (tags.empty()) return kNoNode;
  for (NodeIndex q = tree.level_head(1); q != kNoNode; q = tree.node(q).next_same_level) {
    if (tags.is_tagged(tree.node(q).label)) return q;
  }
  return kNoNode;
}

NodeIndex next_tagged_subset(const TagList& tags, const CSTree& tree, NodeIndex s) {
  if (tags.empty()) return kNoNode;
  for (NodeIndex t = tree.next_in_level_order(s); t != kNoNode; t = tree.next_in_level_order(t)) {
    for (NodeIndex q = t; q != kRootNode; q = tree.node(q).parent) {
      if (tags.is_tagged(tree.node(q).label)) return t;
    }
  }
  return kNoNode;
}

}  // namespace lazyflip
