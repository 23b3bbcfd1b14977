#ifndef LAZYFLIP_TAGLIST_HPP
#define LAZYFLIP_TAGLIST_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lazyflip/cstree.hpp"
#include "lazyflip/model.hpp"

namespace lazyflip {

// Marks variables affected by recent flips. The explicit list lets
// untag_all() run in time proportional to the number of tagged variables.
class TagList {
public:
  explicit TagList(std::size_t variable_count) : flags_(variable_count, 0) {}

  void tag(VariableIndex x);
  void untag_all();

  bool is_tagged(VariableIndex x) const { return flags_.at(x) != 0; }
  bool empty() const { return tagged_.empty(); }
  std::span<const VariableIndex> tagged() const { return tagged_; }
  std::size_t variable_count() const { return flags_.size(); }

  // Flag writes made by untag_all() so far.
  std::uint64_t untag_writes() const { return untag_writes_; }

  void swap(TagList& other) noexcept {
    flags_.swap(other.flags_);
    tagged_.swap(other.tagged_);
    std::swap(untag_writes_, other.untag_writes_);
  }

private:
  std::vector<std::uint8_t> flags_;
  std::vector<VariableIndex> tagged_;
  std::uint64_t untag_writes_ = 0;
};

inline void swap(TagList& a, TagList& b) noexcept { a.swap(b); }

// Tags the variables of node s and every variable sharing a factor with one
// of them.
void tag_connected_variables(TagList& tags, const CSTree& tree, NodeIndex s);

// First level-1 node whose own label is tagged.
NodeIndex first_tagged_subset(const TagList& tags, const CSTree& tree);

// Next built node after s, in level order across levels, whose root path
// holds at least one tagged variable. Never grows the tree.
NodeIndex next_tagged_subset(const TagList& tags, const CSTree& tree, NodeIndex s);

}  // namespace lazyflip

#endif  // LAZYFLIP_TAGLIST_HPP
