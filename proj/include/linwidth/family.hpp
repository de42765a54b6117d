#pragma once

#include "linwidth/subset.hpp"

#include <compare>
#include <vector>

namespace linwidth {

/// A finite, deduplicated collection of subsets of one ground set, kept in
/// canonical ascending order.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(std::size_t ground_size, std::vector<Subset> members);

  std::size_t ground_size() const { return ground_size_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Subset>& members() const { return members_; }
  bool contains(Subset a) const;
  // Number of duplicate inputs merged at construction.
  std::size_t duplicates_merged() const { return duplicates_merged_; }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool is_subfamily_of(const SetFamily& other) const;

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.ground_size_ == b.ground_size_ && a.members_ == b.members_;
  }
  // Families compare as sorted lists of subsets.
  friend std::strong_ordering operator<=>(const SetFamily& a, const SetFamily& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::size_t ground_size_ = 0;
  std::vector<Subset> members_;
  std::size_t duplicates_merged_ = 0;
};

}  // namespace linwidth
