#include "linwidth/family.hpp"

#include <algorithm>

namespace linwidth {

SetFamily::SetFamily(std::size_t ground_size, std::vector<Subset> members)
    : ground_size_(ground_size), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  auto tail = std::unique(members_.begin(), members_.end());
  duplicates_merged_ = static_cast<std::size_t>(members_.end() - tail);
  members_.erase(tail, members_.end());
}

bool SetFamily::contains(Subset a) const { return std::binary_search(members_.begin(), members_.end(), a); }

bool SetFamily::is_subfamily_of(const SetFamily& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

}  // namespace linwidth
