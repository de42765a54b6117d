#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace linwidth {

using Element = std::size_t;

// Connectivity values are natural numbers.
using Value = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;

/// A subset of a ground set of at most 64 elements, stored as a bit set.
/// Subsets order by the numeric value of their bits, which is the canonical
/// order used for every family, table and certificate.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static constexpr Subset single(Element e) { return Subset{std::uint64_t{1} << e}; }
  static constexpr Subset full(std::size_t n) {
    return Subset{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(Element e) const { return (bits_ >> e) & 1U; }
  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr Subset with(Element e) const { return Subset{bits_ | (std::uint64_t{1} << e)}; }
  constexpr Subset without(Element e) const { return Subset{bits_ & ~(std::uint64_t{1} << e)}; }
  constexpr Subset complement(std::size_t n) const { return Subset{~bits_ & full(n).bits_}; }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset{a.bits_ | b.bits_}; }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset{a.bits_ & b.bits_}; }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset{a.bits_ & ~b.bits_}; }
  friend constexpr auto operator<=>(Subset, Subset) = default;

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      f(static_cast<Element>(std::countr_zero(rest)));
    }
  }

  std::vector<Element> elements() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Labels must be non-empty and free of whitespace and commas.
bool is_valid_label(std::string_view label);

/// The finite set X. Index i corresponds to label i.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(Element e) const { return labels_.at(e); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Element> find(std::string_view label) const;
  Subset full() const { return Subset::full(size()); }
  bool owns(Subset a) const { return a.is_subset_of(full()); }

  /// Sorted comma-joined labels, `-` for the empty set.
  std::string format(Subset a) const;
  /// Inverse of format; also accepts `*` for the whole ground set.
  Subset parse_subset(std::string_view text) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Element> index_;
};

}  // namespace linwidth
