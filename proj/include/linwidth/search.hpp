#pragma once

#include "linwidth/structures.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace linwidth {

enum class StructureKind {
  linear_tangle,
  single_ultrafilter,
  prime_ultra_matroid,
  prime_ultra_antimatroid,
  prime_ultra_greedoid,
};

std::string_view to_string(StructureKind kind);
std::optional<StructureKind> parse_structure_kind(std::string_view text);

/// A found obstruction of order k+1, replayable through its checker.
struct Certificate {
  StructureKind kind = StructureKind::linear_tangle;
  Value k = 0;
  SetFamily family;
  VariantConfig config;
  std::string system_name;
  std::uint64_t system_hash = 0;

  Value order() const { return k + 1; }
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

/// The checker request that judges families of the given kind.
CheckRequest check_request_for(StructureKind kind, Value k, const VariantConfig& config);

/// {X\A : A in family}.
SetFamily complement_family(const ConnectivitySystem& system, const SetFamily& family);

/// Every family of the given kind and order k+1, in canonical order, up to
/// `limit`. An empty result means none exists. Families are built from the
/// k-efficient universe by orienting complement pairs with unit propagation
/// over the binary axioms; exchange and accessibility axioms prune on the fly
/// and are re-checked at the leaves.
std::vector<Certificate> find_structure(const ConnectivitySystem& system, StructureKind kind, Value k,
                                        const VariantConfig& config = {}, std::size_t limit = 1);

}  // namespace linwidth
