#pragma once

#include "linwidth/decomposition.hpp"
#include "linwidth/search.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace linwidth {

// Claims adjudicated per order. The matroid-like claims are split by M4 mode.
enum class Claim {
  tangle_duality_guarded,
  tangle_duality_unguarded,
  tangle_ultrafilter_correspondence,
  single_ultrafilter_duality,
  nonprincipal_ultrafilter_duality,
  prime_ultra_matroid_exclusive,
  prime_ultra_matroid_inclusive,
  prime_ultra_antimatroid_exclusive,
  prime_ultra_antimatroid_inclusive,
  prime_ultra_greedoid_exclusive,
  prime_ultra_greedoid_inclusive,
  ultrafilter_is_maximal_filter,
  maximal_filter_is_ultrafilter,
  linear_obstacle_duality,
  maximal_single_ideal_duality,
  maximal_loose_tangle_duality,
};

inline constexpr Claim kAllClaims[] = {
    Claim::tangle_duality_guarded,           Claim::tangle_duality_unguarded,
    Claim::tangle_ultrafilter_correspondence, Claim::single_ultrafilter_duality,
    Claim::nonprincipal_ultrafilter_duality, Claim::prime_ultra_matroid_exclusive,
    Claim::prime_ultra_matroid_inclusive,    Claim::prime_ultra_antimatroid_exclusive,
    Claim::prime_ultra_antimatroid_inclusive, Claim::prime_ultra_greedoid_exclusive,
    Claim::prime_ultra_greedoid_inclusive,   Claim::ultrafilter_is_maximal_filter,
    Claim::maximal_filter_is_ultrafilter,    Claim::linear_obstacle_duality,
    Claim::maximal_single_ideal_duality,     Claim::maximal_loose_tangle_duality,
};

std::string_view to_string(Claim claim);
std::optional<Claim> parse_claim(std::string_view text);

enum class ClaimStatus { holds, violated, not_applicable, not_implemented, not_checked };
std::string_view to_string(ClaimStatus status);

// One structure search per row: the kind plus the configuration it ran under.
struct Probe {
  std::string id;
  StructureKind kind;
  VariantConfig config;
};

/// The searches run on every row, in report order.
const std::vector<Probe>& sweep_probes();

struct DualityRow {
  Value k = 0;
  bool paper_width_le_k = false;
  bool prefix_width_le_k = false;
  // Parallel to sweep_probes().
  std::vector<std::pair<std::string, bool>> exists;
  bool assumption_holds = false;
  // Empty, or NoEfficientEmptySet when f(empty) > k.
  std::string reason;
  std::vector<std::pair<Claim, ClaimStatus>> consistent;

  ClaimStatus status(Claim claim) const;
  bool found(std::string_view probe) const;
};

enum class CounterexampleSide {
  // A structure exists although the width is at most k.
  structure_despite_small_width,
  // No structure exists although the width exceeds k.
  no_structure_despite_large_width,
  complement_fails_ultrafilter,
  complement_fails_tangle,
  ultrafilter_not_maximal,
  maximal_not_ultrafilter,
};

std::string_view to_string(CounterexampleSide side);
std::optional<CounterexampleSide> parse_counterexample_side(std::string_view text);

/// Replayable evidence that a claim fails at order k+1. `family` is present
/// for every side except no_structure_despite_large_width; `width` is present
/// for the two width sides.
struct Counterexample {
  Claim claim = Claim::tangle_duality_guarded;
  CounterexampleSide side = CounterexampleSide::structure_despite_small_width;
  Value k = 0;
  std::string system_name;
  std::uint64_t system_hash = 0;
  StructureKind kind = StructureKind::linear_tangle;
  VariantConfig config;
  std::optional<SetFamily> family;
  std::optional<WidthCertificate> width;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct SweepOptions {
  // Defaults to the largest value of f.
  std::optional<Value> max_k;
  // Exhaustive ultrafilter/maximal-filter comparison, run only up to this
  // ground-set size.
  std::size_t maximality_cap = 4;
  Exec exec = Exec::parallel;
};

struct DualityReport {
  std::string system_name;
  std::uint64_t system_hash = 0;
  WidthCertificate paper_width;
  WidthCertificate prefix_width;
  std::vector<DualityRow> rows;
  std::vector<Counterexample> counterexamples;

  bool consistent() const { return counterexamples.empty(); }
};

DualityReport duality_sweep(const ConnectivitySystem& system, const SweepOptions& options = {});

/// Certificates and counterexamples name their system; replaying against a
/// differently named system throws UnknownSystem. A hash mismatch (the
/// system file changed) or any failed re-check yields false.
bool verify_certificate(const ConnectivitySystem& system, const Certificate& certificate);
bool verify_width_certificate(const ConnectivitySystem& system, const WidthCertificate& certificate);
bool verify_counterexample(const ConnectivitySystem& system, const Counterexample& counterexample);

}  // namespace linwidth
