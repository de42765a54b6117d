#pragma once

#include "linwidth/family.hpp"
#include "linwidth/system.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace linwidth {

// Orientation axiom for ultra families: exactly one of A, X\A (exclusive) or
// at least one (inclusive).
enum class M4Mode { exclusive, inclusive };
// Tangle crossing axiom: guarded only quantifies over e with f({e}) <= k.
enum class L3Guard { guarded, unguarded };

struct VariantConfig {
  M4Mode m4 = M4Mode::exclusive;
  L3Guard l3 = L3Guard::guarded;
  bool nonprincipal = false;

  friend bool operator==(const VariantConfig&, const VariantConfig&) = default;
};

enum class BooleanLevel { filter, ultrafilter };
enum class MatroidKind { matroid, greedoid, antimatroid };
enum class ClosedSetInterpretation { literal, upward };
// S1 only deletes light elements; SD1 drops that guard.
enum class DeletionRule { guarded, unguarded };

std::string_view to_string(M4Mode mode);
std::string_view to_string(L3Guard guard);
std::string_view to_string(MatroidKind kind);
std::string_view to_string(ClosedSetInterpretation interpretation);

struct Witness {
  std::optional<Subset> a;
  std::optional<Subset> b;
  std::optional<Element> e;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Violation {
  std::string axiom;
  Witness witness;
  std::string reason;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CheckReport {
  bool passed = true;
  std::vector<Violation> violations;
  // f({e}) <= k for every element.
  bool assumption_holds = false;
  std::string reason;

  void add(Violation v) {
    passed = false;
    violations.push_back(std::move(v));
  }
};

bool standing_assumption_holds(const ConnectivitySystem& system, Value k);

CheckReport check_boolean_family(const SetFamily& family, BooleanLevel level, bool nonprincipal);

CheckReport check_linear_tangle(const ConnectivitySystem& system, const SetFamily& family, Value k,
                                const VariantConfig& config = {});

CheckReport check_single_filter(const ConnectivitySystem& system, const SetFamily& family, Value k);

CheckReport check_single_ultrafilter(const ConnectivitySystem& system, const SetFamily& family, Value k,
                                     bool nonprincipal = false);

/// Passes iff the family is a single filter and no strictly larger single
/// filter contains it.
CheckReport check_maximal_single_filter(const ConnectivitySystem& system, const SetFamily& family, Value k);

/// {A\{e} : A in S, f(A\{e}) <= k}, or empty when f({e}) > k.
SetFamily single_element_deletion(const ConnectivitySystem& system, const SetFamily& family, Element e, Value k);

/// Least family containing the seeds and closed under single-element deletion
/// and k-efficient supersets. nullopt when the empty set is forced.
std::optional<SetFamily> single_filter_closure(const ConnectivitySystem& system, const SetFamily& seeds, Value k,
                                               DeletionRule rule = DeletionRule::guarded);

CheckReport check_matroid_like(const ConnectivitySystem& system, const SetFamily& family, Value k, MatroidKind kind,
                               bool ultra, bool prime, const VariantConfig& config = {});

CheckReport check_closed_set_system(const ConnectivitySystem& system, const SetFamily& family, Value k,
                                    ClosedSetInterpretation interpretation);

enum class CheckKind {
  boolean_filter,
  boolean_ultrafilter,
  linear_tangle,
  single_filter,
  single_ultrafilter,
  maximal_single_filter,
  matroid,
  greedoid,
  antimatroid,
  closed_set_system,
};

std::string_view to_string(CheckKind kind);
std::optional<CheckKind> parse_check_kind(std::string_view text);

struct CheckRequest {
  CheckKind kind = CheckKind::linear_tangle;
  Value k = 0;
  VariantConfig config;
  bool ultra = false;
  bool prime = false;
  ClosedSetInterpretation interpretation = ClosedSetInterpretation::literal;
};

CheckReport run_check(const ConnectivitySystem& system, const SetFamily& family, const CheckRequest& request);

/// Re-evaluates the single axiom instance named by `violation`; true iff it
/// still fails.
bool replay_violation(const ConnectivitySystem& system, const SetFamily& family, const CheckRequest& request,
                      const Violation& violation);

}  // namespace linwidth
