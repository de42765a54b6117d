#include "linwidth/duality.hpp"

#include "linwidth/error.hpp"
#include "linwidth/system_file.hpp"

#include <algorithm>
#include <exception>

namespace linwidth {

std::string_view to_string(Claim claim) {
  switch (claim) {
    case Claim::tangle_duality_guarded: return "tangle-duality-guarded";
    case Claim::tangle_duality_unguarded: return "tangle-duality-unguarded";
    case Claim::tangle_ultrafilter_correspondence: return "tangle-ultrafilter-correspondence";
    case Claim::single_ultrafilter_duality: return "single-ultrafilter-duality";
    case Claim::nonprincipal_ultrafilter_duality: return "nonprincipal-ultrafilter-duality";
    case Claim::prime_ultra_matroid_exclusive: return "prime-ultra-matroid-duality/exclusive";
    case Claim::prime_ultra_matroid_inclusive: return "prime-ultra-matroid-duality/inclusive";
    case Claim::prime_ultra_antimatroid_exclusive: return "prime-ultra-antimatroid-duality/exclusive";
    case Claim::prime_ultra_antimatroid_inclusive: return "prime-ultra-antimatroid-duality/inclusive";
    case Claim::prime_ultra_greedoid_exclusive: return "prime-ultra-greedoid-duality/exclusive";
    case Claim::prime_ultra_greedoid_inclusive: return "prime-ultra-greedoid-duality/inclusive";
    case Claim::ultrafilter_is_maximal_filter: return "ultrafilter-is-maximal-filter";
    case Claim::maximal_filter_is_ultrafilter: return "maximal-filter-is-ultrafilter";
    case Claim::linear_obstacle_duality: return "linear-obstacle-duality";
    case Claim::maximal_single_ideal_duality: return "maximal-single-ideal-duality";
    case Claim::maximal_loose_tangle_duality: return "maximal-loose-tangle-duality";
  }
  return "tangle-duality-guarded";
}

std::optional<Claim> parse_claim(std::string_view text) {
  for (Claim c : kAllClaims) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

std::string_view to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::holds: return "holds";
    case ClaimStatus::violated: return "violated";
    case ClaimStatus::not_applicable: return "not-applicable";
    case ClaimStatus::not_implemented: return "not-implemented";
    case ClaimStatus::not_checked: return "not-checked";
  }
  return "holds";
}

std::string_view to_string(CounterexampleSide side) {
  switch (side) {
    case CounterexampleSide::structure_despite_small_width: return "structure-despite-small-width";
    case CounterexampleSide::no_structure_despite_large_width: return "no-structure-despite-large-width";
    case CounterexampleSide::complement_fails_ultrafilter: return "complement-fails-ultrafilter";
    case CounterexampleSide::complement_fails_tangle: return "complement-fails-tangle";
    case CounterexampleSide::ultrafilter_not_maximal: return "ultrafilter-not-maximal";
    case CounterexampleSide::maximal_not_ultrafilter: return "maximal-not-ultrafilter";
  }
  return "structure-despite-small-width";
}

std::optional<CounterexampleSide> parse_counterexample_side(std::string_view text) {
  for (auto side : {CounterexampleSide::structure_despite_small_width,
                    CounterexampleSide::no_structure_despite_large_width,
                    CounterexampleSide::complement_fails_ultrafilter, CounterexampleSide::complement_fails_tangle,
                    CounterexampleSide::ultrafilter_not_maximal, CounterexampleSide::maximal_not_ultrafilter}) {
    if (to_string(side) == text) return side;
  }
  return std::nullopt;
}

const std::vector<Probe>& sweep_probes() {
  static const std::vector<Probe> probes = [] {
    const VariantConfig guarded{M4Mode::exclusive, L3Guard::guarded, false};
    const VariantConfig unguarded{M4Mode::exclusive, L3Guard::unguarded, false};
    const VariantConfig nonprincipal{M4Mode::exclusive, L3Guard::guarded, true};
    const VariantConfig exclusive{M4Mode::exclusive, L3Guard::guarded, false};
    const VariantConfig inclusive{M4Mode::inclusive, L3Guard::guarded, false};
    return std::vector<Probe>{
        {"linear-tangle/guarded", StructureKind::linear_tangle, guarded},
        {"linear-tangle/unguarded", StructureKind::linear_tangle, unguarded},
        {"single-ultrafilter", StructureKind::single_ultrafilter, guarded},
        {"single-ultrafilter/nonprincipal", StructureKind::single_ultrafilter, nonprincipal},
        {"prime-ultra-matroid/exclusive", StructureKind::prime_ultra_matroid, exclusive},
        {"prime-ultra-matroid/inclusive", StructureKind::prime_ultra_matroid, inclusive},
        {"prime-ultra-antimatroid/exclusive", StructureKind::prime_ultra_antimatroid, exclusive},
        {"prime-ultra-antimatroid/inclusive", StructureKind::prime_ultra_antimatroid, inclusive},
        {"prime-ultra-greedoid/exclusive", StructureKind::prime_ultra_greedoid, exclusive},
        {"prime-ultra-greedoid/inclusive", StructureKind::prime_ultra_greedoid, inclusive},
    };
  }();
  return probes;
}

ClaimStatus DualityRow::status(Claim claim) const {
  for (const auto& [c, s] : consistent) {
    if (c == claim) return s;
  }
  return ClaimStatus::not_checked;
}

bool DualityRow::found(std::string_view probe) const {
  for (const auto& [id, present] : exists) {
    if (id == probe) return present;
  }
  return false;
}

namespace {

// Width claims: "width <= k iff no structure of this probe exists".
struct WidthClaim {
  Claim claim;
  std::size_t probe;
  WidthVariant variant;
  bool needs_assumption;
};

constexpr WidthClaim kWidthClaims[] = {
    {Claim::tangle_duality_guarded, 0, WidthVariant::paper, false},
    {Claim::tangle_duality_unguarded, 1, WidthVariant::prefix_only, false},
    {Claim::single_ultrafilter_duality, 2, WidthVariant::paper, true},
    {Claim::nonprincipal_ultrafilter_duality, 3, WidthVariant::paper, true},
    {Claim::prime_ultra_matroid_exclusive, 4, WidthVariant::paper, false},
    {Claim::prime_ultra_matroid_inclusive, 5, WidthVariant::paper, false},
    {Claim::prime_ultra_antimatroid_exclusive, 6, WidthVariant::paper, false},
    {Claim::prime_ultra_antimatroid_inclusive, 7, WidthVariant::paper, false},
    {Claim::prime_ultra_greedoid_exclusive, 8, WidthVariant::paper, false},
    {Claim::prime_ultra_greedoid_inclusive, 9, WidthVariant::paper, false},
};

const WidthClaim* width_claim(Claim claim) {
  for (const auto& w : kWidthClaims) {
    if (w.claim == claim) return &w;
  }
  return nullptr;
}

constexpr Claim kUnimplemented[] = {Claim::linear_obstacle_duality, Claim::maximal_single_ideal_duality,
                                    Claim::maximal_loose_tangle_duality};

const VariantConfig kGuarded{};

struct RowResult {
  DualityRow row;
  std::vector<Counterexample> counterexamples;
};

class RowBuilder {
 public:
  RowBuilder(const ConnectivitySystem& system, const DualityReport& report, const SweepOptions& options, Value k)
      : system_(system), report_(report), options_(options), k_(k) {}

  RowResult build() {
    auto& row = out_.row;
    row.k = k_;
    row.paper_width_le_k = report_.paper_width.width <= k_;
    row.prefix_width_le_k = report_.prefix_width.width <= k_;
    row.assumption_holds = standing_assumption_holds(system_, k_);
    const auto& probes = sweep_probes();

    const bool empty_efficient = system_.value(Subset{}) <= k_;
    if (!empty_efficient) row.reason = "NoEfficientEmptySet";
    std::vector<std::vector<Certificate>> found;
    for (const auto& p : probes) {
      found.push_back(empty_efficient ? find_structure(system_, p.kind, k_, p.config, 1) : std::vector<Certificate>{});
      row.exists.emplace_back(p.id, !found.back().empty());
    }
    for (const auto& w : kWidthClaims) {
      if (w.needs_assumption && !row.assumption_holds) {
        row.consistent.emplace_back(w.claim, ClaimStatus::not_applicable);
        continue;
      }
      row.consistent.emplace_back(w.claim, adjudicate_width(w, found[w.probe]));
    }
    row.consistent.emplace_back(Claim::tangle_ultrafilter_correspondence,
                                row.assumption_holds ? correspondence() : ClaimStatus::not_applicable);
    const auto [to_maximal, to_ultra] = maximality();
    row.consistent.emplace_back(Claim::ultrafilter_is_maximal_filter, to_maximal);
    row.consistent.emplace_back(Claim::maximal_filter_is_ultrafilter, to_ultra);
    for (Claim c : kUnimplemented) row.consistent.emplace_back(c, ClaimStatus::not_implemented);
    std::stable_sort(row.consistent.begin(), row.consistent.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    return std::move(out_);
  }

 private:
  Counterexample blank(Claim claim, CounterexampleSide side, StructureKind kind, const VariantConfig& config) const {
    Counterexample cex;
    cex.claim = claim;
    cex.side = side;
    cex.k = k_;
    cex.system_name = report_.system_name;
    cex.system_hash = report_.system_hash;
    cex.kind = kind;
    cex.config = config;
    return cex;
  }

  ClaimStatus adjudicate_width(const WidthClaim& w, const std::vector<Certificate>& found) {
    const auto& width = w.variant == WidthVariant::paper ? report_.paper_width : report_.prefix_width;
    const bool small = width.width <= k_;
    if (small == found.empty()) return ClaimStatus::holds;
    const auto& probe = sweep_probes()[w.probe];
    auto cex = blank(w.claim,
                     small ? CounterexampleSide::structure_despite_small_width
                           : CounterexampleSide::no_structure_despite_large_width,
                     probe.kind, probe.config);
    if (small) cex.family = found.front().family;
    cex.width = width;
    out_.counterexamples.push_back(std::move(cex));
    return ClaimStatus::violated;
  }

  ClaimStatus correspondence() {
    const auto tangles = find_structure(system_, StructureKind::linear_tangle, k_, kGuarded, kUnlimited);
    const auto ultras = find_structure(system_, StructureKind::single_ultrafilter, k_, kGuarded, kUnlimited);
    bool holds = true;
    for (const auto& t : tangles) {
      if (!check_single_ultrafilter(system_, complement_family(system_, t.family), k_).passed) {
        auto cex = blank(Claim::tangle_ultrafilter_correspondence, CounterexampleSide::complement_fails_ultrafilter,
                         StructureKind::linear_tangle, kGuarded);
        cex.family = t.family;
        out_.counterexamples.push_back(std::move(cex));
        holds = false;
        break;
      }
    }
    for (const auto& u : ultras) {
      if (!check_linear_tangle(system_, complement_family(system_, u.family), k_).passed) {
        auto cex = blank(Claim::tangle_ultrafilter_correspondence, CounterexampleSide::complement_fails_tangle,
                         StructureKind::single_ultrafilter, kGuarded);
        cex.family = u.family;
        out_.counterexamples.push_back(std::move(cex));
        holds = false;
        break;
      }
    }
    return holds ? ClaimStatus::holds : ClaimStatus::violated;
  }

  // Exhausts every family over the k-efficient universe.
  std::pair<ClaimStatus, ClaimStatus> maximality() {
    if (!out_.row.assumption_holds) return {ClaimStatus::not_applicable, ClaimStatus::not_applicable};
    if (system_.size() > options_.maximality_cap) return {ClaimStatus::not_checked, ClaimStatus::not_checked};
    const auto universe = enumerate_k_efficient(system_, k_).members();
    std::optional<SetFamily> not_maximal, not_ultra;
    const std::uint64_t count = std::uint64_t{1} << universe.size();
    for (std::uint64_t pick = 0; pick < count; ++pick) {
      std::vector<Subset> members;
      for (std::size_t i = 0; i < universe.size(); ++i) {
        if ((pick >> i) & 1U) members.push_back(universe[i]);
      }
      SetFamily family(system_.size(), std::move(members));
      if (!check_single_filter(system_, family, k_).passed) continue;
      const bool ultra = check_single_ultrafilter(system_, family, k_).passed;
      const bool maximal = check_maximal_single_filter(system_, family, k_).passed;
      auto keep_least = [&](std::optional<SetFamily>& slot) {
        if (!slot || family < *slot) slot = family;
      };
      if (ultra && !maximal) keep_least(not_maximal);
      if (maximal && !ultra) keep_least(not_ultra);
    }
    auto record = [&](Claim claim, CounterexampleSide side, std::optional<SetFamily>& witness) {
      if (!witness) return ClaimStatus::holds;
      auto cex = blank(claim, side, StructureKind::single_ultrafilter, kGuarded);
      cex.family = std::move(witness);
      out_.counterexamples.push_back(std::move(cex));
      return ClaimStatus::violated;
    };
    return {record(Claim::ultrafilter_is_maximal_filter, CounterexampleSide::ultrafilter_not_maximal, not_maximal),
            record(Claim::maximal_filter_is_ultrafilter, CounterexampleSide::maximal_not_ultrafilter, not_ultra)};
  }

  const ConnectivitySystem& system_;
  const DualityReport& report_;
  const SweepOptions& options_;
  Value k_;
  RowResult out_;
};

void require_same_system(const ConnectivitySystem& system, const std::string& name) {
  if (name != system.name()) {
    throw Error(ErrorCode::unknown_system,
                "certificate refers to system '" + name + "', but '" + system.name() + "' was supplied");
  }
}

bool family_fits(const ConnectivitySystem& system, const SetFamily& family) {
  return family.ground_size() == system.size() &&
         std::all_of(family.begin(), family.end(), [&](Subset a) { return system.ground().owns(a); });
}

bool passes(const ConnectivitySystem& system, const SetFamily& family, StructureKind kind, Value k,
            const VariantConfig& config) {
  return run_check(system, family, check_request_for(kind, k, config)).passed;
}

}  // namespace

DualityReport duality_sweep(const ConnectivitySystem& system, const SweepOptions& options) {
  require_validated(system);
  require_size_at_most(system, kSearchCap, "duality_sweep");
  DualityReport report;
  report.system_name = system.name();
  report.system_hash = system_hash(system);
  report.paper_width = linear_width(system, WidthVariant::paper, options.exec);
  report.prefix_width = linear_width(system, WidthVariant::prefix_only, options.exec);
  const Value max_k = options.max_k.value_or(max_value(system));

  std::vector<RowResult> results(static_cast<std::size_t>(max_k) + 1);
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(results.size());
#pragma omp parallel for schedule(dynamic) if (options.exec == Exec::parallel)
  for (std::int64_t k = 0; k < count; ++k) {
    try {
      results[static_cast<std::size_t>(k)] = RowBuilder(system, report, options, static_cast<Value>(k)).build();
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& r : results) {
    report.rows.push_back(std::move(r.row));
    for (auto& c : r.counterexamples) report.counterexamples.push_back(std::move(c));
  }
  return report;
}

bool verify_certificate(const ConnectivitySystem& system, const Certificate& certificate) {
  require_same_system(system, certificate.system_name);
  if (certificate.system_hash != system_hash(system) || !family_fits(system, certificate.family)) return false;
  return passes(system, certificate.family, certificate.kind, certificate.k, certificate.config);
}

bool verify_width_certificate(const ConnectivitySystem& system, const WidthCertificate& certificate) {
  if (certificate.ordering.size() != system.size()) return false;
  return width_of_ordering(system, certificate.ordering, certificate.variant) == certificate;
}

bool verify_counterexample(const ConnectivitySystem& system, const Counterexample& cex) {
  require_same_system(system, cex.system_name);
  if (cex.system_hash != system_hash(system)) return false;
  if (cex.family && !family_fits(system, *cex.family)) return false;
  const Value k = cex.k;

  if (const auto* w = width_claim(cex.claim)) {
    const auto& probe = sweep_probes()[w->probe];
    if (cex.kind != probe.kind || !(cex.config == probe.config)) return false;
    if (w->needs_assumption && !standing_assumption_holds(system, k)) return false;
    if (!cex.width || cex.width->variant != w->variant || !verify_width_certificate(system, *cex.width)) return false;
    if (cex.side == CounterexampleSide::structure_despite_small_width) {
      return cex.width->width <= k && cex.family && passes(system, *cex.family, cex.kind, k, cex.config);
    }
    if (cex.side == CounterexampleSide::no_structure_despite_large_width) {
      return !cex.family && cex.width->width > k && linear_width(system, w->variant).width == cex.width->width &&
             find_structure(system, cex.kind, k, cex.config, 1).empty();
    }
    return false;
  }

  if (!cex.family || !standing_assumption_holds(system, k)) return false;
  const SetFamily& family = *cex.family;
  switch (cex.side) {
    case CounterexampleSide::complement_fails_ultrafilter:
      return cex.claim == Claim::tangle_ultrafilter_correspondence && cex.kind == StructureKind::linear_tangle &&
             check_linear_tangle(system, family, k).passed &&
             !check_single_ultrafilter(system, complement_family(system, family), k).passed;
    case CounterexampleSide::complement_fails_tangle:
      return cex.claim == Claim::tangle_ultrafilter_correspondence && cex.kind == StructureKind::single_ultrafilter &&
             check_single_ultrafilter(system, family, k).passed &&
             !check_linear_tangle(system, complement_family(system, family), k).passed;
    case CounterexampleSide::ultrafilter_not_maximal:
      return cex.claim == Claim::ultrafilter_is_maximal_filter && check_single_ultrafilter(system, family, k).passed &&
             !check_maximal_single_filter(system, family, k).passed;
    case CounterexampleSide::maximal_not_ultrafilter:
      return cex.claim == Claim::maximal_filter_is_ultrafilter &&
             check_maximal_single_filter(system, family, k).passed &&
             !check_single_ultrafilter(system, family, k).passed;
    default: return false;
  }
}

}  // namespace linwidth
