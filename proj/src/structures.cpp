#include "linwidth/structures.hpp"

#include "linwidth/error.hpp"

#include <algorithm>
#include <deque>

namespace linwidth {

std::string_view to_string(M4Mode mode) { return mode == M4Mode::exclusive ? "exclusive" : "inclusive"; }
std::string_view to_string(L3Guard guard) { return guard == L3Guard::guarded ? "guarded" : "unguarded"; }
std::string_view to_string(ClosedSetInterpretation interpretation) {
  return interpretation == ClosedSetInterpretation::literal ? "literal" : "upward";
}
std::string_view to_string(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::matroid: return "matroid";
    case MatroidKind::greedoid: return "greedoid";
    case MatroidKind::antimatroid: return "antimatroid";
  }
  return "matroid";
}

namespace {

constexpr std::size_t kBooleanCap = 16;
constexpr const char* kNoEfficientEmptySet = "NoEfficientEmptySet";

// Membership lookups and f-evaluations shared by every axiom instance.
class Axioms {
 public:
  Axioms(const ConnectivitySystem* system, const SetFamily& family, Value k)
      : system_(system), family_(family), k_(k), n_(family.ground_size()), full_(Subset::full(n_)) {
    if (n_ <= kDenseCap) {
      dense_.assign(std::size_t{1} << n_, 0);
      for (Subset a : family) dense_[a.bits()] = 1;
    }
  }

  std::size_t n() const { return n_; }
  Subset full() const { return full_; }
  Value k() const { return k_; }
  const SetFamily& family() const { return family_; }

  bool in(Subset a) const { return dense_.empty() ? family_.contains(a) : dense_[a.bits()] != 0; }
  Value f(Subset a) const { return system_->value(a); }
  bool efficient(Subset a) const { return f(a) <= k_; }
  bool light(Element e) const { return f(Subset::single(e)) <= k_; }
  Subset comp(Subset a) const { return a.complement(n_); }

  // Boolean filter axioms.
  bool fb1(Subset a, Subset b) const { return !(in(a) && in(b)) || in(a & b); }
  bool fb2(Subset a, Subset b) const { return !(in(a) && a.is_subset_of(b)) || in(b); }
  bool fb3() const { return !in(Subset{}); }
  bool fb4(Subset a) const { return in(a) || in(comp(a)); }
  bool fb5(Subset a) const { return !(a.size() == 1 && in(a)); }

  // Every member must be k-efficient (L0/S0/M0).
  bool efficient_member(Subset a) const { return !in(a) || efficient(a); }
  bool contains_empty() const { return in(Subset{}); }

  bool l2(Subset a) const { return !efficient(a) || (in(a) != in(comp(a))); }
  bool l3(Subset a, Subset b, Element e, L3Guard guard) const {
    if (!(in(a) && in(b))) return true;
    if (guard == L3Guard::guarded && !light(e)) return true;
    return (a | b).with(e) != full_;
  }

  bool s1(Subset a, Element e, DeletionRule rule = DeletionRule::guarded) const {
    if (!in(a)) return true;
    if (rule == DeletionRule::guarded && !light(e)) return true;
    const Subset smaller = a.without(e);
    return !efficient(smaller) || in(smaller);
  }
  bool s2(Subset a, Subset b) const {
    if (!(in(a) && a.is_subset_of(b) && a != b)) return true;
    return !efficient(b) || in(b);
  }
  bool s4(Subset a) const { return !efficient(a) || in(a) || in(comp(a)); }
  bool f5(Subset a) const { return !(a.size() == 1 && efficient(a) && in(a)); }

  bool m2(Subset a, Subset b) const { return !(in(a) && b.is_subset_of(a) && efficient(b)) || in(b); }
  bool m3(Subset a, Subset b) const {
    if (!(in(a) && in(b) && a.size() < b.size())) return true;
    bool found = false;
    (b - a).for_each([&](Element e) {
      if (!found && light(e) && efficient(a.with(e)) && in(a.with(e))) found = true;
    });
    return found;
  }
  bool am2(Subset a) const {
    if (!(in(a) && !a.empty())) return true;
    bool found = false;
    a.for_each([&](Element e) {
      if (!found && light(e) && efficient(a.without(e)) && in(a.without(e))) found = true;
    });
    return found;
  }
  bool m4(Subset a, M4Mode mode) const {
    if (!efficient(a)) return true;
    return mode == M4Mode::exclusive ? in(a) != in(comp(a)) : (in(a) || in(comp(a)));
  }
  bool m5(Subset a) const { return !(a.size() == 1 && efficient(a)) || in(a); }

  bool c2(Subset a, Subset b) const { return !(in(a) && in(b) && efficient(a & b)) || in(a & b); }
  bool c3(Subset a, Subset b, ClosedSetInterpretation interpretation) const {
    if (!a.is_subset_of(b) || !efficient(b)) return true;
    if (interpretation == ClosedSetInterpretation::literal) {
      return !(efficient(a) && in(a | b)) || in(b);
    }
    return !in(a) || in(b);
  }

 private:
  const ConnectivitySystem* system_;
  const SetFamily& family_;
  Value k_;
  std::size_t n_;
  Subset full_;
  std::vector<std::uint8_t> dense_;
};

Violation at(std::string axiom, std::optional<Subset> a = std::nullopt, std::optional<Subset> b = std::nullopt,
             std::optional<Element> e = std::nullopt) {
  return Violation{std::move(axiom), Witness{a, b, e}, {}};
}

void require_matching(const ConnectivitySystem& system, const SetFamily& family) {
  require_validated(system);
  if (family.ground_size() != system.size() ||
      std::any_of(family.begin(), family.end(), [&](Subset a) { return !system.ground().owns(a); })) {
    throw Error(ErrorCode::ground_set_mismatch, "family is not over the ground set of '" + system.name() + "'");
  }
  require_size_at_most(system, kEnumerateCap, "structure checks");
}

template <class F>
void for_each_subset(std::size_t n, F&& f) {
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t a = 0; a < count; ++a) f(Subset{a});
}

// Strict supersets of a inside the ground set, ascending.
template <class F>
void for_each_strict_superset(Subset a, Subset full, F&& f) {
  const std::uint64_t room = (full - a).bits();
  std::vector<std::uint64_t> extras;
  for (std::uint64_t t = room; t != 0; t = (t - 1) & room) extras.push_back(t);
  for (auto it = extras.rbegin(); it != extras.rend(); ++it) f(Subset{a.bits() | *it});
}

// All subsets of a (a included), ascending.
template <class F>
void for_each_subset_of(Subset a, F&& f) {
  std::vector<std::uint64_t> subs;
  for (std::uint64_t t = a.bits();; t = (t - 1) & a.bits()) {
    subs.push_back(t);
    if (t == 0) break;
  }
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) f(Subset{*it});
}

// Each complement pair {a, X\a} once, represented by its smaller member.
template <class F>
void for_each_pair(std::size_t n, F&& f) {
  for_each_subset(n, [&](Subset a) {
    if (a < a.complement(n)) f(a);
  });
}

void check_efficient_members(const Axioms& ax, const char* axiom, CheckReport& report) {
  for (Subset a : ax.family()) {
    if (!ax.efficient_member(a)) report.add(at(axiom, a));
  }
}

void check_contains_empty(const Axioms& ax, const char* axiom, CheckReport& report) {
  if (ax.contains_empty()) return;
  Violation v = at(axiom);
  if (!ax.efficient(Subset{})) {
    v.reason = kNoEfficientEmptySet;
    report.reason = kNoEfficientEmptySet;
  }
  report.add(std::move(v));
}

void check_filter_axioms(const Axioms& ax, CheckReport& report) {
  check_efficient_members(ax, "S0", report);
  for (Subset a : ax.family()) {
    a.for_each([&](Element e) {
      if (!ax.s1(a, e)) report.add(at("S1", a, std::nullopt, e));
    });
    for_each_strict_superset(a, ax.full(), [&](Subset b) {
      if (!ax.s2(a, b)) report.add(at("S2", a, b));
    });
  }
  if (!ax.fb3()) report.add(at("F3", Subset{}));
}

CheckReport start_report(const ConnectivitySystem& system, Value k) {
  CheckReport report;
  report.assumption_holds = standing_assumption_holds(system, k);
  return report;
}

}  // namespace

bool standing_assumption_holds(const ConnectivitySystem& system, Value k) {
  for (Element e = 0; e < system.size(); ++e) {
    if (system.singleton_value(e) > k) return false;
  }
  return true;
}

CheckReport check_boolean_family(const SetFamily& family, BooleanLevel level, bool nonprincipal) {
  if (family.ground_size() > kBooleanCap) {
    throw Error(ErrorCode::size_limit_exceeded, "boolean family checks support at most 16 elements");
  }
  Axioms ax(nullptr, family, 0);
  CheckReport report;
  const auto& members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i; j < members.size(); ++j) {
      if (!ax.fb1(members[i], members[j])) report.add(at("FB1", members[i], members[j]));
    }
    for_each_strict_superset(members[i], ax.full(), [&](Subset b) {
      if (!ax.fb2(members[i], b)) report.add(at("FB2", members[i], b));
    });
  }
  if (!ax.fb3()) report.add(at("FB3", Subset{}));
  if (level == BooleanLevel::ultrafilter) {
    for_each_subset(ax.n(), [&](Subset a) {
      if (!ax.fb4(a)) report.add(at("FB4", a));
    });
  }
  if (nonprincipal) {
    for (Subset a : members) {
      if (!ax.fb5(a)) report.add(at("FB5", a));
    }
  }
  return report;
}

CheckReport check_linear_tangle(const ConnectivitySystem& system, const SetFamily& family, Value k,
                                const VariantConfig& config) {
  require_matching(system, family);
  Axioms ax(&system, family, k);
  CheckReport report = start_report(system, k);
  check_efficient_members(ax, "L0", report);
  check_contains_empty(ax, "L1", report);
  for_each_pair(ax.n(), [&](Subset a) {
    if (!ax.l2(a)) report.add(at("L2", a));
  });
  const auto& members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i; j < members.size(); ++j) {
      const Subset missing = ax.full() - (members[i] | members[j]);
      if (missing.size() > 1) continue;
      // Either the union is X (any qualifying e) or exactly one element is missing.
      std::optional<Element> witness;
      for (Element e = 0; e < ax.n() && !witness; ++e) {
        if ((missing.empty() || missing.contains(e)) && !ax.l3(members[i], members[j], e, config.l3)) witness = e;
      }
      if (witness) report.add(at("L3", members[i], members[j], witness));
    }
  }
  return report;
}

CheckReport check_single_filter(const ConnectivitySystem& system, const SetFamily& family, Value k) {
  require_matching(system, family);
  Axioms ax(&system, family, k);
  CheckReport report = start_report(system, k);
  check_filter_axioms(ax, report);
  return report;
}

CheckReport check_single_ultrafilter(const ConnectivitySystem& system, const SetFamily& family, Value k,
                                     bool nonprincipal) {
  require_matching(system, family);
  Axioms ax(&system, family, k);
  CheckReport report = start_report(system, k);
  check_filter_axioms(ax, report);
  for_each_pair(ax.n(), [&](Subset a) {
    if (!ax.s4(a)) report.add(at("S4", a));
  });
  if (nonprincipal) {
    for (Subset a : family) {
      if (!ax.f5(a)) report.add(at("F5", a));
    }
  }
  return report;
}

std::optional<SetFamily> single_filter_closure(const ConnectivitySystem& system, const SetFamily& seeds, Value k,
                                               DeletionRule rule) {
  require_matching(system, seeds);
  const std::size_t n = system.size();
  const Subset full = system.full();
  for (Subset a : seeds) {
    if (system.value(a) > k) {
      throw Error(ErrorCode::non_efficient_seed, "seed " + system.ground().format(a) + " is not k-efficient");
    }
  }
  std::vector<std::uint8_t> member(std::size_t{1} << n, 0);
  std::deque<Subset> work;
  bool forced_empty = false;
  auto add = [&](Subset a) {
    if (member[a.bits()]) return;
    if (a.empty()) forced_empty = true;
    member[a.bits()] = 1;
    work.push_back(a);
  };
  for (Subset a : seeds) add(a);
  while (!work.empty() && !forced_empty) {
    const Subset a = work.front();
    work.pop_front();
    a.for_each([&](Element e) {
      if (rule == DeletionRule::guarded && system.singleton_value(e) > k) return;
      if (system.value(a.without(e)) <= k) add(a.without(e));
    });
    for_each_strict_superset(a, full, [&](Subset b) {
      if (system.value(b) <= k) add(b);
    });
  }
  if (forced_empty) return std::nullopt;
  std::vector<Subset> out;
  for (std::uint64_t a = 0; a < member.size(); ++a) {
    if (member[a]) out.emplace_back(a);
  }
  return SetFamily(n, std::move(out));
}

namespace {

bool extends_to_larger_filter(const ConnectivitySystem& system, const SetFamily& family, Subset extra, Value k) {
  std::vector<Subset> seeds = family.members();
  seeds.push_back(extra);
  return single_filter_closure(system, SetFamily(system.size(), std::move(seeds)), k).has_value();
}

}  // namespace

CheckReport check_maximal_single_filter(const ConnectivitySystem& system, const SetFamily& family, Value k) {
  CheckReport report = check_single_filter(system, family, k);
  if (!report.passed) {
    report.reason = "NotAFilter";
    return report;
  }
  for_each_subset(system.size(), [&](Subset b) {
    if (system.value(b) <= k && !family.contains(b) && extends_to_larger_filter(system, family, b, k)) {
      report.add(at("maximality", std::nullopt, b));
    }
  });
  return report;
}

SetFamily single_element_deletion(const ConnectivitySystem& system, const SetFamily& family, Element e, Value k) {
  if (e >= system.size()) {
    throw Error(ErrorCode::unknown_element, "element index " + std::to_string(e) + " is outside the ground set");
  }
  require_matching(system, family);
  std::vector<Subset> out;
  if (system.singleton_value(e) <= k) {
    for (Subset a : family) {
      if (system.value(a.without(e)) <= k) out.push_back(a.without(e));
    }
  }
  return SetFamily(system.size(), std::move(out));
}

CheckReport check_matroid_like(const ConnectivitySystem& system, const SetFamily& family, Value k, MatroidKind kind,
                               bool ultra, bool prime, const VariantConfig& config) {
  require_matching(system, family);
  Axioms ax(&system, family, k);
  CheckReport report = start_report(system, k);
  check_efficient_members(ax, "M0", report);
  check_contains_empty(ax, "M1", report);
  const auto& members = family.members();
  if (kind == MatroidKind::matroid) {
    for (Subset a : members) {
      for_each_subset_of(a, [&](Subset b) {
        if (!ax.m2(a, b)) report.add(at("M2", a, b));
      });
    }
  }
  for (Subset a : members) {
    for (Subset b : members) {
      if (!ax.m3(a, b)) report.add(at("M3", a, b));
    }
  }
  if (kind == MatroidKind::antimatroid) {
    for (Subset a : members) {
      if (!ax.am2(a)) report.add(at("AM2", a));
    }
  }
  if (ultra) {
    for_each_pair(ax.n(), [&](Subset a) {
      if (!ax.m4(a, config.m4)) report.add(at("M4", a));
    });
  }
  if (prime) {
    for (Element e = 0; e < ax.n(); ++e) {
      if (!ax.m5(Subset::single(e))) report.add(at("M5", Subset::single(e)));
    }
  }
  return report;
}

CheckReport check_closed_set_system(const ConnectivitySystem& system, const SetFamily& family, Value k,
                                    ClosedSetInterpretation interpretation) {
  require_matching(system, family);
  Axioms ax(&system, family, k);
  CheckReport report = start_report(system, k);
  if (!ax.fb3()) report.add(at("C1", Subset{}));
  const auto& members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i; j < members.size(); ++j) {
      if (!ax.c2(members[i], members[j])) report.add(at("C2", members[i], members[j]));
    }
  }
  for (Subset m : members) {
    if (interpretation == ClosedSetInterpretation::literal) {
      // A u B = B, so only members B can satisfy the premise.
      for_each_subset_of(m, [&](Subset a) {
        if (!ax.c3(a, m, interpretation)) report.add(at("C3", a, m));
      });
    } else {
      for_each_strict_superset(m, ax.full(), [&](Subset b) {
        if (!ax.c3(m, b, interpretation)) report.add(at("C3", m, b));
      });
    }
  }
  return report;
}

std::string_view to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::boolean_filter: return "boolean-filter";
    case CheckKind::boolean_ultrafilter: return "boolean-ultrafilter";
    case CheckKind::linear_tangle: return "tangle";
    case CheckKind::single_filter: return "single-filter";
    case CheckKind::single_ultrafilter: return "single-ultrafilter";
    case CheckKind::maximal_single_filter: return "maximal-single-filter";
    case CheckKind::matroid: return "matroid";
    case CheckKind::greedoid: return "greedoid";
    case CheckKind::antimatroid: return "antimatroid";
    case CheckKind::closed_set_system: return "closed-set-system";
  }
  return "tangle";
}

std::optional<CheckKind> parse_check_kind(std::string_view text) {
  for (auto kind : {CheckKind::boolean_filter, CheckKind::boolean_ultrafilter, CheckKind::linear_tangle,
                    CheckKind::single_filter, CheckKind::single_ultrafilter, CheckKind::maximal_single_filter,
                    CheckKind::matroid, CheckKind::greedoid, CheckKind::antimatroid, CheckKind::closed_set_system}) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

namespace {

MatroidKind matroid_kind_of(CheckKind kind) {
  if (kind == CheckKind::greedoid) return MatroidKind::greedoid;
  if (kind == CheckKind::antimatroid) return MatroidKind::antimatroid;
  return MatroidKind::matroid;
}

}  // namespace

CheckReport run_check(const ConnectivitySystem& system, const SetFamily& family, const CheckRequest& request) {
  switch (request.kind) {
    case CheckKind::boolean_filter:
      return check_boolean_family(family, BooleanLevel::filter, request.config.nonprincipal);
    case CheckKind::boolean_ultrafilter:
      return check_boolean_family(family, BooleanLevel::ultrafilter, request.config.nonprincipal);
    case CheckKind::linear_tangle: return check_linear_tangle(system, family, request.k, request.config);
    case CheckKind::single_filter: return check_single_filter(system, family, request.k);
    case CheckKind::single_ultrafilter:
      return check_single_ultrafilter(system, family, request.k, request.config.nonprincipal);
    case CheckKind::maximal_single_filter: return check_maximal_single_filter(system, family, request.k);
    case CheckKind::matroid:
    case CheckKind::greedoid:
    case CheckKind::antimatroid:
      return check_matroid_like(system, family, request.k, matroid_kind_of(request.kind), request.ultra,
                                request.prime, request.config);
    case CheckKind::closed_set_system:
      return check_closed_set_system(system, family, request.k, request.interpretation);
  }
  return {};
}

bool replay_violation(const ConnectivitySystem& system, const SetFamily& family, const CheckRequest& request,
                      const Violation& violation) {
  const bool boolean =
      request.kind == CheckKind::boolean_filter || request.kind == CheckKind::boolean_ultrafilter;
  if (!boolean) require_matching(system, family);
  Axioms ax(boolean ? nullptr : &system, family, request.k);
  const auto& w = violation.witness;
  const std::string& id = violation.axiom;
  auto need = [&](bool present) {
    if (!present) throw Error(ErrorCode::malformed_certificate, "violation " + id + " lacks a witness field");
  };
  if (id == "FB1") {
    need(w.a && w.b);
    return !ax.fb1(*w.a, *w.b);
  }
  if (id == "FB2") {
    need(w.a && w.b);
    return !ax.fb2(*w.a, *w.b);
  }
  if (id == "FB3" || id == "F3" || id == "C1") return !ax.fb3();
  if (id == "FB4") {
    need(w.a.has_value());
    return !ax.fb4(*w.a);
  }
  if (id == "FB5") {
    need(w.a.has_value());
    return !ax.fb5(*w.a);
  }
  if (id == "L0" || id == "S0" || id == "M0") {
    need(w.a.has_value());
    return !ax.efficient_member(*w.a);
  }
  if (id == "L1" || id == "M1") return !ax.contains_empty();
  if (id == "L2") {
    need(w.a.has_value());
    return !ax.l2(*w.a);
  }
  if (id == "L3") {
    need(w.a && w.b && w.e);
    return !ax.l3(*w.a, *w.b, *w.e, request.config.l3);
  }
  if (id == "S1") {
    need(w.a && w.e);
    return !ax.s1(*w.a, *w.e);
  }
  if (id == "S2") {
    need(w.a && w.b);
    return !ax.s2(*w.a, *w.b);
  }
  if (id == "S4") {
    need(w.a.has_value());
    return !ax.s4(*w.a);
  }
  if (id == "F5") {
    need(w.a.has_value());
    return !ax.f5(*w.a);
  }
  if (id == "M2") {
    need(w.a && w.b);
    return !ax.m2(*w.a, *w.b);
  }
  if (id == "M3") {
    need(w.a && w.b);
    return !ax.m3(*w.a, *w.b);
  }
  if (id == "AM2") {
    need(w.a.has_value());
    return !ax.am2(*w.a);
  }
  if (id == "M4") {
    need(w.a.has_value());
    return !ax.m4(*w.a, request.config.m4);
  }
  if (id == "M5") {
    need(w.a.has_value());
    return !ax.m5(*w.a);
  }
  if (id == "C2") {
    need(w.a && w.b);
    return !ax.c2(*w.a, *w.b);
  }
  if (id == "C3") {
    need(w.a && w.b);
    return !ax.c3(*w.a, *w.b, request.interpretation);
  }
  if (id == "maximality") {
    need(w.b.has_value());
    return ax.efficient(*w.b) && !family.contains(*w.b) && extends_to_larger_filter(system, family, *w.b, request.k);
  }
  throw Error(ErrorCode::malformed_certificate, "unknown axiom '" + id + "'");
}

}  // namespace linwidth
