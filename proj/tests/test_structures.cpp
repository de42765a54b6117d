#include "fixtures.hpp"
#include "oracles.hpp"

#include "linwidth/error.hpp"
#include "linwidth/structures.hpp"

#include <doctest.h>

#include <random>

using namespace linwidth;
using fixtures::family;
using fixtures::named;

namespace {

bool has_axiom(const CheckReport& r, const std::string& axiom) {
  for (const auto& v : r.violations) {
    if (v.axiom == axiom) return true;
  }
  return false;
}

// Every subset of X is a candidate member; n <= 3 keeps this at 256 families.
void for_each_family(const ConnectivitySystem& s, const std::function<void(const SetFamily&, const oracle::Family&)>& f) {
  std::vector<oracle::Mask> all;
  for (oracle::Mask a = 0; a <= s.full().bits(); ++a) all.push_back(a);
  oracle::for_each_family(all, s.size(), [&](const oracle::Family& m) { f(oracle::to_set_family(m, s.size()), m); });
}

void require_replayable(const ConnectivitySystem& s, const SetFamily& fam, const CheckRequest& request,
                        const CheckReport& report) {
  CHECK(report.passed == report.violations.empty());
  for (const auto& v : report.violations) {
    CAPTURE(v.axiom);
    CHECK(replay_violation(s, fam, request, v));
  }
}

}  // namespace

TEST_SUITE_BEGIN("structures");

TEST_CASE("boolean filters and ultrafilters") {
  const SetFamily f(2, {Subset{0b01}, Subset{0b11}});
  CHECK(check_boolean_family(f, BooleanLevel::filter, false).passed);
  CHECK(check_boolean_family(f, BooleanLevel::ultrafilter, false).passed);
  const auto np = check_boolean_family(f, BooleanLevel::ultrafilter, true);
  CHECK_FALSE(np.passed);
  CHECK(has_axiom(np, "FB5"));

  const SetFamily empty(3, {});
  CHECK(check_boolean_family(empty, BooleanLevel::filter, false).passed);
  CHECK(has_axiom(check_boolean_family(empty, BooleanLevel::ultrafilter, false), "FB4"));
  CHECK(has_axiom(check_boolean_family(SetFamily(2, {Subset{}}), BooleanLevel::filter, false), "FB3"));
}

TEST_CASE("boolean filters never hold a set together with its complement") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << subsets); ++pick) {
      std::vector<Subset> members;
      for (std::uint64_t a = 0; a < subsets; ++a) {
        if ((pick >> a) & 1U) members.emplace_back(a);
      }
      const SetFamily f(n, members);
      if (!check_boolean_family(f, BooleanLevel::filter, false).passed) continue;
      for (Subset a : f) CHECK_FALSE(f.contains(a.complement(n)));
    }
  }
}

TEST_CASE("linear tangle examples") {
  const auto k3 = named("k3");
  CHECK(check_linear_tangle(k3, family(k3, {"-"}), 1).passed);

  const auto p4 = named("p4");
  const auto l = family(p4, {"-", "e1", "e3"});
  CHECK(check_linear_tangle(p4, l, 1, {.l3 = L3Guard::guarded}).passed);
  const auto unguarded = check_linear_tangle(p4, l, 1, {.l3 = L3Guard::unguarded});
  REQUIRE_FALSE(unguarded.passed);
  REQUIRE(unguarded.violations.size() == 1);
  CHECK(unguarded.violations[0].axiom == "L3");
  CHECK(unguarded.violations[0].witness ==
        Witness{fixtures::subset(p4, "e1"), fixtures::subset(p4, "e3"), p4.ground().find("e2")});

  const auto p3 = named("p3");
  const auto bad = check_linear_tangle(p3, family(p3, {"-", "e1"}), 1);
  REQUIRE_FALSE(bad.passed);
  CHECK(bad.violations[0].axiom == "L3");
  CHECK(bad.violations[0].witness == Witness{Subset{}, fixtures::subset(p3, "e1"), p3.ground().find("e2")});
}

TEST_CASE("single filter and ultrafilter examples") {
  const auto k3 = named("k3");
  const auto p3 = named("p3");
  const auto p4 = named("p4");
  CHECK(check_single_filter(k3, family(k3, {"*"}), 1).passed);
  CHECK(has_axiom(check_single_filter(p3, family(p3, {"e1"}), 1), "S1"));
  CHECK(check_single_filter(p3, SetFamily(2, {}), 1).passed);

  CHECK(check_single_ultrafilter(k3, family(k3, {"*"}), 1).passed);
  CHECK(check_single_ultrafilter(p4, family(p4, {"*", "e2,e3", "e1,e2"}), 1).passed);
}

TEST_CASE("p3 admits no single ultrafilter of order 2") {
  const auto p3 = named("p3");
  int passing = 0;
  for_each_family(p3, [&](const SetFamily& f, const oracle::Family&) {
    if (check_single_ultrafilter(p3, f, 1).passed) ++passing;
  });
  CHECK(passing == 0);
}

TEST_CASE("maximal single filter examples") {
  const auto k3 = named("k3");
  const auto p4 = named("p4");
  CHECK(check_maximal_single_filter(k3, family(k3, {"*"}), 1).passed);
  CHECK_FALSE(check_maximal_single_filter(k3, SetFamily(3, {}), 1).passed);
  CHECK(check_maximal_single_filter(p4, family(p4, {"*", "e2,e3", "e1,e2"}), 1).passed);
  const auto not_filter = check_maximal_single_filter(k3, family(k3, {"-"}), 1);
  CHECK_FALSE(not_filter.passed);
  CHECK(not_filter.reason == "NotAFilter");
}

TEST_CASE("single-element deletion") {
  const auto p4 = named("p4");
  const auto s = family(p4, {"*", "e2,e3", "e1,e2"});
  CHECK(single_element_deletion(p4, s, 0, 1) == family(p4, {"e2,e3"}));
  CHECK(single_element_deletion(p4, s, 1, 1).empty());
  CHECK(single_element_deletion(p4, SetFamily(3, {}), 0, 1).empty());
  CHECK_THROWS_AS(single_element_deletion(p4, s, 7, 1), Error);
}

TEST_CASE("single filter closure examples") {
  const auto p3 = named("p3");
  const auto k3 = named("k3");
  CHECK_FALSE(single_filter_closure(p3, family(p3, {"e1"}), 1).has_value());
  CHECK_FALSE(single_filter_closure(p3, family(p3, {"*"}), 1).has_value());
  CHECK(single_filter_closure(k3, family(k3, {"*"}), 1) == family(k3, {"*"}));
  try {
    single_filter_closure(k3, family(k3, {"e1"}), 1);
    FAIL("expected NonEfficientSeed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::non_efficient_seed);
  }
}

TEST_CASE("closure is extensive, monotone and idempotent") {
  std::mt19937_64 rng(17);
  for (const auto& s : fixtures::corpus(5)) {
    for (Value k = 0; k <= max_value(s); ++k) {
      const auto universe = enumerate_k_efficient(s, k).members();
      if (universe.empty()) continue;
      for (auto rule : {DeletionRule::guarded, DeletionRule::unguarded}) {
        for (int trial = 0; trial < 6; ++trial) {
          std::vector<Subset> small, large;
          for (Subset a : universe) {
            const auto r = rng() % 4;
            if (r == 0) small.push_back(a);
            if (r <= 1) large.push_back(a);
          }
          const SetFamily seeds(s.size(), small), bigger(s.size(), large);
          const auto c = single_filter_closure(s, seeds, k, rule);
          const auto d = single_filter_closure(s, bigger, k, rule);
          if (!c) {
            CHECK_FALSE(d.has_value());
            continue;
          }
          CHECK(seeds.is_subfamily_of(*c));
          CHECK(single_filter_closure(s, *c, k, rule) == c);
          if (d) CHECK(c->is_subfamily_of(*d));
          if (rule == DeletionRule::guarded && !c->empty()) CHECK(check_single_filter(s, *c, k).passed);
        }
      }
    }
  }
}

TEST_CASE("matroid-like examples") {
  const auto p3 = named("p3");
  const auto k3 = named("k3");
  const auto m = family(p3, {"-", "e1", "e2"});
  CHECK(check_matroid_like(p3, m, 1, MatroidKind::matroid, true, true, {.m4 = M4Mode::inclusive}).passed);
  CHECK(has_axiom(check_matroid_like(p3, m, 1, MatroidKind::matroid, true, true, {.m4 = M4Mode::exclusive}), "M4"));
  for (auto mode : {M4Mode::exclusive, M4Mode::inclusive}) {
    CHECK(check_matroid_like(k3, family(k3, {"-"}), 1, MatroidKind::matroid, true, true, {.m4 = mode}).passed);
  }
  CHECK(check_matroid_like(k3, family(k3, {"-", "e1", "e2", "e3"}), 2, MatroidKind::matroid, true, true).passed);
}

TEST_CASE("closed set system examples") {
  const auto p3 = named("p3");
  const auto f = family(p3, {"e1"});
  CHECK(check_closed_set_system(p3, f, 1, ClosedSetInterpretation::literal).passed);
  CHECK(has_axiom(check_closed_set_system(p3, f, 1, ClosedSetInterpretation::upward), "C3"));
  for (auto i : {ClosedSetInterpretation::literal, ClosedSetInterpretation::upward}) {
    CHECK(check_closed_set_system(p3, SetFamily(2, {}), 1, i).passed);
  }
}

TEST_CASE("no efficient empty set") {
  const auto shifted = named("shifted-table");
  const auto r = check_linear_tangle(shifted, SetFamily(3, {}), 1);
  CHECK_FALSE(r.passed);
  CHECK(r.reason == "NoEfficientEmptySet");
  CHECK(check_matroid_like(shifted, SetFamily(3, {}), 0, MatroidKind::matroid, false, false).reason ==
        "NoEfficientEmptySet");
}

TEST_CASE("ground set mismatch is rejected") {
  const auto p3 = named("p3");
  CHECK_THROWS_AS(check_linear_tangle(p3, SetFamily(3, {}), 1), Error);
  CHECK_THROWS_AS(check_single_filter(p3, SetFamily(3, {}), 1), Error);
}

TEST_CASE("checkers agree with the definitional oracles on every family for n <= 3") {
  for (const auto& s : fixtures::corpus(3)) {
    CAPTURE(s.name());
    const auto t = fixtures::table_of(s);
    const std::size_t n = s.size();
    for (Value k = 0; k <= max_value(s); ++k) {
      CAPTURE(k);
      for_each_family(s, [&](const SetFamily& fam, const oracle::Family& m) {
        for (auto guard : {L3Guard::guarded, L3Guard::unguarded}) {
          const CheckRequest req{CheckKind::linear_tangle, k, {.l3 = guard}};
          const auto r = run_check(s, fam, req);
          CHECK(r.passed == oracle::is_tangle(t, n, k, m, guard == L3Guard::guarded));
          require_replayable(s, fam, req, r);
        }
        const CheckRequest filter{CheckKind::single_filter, k};
        const auto fr = run_check(s, fam, filter);
        CHECK(fr.passed == oracle::is_single_filter(t, n, k, m));
        require_replayable(s, fam, filter, fr);
        for (bool np : {false, true}) {
          const CheckRequest req{CheckKind::single_ultrafilter, k, {.nonprincipal = np}};
          const auto r = run_check(s, fam, req);
          CHECK(r.passed == oracle::is_single_ultrafilter(t, n, k, m, np));
          require_replayable(s, fam, req, r);
        }
        if (fr.passed) {
          CHECK(check_maximal_single_filter(s, fam, k).passed == oracle::is_maximal_single_filter(t, n, k, m));
        }
        for (auto kind : {CheckKind::matroid, CheckKind::greedoid, CheckKind::antimatroid}) {
          const auto okind = kind == CheckKind::matroid     ? oracle::Kind::matroid
                             : kind == CheckKind::greedoid ? oracle::Kind::greedoid
                                                           : oracle::Kind::antimatroid;
          for (int flags = 0; flags < 8; ++flags) {
            const bool ultra = flags & 1, prime = flags & 2, exclusive = flags & 4;
            CheckRequest req{kind, k, {.m4 = exclusive ? M4Mode::exclusive : M4Mode::inclusive}, ultra, prime};
            const auto r = run_check(s, fam, req);
            CHECK(r.passed == oracle::is_matroid_like(t, n, k, m, okind, ultra, prime, exclusive));
            require_replayable(s, fam, req, r);
          }
        }
      });
    }
  }
}

TEST_CASE("single filters contain no light singleton when every singleton is light") {
  for (const auto& s : fixtures::corpus(3)) {
    for (Value k = s.value(Subset{}); k <= max_value(s); ++k) {
      if (!standing_assumption_holds(s, k)) continue;
      for_each_family(s, [&](const SetFamily& fam, const oracle::Family&) {
        if (!check_single_filter(s, fam, k).passed) return;
        for (Element e = 0; e < s.size(); ++e) CHECK_FALSE(fam.contains(Subset::single(e)));
      });
    }
  }
}

TEST_CASE("the standing assumption is recorded on reports") {
  const auto p4 = named("p4");
  CHECK_FALSE(check_linear_tangle(p4, family(p4, {"-"}), 1).assumption_holds);
  CHECK(check_linear_tangle(p4, family(p4, {"-"}), 2).assumption_holds);
}

TEST_SUITE_END();
