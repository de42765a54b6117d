#include "fixtures.hpp"
#include "oracles.hpp"

#include "linwidth/error.hpp"
#include "linwidth/search.hpp"

#include <doctest.h>

#include <algorithm>

using namespace linwidth;
using fixtures::family;
using fixtures::named;

namespace {

std::vector<SetFamily> families_of(const std::vector<Certificate>& certs) {
  std::vector<SetFamily> out;
  for (const auto& c : certs) out.push_back(c.family);
  return out;
}

struct Probe {
  StructureKind kind;
  VariantConfig config;
};

const std::vector<Probe>& probes() {
  static const std::vector<Probe> all = {
      {StructureKind::linear_tangle, {.l3 = L3Guard::guarded}},
      {StructureKind::linear_tangle, {.l3 = L3Guard::unguarded}},
      {StructureKind::single_ultrafilter, {}},
      {StructureKind::single_ultrafilter, {.nonprincipal = true}},
      {StructureKind::prime_ultra_matroid, {.m4 = M4Mode::exclusive}},
      {StructureKind::prime_ultra_matroid, {.m4 = M4Mode::inclusive}},
      {StructureKind::prime_ultra_antimatroid, {.m4 = M4Mode::exclusive}},
      {StructureKind::prime_ultra_antimatroid, {.m4 = M4Mode::inclusive}},
      {StructureKind::prime_ultra_greedoid, {.m4 = M4Mode::exclusive}},
      {StructureKind::prime_ultra_greedoid, {.m4 = M4Mode::inclusive}},
  };
  return all;
}

// Every family over the k-efficient universe that the checker accepts, ascending.
std::vector<SetFamily> brute_force(const ConnectivitySystem& s, const Probe& p, Value k) {
  const auto t = fixtures::table_of(s);
  const auto request = check_request_for(p.kind, k, p.config);
  std::vector<SetFamily> out;
  oracle::for_each_family(oracle::efficient_sets(t, k), s.size(), [&](const oracle::Family& m) {
    const auto fam = oracle::to_set_family(m, s.size());
    if (run_check(s, fam, request).passed) out.push_back(fam);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("search");

TEST_CASE("complement_family") {
  const auto p4 = named("p4");
  CHECK(complement_family(p4, family(p4, {"-", "e1", "e3"})) == family(p4, {"*", "e2,e3", "e1,e2"}));
  CHECK(complement_family(p4, SetFamily(3, {})).empty());
  CHECK_THROWS_AS(complement_family(p4, SetFamily(2, {})), Error);
  for (const auto& s : fixtures::corpus(4)) {
    const auto all = enumerate_k_efficient(s, max_value(s));
    CHECK(complement_family(s, complement_family(s, all)) == all);
  }
}

TEST_CASE("find_structure examples") {
  const auto k3 = named("k3");
  const auto tangles = find_structure(k3, StructureKind::linear_tangle, 1, {}, kUnlimited);
  REQUIRE(tangles.size() == 1);
  CHECK(tangles[0].family == family(k3, {"-"}));
  CHECK(tangles[0].order() == 2);
  CHECK(tangles[0].system_name == "k3");

  CHECK(find_structure(named("p3"), StructureKind::linear_tangle, 1).empty());

  const auto matroids = families_of(find_structure(k3, StructureKind::prime_ultra_matroid, 2, {}, kUnlimited));
  CHECK(std::find(matroids.begin(), matroids.end(), family(k3, {"-", "e1", "e2", "e3"})) != matroids.end());

  const auto p4 = named("p4");
  CHECK(families_of(find_structure(p4, StructureKind::linear_tangle, 1, {.l3 = L3Guard::guarded}, kUnlimited)) ==
        std::vector<SetFamily>{family(p4, {"-", "e1", "e3"})});
  CHECK(find_structure(p4, StructureKind::linear_tangle, 1, {.l3 = L3Guard::unguarded}).empty());

  const auto ultras = find_structure(k3, StructureKind::single_ultrafilter, 1, {}, kUnlimited);
  REQUIRE(ultras.size() == 1);
  CHECK(ultras[0].family == family(k3, {"*"}));
}

TEST_CASE("search agrees with checker-filtered enumeration for n <= 3") {
  for (const auto& s : fixtures::corpus(3)) {
    CAPTURE(s.name());
    for (Value k = 0; k <= max_value(s); ++k) {
      CAPTURE(k);
      for (const auto& p : probes()) {
        CAPTURE(to_string(p.kind));
        CHECK(families_of(find_structure(s, p.kind, k, p.config, kUnlimited)) == brute_force(s, p, k));
      }
    }
  }
}

TEST_CASE("results are canonical, limited and deterministic") {
  for (const auto& s : fixtures::corpus(5)) {
    for (Value k = 0; k <= max_value(s); ++k) {
      for (const auto& p : probes()) {
        const auto all = find_structure(s, p.kind, k, p.config, kUnlimited);
        CHECK(std::is_sorted(all.begin(), all.end(),
                             [](const Certificate& a, const Certificate& b) { return a.family < b.family; }));
        CHECK(find_structure(s, p.kind, k, p.config, kUnlimited) == all);
        const auto first = find_structure(s, p.kind, k, p.config, 1);
        CHECK(first.size() == std::min<std::size_t>(1, all.size()));
        if (!all.empty()) CHECK(first[0] == all[0]);
        for (const auto& c : all) {
          CHECK(run_check(s, c.family, check_request_for(c.kind, c.k, c.config)).passed);
          CHECK(c.system_hash == system_hash(s));
        }
      }
    }
  }
}

TEST_CASE("complement maps guarded tangles onto single ultrafilters for n <= 6") {
  for (const auto& s : fixtures::corpus(6)) {
    CAPTURE(s.name());
    for (Value k = 0; k <= max_value(s); ++k) {
      if (!standing_assumption_holds(s, k)) continue;
      CAPTURE(k);
      const auto tangles = families_of(find_structure(s, StructureKind::linear_tangle, k, {}, kUnlimited));
      const auto ultras = families_of(find_structure(s, StructureKind::single_ultrafilter, k, {}, kUnlimited));
      std::vector<SetFamily> image;
      for (const auto& l : tangles) {
        const auto u = complement_family(s, l);
        CHECK(check_single_ultrafilter(s, u, k).passed);
        image.push_back(u);
      }
      std::sort(image.begin(), image.end());
      CHECK(image == ultras);
    }
  }
}

TEST_CASE("search refuses oversized systems") {
  std::vector<std::string> vs;
  std::vector<GraphLink> links;
  for (int i = 0; i < 11; ++i) vs.push_back("v" + std::to_string(i));
  for (int i = 0; i + 1 < 11; ++i) links.push_back({vs[i], vs[i + 1], 1});
  auto big = ConnectivitySystem::from_vertex_cut("big", vs, links);
  validate_system(big);
  try {
    find_structure(big, StructureKind::linear_tangle, 1);
    FAIL("expected SizeLimitExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::size_limit_exceeded);
  }
}

TEST_CASE("structure kind names round-trip") {
  for (auto kind : {StructureKind::linear_tangle, StructureKind::single_ultrafilter, StructureKind::prime_ultra_matroid,
                    StructureKind::prime_ultra_antimatroid, StructureKind::prime_ultra_greedoid}) {
    CHECK(parse_structure_kind(to_string(kind)) == kind);
  }
  CHECK(parse_structure_kind("tangle") == StructureKind::linear_tangle);
  CHECK_FALSE(parse_structure_kind("hypergraph").has_value());
}

TEST_SUITE_END();
