#include "kernels_common.hpp"

#include <omp.h>

#include <cstdint>

namespace linwidth::kernels::parallel {

std::vector<Value> edge_boundary_table(std::span<const std::uint64_t> incidence, std::size_t n) {
  const std::int64_t count = std::int64_t{1} << n;
  const std::uint64_t full = Subset::full(n).bits();
  std::vector<Value> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (std::int64_t a = 0; a < count; ++a) {
    out[a] = detail::edge_boundary_value(incidence, static_cast<std::uint64_t>(a), full);
  }
  return out;
}

std::vector<Value> vertex_cut_table(std::span<const WeightedLink> links, std::size_t n) {
  const std::int64_t count = std::int64_t{1} << n;
  std::vector<Value> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (std::int64_t a = 0; a < count; ++a) out[a] = detail::vertex_cut_value(links, static_cast<std::uint64_t>(a));
  return out;
}

std::vector<AxiomViolation> scan_axioms(std::span<const Value> f, std::size_t n, ReportMode mode) {
  const std::int64_t count = std::int64_t{1} << n;
  const std::uint64_t full = static_cast<std::uint64_t>(count) - 1;
  std::vector<std::vector<AxiomViolation>> sub_rows(count), pos_rows(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t a = 0; a < count; ++a) {
    detail::scan_row_pairs(f, n, static_cast<std::uint64_t>(a), mode, sub_rows[a], pos_rows[a]);
  }
  std::vector<AxiomViolation> symmetry, submodular, empty_full, minimum, posimodular;
  for (std::int64_t a = 0; a < count; ++a) {
    detail::scan_row_single(f, n, static_cast<std::uint64_t>(a), symmetry, minimum);
    for (auto& v : sub_rows[a]) submodular.push_back(std::move(v));
    for (auto& v : pos_rows[a]) posimodular.push_back(std::move(v));
  }
  if (f[0] != f[full]) empty_full.push_back({"empty-full", Subset{}, Subset{full}, {f[0], f[full]}});
  return detail::assemble({std::move(symmetry), std::move(submodular), std::move(empty_full), std::move(minimum),
                           std::move(posimodular)},
                          mode);
}

// Layers by popcount: every subset in layer c depends only on layer c-1.
std::vector<Value> prefix_bottleneck(std::span<const Value> f, std::size_t n) {
  const std::int64_t count = std::int64_t{1} << n;
  std::vector<Value> best(static_cast<std::size_t>(count), 0);
  for (int layer = 1; layer <= static_cast<int>(n); ++layer) {
#pragma omp parallel for schedule(static)
    for (std::int64_t s = 1; s < count; ++s) {
      const auto bits = static_cast<std::uint64_t>(s);
      if (std::popcount(bits) != layer) continue;
      Value lowest = ~Value{0};
      for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1) {
        lowest = std::min(lowest, best[bits & ~(rest & -rest)]);
      }
      best[s] = std::max(f[s], lowest);
    }
  }
  return best;
}

std::vector<std::uint8_t> completable(std::span<const Value> f, std::size_t n, Value bound) {
  const std::int64_t count = std::int64_t{1} << n;
  const std::uint64_t full = static_cast<std::uint64_t>(count) - 1;
  std::vector<std::uint8_t> ok(static_cast<std::size_t>(count), 0);
  ok[full] = 1;
  for (int layer = static_cast<int>(n) - 1; layer >= 0; --layer) {
#pragma omp parallel for schedule(static)
    for (std::int64_t s = 0; s < count; ++s) {
      const auto bits = static_cast<std::uint64_t>(s);
      if (std::popcount(bits) != layer) continue;
      if (bits != 0 && f[s] > bound) continue;
      for (std::uint64_t missing = ~bits & full; missing != 0; missing &= missing - 1) {
        if (ok[bits | (missing & -missing)]) {
          ok[s] = 1;
          break;
        }
      }
    }
  }
  return ok;
}

}  // namespace linwidth::kernels::parallel
