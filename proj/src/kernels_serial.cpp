#include "kernels_common.hpp"

namespace linwidth::kernels::serial {

std::vector<Value> edge_boundary_table(std::span<const std::uint64_t> incidence, std::size_t n) {
  const std::uint64_t count = std::uint64_t{1} << n;
  const std::uint64_t full = Subset::full(n).bits();
  std::vector<Value> out(count);
  for (std::uint64_t a = 0; a < count; ++a) out[a] = detail::edge_boundary_value(incidence, a, full);
  return out;
}

std::vector<Value> vertex_cut_table(std::span<const WeightedLink> links, std::size_t n) {
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<Value> out(count);
  for (std::uint64_t a = 0; a < count; ++a) out[a] = detail::vertex_cut_value(links, a);
  return out;
}

std::vector<AxiomViolation> scan_axioms(std::span<const Value> f, std::size_t n, ReportMode mode) {
  const std::uint64_t count = std::uint64_t{1} << n;
  const std::uint64_t full = count - 1;
  std::vector<AxiomViolation> symmetry, submodular, empty_full, minimum, posimodular;
  for (std::uint64_t a = 0; a < count; ++a) {
    detail::scan_row_single(f, n, a, symmetry, minimum);
    std::vector<AxiomViolation> sub, pos;
    detail::scan_row_pairs(f, n, a, mode, sub, pos);
    submodular.insert(submodular.end(), sub.begin(), sub.end());
    posimodular.insert(posimodular.end(), pos.begin(), pos.end());
  }
  if (f[0] != f[full]) empty_full.push_back({"empty-full", Subset{}, Subset{full}, {f[0], f[full]}});
  return detail::assemble({std::move(symmetry), std::move(submodular), std::move(empty_full), std::move(minimum),
                           std::move(posimodular)},
                          mode);
}

std::vector<Value> prefix_bottleneck(std::span<const Value> f, std::size_t n) {
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<Value> best(count, 0);
  for (std::uint64_t s = 1; s < count; ++s) {
    Value lowest = ~Value{0};
    for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) {
      lowest = std::min(lowest, best[s & ~(rest & -rest)]);
    }
    best[s] = std::max(f[s], lowest);
  }
  return best;
}

std::vector<std::uint8_t> completable(std::span<const Value> f, std::size_t n, Value bound) {
  const std::uint64_t count = std::uint64_t{1} << n;
  const std::uint64_t full = count - 1;
  std::vector<std::uint8_t> ok(count, 0);
  ok[full] = 1;
  for (std::uint64_t s = full; s-- > 0;) {
    if (s != 0 && f[s] > bound) continue;
    for (std::uint64_t missing = ~s & full; missing != 0; missing &= missing - 1) {
      if (ok[s | (missing & -missing)]) {
        ok[s] = 1;
        break;
      }
    }
  }
  return ok;
}

}  // namespace linwidth::kernels::serial
