#pragma once

#include "linwidth/kernels.hpp"

#include <bit>

namespace linwidth::kernels::detail {

inline Value edge_boundary_value(std::span<const std::uint64_t> incidence, std::uint64_t a, std::uint64_t full) {
  Value count = 0;
  const std::uint64_t outside = ~a & full;
  for (std::uint64_t inc : incidence) {
    if ((inc & a) != 0 && (inc & outside) != 0) ++count;
  }
  return count;
}

inline Value vertex_cut_value(std::span<const WeightedLink> links, std::uint64_t a) {
  Value total = 0;
  for (const auto& link : links) {
    if (((a >> link.u) & 1U) != ((a >> link.v) & 1U)) total += link.weight;
  }
  return total;
}

// Violations of every axiom instance anchored at row `a` (pairs (a, b) for all b).
// In first mode at most one violation per category is produced.
inline void scan_row_pairs(std::span<const Value> f, std::size_t n, std::uint64_t a, ReportMode mode,
                           std::vector<AxiomViolation>& submodular, std::vector<AxiomViolation>& posimodular) {
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t b = 0; b < count; ++b) {
    const Value fa = f[a], fb = f[b];
    if (fa + fb < f[a & b] + f[a | b]) {
      if (mode == ReportMode::all || submodular.empty()) {
        submodular.push_back({"submodularity", Subset{a}, Subset{b}, {fa, fb, f[a & b], f[a | b]}});
      }
    }
    if (fa + fb < f[a & ~b] + f[b & ~a]) {
      if (mode == ReportMode::all || posimodular.empty()) {
        posimodular.push_back({"posimodularity", Subset{a}, Subset{b}, {fa, fb, f[a & ~b], f[b & ~a]}});
      }
    }
    if (mode == ReportMode::first && !submodular.empty() && !posimodular.empty()) return;
  }
}

inline void scan_row_single(std::span<const Value> f, std::size_t n, std::uint64_t a,
                            std::vector<AxiomViolation>& symmetry, std::vector<AxiomViolation>& minimum) {
  const std::uint64_t full = Subset::full(n).bits();
  if (f[a] != f[~a & full]) symmetry.push_back({"symmetry", Subset{a}, Subset{~a & full}, {f[a], f[~a & full]}});
  if (f[a] < f[0]) minimum.push_back({"empty-minimum", Subset{a}, Subset{}, {f[a], f[0]}});
}

// Concatenate category lists in the canonical report order, truncating to one in first mode.
inline std::vector<AxiomViolation> assemble(std::vector<std::vector<AxiomViolation>> categories, ReportMode mode) {
  std::vector<AxiomViolation> out;
  for (auto& cat : categories) {
    for (auto& v : cat) {
      out.push_back(std::move(v));
      if (mode == ReportMode::first) return out;
    }
  }
  return out;
}

}  // namespace linwidth::kernels::detail
