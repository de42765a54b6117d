#pragma once

// Data-parallel kernels over dense value tables indexed by subset bits.
// Every kernel has a serial reference and an OpenMP implementation with
// identical results; the library dispatches on Exec.

#include "linwidth/subset.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace linwidth {

enum class Exec { serial, parallel };

enum class ReportMode { first, all };

struct AxiomViolation {
  std::string axiom;
  Subset a;
  Subset b;
  std::vector<Value> observed;

  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

struct WeightedLink {
  Element u;
  Element v;
  Value weight;
};

namespace kernels {

#define LINWIDTH_KERNEL_DECLS                                                                     \
  std::vector<Value> edge_boundary_table(std::span<const std::uint64_t> incidence, std::size_t n); \
  std::vector<Value> vertex_cut_table(std::span<const WeightedLink> links, std::size_t n);        \
  std::vector<AxiomViolation> scan_axioms(std::span<const Value> table, std::size_t n,            \
                                          ReportMode mode);                                       \
  std::vector<Value> prefix_bottleneck(std::span<const Value> table, std::size_t n);              \
  std::vector<std::uint8_t> completable(std::span<const Value> table, std::size_t n, Value bound);

// Declarations shared by both namespaces:
//   edge_boundary_table  f for every subset of edges, given per-vertex incidence masks.
//   vertex_cut_table     f for every subset of vertices, given weighted links.
//   scan_axioms          symmetry, submodularity and their consequences over all subsets/pairs.
//   prefix_bottleneck    g(S) = min over orderings of S of the max f over nonempty prefixes.
//   completable          c(S) = S extends to a full ordering whose proper prefixes stay <= bound.
namespace serial {
LINWIDTH_KERNEL_DECLS
}
namespace parallel {
LINWIDTH_KERNEL_DECLS
}

#undef LINWIDTH_KERNEL_DECLS

inline std::vector<Value> edge_boundary_table(std::span<const std::uint64_t> incidence, std::size_t n,
                                              Exec exec) {
  return exec == Exec::serial ? serial::edge_boundary_table(incidence, n)
                              : parallel::edge_boundary_table(incidence, n);
}
inline std::vector<Value> vertex_cut_table(std::span<const WeightedLink> links, std::size_t n, Exec exec) {
  return exec == Exec::serial ? serial::vertex_cut_table(links, n) : parallel::vertex_cut_table(links, n);
}
inline std::vector<AxiomViolation> scan_axioms(std::span<const Value> table, std::size_t n, ReportMode mode,
                                               Exec exec) {
  return exec == Exec::serial ? serial::scan_axioms(table, n, mode) : parallel::scan_axioms(table, n, mode);
}
inline std::vector<Value> prefix_bottleneck(std::span<const Value> table, std::size_t n, Exec exec) {
  return exec == Exec::serial ? serial::prefix_bottleneck(table, n) : parallel::prefix_bottleneck(table, n);
}
inline std::vector<std::uint8_t> completable(std::span<const Value> table, std::size_t n, Value bound,
                                             Exec exec) {
  return exec == Exec::serial ? serial::completable(table, n, bound) : parallel::completable(table, n, bound);
}

}  // namespace kernels
}  // namespace linwidth
