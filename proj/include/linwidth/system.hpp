#pragma once

#include "linwidth/kernels.hpp"
#include "linwidth/subset.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace linwidth {

class SetFamily;

// Exhaustive operations carry their own caps on the ground-set size.
inline constexpr std::size_t kValidateCap = 12;
inline constexpr std::size_t kEnumerateCap = 20;
inline constexpr std::size_t kWidthCap = 20;
inline constexpr std::size_t kOracleCap = 8;
inline constexpr std::size_t kSearchCap = 10;
inline constexpr std::size_t kBranchedCap = 16;
// Systems up to this size keep every value of f in memory.
inline constexpr std::size_t kDenseCap = 20;

enum class Backend { table, edge_boundary, vertex_cut };

std::string_view to_string(Backend backend);

struct GraphEdge {
  std::string label;
  std::string u;
  std::string v;
};

struct GraphLink {
  std::string u;
  std::string v;
  std::int64_t weight = 1;
};

struct ValidationReport {
  bool passed = true;
  // False when the system was accepted without the exhaustive pair check
  // (graph-backed systems above the validation cap).
  bool exhaustive = true;
  std::vector<AxiomViolation> violations;
};

/// A finite ground set X together with a symmetric submodular f: 2^X -> N.
///
/// Values come from one of three backends: an explicit table of all 2^n
/// values, the edge-boundary function of a graph (ground set = edges,
/// f(A) = vertices touching both A and its complement) or the weighted
/// vertex cut of a graph (ground set = vertices). The object is immutable
/// apart from the validated flag, which validate_system sets on success.
class ConnectivitySystem {
 public:
  static ConnectivitySystem from_table(std::string name, GroundSet ground, std::vector<Value> values);
  static ConnectivitySystem from_edge_boundary(std::string name, std::vector<std::string> vertices,
                                               std::vector<GraphEdge> edges, Exec exec = Exec::parallel);
  static ConnectivitySystem from_vertex_cut(std::string name, std::vector<std::string> vertices,
                                            std::vector<GraphLink> links, Exec exec = Exec::parallel);

  const std::string& name() const { return name_; }
  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  Backend backend() const { return backend_; }
  Subset full() const { return ground_.full(); }

  Value value(Subset a) const;
  Value singleton_value(Element e) const { return value(Subset::single(e)); }

  bool has_dense_table() const { return !dense_.empty(); }
  std::span<const Value> dense_table() const { return dense_; }

  bool validated() const { return validated_; }

  // Source description, kept for rendering back to a system file.
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const std::vector<GraphLink>& links() const { return links_; }

 private:
  ConnectivitySystem() = default;
  Value evaluate_direct(Subset a) const;

  friend ValidationReport validate_system(ConnectivitySystem& system, ReportMode mode, Exec exec);

  std::string name_;
  GroundSet ground_;
  Backend backend_ = Backend::table;
  std::vector<Value> dense_;
  std::vector<std::uint64_t> incidence_;
  std::vector<WeightedLink> weighted_links_;
  std::vector<std::string> vertices_;
  std::vector<GraphEdge> edges_;
  std::vector<GraphLink> links_;
  bool validated_ = false;
};

Value evaluate_f(const ConnectivitySystem& system, Subset a);

/// Checks symmetry over every subset, submodularity over every ordered pair,
/// and the derived facts f(A) >= f(empty) = f(X) and posimodularity. Sets the
/// validated flag when nothing is violated.
ValidationReport validate_system(ConnectivitySystem& system, ReportMode mode = ReportMode::all,
                                 Exec exec = Exec::parallel);

/// Every A with f(A) <= k, ascending.
SetFamily enumerate_k_efficient(const ConnectivitySystem& system, Value k);

/// Largest value of f over all subsets (dense systems only).
Value max_value(const ConnectivitySystem& system);

void require_validated(const ConnectivitySystem& system);
void require_size_at_most(const ConnectivitySystem& system, std::size_t cap, std::string_view operation);

}  // namespace linwidth
