#include "linwidth/system.hpp"

#include "linwidth/error.hpp"
#include "linwidth/family.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace linwidth {

std::string_view to_string(Backend backend) {
  switch (backend) {
    case Backend::table: return "table";
    case Backend::edge_boundary: return "edge-boundary";
    case Backend::vertex_cut: return "vertex-cut";
  }
  return "table";
}

namespace {

std::unordered_map<std::string, std::size_t> index_vertices(const std::vector<std::string>& vertices) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!is_valid_label(vertices[i])) {
      throw Error(ErrorCode::invalid_label, "invalid vertex label '" + vertices[i] + "'");
    }
    if (!index.emplace(vertices[i], i).second) {
      throw Error(ErrorCode::duplicate_label, "duplicate vertex label '" + vertices[i] + "'");
    }
  }
  return index;
}

std::size_t lookup_vertex(const std::unordered_map<std::string, std::size_t>& index, const std::string& v) {
  auto it = index.find(v);
  if (it == index.end()) throw Error(ErrorCode::unknown_vertex, "unknown vertex '" + v + "'");
  return it->second;
}

}  // namespace

ConnectivitySystem ConnectivitySystem::from_table(std::string name, GroundSet ground, std::vector<Value> values) {
  if (ground.size() > kDenseCap) {
    throw Error(ErrorCode::size_limit_exceeded, "table systems support at most 20 elements");
  }
  const std::size_t expected = std::size_t{1} << ground.size();
  if (values.size() != expected) {
    throw Error(ErrorCode::missing_value_line, "table system needs " + std::to_string(expected) + " values, got " +
                                                   std::to_string(values.size()));
  }
  ConnectivitySystem s;
  s.name_ = std::move(name);
  s.ground_ = std::move(ground);
  s.backend_ = Backend::table;
  s.dense_ = std::move(values);
  return s;
}

ConnectivitySystem ConnectivitySystem::from_edge_boundary(std::string name, std::vector<std::string> vertices,
                                                          std::vector<GraphEdge> edges, Exec exec) {
  if (edges.empty() || edges.size() > kMaxElements) {
    throw Error(ErrorCode::size_limit_exceeded, "edge-boundary systems need between 1 and 64 edges");
  }
  auto vindex = index_vertices(vertices);
  std::vector<std::string> labels;
  std::unordered_set<std::string> seen;
  for (const auto& e : edges) {
    if (!seen.insert(e.label).second) {
      throw Error(ErrorCode::duplicate_edge_label, "duplicate edge label '" + e.label + "'");
    }
    labels.push_back(e.label);
  }
  ConnectivitySystem s;
  s.ground_ = GroundSet(std::move(labels));
  s.incidence_.assign(vertices.size(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto bit = std::uint64_t{1} << i;
    s.incidence_[lookup_vertex(vindex, edges[i].u)] |= bit;
    s.incidence_[lookup_vertex(vindex, edges[i].v)] |= bit;
  }
  // Isolated vertices never straddle a split.
  std::erase(s.incidence_, std::uint64_t{0});
  s.name_ = std::move(name);
  s.backend_ = Backend::edge_boundary;
  s.vertices_ = std::move(vertices);
  s.edges_ = std::move(edges);
  if (s.size() <= kDenseCap) s.dense_ = kernels::edge_boundary_table(s.incidence_, s.size(), exec);
  return s;
}

ConnectivitySystem ConnectivitySystem::from_vertex_cut(std::string name, std::vector<std::string> vertices,
                                                       std::vector<GraphLink> links, Exec exec) {
  if (vertices.empty() || vertices.size() > kMaxElements) {
    throw Error(ErrorCode::size_limit_exceeded, "vertex-cut systems need between 1 and 64 vertices");
  }
  auto vindex = index_vertices(vertices);
  ConnectivitySystem s;
  for (const auto& link : links) {
    if (link.weight < 0) {
      throw Error(ErrorCode::negative_weight, "negative weight on link " + link.u + "-" + link.v);
    }
    s.weighted_links_.push_back(
        {lookup_vertex(vindex, link.u), lookup_vertex(vindex, link.v), static_cast<Value>(link.weight)});
  }
  s.ground_ = GroundSet(vertices);
  s.name_ = std::move(name);
  s.backend_ = Backend::vertex_cut;
  s.vertices_ = std::move(vertices);
  s.links_ = std::move(links);
  if (s.size() <= kDenseCap) s.dense_ = kernels::vertex_cut_table(s.weighted_links_, s.size(), exec);
  return s;
}

Value ConnectivitySystem::value(Subset a) const {
  if (!dense_.empty()) return dense_[a.bits()];
  return evaluate_direct(a);
}

Value ConnectivitySystem::evaluate_direct(Subset a) const {
  switch (backend_) {
    case Backend::table: return dense_.at(a.bits());
    case Backend::edge_boundary: {
      const std::uint64_t outside = a.complement(size()).bits();
      Value count = 0;
      for (std::uint64_t inc : incidence_) {
        if ((inc & a.bits()) != 0 && (inc & outside) != 0) ++count;
      }
      return count;
    }
    case Backend::vertex_cut: {
      Value total = 0;
      for (const auto& link : weighted_links_) {
        if (a.contains(link.u) != a.contains(link.v)) total += link.weight;
      }
      return total;
    }
  }
  return 0;
}

Value evaluate_f(const ConnectivitySystem& system, Subset a) {
  if (!system.ground().owns(a)) {
    throw Error(ErrorCode::ground_set_mismatch, "subset is not over the system's ground set");
  }
  return system.value(a);
}

ValidationReport validate_system(ConnectivitySystem& system, ReportMode mode, Exec exec) {
  ValidationReport report;
  if (system.size() > kValidateCap) {
    if (system.backend() == Backend::table) {
      throw Error(ErrorCode::size_limit_exceeded, "exhaustive validation supports at most 12 elements");
    }
    // Graph-backed functions are symmetric submodular by construction.
    report.exhaustive = false;
    system.validated_ = true;
    return report;
  }
  report.violations = kernels::scan_axioms(system.dense_table(), system.size(), mode, exec);
  report.passed = report.violations.empty();
  system.validated_ = report.passed;
  return report;
}

SetFamily enumerate_k_efficient(const ConnectivitySystem& system, Value k) {
  require_validated(system);
  require_size_at_most(system, kEnumerateCap, "enumerate_k_efficient");
  const auto table = system.dense_table();
  std::vector<Subset> members;
  for (std::uint64_t a = 0; a < table.size(); ++a) {
    if (table[a] <= k) members.emplace_back(a);
  }
  return SetFamily(system.size(), std::move(members));
}

Value max_value(const ConnectivitySystem& system) {
  require_size_at_most(system, kDenseCap, "max_value");
  const auto table = system.dense_table();
  return *std::max_element(table.begin(), table.end());
}

void require_validated(const ConnectivitySystem& system) {
  if (!system.validated()) {
    throw Error(ErrorCode::not_validated, "system '" + system.name() + "' has not passed validation");
  }
}

void require_size_at_most(const ConnectivitySystem& system, std::size_t cap, std::string_view operation) {
  if (system.size() > cap) {
    throw Error(ErrorCode::size_limit_exceeded, std::string(operation) + " supports at most " + std::to_string(cap) +
                                                    " elements; system has " + std::to_string(system.size()));
  }
}

}  // namespace linwidth
