#include "linwidth/generate.hpp"

#include "linwidth/error.hpp"
#include "linwidth/system_file.hpp"

#include <random>
#include <sstream>
#include <utility>
#include <vector>

namespace linwidth {

std::string_view to_string(Shape shape) {
  switch (shape) {
    case Shape::path: return "path";
    case Shape::cycle: return "cycle";
    case Shape::star: return "star";
    case Shape::complete: return "complete";
    case Shape::random_graph: return "random-graph";
  }
  return "path";
}

std::optional<Shape> parse_shape(std::string_view text) {
  for (auto s : {Shape::path, Shape::cycle, Shape::star, Shape::complete, Shape::random_graph}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

std::string default_system_name(const GenerateRequest& request) {
  std::ostringstream name;
  name << to_string(request.shape) << '-' << request.size << '-'
       << (request.mode == Backend::vertex_cut ? "vc" : "eb");
  if (request.shape == Shape::random_graph) name << "-s" << request.seed;
  return name.str();
}

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

[[noreturn]] void bad_size(const GenerateRequest& r, const std::string& why) {
  throw Error(ErrorCode::size_limit_exceeded,
              std::string(to_string(r.shape)) + " of size " + std::to_string(r.size) + ": " + why);
}

// Vertex count and vertex pairs of the underlying graph.
std::pair<std::size_t, std::vector<Pair>> build_graph(const GenerateRequest& r) {
  const bool by_edges = r.mode == Backend::edge_boundary &&
                        (r.shape == Shape::path || r.shape == Shape::cycle || r.shape == Shape::star);
  const std::size_t n = r.size;
  std::vector<Pair> pairs;
  std::size_t vertices = 0;
  switch (r.shape) {
    case Shape::path:
      if (n < 1) bad_size(r, "need at least one element");
      vertices = by_edges ? n + 1 : n;
      for (std::size_t i = 0; i + 1 < vertices; ++i) pairs.emplace_back(i, i + 1);
      break;
    case Shape::cycle:
      if (n < 3) bad_size(r, "a cycle needs at least three elements");
      vertices = n;
      for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
      break;
    case Shape::star:
      if (n < 1) bad_size(r, "need at least one element");
      vertices = by_edges ? n + 1 : n;
      for (std::size_t i = 1; i < vertices; ++i) pairs.emplace_back(0, i);
      break;
    case Shape::complete:
      if (n < 2) bad_size(r, "need at least two vertices");
      vertices = n;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
      }
      break;
    case Shape::random_graph: {
      if (n < 2) bad_size(r, "need at least two vertices");
      if (!(r.p >= 0.0 && r.p <= 1.0)) bad_size(r, "edge probability must lie in [0, 1]");
      vertices = n;
      std::mt19937_64 rng(r.seed);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < r.p) pairs.emplace_back(i, j);
        }
      }
      if (pairs.empty() && r.mode == Backend::edge_boundary) pairs.emplace_back(0, 1);
      break;
    }
  }
  if (vertices > kMaxElements) bad_size(r, "more than 64 vertices");
  if (r.mode == Backend::edge_boundary && pairs.size() > kMaxElements) bad_size(r, "more than 64 edges");
  return {vertices, pairs};
}

}  // namespace

std::string generate_system(const GenerateRequest& request) {
  if (request.mode == Backend::table) {
    throw Error(ErrorCode::syntax_error, "generated systems are graph-backed (edge-boundary or vertex-cut)");
  }
  const auto [count, pairs] = build_graph(request);
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < count; ++i) vertices.push_back("v" + std::to_string(i + 1));
  const std::string name = request.name.value_or(default_system_name(request));

  std::optional<ConnectivitySystem> system;
  if (request.mode == Backend::edge_boundary) {
    std::vector<GraphEdge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      edges.push_back({"e" + std::to_string(i + 1), vertices[pairs[i].first], vertices[pairs[i].second]});
    }
    system = ConnectivitySystem::from_edge_boundary(name, vertices, std::move(edges), Exec::serial);
  } else {
    std::mt19937_64 rng(request.seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<GraphLink> links;
    for (const auto& [u, v] : pairs) {
      const std::int64_t weight = request.shape == Shape::random_graph ? static_cast<std::int64_t>(1 + rng() % 3) : 1;
      links.push_back({vertices[u], vertices[v], weight});
    }
    system = ConnectivitySystem::from_vertex_cut(name, vertices, std::move(links), Exec::serial);
  }

  std::ostringstream out;
  out << "# generated: shape=" << to_string(request.shape) << " size=" << request.size
      << " mode=" << to_string(request.mode) << " seed=" << request.seed;
  if (request.shape == Shape::random_graph) out << " p=" << request.p;
  out << '\n' << render_system_file(*system);
  return out.str();
}

}  // namespace linwidth
