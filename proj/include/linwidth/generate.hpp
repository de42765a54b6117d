#pragma once

#include "linwidth/system.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace linwidth {

enum class Shape { path, cycle, star, complete, random_graph };

std::string_view to_string(Shape shape);
std::optional<Shape> parse_shape(std::string_view text);

/// `size` counts ground-set elements: edges for path, cycle and star in
/// edge-boundary mode, vertices otherwise (complete and random graphs are
/// sized by vertices in both modes).
struct GenerateRequest {
  Shape shape = Shape::path;
  std::size_t size = 3;
  Backend mode = Backend::edge_boundary;
  std::uint64_t seed = 1;
  // Edge probability for random graphs.
  double p = 0.5;
  std::optional<std::string> name;
};

/// A system file for the requested graph. Deterministic in the request;
/// random graphs draw from std::mt19937_64 seeded with `seed`.
std::string generate_system(const GenerateRequest& request);

std::string default_system_name(const GenerateRequest& request);

}  // namespace linwidth
