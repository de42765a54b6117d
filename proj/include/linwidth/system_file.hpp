#pragma once

#include "linwidth/system.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace linwidth {

enum class Validation { required, deferred };

/// Parses the line-oriented system format:
///
///   system <name>
///   elements <label>...
///   mode table|edge-boundary|vertex-cut
///   value <subset> <nat>          (table: one line per subset)
///   vertices <label>...           (edge-boundary)
///   edge <element> <u> <v>        (edge-boundary: one line per element)
///   link <u> <v> <nat>            (vertex-cut: elements are the vertices)
///
/// `#` starts a comment. With Validation::required the system is validated
/// immediately and a failure throws ValidationFailed.
ConnectivitySystem parse_system_file(std::string_view text, Validation validation = Validation::required);

/// Canonical rendering: no comments, value lines in ascending subset order,
/// edge lines in element order.
std::string render_system_file(const ConnectivitySystem& system);

/// FNV-1a over the canonical rendering.
std::uint64_t system_hash(const ConnectivitySystem& system);

std::string format_hash(std::uint64_t hash);
std::optional<std::uint64_t> parse_hash(std::string_view text);

}  // namespace linwidth
