#include "linwidth/system_file.hpp"

#include "linwidth/error.hpp"
#include "text_lines.hpp"

#include <cstdio>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace linwidth {

using detail::expect_arity;
using detail::Line;
using detail::syntax_error;

namespace {

std::vector<std::string> labels_of(const Line& line) {
  if (line.arity() == 0) syntax_error(line, "'" + std::string(line.keyword()) + "' needs at least one label");
  std::vector<std::string> out;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) out.emplace_back(line.tokens[i]);
  return out;
}

// Factory errors carry no line; attach the line of the offending directive.
template <typename F>
auto at_line(int line, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.line() > 0) throw;
    throw Error(e.code(), e.what(), line);
  }
}

}  // namespace

ConnectivitySystem parse_system_file(std::string_view text, Validation validation) {
  const auto lines = detail::split_lines(text);
  std::optional<Line> system_line, elements_line, mode_line, vertices_line;
  std::vector<Line> values, edges, links;
  for (const auto& line : lines) {
    const auto kw = line.keyword();
    auto once = [&](std::optional<Line>& slot) {
      if (slot) syntax_error(line, "duplicate '" + std::string(kw) + "' line");
      slot = line;
    };
    if (kw == "system") {
      once(system_line);
    } else if (kw == "elements") {
      once(elements_line);
    } else if (kw == "mode") {
      once(mode_line);
    } else if (kw == "vertices") {
      once(vertices_line);
    } else if (kw == "value") {
      values.push_back(line);
    } else if (kw == "edge") {
      edges.push_back(line);
    } else if (kw == "link") {
      links.push_back(line);
    } else {
      syntax_error(line, "unknown directive '" + std::string(kw) + "'");
    }
  }
  const Line eof{static_cast<int>(lines.empty() ? 1 : lines.back().number), {"<end>"}};
  if (!system_line) syntax_error(eof, "missing 'system' line");
  if (!elements_line) syntax_error(eof, "missing 'elements' line");
  if (!mode_line) syntax_error(eof, "missing 'mode' line");
  expect_arity(*system_line, 1);
  expect_arity(*mode_line, 1);
  std::string name = detail::parse_name(*system_line, system_line->tokens[1]);
  GroundSet ground = at_line(elements_line->number, [&] { return GroundSet(labels_of(*elements_line)); });
  const auto mode = mode_line->tokens[1];

  auto forbid = [&](const std::vector<Line>& found, std::string_view what) {
    if (!found.empty()) syntax_error(found.front(), "'" + std::string(what) + "' lines are not allowed in mode " + std::string(mode));
  };

  std::optional<ConnectivitySystem> system;
  if (mode == "table") {
    forbid(edges, "edge");
    forbid(links, "link");
    if (vertices_line) syntax_error(*vertices_line, "'vertices' is not allowed in mode table");
    if (ground.size() > kDenseCap) {
      throw Error(ErrorCode::size_limit_exceeded, "table systems support at most 20 elements", elements_line->number);
    }
    const std::size_t count = std::size_t{1} << ground.size();
    std::vector<Value> table(count, 0);
    std::vector<bool> seen(count, false);
    for (const auto& line : values) {
      expect_arity(line, 2);
      const Subset a = detail::parse_subset_at(line, ground, line.tokens[1]);
      if (seen[a.bits()]) syntax_error(line, "duplicate value line for " + ground.format(a));
      seen[a.bits()] = true;
      table[a.bits()] = detail::parse_natural(line, line.tokens[2]);
    }
    for (std::size_t a = 0; a < count; ++a) {
      if (!seen[a]) {
        throw Error(ErrorCode::missing_value_line,
                    "no value line for subset " + ground.format(Subset{a}) + " (" + std::to_string(values.size()) +
                        " of " + std::to_string(count) + " given)",
                    eof.number);
      }
    }
    system = ConnectivitySystem::from_table(std::move(name), std::move(ground), std::move(table));
  } else if (mode == "edge-boundary") {
    forbid(values, "value");
    forbid(links, "link");
    if (!vertices_line) syntax_error(eof, "mode edge-boundary needs a 'vertices' line");
    std::vector<std::optional<GraphEdge>> by_element(ground.size());
    for (const auto& line : edges) {
      expect_arity(line, 3);
      const auto e = ground.find(line.tokens[1]);
      if (!e) throw Error(ErrorCode::unknown_label, "edge '" + std::string(line.tokens[1]) + "' is not an element", line.number);
      if (by_element[*e]) {
        throw Error(ErrorCode::duplicate_edge_label, "duplicate edge '" + std::string(line.tokens[1]) + "'", line.number);
      }
      by_element[*e] = GraphEdge{std::string(line.tokens[1]), std::string(line.tokens[2]), std::string(line.tokens[3])};
    }
    std::vector<GraphEdge> ordered;
    for (Element e = 0; e < ground.size(); ++e) {
      if (!by_element[e]) syntax_error(eof, "element '" + ground.label(e) + "' has no edge line");
      ordered.push_back(*by_element[e]);
    }
    system = at_line(vertices_line->number, [&] {
      return ConnectivitySystem::from_edge_boundary(std::move(name), labels_of(*vertices_line), std::move(ordered));
    });
  } else if (mode == "vertex-cut") {
    forbid(values, "value");
    forbid(edges, "edge");
    if (vertices_line) syntax_error(*vertices_line, "mode vertex-cut takes its vertices from 'elements'");
    std::vector<GraphLink> parsed;
    for (const auto& line : links) {
      expect_arity(line, 3);
      const auto weight_token = line.tokens[3];
      if (!weight_token.empty() && weight_token.front() == '-') {
        throw Error(ErrorCode::negative_weight, "negative link weight", line.number);
      }
      const auto weight = detail::parse_natural(line, weight_token);
      for (auto v : {line.tokens[1], line.tokens[2]}) {
        if (!ground.find(v)) throw Error(ErrorCode::unknown_vertex, "unknown vertex '" + std::string(v) + "'", line.number);
      }
      parsed.push_back(GraphLink{std::string(line.tokens[1]), std::string(line.tokens[2]), static_cast<std::int64_t>(weight)});
    }
    system = at_line(elements_line->number, [&] {
      return ConnectivitySystem::from_vertex_cut(std::move(name), ground.labels(), std::move(parsed));
    });
  } else {
    syntax_error(*mode_line, "unknown mode '" + std::string(mode) + "'");
  }

  if (validation == Validation::required) {
    const auto report = validate_system(*system, ReportMode::first);
    if (!report.passed) {
      const auto& v = report.violations.front();
      throw Error(ErrorCode::validation_failed, "system '" + system->name() + "' violates " + v.axiom + " at A=" +
                                                    system->ground().format(v.a) + ", B=" + system->ground().format(v.b));
    }
  }
  return std::move(*system);
}

std::string render_system_file(const ConnectivitySystem& system) {
  std::ostringstream out;
  const auto& ground = system.ground();
  out << "system " << system.name() << '\n';
  out << "elements";
  for (const auto& label : ground.labels()) out << ' ' << label;
  out << '\n' << "mode " << to_string(system.backend()) << '\n';
  switch (system.backend()) {
    case Backend::table: {
      const auto table = system.dense_table();
      for (std::uint64_t a = 0; a < table.size(); ++a) {
        out << "value " << ground.format(Subset{a}) << ' ' << table[a] << '\n';
      }
      break;
    }
    case Backend::edge_boundary:
      out << "vertices";
      for (const auto& v : system.vertices()) out << ' ' << v;
      out << '\n';
      for (const auto& e : system.edges()) out << "edge " << e.label << ' ' << e.u << ' ' << e.v << '\n';
      break;
    case Backend::vertex_cut:
      for (const auto& l : system.links()) out << "link " << l.u << ' ' << l.v << ' ' << l.weight << '\n';
      break;
  }
  return out.str();
}

std::uint64_t system_hash(const ConnectivitySystem& system) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : render_system_file(system)) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string format_hash(std::uint64_t hash) {
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

std::optional<std::uint64_t> parse_hash(std::string_view text) {
  if (text.size() != 16) return std::nullopt;
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, 16);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace linwidth
