#include "linwidth/subset.hpp"

#include "linwidth/error.hpp"

#include <algorithm>

namespace linwidth {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::size_limit_exceeded: return "SizeLimitExceeded";
    case ErrorCode::invalid_label: return "InvalidLabel";
    case ErrorCode::duplicate_label: return "DuplicateLabel";
    case ErrorCode::unknown_vertex: return "UnknownVertex";
    case ErrorCode::duplicate_edge_label: return "DuplicateEdgeLabel";
    case ErrorCode::negative_weight: return "NegativeWeight";
    case ErrorCode::unknown_element: return "UnknownElement";
    case ErrorCode::unknown_label: return "UnknownLabel";
    case ErrorCode::ground_set_mismatch: return "GroundSetMismatch";
    case ErrorCode::non_efficient_seed: return "NonEfficientSeed";
    case ErrorCode::not_validated: return "NotValidated";
    case ErrorCode::invalid_ordering: return "InvalidOrdering";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::missing_value_line: return "MissingValueLine";
    case ErrorCode::validation_failed: return "ValidationFailed";
    case ErrorCode::system_name_mismatch: return "SystemNameMismatch";
    case ErrorCode::unknown_system: return "UnknownSystem";
    case ErrorCode::malformed_certificate: return "MalformedCertificate";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      code_(code),
      line_(line) {}

std::vector<Element> Subset::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for_each([&](Element e) { out.push_back(e); });
  return out;
}

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](unsigned char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  });
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw Error(ErrorCode::size_limit_exceeded, "ground set must contain at least one element");
  }
  if (labels_.size() > kMaxElements) {
    throw Error(ErrorCode::size_limit_exceeded,
                "ground set has " + std::to_string(labels_.size()) + " elements; at most 64 are supported");
  }
  for (Element i = 0; i < labels_.size(); ++i) {
    if (!is_valid_label(labels_[i])) {
      throw Error(ErrorCode::invalid_label, "invalid element label '" + labels_[i] + "'");
    }
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(ErrorCode::duplicate_label, "duplicate element label '" + labels_[i] + "'");
    }
  }
}

std::optional<Element> GroundSet::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string GroundSet::format(Subset a) const {
  if (a.empty()) return "-";
  std::string out;
  a.for_each([&](Element e) {
    if (!out.empty()) out += ',';
    out += labels_.at(e);
  });
  return out;
}

Subset GroundSet::parse_subset(std::string_view text) const {
  if (text == "-") return Subset{};
  if (text == "*") return full();
  Subset out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(start, comma - start);
    auto e = find(token);
    if (!e) throw Error(ErrorCode::unknown_label, "unknown element label '" + std::string(token) + "'");
    out = out.with(*e);
    start = comma + 1;
  }
  return out;
}

}  // namespace linwidth
