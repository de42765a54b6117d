#pragma once

#include "linwidth/duality.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace linwidth {

inline constexpr int kSchemaVersion = 1;

enum class Format { text, json };

/// Output of one CLI operation. The JSON form always carries exactly the
/// keys schema_version, system, operation, verdict, violations, certificate
/// and rows; subsets appear as comma-joined labels in element order, `-`
/// for the empty set.
struct Report {
  std::string operation;
  std::string system;
  std::string verdict;
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  nlohmann::ordered_json certificate = nullptr;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::vector<std::string> text;
};

std::string render_report(const Report& report, Format format);

Report validation_report(const ConnectivitySystem& system, const ValidationReport& result);
Report width_report(const ConnectivitySystem& system, const WidthCertificate& certificate,
                    std::optional<Value> oracle = std::nullopt);
Report check_report(const ConnectivitySystem& system, const CheckRequest& request, const CheckReport& result);
Report find_report(const ConnectivitySystem& system, StructureKind kind, Value k, const VariantConfig& config,
                   const std::vector<Certificate>& found);
Report duality_report(const ConnectivitySystem& system, const DualityReport& result);
Report verify_report(const ConnectivitySystem& system, const std::string& what, std::size_t records,
                     std::size_t failed);

nlohmann::ordered_json to_json(const ConnectivitySystem& system, const SetFamily& family);
nlohmann::ordered_json to_json(const ConnectivitySystem& system, const WidthCertificate& certificate);
nlohmann::ordered_json to_json(const ConnectivitySystem& system, const Witness& witness);
nlohmann::ordered_json to_json(const ConnectivitySystem& system, const Counterexample& counterexample);

}  // namespace linwidth
