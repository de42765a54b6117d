#include "linwidth/report.hpp"

#include "linwidth/formats.hpp"
#include "linwidth/system_file.hpp"

#include <sstream>

namespace linwidth {

using json = nlohmann::ordered_json;

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::string family_text(const ConnectivitySystem& system, const SetFamily& family) {
  std::vector<std::string> parts;
  for (Subset a : family) parts.push_back("{" + system.ground().format(a) + "}");
  return "[" + join(parts, " ") + "]";
}

std::string witness_text(const ConnectivitySystem& system, const Witness& w) {
  std::vector<std::string> parts;
  if (w.a) parts.push_back("A=" + system.ground().format(*w.a));
  if (w.b) parts.push_back("B=" + system.ground().format(*w.b));
  if (w.e) parts.push_back("e=" + system.ground().label(*w.e));
  return join(parts, " ");
}

json config_json(const VariantConfig& config) {
  return json{{"m4", to_string(config.m4)}, {"l3", to_string(config.l3)}, {"nonprincipal", config.nonprincipal}};
}

std::string values_text(const std::vector<Value>& values) {
  std::vector<std::string> parts;
  for (Value v : values) parts.push_back(std::to_string(v));
  return join(parts, " ");
}

Report start(std::string operation, const ConnectivitySystem& system, std::string verdict) {
  Report r;
  r.operation = std::move(operation);
  r.system = system.name();
  r.verdict = std::move(verdict);
  return r;
}

}  // namespace

json to_json(const ConnectivitySystem& system, const SetFamily& family) {
  json out = json::array();
  for (Subset a : family) out.push_back(system.ground().format(a));
  return out;
}

json to_json(const ConnectivitySystem& system, const WidthCertificate& cert) {
  json ordering = json::array();
  for (Element e : cert.ordering.sequence()) ordering.push_back(system.ground().label(e));
  return json{{"variant", to_string(cert.variant)},
              {"ordering", ordering},
              {"prefix_values", cert.prefix_values},
              {"singleton_values", cert.singleton_values},
              {"width", cert.width}};
}

json to_json(const ConnectivitySystem& system, const Witness& w) {
  json out = json::object();
  if (w.a) out["A"] = system.ground().format(*w.a);
  if (w.b) out["B"] = system.ground().format(*w.b);
  if (w.e) out["e"] = system.ground().label(*w.e);
  return out;
}

json to_json(const ConnectivitySystem& system, const Counterexample& cex) {
  json out{{"claim", to_string(cex.claim)},
           {"order", cex.k + 1},
           {"side", to_string(cex.side)},
           {"structure", to_string(cex.kind)},
           {"config", config_json(cex.config)},
           {"family", cex.family ? to_json(system, *cex.family) : json(nullptr)},
           {"width", cex.width ? to_json(system, *cex.width) : json(nullptr)}};
  return out;
}

std::string render_report(const Report& report, Format format) {
  if (format == Format::json) {
    const json out{{"schema_version", kSchemaVersion}, {"system", report.system},
                   {"operation", report.operation},    {"verdict", report.verdict},
                   {"violations", report.violations},  {"certificate", report.certificate},
                   {"rows", report.rows}};
    return out.dump(2) + "\n";
  }
  std::ostringstream out;
  out << report.operation << ' ' << report.system << ": " << report.verdict << '\n';
  for (const auto& line : report.text) out << "  " << line << '\n';
  return out.str();
}

Report validation_report(const ConnectivitySystem& system, const ValidationReport& result) {
  Report r = start("validate", system, result.passed ? "pass" : "fail");
  r.certificate = json{{"elements", system.size()},
                       {"backend", to_string(system.backend())},
                       {"exhaustive", result.exhaustive},
                       {"system_hash", format_hash(system_hash(system))}};
  if (!result.exhaustive) r.text.push_back("graph-backed system above the exhaustive cap; accepted by construction");
  for (const auto& v : result.violations) {
    json witness{{"A", system.ground().format(v.a)}};
    if (v.axiom == "submodularity" || v.axiom == "posimodularity") witness["B"] = system.ground().format(v.b);
    r.violations.push_back(json{{"axiom", v.axiom}, {"witness", witness}, {"observed", v.observed}});
    r.text.push_back(v.axiom + " at A=" + system.ground().format(v.a) + " B=" + system.ground().format(v.b) +
                     " observed " + values_text(v.observed));
  }
  return r;
}

Report width_report(const ConnectivitySystem& system, const WidthCertificate& cert, std::optional<Value> oracle) {
  const bool agree = !oracle || *oracle == cert.width;
  Report r = start("width", system, agree ? "pass" : "fail");
  r.certificate = to_json(system, cert);
  r.certificate["system_hash"] = format_hash(system_hash(system));
  if (oracle) r.certificate["oracle"] = *oracle;
  std::vector<std::string> ordering;
  for (Element e : cert.ordering.sequence()) ordering.push_back(system.ground().label(e));
  r.text.push_back("width " + std::to_string(cert.width) + " (" + std::string(to_string(cert.variant)) + ")");
  r.text.push_back("ordering " + join(ordering, " "));
  r.text.push_back("prefix values " + values_text(cert.prefix_values));
  r.text.push_back("singleton values " + values_text(cert.singleton_values));
  if (oracle) r.text.push_back("oracle " + std::to_string(*oracle) + (agree ? " (agrees)" : " (MISMATCH)"));
  if (!agree) {
    r.violations.push_back(json{{"axiom", "oracle-mismatch"}, {"dp", cert.width}, {"oracle", *oracle}});
  }
  return r;
}

Report check_report(const ConnectivitySystem& system, const CheckRequest& request, const CheckReport& result) {
  Report r = start("check", system, result.passed ? "pass" : "fail");
  r.certificate = json{{"kind", to_string(request.kind)},
                       {"order", request.k + 1},
                       {"config", config_json(request.config)},
                       {"ultra", request.ultra},
                       {"prime", request.prime},
                       {"interpretation", to_string(request.interpretation)},
                       {"assumption_holds", result.assumption_holds},
                       {"reason", result.reason}};
  if (!result.reason.empty()) r.text.push_back("reason " + result.reason);
  for (const auto& v : result.violations) {
    json item{{"axiom", v.axiom}, {"witness", to_json(system, v.witness)}};
    if (!v.reason.empty()) item["reason"] = v.reason;
    r.violations.push_back(item);
    r.text.push_back(v.axiom + ": " + witness_text(system, v.witness) + (v.reason.empty() ? "" : " (" + v.reason + ")"));
  }
  return r;
}

Report find_report(const ConnectivitySystem& system, StructureKind kind, Value k, const VariantConfig& config,
                   const std::vector<Certificate>& found) {
  Report r = start("find", system, found.empty() ? "none" : "found");
  json families = json::array();
  for (const auto& c : found) {
    families.push_back(to_json(system, c.family));
    r.text.push_back(family_text(system, c.family));
  }
  r.certificate = json{{"kind", to_string(kind)},
                       {"order", k + 1},
                       {"config", config_json(config)},
                       {"system_hash", format_hash(system_hash(system))},
                       {"families", families}};
  return r;
}

Report duality_report(const ConnectivitySystem& system, const DualityReport& result) {
  Report r = start("duality", system, result.consistent() ? "consistent" : "counterexample");
  r.certificate = json{{"system_hash", format_hash(result.system_hash)},
                       {"paper_width", to_json(system, result.paper_width)},
                       {"prefix_width", to_json(system, result.prefix_width)}};
  r.text.push_back("linear width: paper " + std::to_string(result.paper_width.width) + ", prefix-only " +
                   std::to_string(result.prefix_width.width));
  for (const auto& row : result.rows) {
    json exists = json::object();
    std::vector<std::string> found;
    for (const auto& [id, present] : row.exists) {
      exists[id] = present;
      if (present) found.push_back(id);
    }
    json claims = json::object();
    std::vector<std::string> broken;
    for (const auto& [claim, status] : row.consistent) {
      claims[std::string(to_string(claim))] = to_string(status);
      if (status == ClaimStatus::violated) broken.push_back(std::string(to_string(claim)));
    }
    r.rows.push_back(json{{"k", row.k},
                          {"paper_width_le_k", row.paper_width_le_k},
                          {"prefix_width_le_k", row.prefix_width_le_k},
                          {"assumption_holds", row.assumption_holds},
                          {"reason", row.reason},
                          {"exists", exists},
                          {"claims", claims}});
    std::string line = "k=" + std::to_string(row.k) + " found: " + (found.empty() ? "none" : join(found, ", "));
    if (!row.reason.empty()) line += " (" + row.reason + ")";
    if (!broken.empty()) line += "; violated: " + join(broken, ", ");
    r.text.push_back(line);
  }
  for (const auto& cex : result.counterexamples) {
    r.violations.push_back(to_json(system, cex));
    r.text.push_back("counterexample " + std::string(to_string(cex.claim)) + " at order " +
                     std::to_string(cex.k + 1) + " (" + std::string(to_string(cex.side)) + ")" +
                     (cex.family ? " " + family_text(system, *cex.family) : ""));
  }
  return r;
}

Report verify_report(const ConnectivitySystem& system, const std::string& what, std::size_t records,
                     std::size_t failed) {
  Report r = start("verify", system, failed == 0 ? "pass" : "fail");
  r.certificate = json{{"file", what}, {"records", records}, {"failed", failed}};
  r.text.push_back(std::to_string(records - failed) + " of " + std::to_string(records) + " record(s) re-verified");
  return r;
}

}  // namespace linwidth
