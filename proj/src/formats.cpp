#include "linwidth/formats.hpp"

#include "linwidth/error.hpp"
#include "linwidth/system_file.hpp"
#include "text_lines.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace linwidth {

using detail::Line;

namespace {

[[noreturn]] void malformed(const Line& line, const std::string& message) {
  throw Error(ErrorCode::malformed_certificate, message, line.number);
}

// One header line plus the directives that follow it, up to the next header.
struct Record {
  Line header;
  std::map<std::string, Line, std::less<>> fields;
  std::vector<Line> sets;
  std::optional<Line> family_marker;

  const Line& need(std::string_view key) const {
    auto it = fields.find(key);
    if (it == fields.end()) malformed(header, "missing '" + std::string(key) + "' line");
    return it->second;
  }
  const Line* find(std::string_view key) const {
    auto it = fields.find(key);
    return it == fields.end() ? nullptr : &it->second;
  }
};

std::vector<Record> split_records(std::string_view text, std::string_view header,
                                  std::initializer_list<std::string_view> keys) {
  std::vector<Record> out;
  for (const auto& line : detail::split_lines(text)) {
    const auto kw = line.keyword();
    if (kw == header) {
      out.push_back(Record{line, {}, {}, std::nullopt});
      continue;
    }
    if (out.empty()) malformed(line, "expected '" + std::string(header) + "' before '" + std::string(kw) + "'");
    auto& rec = out.back();
    if (kw == "set") {
      if (line.arity() != 1) malformed(line, "'set' takes one subset");
      rec.sets.push_back(line);
    } else if (kw == "family") {
      if (rec.family_marker || line.arity() != 0) malformed(line, "unexpected 'family' line");
      rec.family_marker = line;
    } else if (std::find(keys.begin(), keys.end(), kw) != keys.end()) {
      if (!rec.fields.emplace(std::string(kw), line).second) malformed(line, "duplicate '" + std::string(kw) + "' line");
    } else {
      malformed(line, "unknown directive '" + std::string(kw) + "'");
    }
  }
  return out;
}

std::string single(const Line& line) {
  if (line.arity() != 1) malformed(line, "'" + std::string(line.keyword()) + "' takes one argument");
  return std::string(line.tokens[1]);
}

Value natural(const Line& line, std::string_view token) {
  try {
    return detail::parse_natural(line, token);
  } catch (const Error& e) {
    throw Error(ErrorCode::malformed_certificate, e.what());
  }
}

std::vector<Value> naturals(const Line& line) {
  std::vector<Value> out;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) out.push_back(natural(line, line.tokens[i]));
  return out;
}

// Checks the system line and returns the stored hash.
std::uint64_t bind_system(const Record& rec, const ConnectivitySystem& system) {
  const auto& name_line = rec.need("system");
  const std::string name = single(name_line);
  if (name != system.name()) {
    throw Error(ErrorCode::unknown_system,
                "record refers to system '" + name + "', but '" + system.name() + "' was supplied", name_line.number);
  }
  const auto& hash_line = rec.need("system-hash");
  const auto hash = parse_hash(single(hash_line));
  if (!hash) malformed(hash_line, "system-hash must be 16 hexadecimal digits");
  return *hash;
}

Value order_to_k(const Record& rec) {
  const auto& line = rec.need("order");
  const Value order = natural(line, single(line));
  if (order == 0) malformed(line, "order must be at least 1");
  return order - 1;
}

VariantConfig parse_config(const Line& line) {
  VariantConfig config;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    const auto token = line.tokens[i];
    const auto eq = token.find('=');
    if (eq == std::string_view::npos) malformed(line, "config entries are key=value");
    const auto key = token.substr(0, eq);
    const auto value = token.substr(eq + 1);
    if (key == "m4" && (value == "exclusive" || value == "inclusive")) {
      config.m4 = value == "exclusive" ? M4Mode::exclusive : M4Mode::inclusive;
    } else if (key == "l3" && (value == "guarded" || value == "unguarded")) {
      config.l3 = value == "guarded" ? L3Guard::guarded : L3Guard::unguarded;
    } else if (key == "nonprincipal" && (value == "true" || value == "false")) {
      config.nonprincipal = value == "true";
    } else {
      malformed(line, "bad config entry '" + std::string(token) + "'");
    }
  }
  return config;
}

SetFamily parse_sets(const std::vector<Line>& sets, const ConnectivitySystem& system) {
  std::vector<Subset> members;
  for (const auto& line : sets) members.push_back(detail::parse_subset_at(line, system.ground(), line.tokens[1]));
  return SetFamily(system.size(), std::move(members));
}

StructureKind parse_kind(const Line& line, std::string_view token) {
  const auto kind = parse_structure_kind(token);
  if (!kind) malformed(line, "unknown structure kind '" + std::string(token) + "'");
  return *kind;
}

WidthCertificate parse_width_block(const Record& rec, const ConnectivitySystem& system) {
  WidthCertificate cert;
  const auto& variant_line = rec.need("variant");
  const auto& variant = single(variant_line);
  if (variant != "paper" && variant != "prefix-only") malformed(variant_line, "unknown width variant '" + variant + "'");
  cert.variant = variant == "paper" ? WidthVariant::paper : WidthVariant::prefix_only;
  const auto& ordering_line = rec.need("ordering");
  std::vector<Element> sequence;
  for (std::size_t i = 1; i < ordering_line.tokens.size(); ++i) {
    const auto e = system.ground().find(ordering_line.tokens[i]);
    if (!e) {
      throw Error(ErrorCode::unknown_label, "unknown element label '" + std::string(ordering_line.tokens[i]) + "'",
                  ordering_line.number);
    }
    sequence.push_back(*e);
  }
  try {
    cert.ordering = Ordering(system.size(), std::move(sequence));
  } catch (const Error& e) {
    malformed(ordering_line, e.what());
  }
  cert.prefix_values = naturals(rec.need("prefix-values"));
  cert.singleton_values = naturals(rec.need("singleton-values"));
  const auto& width_line = rec.need("width");
  cert.width = natural(width_line, single(width_line));
  return cert;
}

void render_width_block(std::ostringstream& out, const ConnectivitySystem& system, const WidthCertificate& cert) {
  out << "variant " << to_string(cert.variant) << '\n';
  out << "ordering";
  for (Element e : cert.ordering.sequence()) out << ' ' << system.ground().label(e);
  out << "\nprefix-values";
  for (Value v : cert.prefix_values) out << ' ' << v;
  out << "\nsingleton-values";
  for (Value v : cert.singleton_values) out << ' ' << v;
  out << "\nwidth " << cert.width << '\n';
}

void render_sets(std::ostringstream& out, const ConnectivitySystem& system, const SetFamily& family) {
  for (Subset a : family) out << "set " << system.ground().format(a) << '\n';
}

}  // namespace

std::string render_config(const VariantConfig& config) {
  return "m4=" + std::string(to_string(config.m4)) + " l3=" + std::string(to_string(config.l3)) +
         " nonprincipal=" + (config.nonprincipal ? "true" : "false");
}

FamilyFile parse_family_file(std::string_view text, const ConnectivitySystem& system) {
  FamilyFile out;
  std::optional<Line> header;
  std::vector<Subset> members;
  std::map<std::uint64_t, int> first_line;
  for (const auto& line : detail::split_lines(text)) {
    const auto kw = line.keyword();
    if (kw == "family") {
      if (header) detail::syntax_error(line, "duplicate 'family' line");
      detail::expect_arity(line, 1);
      header = line;
      out.name = detail::parse_name(line, line.tokens[1]);
    } else if (kw == "over") {
      if (out.over) detail::syntax_error(line, "duplicate 'over' line");
      detail::expect_arity(line, 1);
      out.over = std::string(line.tokens[1]);
      if (*out.over != system.name()) {
        throw Error(ErrorCode::system_name_mismatch,
                    "family is over '" + *out.over + "', but system '" + system.name() + "' was supplied", line.number);
      }
    } else if (kw == "set") {
      detail::expect_arity(line, 1);
      const Subset a = detail::parse_subset_at(line, system.ground(), line.tokens[1]);
      if (auto [it, fresh] = first_line.emplace(a.bits(), line.number); !fresh) {
        out.warnings.push_back("line " + std::to_string(line.number) + ": duplicate set " +
                               system.ground().format(a) + " (first on line " + std::to_string(it->second) +
                               ") merged");
      }
      members.push_back(a);
    } else {
      detail::syntax_error(line, "unknown directive '" + std::string(kw) + "'");
    }
  }
  if (!header) throw Error(ErrorCode::syntax_error, "missing 'family' line", 1);
  out.family = SetFamily(system.size(), std::move(members));
  return out;
}

std::string render_family_file(const std::string& name, const ConnectivitySystem& system, const SetFamily& family) {
  std::ostringstream out;
  out << "family " << name << '\n' << "over " << system.name() << '\n';
  render_sets(out, system, family);
  return out.str();
}

std::vector<Certificate> parse_certificate_file(std::string_view text, const ConnectivitySystem& system) {
  std::vector<Certificate> out;
  for (const auto& rec : split_records(text, "certificate", {"system", "system-hash", "order", "config"})) {
    if (rec.family_marker) malformed(*rec.family_marker, "certificates list their sets directly");
    Certificate cert;
    cert.kind = parse_kind(rec.header, single(rec.header));
    cert.system_hash = bind_system(rec, system);
    cert.system_name = system.name();
    cert.k = order_to_k(rec);
    cert.config = parse_config(rec.need("config"));
    cert.family = parse_sets(rec.sets, system);
    out.push_back(std::move(cert));
  }
  return out;
}

std::string render_certificate(const ConnectivitySystem& system, const Certificate& cert) {
  std::ostringstream out;
  out << "certificate " << to_string(cert.kind) << '\n';
  out << "system " << cert.system_name << '\n';
  out << "system-hash " << format_hash(cert.system_hash) << '\n';
  out << "order " << cert.order() << '\n';
  out << "config " << render_config(cert.config) << '\n';
  render_sets(out, system, cert.family);
  return out.str();
}

StoredWidthCertificate parse_width_certificate(std::string_view text, const ConnectivitySystem& system) {
  const auto records = split_records(text, "width-certificate",
                                     {"system", "system-hash", "variant", "ordering", "prefix-values",
                                      "singleton-values", "width"});
  if (records.size() != 1) throw Error(ErrorCode::malformed_certificate, "expected exactly one width certificate");
  const auto& rec = records.front();
  if (rec.header.arity() != 0) malformed(rec.header, "'width-certificate' takes no arguments");
  if (!rec.sets.empty()) malformed(rec.sets.front(), "width certificates carry no sets");
  StoredWidthCertificate out;
  out.system_hash = bind_system(rec, system);
  out.system_name = system.name();
  out.certificate = parse_width_block(rec, system);
  return out;
}

std::string render_width_certificate(const ConnectivitySystem& system, const WidthCertificate& cert) {
  std::ostringstream out;
  out << "width-certificate\n";
  out << "system " << system.name() << '\n';
  out << "system-hash " << format_hash(system_hash(system)) << '\n';
  render_width_block(out, system, cert);
  return out.str();
}

std::vector<Counterexample> parse_counterexample_file(std::string_view text, const ConnectivitySystem& system) {
  std::vector<Counterexample> out;
  const auto records =
      split_records(text, "counterexample",
                    {"system", "system-hash", "order", "side", "structure", "config", "variant", "ordering",
                     "prefix-values", "singleton-values", "width"});
  for (const auto& rec : records) {
    Counterexample cex;
    const auto claim = parse_claim(single(rec.header));
    if (!claim) malformed(rec.header, "unknown claim '" + single(rec.header) + "'");
    cex.claim = *claim;
    cex.system_hash = bind_system(rec, system);
    cex.system_name = system.name();
    cex.k = order_to_k(rec);
    const auto& side_line = rec.need("side");
    const auto side = parse_counterexample_side(single(side_line));
    if (!side) malformed(side_line, "unknown side '" + single(side_line) + "'");
    cex.side = *side;
    const auto& structure_line = rec.need("structure");
    cex.kind = parse_kind(structure_line, single(structure_line));
    cex.config = parse_config(rec.need("config"));
    if (rec.find("variant") || rec.find("ordering") || rec.find("width")) cex.width = parse_width_block(rec, system);
    if (rec.family_marker) {
      cex.family = parse_sets(rec.sets, system);
    } else if (!rec.sets.empty()) {
      malformed(rec.sets.front(), "set lines must follow a 'family' line");
    }
    out.push_back(std::move(cex));
  }
  return out;
}

std::string render_counterexample(const ConnectivitySystem& system, const Counterexample& cex) {
  std::ostringstream out;
  out << "counterexample " << to_string(cex.claim) << '\n';
  out << "system " << cex.system_name << '\n';
  out << "system-hash " << format_hash(cex.system_hash) << '\n';
  out << "order " << cex.k + 1 << '\n';
  out << "side " << to_string(cex.side) << '\n';
  out << "structure " << to_string(cex.kind) << '\n';
  out << "config " << render_config(cex.config) << '\n';
  if (cex.width) render_width_block(out, system, *cex.width);
  if (cex.family) {
    out << "family\n";
    render_sets(out, system, *cex.family);
  }
  return out.str();
}

}  // namespace linwidth
