#pragma once

#include "linwidth/duality.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace linwidth {

/// family <name>
/// over <system>        (optional)
/// set <subset>         (`-` is the empty set, `*` the ground set)
struct FamilyFile {
  std::string name;
  std::optional<std::string> over;
  SetFamily family;
  std::vector<std::string> warnings;
};

FamilyFile parse_family_file(std::string_view text, const ConnectivitySystem& system);
std::string render_family_file(const std::string& name, const ConnectivitySystem& system, const SetFamily& family);

/// certificate <kind>
/// system <name>
/// system-hash <16 hex digits>
/// order <k+1>
/// config m4=<mode> l3=<guard> nonprincipal=<bool>
/// set <subset>...
///
/// A file may hold several records; each starts with its header line.
std::vector<Certificate> parse_certificate_file(std::string_view text, const ConnectivitySystem& system);
std::string render_certificate(const ConnectivitySystem& system, const Certificate& certificate);

struct StoredWidthCertificate {
  std::string system_name;
  std::uint64_t system_hash = 0;
  WidthCertificate certificate;
};

/// width-certificate
/// system / system-hash
/// variant paper|prefix-only
/// ordering <label>...
/// prefix-values <nat>...
/// singleton-values <nat>...
/// width <nat>
StoredWidthCertificate parse_width_certificate(std::string_view text, const ConnectivitySystem& system);
std::string render_width_certificate(const ConnectivitySystem& system, const WidthCertificate& certificate);

/// counterexample <claim>
/// system / system-hash / order
/// side <side>
/// structure <kind>
/// config ...
/// then optionally the width block (variant .. width) and a `family` line
/// followed by its set lines. Several records per file.
std::vector<Counterexample> parse_counterexample_file(std::string_view text, const ConnectivitySystem& system);
std::string render_counterexample(const ConnectivitySystem& system, const Counterexample& counterexample);

std::string render_config(const VariantConfig& config);

}  // namespace linwidth
