// Command-line front end: validate, width, check, find, duality, gen, verify.

#include "linwidth/error.hpp"
#include "linwidth/formats.hpp"
#include "linwidth/generate.hpp"
#include "linwidth/report.hpp"
#include "linwidth/system_file.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace linwidth;

constexpr int kExitFail = 2;
constexpr int kExitNone = 3;
constexpr int kExitCounterexample = 4;
constexpr int kExitUsage = 64;

struct Globals {
  bool json = false;
  bool quiet = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
}

void emit(const Globals& g, const Report& report) {
  if (!g.quiet) std::cout << render_report(report, g.json ? Format::json : Format::text);
}

Value order_to_k(Value order) {
  if (order == 0) throw CLI::ValidationError("--order", "order must be at least 1");
  return order - 1;
}

// Options shared by check and find.
struct ConfigFlags {
  std::string m4 = "exclusive";
  std::string l3 = "guarded";
  bool nonprincipal = false;

  void attach(CLI::App* app) {
    app->add_option("--m4", m4, "orientation axiom reading")->check(CLI::IsMember({"exclusive", "inclusive"}));
    app->add_option("--l3", l3, "tangle crossing axiom form")->check(CLI::IsMember({"guarded", "unguarded"}));
    app->add_flag("--nonprincipal", nonprincipal, "forbid k-efficient singletons (ultrafilters)");
  }
  VariantConfig config() const {
    return VariantConfig{m4 == "exclusive" ? M4Mode::exclusive : M4Mode::inclusive,
                         l3 == "guarded" ? L3Guard::guarded : L3Guard::unguarded, nonprincipal};
  }
};

int run_validate(const Globals& g, const std::string& path) {
  auto system = parse_system_file(read_file(path), Validation::deferred);
  const auto result = validate_system(system, ReportMode::all);
  emit(g, validation_report(system, result));
  return result.passed ? 0 : kExitFail;
}

int run_width(const Globals& g, const std::string& path, const std::string& variant_name, bool oracle,
              const std::string& save) {
  const auto system = parse_system_file(read_file(path));
  const auto variant = variant_name == "paper" ? WidthVariant::paper : WidthVariant::prefix_only;
  const auto cert = linear_width(system, variant);
  std::optional<Value> cross;
  if (oracle) cross = linear_width_oracle(system, variant);
  if (!save.empty()) write_file(save, render_width_certificate(system, cert));
  emit(g, width_report(system, cert, cross));
  return !cross || *cross == cert.width ? 0 : kExitFail;
}

int run_check(const Globals& g, const std::string& kind_name, Value order, const std::string& system_path,
              const std::string& family_path, const ConfigFlags& flags, bool prime, bool ultra,
              const std::string& interpretation) {
  const auto system = parse_system_file(read_file(system_path));
  const auto family = parse_family_file(read_file(family_path), system);
  for (const auto& w : family.warnings) std::cerr << "warning: " << w << '\n';
  CheckRequest request;
  request.kind = *parse_check_kind(kind_name);
  request.k = order_to_k(order);
  request.config = flags.config();
  request.prime = prime;
  request.ultra = ultra;
  request.interpretation =
      interpretation == "upward" ? ClosedSetInterpretation::upward : ClosedSetInterpretation::literal;
  const auto result = linwidth::run_check(system, family.family, request);
  emit(g, check_report(system, request, result));
  return result.passed ? 0 : kExitFail;
}

int run_find(const Globals& g, const std::string& kind_name, Value order, const std::string& path, bool all,
             const ConfigFlags& flags, const std::string& save) {
  const auto system = parse_system_file(read_file(path));
  const auto kind = *parse_structure_kind(kind_name);
  const Value k = order_to_k(order);
  const auto found = find_structure(system, kind, k, flags.config(), all ? kUnlimited : 1);
  if (!save.empty() && !found.empty()) {
    std::string text;
    for (const auto& c : found) text += render_certificate(system, c);
    write_file(save, text);
  }
  const VariantConfig used = found.empty() ? flags.config() : found.front().config;
  emit(g, find_report(system, kind, k, used, found));
  return found.empty() ? kExitNone : 0;
}

int run_duality(const Globals& g, const std::string& path, std::optional<Value> max_order, const std::string& emit_dir) {
  const auto system = parse_system_file(read_file(path));
  SweepOptions options;
  if (max_order) options.max_k = order_to_k(*max_order);
  const auto result = duality_sweep(system, options);
  if (!emit_dir.empty() && !result.counterexamples.empty()) {
    std::string text;
    for (const auto& c : result.counterexamples) text += render_counterexample(system, c);
    write_file(std::filesystem::path(emit_dir) / (system.name() + ".cex"), text);
  }
  emit(g, duality_report(system, result));
  return result.consistent() ? 0 : kExitCounterexample;
}

int run_gen(const std::string& shape, std::size_t size, const std::string& mode, std::uint64_t seed, double p,
            const std::string& name, const std::string& out) {
  GenerateRequest request;
  request.shape = *parse_shape(shape);
  request.size = size;
  request.mode = mode == "vertex-cut" ? Backend::vertex_cut : Backend::edge_boundary;
  request.seed = seed;
  request.p = p;
  if (!name.empty()) request.name = name;
  const auto text = generate_system(request);
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
  }
  return 0;
}

std::string first_keyword(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream words(line);
    std::string word;
    if (words >> word) return word;
  }
  return {};
}

int run_verify(const Globals& g, const std::string& system_path, const std::string& record_path) {
  const auto system = parse_system_file(read_file(system_path));
  const auto text = read_file(record_path);
  const auto header = first_keyword(text);
  std::size_t records = 0;
  std::size_t failed = 0;
  if (header == "certificate") {
    for (const auto& c : parse_certificate_file(text, system)) {
      ++records;
      failed += verify_certificate(system, c) ? 0 : 1;
    }
  } else if (header == "width-certificate") {
    const auto stored = parse_width_certificate(text, system);
    records = 1;
    failed = stored.system_hash == system_hash(system) && verify_width_certificate(system, stored.certificate) ? 0 : 1;
  } else if (header == "counterexample") {
    for (const auto& c : parse_counterexample_file(text, system)) {
      ++records;
      failed += verify_counterexample(system, c) ? 0 : 1;
    }
  } else {
    throw Error(ErrorCode::malformed_certificate, "unrecognised record type '" + header + "'");
  }
  if (records == 0) throw Error(ErrorCode::malformed_certificate, "no records in '" + record_path + "'");
  emit(g, verify_report(system, record_path, records, failed));
  return failed == 0 ? 0 : kExitFail;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::validation_failed: return kExitFail;
    case ErrorCode::size_limit_exceeded:
    case ErrorCode::not_validated:
    case ErrorCode::non_efficient_seed:
    case ErrorCode::ground_set_mismatch: return 1;
    default: return kExitUsage;
  }
}

std::vector<std::string> check_kinds() {
  return {"boolean-filter", "boolean-ultrafilter", "tangle", "single-filter", "single-ultrafilter",
          "maximal-single-filter", "matroid", "greedoid", "antimatroid", "closed-set-system"};
}

std::vector<std::string> structure_kinds() {
  return {"linear-tangle", "tangle", "single-ultrafilter", "prime-ultra-matroid", "prime-ultra-antimatroid",
          "prime-ultra-greedoid"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connectivity systems: linear width, obstruction checkers and searches, duality sweeps."};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_flag("--quiet", g.quiet, "print nothing; report through the exit code");

  std::string system_path, family_path, record_path, kind, save;

  auto* validate = app.add_subcommand("validate", "check the symmetric submodular axioms");
  validate->add_option("system", system_path)->required();

  std::string variant = "paper";
  bool oracle = false;
  auto* width = app.add_subcommand("width", "exact linear width with an optimal ordering");
  width->add_option("system", system_path)->required();
  width->add_option("--variant", variant)->check(CLI::IsMember({"paper", "prefix-only"}));
  width->add_flag("--oracle", oracle, "cross-check against brute force (n <= 8)");
  width->add_option("--save", save, "write the width certificate to this file");

  Value order = 0;
  ConfigFlags check_flags;
  bool prime = false, ultra = false;
  std::string interpretation = "literal";
  auto* check = app.add_subcommand("check", "judge a family against an axiom system");
  check->add_option("kind", kind)->required()->check(CLI::IsMember(check_kinds()));
  check->add_option("--order", order, "order k+1")->required();
  check->add_option("system", system_path)->required();
  check->add_option("family", family_path)->required();
  check_flags.attach(check);
  check->add_flag("--prime", prime, "require every k-efficient singleton (M5)");
  check->add_flag("--ultra", ultra, "require the orientation axiom (M4)");
  check->add_option("--interpretation", interpretation)->check(CLI::IsMember({"literal", "upward"}));

  ConfigFlags find_flags;
  bool all = false;
  auto* find = app.add_subcommand("find", "search for an obstruction of the given order");
  find->add_option("kind", kind)->required()->check(CLI::IsMember(structure_kinds()));
  find->add_option("--order", order, "order k+1")->required();
  find->add_option("system", system_path)->required();
  find->add_flag("--all", all, "list every structure instead of the first");
  find->add_option("--save", save, "write the certificates to this file");
  find_flags.attach(find);

  std::optional<Value> max_order;
  std::string emit_dir;
  auto* duality = app.add_subcommand("duality", "sweep every order, comparing width with obstructions");
  duality->add_option("system", system_path)->required();
  duality->add_option("--max-order", max_order, "largest order to sweep (default: max f + 1)");
  duality->add_option("--emit-dir", emit_dir, "write counterexamples to <dir>/<system>.cex");

  std::string shape, mode = "edge-boundary", name, out;
  std::size_t size = 0;
  std::uint64_t seed = 1;
  double p = 0.5;
  auto* gen = app.add_subcommand("gen", "generate a graph-backed system file");
  gen->add_option("shape", shape)->required()->check(CLI::IsMember({"path", "cycle", "star", "complete", "random-graph"}));
  gen->add_option("--size", size)->required();
  gen->add_option("--mode", mode)->check(CLI::IsMember({"edge-boundary", "vertex-cut"}));
  gen->add_option("--seed", seed);
  gen->add_option("--p", p, "edge probability for random graphs");
  gen->add_option("--name", name);
  gen->add_option("-o,--output", out);

  auto* verify = app.add_subcommand("verify", "replay a certificate, width certificate or counterexample file");
  verify->add_option("system", system_path)->required();
  verify->add_option("record", record_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*validate) return run_validate(g, system_path);
    if (*width) return run_width(g, system_path, variant, oracle, save);
    if (*check) {
      return run_check(g, kind, order, system_path, family_path, check_flags, prime, ultra, interpretation);
    }
    if (*find) return run_find(g, kind, order, system_path, all, find_flags, save);
    if (*duality) return run_duality(g, system_path, max_order, emit_dir);
    if (*gen) return run_gen(shape, size, mode, seed, p, name, out);
    if (*verify) return run_verify(g, system_path, record_path);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
