#pragma once

#include "linwidth/family.hpp"
#include "linwidth/generate.hpp"
#include "linwidth/system.hpp"
#include "linwidth/system_file.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <regex>
#include <stdexcept>
#include <sstream>
#include <string>
#include <vector>

#ifndef LINWIDTH_CORPUS_DIR
#error "LINWIDTH_CORPUS_DIR must point at the corpus directory"
#endif

namespace fixtures {

using namespace linwidth;

inline std::filesystem::path corpus_dir() { return LINWIDTH_CORPUS_DIR; }

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline ConnectivitySystem load(const std::filesystem::path& path) {
  return parse_system_file(read_file(path));
}

inline ConnectivitySystem named(const std::string& name) {
  return load(corpus_dir() / "systems" / (name + ".sys"));
}

// Every system file in the corpus: hand-built ones first, then generated.
inline std::vector<std::filesystem::path> corpus_files() {
  std::vector<std::filesystem::path> out;
  for (const char* sub : {"systems", "generated"}) {
    std::vector<std::filesystem::path> part;
    for (const auto& entry : std::filesystem::directory_iterator(corpus_dir() / sub)) {
      if (entry.path().extension() == ".sys") part.push_back(entry.path());
    }
    std::sort(part.begin(), part.end());
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

inline std::vector<ConnectivitySystem> corpus(std::size_t max_n = 64) {
  std::vector<ConnectivitySystem> out;
  for (const auto& path : corpus_files()) {
    auto system = load(path);
    if (system.size() <= max_n) out.push_back(std::move(system));
  }
  return out;
}

inline std::vector<Value> table_of(const ConnectivitySystem& system) {
  std::vector<Value> t(std::size_t{1} << system.size());
  for (std::size_t a = 0; a < t.size(); ++a) t[a] = system.value(Subset{a});
  return t;
}

inline Subset subset(const ConnectivitySystem& system, const std::string& text) {
  return system.ground().parse_subset(text);
}

inline SetFamily family(const ConnectivitySystem& system, std::initializer_list<const char*> sets) {
  std::vector<Subset> members;
  for (const char* s : sets) members.push_back(subset(system, s));
  return SetFamily(system.size(), std::move(members));
}

// The request recorded in a generated file's header comment.
inline GenerateRequest request_from_header(const std::string& text) {
  static const std::regex header(R"(# generated: shape=(\S+) size=(\d+) mode=(\S+) seed=(\d+)(?: p=(\S+))?)");
  std::smatch m;
  if (!std::regex_search(text, m, header)) throw std::runtime_error("missing generator header");
  GenerateRequest r;
  r.shape = *parse_shape(m[1].str());
  r.size = std::stoul(m[2].str());
  r.mode = m[3].str() == "vertex-cut" ? Backend::vertex_cut : Backend::edge_boundary;
  r.seed = std::stoull(m[4].str());
  if (m[5].matched) r.p = std::stod(m[5].str());
  const auto name = parse_system_file(text).name();
  if (name != default_system_name(r)) r.name = name;
  return r;
}

}  // namespace fixtures
