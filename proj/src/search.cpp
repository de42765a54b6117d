#include "linwidth/search.hpp"

#include "linwidth/error.hpp"
#include "linwidth/system_file.hpp"

#include <algorithm>

namespace linwidth {

std::string_view to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::linear_tangle: return "linear-tangle";
    case StructureKind::single_ultrafilter: return "single-ultrafilter";
    case StructureKind::prime_ultra_matroid: return "prime-ultra-matroid";
    case StructureKind::prime_ultra_antimatroid: return "prime-ultra-antimatroid";
    case StructureKind::prime_ultra_greedoid: return "prime-ultra-greedoid";
  }
  return "linear-tangle";
}

std::optional<StructureKind> parse_structure_kind(std::string_view text) {
  for (auto kind : {StructureKind::linear_tangle, StructureKind::single_ultrafilter, StructureKind::prime_ultra_matroid,
                    StructureKind::prime_ultra_antimatroid, StructureKind::prime_ultra_greedoid}) {
    if (to_string(kind) == text) return kind;
  }
  if (text == "tangle") return StructureKind::linear_tangle;
  return std::nullopt;
}

CheckRequest check_request_for(StructureKind kind, Value k, const VariantConfig& config) {
  CheckRequest request;
  request.k = k;
  request.config = config;
  switch (kind) {
    case StructureKind::linear_tangle: request.kind = CheckKind::linear_tangle; break;
    case StructureKind::single_ultrafilter: request.kind = CheckKind::single_ultrafilter; break;
    case StructureKind::prime_ultra_matroid: request.kind = CheckKind::matroid; break;
    case StructureKind::prime_ultra_antimatroid: request.kind = CheckKind::antimatroid; break;
    case StructureKind::prime_ultra_greedoid: request.kind = CheckKind::greedoid; break;
  }
  request.ultra = request.prime = kind != StructureKind::linear_tangle && kind != StructureKind::single_ultrafilter;
  return request;
}

SetFamily complement_family(const ConnectivitySystem& system, const SetFamily& family) {
  if (family.ground_size() != system.size() ||
      std::any_of(family.begin(), family.end(), [&](Subset a) { return !system.ground().owns(a); })) {
    throw Error(ErrorCode::ground_set_mismatch, "family is not over the ground set of '" + system.name() + "'");
  }
  std::vector<Subset> out;
  out.reserve(family.size());
  for (Subset a : family) out.push_back(a.complement(system.size()));
  return SetFamily(system.size(), std::move(out));
}

namespace {

using Literal = int;
constexpr Literal positive(int var) { return 2 * var; }
constexpr Literal negative(int var) { return 2 * var + 1; }
constexpr int var_of(Literal lit) { return lit >> 1; }
constexpr bool is_negative(Literal lit) { return (lit & 1) != 0; }

enum : std::int8_t { kUnset = -1, kOut = 0, kIn = 1 };

// Binary clauses and units over membership variables, one per k-efficient set.
class Encoding {
 public:
  Encoding(const ConnectivitySystem& system, Value k) : system_(system), k_(k), n_(system.size()) {
    index_.assign(std::size_t{1} << n_, -1);
    const auto table = system.dense_table();
    for (std::uint64_t a = 0; a < table.size(); ++a) {
      if (table[a] <= k) {
        index_[a] = static_cast<int>(universe_.size());
        universe_.emplace_back(a);
      }
    }
    implied_.assign(2 * universe_.size(), {});
  }

  const std::vector<Subset>& universe() const { return universe_; }
  int var(Subset a) const { return index_[a.bits()]; }
  Subset set_of(int var) const { return universe_[static_cast<std::size_t>(var)]; }
  Value f(Subset a) const { return system_.value(a); }
  bool light(Element e) const { return system_.singleton_value(e) <= k_; }
  std::size_t n() const { return n_; }
  Subset comp(Subset a) const { return a.complement(n_); }

  // A unit on a set outside the universe is either unsatisfiable or vacuous.
  void require(Subset a, bool member) {
    const int v = var(a);
    if (v < 0) {
      if (member) unsatisfiable_ = true;
      return;
    }
    units_.push_back(member ? positive(v) : negative(v));
  }
  void clause(Literal x, Literal y) {
    if (x == y) {
      units_.push_back(x);
      return;
    }
    implied_[static_cast<std::size_t>(x ^ 1)].push_back(y);
    implied_[static_cast<std::size_t>(y ^ 1)].push_back(x);
    if (!is_negative(x) && !is_negative(y)) covering_.emplace_back(x, y);
  }

  bool unsatisfiable() const { return unsatisfiable_; }
  const std::vector<Literal>& units() const { return units_; }
  const std::vector<Literal>& implied(Literal lit) const { return implied_[static_cast<std::size_t>(lit)]; }
  const std::vector<std::pair<Literal, Literal>>& covering() const { return covering_; }

 private:
  const ConnectivitySystem& system_;
  Value k_;
  std::size_t n_;
  std::vector<int> index_;
  std::vector<Subset> universe_;
  std::vector<std::vector<Literal>> implied_;
  std::vector<Literal> units_;
  std::vector<std::pair<Literal, Literal>> covering_;
  bool unsatisfiable_ = false;
};

void encode_pairs(Encoding& enc, bool exactly_one) {
  for (Subset a : enc.universe()) {
    const Subset b = enc.comp(a);
    if (!(a < b)) continue;
    enc.clause(positive(enc.var(a)), positive(enc.var(b)));
    if (exactly_one) enc.clause(negative(enc.var(a)), negative(enc.var(b)));
  }
}

void encode_tangle(Encoding& enc, L3Guard guard) {
  enc.require(Subset{}, true);
  encode_pairs(enc, true);
  const auto& u = enc.universe();
  const Subset full = Subset::full(enc.n());
  auto qualifies = [&](Element e) { return guard == L3Guard::unguarded || enc.light(e); };
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i; j < u.size(); ++j) {
      const Subset missing = full - (u[i] | u[j]);
      bool crossing = false;
      if (missing.empty()) {
        for (Element e = 0; e < enc.n() && !crossing; ++e) crossing = qualifies(e);
      } else if (missing.size() == 1) {
        crossing = qualifies(missing.elements().front());
      }
      if (crossing) enc.clause(negative(static_cast<int>(i)), negative(static_cast<int>(j)));
    }
  }
}

void encode_ultrafilter(Encoding& enc, bool nonprincipal) {
  enc.require(Subset{}, false);
  encode_pairs(enc, false);
  const Subset full = Subset::full(enc.n());
  for (Subset a : enc.universe()) {
    const int va = enc.var(a);
    a.for_each([&](Element e) {
      const int smaller = enc.var(a.without(e));
      if (enc.light(e) && smaller >= 0) enc.clause(negative(va), positive(smaller));
    });
    const std::uint64_t room = (full - a).bits();
    for (std::uint64_t t = room; t != 0; t = (t - 1) & room) {
      const int bigger = enc.var(Subset{a.bits() | t});
      if (bigger >= 0) enc.clause(negative(va), positive(bigger));
    }
  }
  if (nonprincipal) {
    for (Element e = 0; e < enc.n(); ++e) enc.require(Subset::single(e), false);
  }
}

void encode_matroid_like(Encoding& enc, MatroidKind kind, M4Mode mode) {
  enc.require(Subset{}, true);
  encode_pairs(enc, mode == M4Mode::exclusive);
  for (Element e = 0; e < enc.n(); ++e) {
    if (enc.var(Subset::single(e)) >= 0) enc.require(Subset::single(e), true);
  }
  if (kind != MatroidKind::matroid) return;
  for (Subset a : enc.universe()) {
    const int va = enc.var(a);
    for (std::uint64_t t = (a.bits() - 1) & a.bits();; t = (t - 1) & a.bits()) {
      const int smaller = enc.var(Subset{t});
      if (smaller >= 0) enc.clause(negative(va), positive(smaller));
      if (t == 0) break;
    }
  }
}

using Assignment = std::vector<std::int8_t>;

class Search {
 public:
  Search(const ConnectivitySystem& system, StructureKind kind, Value k, const VariantConfig& config,
         std::size_t limit)
      : system_(system),
        kind_(kind),
        k_(k),
        config_(config),
        limit_(limit),
        request_(check_request_for(kind, k, config)),
        enc_(system, k) {
    switch (kind) {
      case StructureKind::linear_tangle: encode_tangle(enc_, config.l3); break;
      case StructureKind::single_ultrafilter: encode_ultrafilter(enc_, config.nonprincipal); break;
      case StructureKind::prime_ultra_matroid: encode_matroid_like(enc_, MatroidKind::matroid, config.m4); break;
      case StructureKind::prime_ultra_antimatroid:
        encode_matroid_like(enc_, MatroidKind::antimatroid, config.m4);
        break;
      case StructureKind::prime_ultra_greedoid: encode_matroid_like(enc_, MatroidKind::greedoid, config.m4); break;
    }
    exchange_ = kind == StructureKind::prime_ultra_matroid || kind == StructureKind::prime_ultra_antimatroid ||
                kind == StructureKind::prime_ultra_greedoid;
  }

  std::vector<SetFamily> run() {
    if (enc_.unsatisfiable() || limit_ == 0) return {};
    Assignment root(enc_.universe().size(), kUnset);
    for (Literal lit : enc_.units()) {
      if (!assign(root, lit)) return {};
    }
    explore(std::move(root), false);
    return std::move(found_);
  }

 private:
  bool done() const { return found_.size() >= limit_; }

  static bool holds(const Assignment& s, Literal lit) {
    return s[static_cast<std::size_t>(var_of(lit))] == (is_negative(lit) ? kOut : kIn);
  }

  bool assign(Assignment& s, Literal lit) const {
    std::vector<Literal> stack{lit};
    while (!stack.empty()) {
      const Literal x = stack.back();
      stack.pop_back();
      auto& slot = s[static_cast<std::size_t>(var_of(x))];
      const std::int8_t want = is_negative(x) ? kOut : kIn;
      if (slot == want) continue;
      if (slot != kUnset) return false;
      slot = want;
      for (Literal y : enc_.implied(x)) stack.push_back(y);
    }
    return true;
  }

  // Exchange (M3) and accessibility (AM2) each need a witness that is not yet
  // ruled out; a requirement left with a single open witness forces it in.
  // Accessibility is implied by M1 and M3 (grow a chain from the empty set
  // inside any member), so it prunes greedoid searches as well.
  bool propagate(Assignment& s) const {
    if (!exchange_) return true;
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<Subset> members;
      for (std::size_t v = 0; v < s.size(); ++v) {
        if (s[v] == kIn) members.push_back(enc_.set_of(static_cast<int>(v)));
      }
      // 0: satisfied, 1: forced (and applied), -1: conflict, 2: still open.
      auto require_one = [&](auto&& candidates) {
        int open_var = -1;
        int open_count = 0;
        bool satisfied = false;
        candidates([&](Subset c) {
          const int v = enc_.var(c);
          if (satisfied || v < 0) return;
          const auto state = s[static_cast<std::size_t>(v)];
          if (state == kIn) satisfied = true;
          if (state == kUnset) {
            open_var = v;
            ++open_count;
          }
        });
        if (satisfied) return 0;
        if (open_count == 0) return -1;
        if (open_count > 1) return 2;
        return assign(s, positive(open_var)) ? 1 : -1;
      };
      for (Subset a : members) {
        if (!a.empty()) {
          const int r = require_one([&](auto&& visit) {
            a.for_each([&](Element e) {
              if (enc_.light(e)) visit(a.without(e));
            });
          });
          if (r < 0) return false;
          changed = changed || r == 1;
        }
        for (Subset b : members) {
          if (a.size() >= b.size()) continue;
          const int r = require_one([&](auto&& visit) {
            (b - a).for_each([&](Element e) {
              if (enc_.light(e)) visit(a.with(e));
            });
          });
          if (r < 0) return false;
          changed = changed || r == 1;
        }
      }
      if (changed) continue;
      // Lookahead: an undecided set that could not join without breaking a
      // requirement is out.
      for (std::size_t v = 0; v < s.size(); ++v) {
        if (s[v] != kUnset) continue;
        const Subset c = enc_.set_of(static_cast<int>(v));
        if (!could_join(s, members, c)) {
          if (!assign(s, negative(static_cast<int>(v)))) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  bool open_set(const Assignment& s, Subset c) const {
    const int v = enc_.var(c);
    return v >= 0 && s[static_cast<std::size_t>(v)] != kOut;
  }

  bool could_join(const Assignment& s, const std::vector<Subset>& members, Subset c) const {
    auto witness = [&](Subset from, Subset pool, bool grow) {
      bool ok = false;
      pool.for_each([&](Element e) {
        ok = ok || (enc_.light(e) && open_set(s, grow ? from.with(e) : from.without(e)));
      });
      return ok;
    };
    if (!c.empty() && !witness(c, c, false)) return false;
    for (Subset m : members) {
      if (m.size() < c.size() && !witness(m, c - m, true)) return false;
      if (c.size() < m.size() && !witness(c, m - c, true)) return false;
    }
    return true;
  }

  SetFamily members_of(const Assignment& s) const {
    std::vector<Subset> members;
    for (std::size_t v = 0; v < s.size(); ++v) {
      if (s[v] == kIn) members.push_back(enc_.set_of(static_cast<int>(v)));
    }
    return SetFamily(system_.size(), std::move(members));
  }

  // Emits the completion with every undecided variable out, if it is a model.
  bool emit_completion(const Assignment& s) {
    for (const auto& [x, y] : enc_.covering()) {
      if (!holds(s, x) && !holds(s, y)) return false;
    }
    SetFamily family = members_of(s);
    if (!run_check(system_, family, request_).passed) return false;
    found_.push_back(std::move(family));
    return true;
  }

  // Solutions of this subtree in canonical (lexicographic) order. With
  // skip_completion set, the all-out completion was already emitted by an
  // ancestor.
  void explore(Assignment s, bool skip_completion) {
    if (done() || !propagate(s)) return;
    const auto first_open = std::find(s.begin(), s.end(), kUnset);
    if (first_open == s.end()) {
      if (!skip_completion) emit_completion(s);
      return;
    }
    const int v = static_cast<int>(first_open - s.begin());
    bool emitted = false;
    // The completion sorts first only when nothing above v is already a member.
    if (!skip_completion && std::find(first_open, s.end(), kIn) == s.end()) emitted = emit_completion(s);
    if (done()) return;
    Assignment with = s;
    if (assign(with, positive(v))) explore(std::move(with), false);
    if (done()) return;
    if (assign(s, negative(v))) explore(std::move(s), skip_completion || emitted);
  }

  const ConnectivitySystem& system_;
  StructureKind kind_;
  Value k_;
  VariantConfig config_;
  std::size_t limit_;
  CheckRequest request_;
  Encoding enc_;
  bool exchange_ = false;
  std::vector<SetFamily> found_;
};

}  // namespace

std::vector<Certificate> find_structure(const ConnectivitySystem& system, StructureKind kind, Value k,
                                        const VariantConfig& config, std::size_t limit) {
  require_validated(system);
  require_size_at_most(system, kSearchCap, "find_structure");
  VariantConfig effective = config;
  // Fields that do not apply to a kind are normalised so certificates compare equal.
  if (kind != StructureKind::linear_tangle) effective.l3 = L3Guard::guarded;
  if (kind == StructureKind::linear_tangle || kind == StructureKind::single_ultrafilter) {
    effective.m4 = M4Mode::exclusive;
  }
  if (kind != StructureKind::single_ultrafilter) effective.nonprincipal = false;

  auto families = Search(system, kind, k, effective, limit).run();
  std::vector<Certificate> out;
  const std::uint64_t hash = system_hash(system);
  for (auto& family : families) {
    out.push_back(Certificate{kind, k, std::move(family), effective, system.name(), hash});
  }
  return out;
}

}  // namespace linwidth
