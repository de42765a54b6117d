#pragma once

// Brute-force reference implementations used only by the tests. Each one is
// written straight from the definitions, with exhaustive quantifiers and no
// shared code with the library beyond the Subset/SetFamily value types.

#include "linwidth/family.hpp"
#include "linwidth/subset.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using linwidth::Subset;
using linwidth::Value;
using Table = std::vector<Value>;
using Mask = std::uint64_t;

inline Mask full(std::size_t n) { return (Mask{1} << n) - 1; }
inline bool has(Mask a, std::size_t e) { return (a >> e) & 1U; }

// f(A) = number of vertices with an incident edge in A and another outside A.
inline Table edge_boundary(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  const std::size_t n = edges.size();
  Table t(std::size_t{1} << n);
  for (Mask a = 0; a <= full(n); ++a) {
    Value count = 0;
    for (std::size_t v = 0; v < vertices; ++v) {
      bool inside = false, outside = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (edges[i].first != v && edges[i].second != v) continue;
        (has(a, i) ? inside : outside) = true;
      }
      if (inside && outside) ++count;
    }
    t[a] = count;
  }
  return t;
}

struct Link {
  std::size_t u, v;
  Value w;
};

inline Table vertex_cut(std::size_t n, const std::vector<Link>& links) {
  Table t(std::size_t{1} << n);
  for (Mask a = 0; a <= full(n); ++a) {
    Value sum = 0;
    for (const auto& l : links) {
      if (has(a, l.u) != has(a, l.v)) sum += l.w;
    }
    t[a] = sum;
  }
  return t;
}

inline bool symmetric_submodular(const Table& t, std::size_t n) {
  for (Mask a = 0; a <= full(n); ++a) {
    if (t[a] != t[full(n) & ~a]) return false;
    for (Mask b = 0; b <= full(n); ++b) {
      if (t[a] + t[b] < t[a & b] + t[a | b]) return false;
    }
  }
  return true;
}

// Width of one ordering; prefix_only drops the singleton terms.
inline Value ordering_width(const Table& t, const std::vector<std::size_t>& order, bool prefix_only) {
  Value w = 0;
  Mask prefix = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    prefix |= Mask{1} << order[i];
    if (i + 1 < order.size()) w = std::max(w, t[prefix]);
    if (!prefix_only) w = std::max(w, t[Mask{1} << order[i]]);
  }
  return w;
}

// Minimum width and the lexicographically least ordering attaining it.
inline std::pair<Value, std::vector<std::size_t>> best_ordering(const Table& t, std::size_t n, bool prefix_only) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Value best = ~Value{0};
  std::vector<std::size_t> arg;
  do {
    const Value w = ordering_width(t, perm, prefix_only);
    if (w < best) {
      best = w;
      arg = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best, arg};
}

// Membership predicate over masks.
using Family = std::vector<bool>;

inline Family as_family(const linwidth::SetFamily& f, std::size_t n) {
  Family out(std::size_t{1} << n, false);
  for (Subset a : f) out[a.bits()] = true;
  return out;
}

inline bool all_efficient(const Table& t, const Family& m, Value k) {
  for (Mask a = 0; a < m.size(); ++a) {
    if (m[a] && t[a] > k) return false;
  }
  return true;
}

inline bool is_tangle(const Table& t, std::size_t n, Value k, const Family& l, bool guarded) {
  if (!all_efficient(t, l, k) || !l[0]) return false;
  for (Mask a = 0; a <= full(n); ++a) {
    if (t[a] <= k && l[a] == l[full(n) & ~a]) return false;
  }
  for (Mask a = 0; a <= full(n); ++a) {
    for (Mask b = 0; b <= full(n); ++b) {
      if (!l[a] || !l[b]) continue;
      for (std::size_t e = 0; e < n; ++e) {
        if (guarded && t[Mask{1} << e] > k) continue;
        if ((a | b | (Mask{1} << e)) == full(n)) return false;
      }
    }
  }
  return true;
}

inline bool is_single_filter(const Table& t, std::size_t n, Value k, const Family& s) {
  if (!all_efficient(t, s, k) || s[0]) return false;
  for (Mask a = 0; a <= full(n); ++a) {
    if (!s[a]) continue;
    for (std::size_t e = 0; e < n; ++e) {
      const Mask smaller = a & ~(Mask{1} << e);
      if (t[Mask{1} << e] <= k && t[smaller] <= k && !s[smaller]) return false;
    }
    for (Mask b = 0; b <= full(n); ++b) {
      if ((a & ~b) == 0 && a != b && t[b] <= k && !s[b]) return false;
    }
  }
  return true;
}

inline bool is_single_ultrafilter(const Table& t, std::size_t n, Value k, const Family& s, bool nonprincipal) {
  if (!is_single_filter(t, n, k, s)) return false;
  for (Mask a = 0; a <= full(n); ++a) {
    if (t[a] <= k && !s[a] && !s[full(n) & ~a]) return false;
  }
  if (nonprincipal) {
    for (std::size_t e = 0; e < n; ++e) {
      if (t[Mask{1} << e] <= k && s[Mask{1} << e]) return false;
    }
  }
  return true;
}

enum class Kind { matroid, greedoid, antimatroid };

inline bool is_matroid_like(const Table& t, std::size_t n, Value k, const Family& m, Kind kind, bool ultra, bool prime,
                            bool exclusive) {
  auto light = [&](std::size_t e) { return t[Mask{1} << e] <= k; };
  if (!all_efficient(t, m, k) || !m[0]) return false;
  for (Mask a = 0; a <= full(n); ++a) {
    if (!m[a]) continue;
    if (kind == Kind::matroid) {
      for (Mask b = 0; b <= a; ++b) {
        if ((b & ~a) == 0 && t[b] <= k && !m[b]) return false;
      }
    }
    for (Mask b = 0; b <= full(n); ++b) {
      if (!m[b] || std::popcount(a) >= std::popcount(b)) continue;
      bool ok = false;
      for (std::size_t e = 0; e < n; ++e) {
        const Mask grown = a | (Mask{1} << e);
        if (has(b, e) && !has(a, e) && light(e) && t[grown] <= k && m[grown]) ok = true;
      }
      if (!ok) return false;
    }
    if (kind == Kind::antimatroid && a != 0) {
      bool ok = false;
      for (std::size_t e = 0; e < n; ++e) {
        const Mask shrunk = a & ~(Mask{1} << e);
        if (has(a, e) && light(e) && t[shrunk] <= k && m[shrunk]) ok = true;
      }
      if (!ok) return false;
    }
  }
  if (ultra) {
    for (Mask a = 0; a <= full(n); ++a) {
      if (t[a] > k) continue;
      const bool x = m[a], y = m[full(n) & ~a];
      if (exclusive ? x == y : !(x || y)) return false;
    }
  }
  if (prime) {
    for (std::size_t e = 0; e < n; ++e) {
      if (light(e) && !m[Mask{1} << e]) return false;
    }
  }
  return true;
}

// Calls visit(family) for every family drawn from `universe`.
inline void for_each_family(const std::vector<Mask>& universe, std::size_t n,
                            const std::function<void(const Family&)>& visit) {
  Family fam(std::size_t{1} << n, false);
  const std::uint64_t count = std::uint64_t{1} << universe.size();
  for (std::uint64_t pick = 0; pick < count; ++pick) {
    for (std::size_t i = 0; i < universe.size(); ++i) fam[universe[i]] = (pick >> i) & 1U;
    visit(fam);
  }
}

inline std::vector<Mask> efficient_sets(const Table& t, Value k) {
  std::vector<Mask> out;
  for (Mask a = 0; a < t.size(); ++a) {
    if (t[a] <= k) out.push_back(a);
  }
  return out;
}

// Maximal single filter: a single filter with no single filter strictly above it.
inline bool is_maximal_single_filter(const Table& t, std::size_t n, Value k, const Family& s) {
  if (!is_single_filter(t, n, k, s)) return false;
  bool maximal = true;
  for_each_family(efficient_sets(t, k), n, [&](const Family& other) {
    if (!maximal || other == s) return;
    for (Mask a = 0; a < s.size(); ++a) {
      if (s[a] && !other[a]) return;
    }
    if (is_single_filter(t, n, k, other)) maximal = false;
  });
  return maximal;
}

inline linwidth::SetFamily to_set_family(const Family& m, std::size_t n) {
  std::vector<Subset> members;
  for (Mask a = 0; a < m.size(); ++a) {
    if (m[a]) members.emplace_back(a);
  }
  return linwidth::SetFamily(n, std::move(members));
}

}  // namespace oracle
