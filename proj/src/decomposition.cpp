#include "linwidth/decomposition.hpp"

#include "linwidth/error.hpp"

#include <algorithm>
#include <numeric>

namespace linwidth {

std::string_view to_string(WidthVariant variant) {
  return variant == WidthVariant::paper ? "paper" : "prefix-only";
}

Ordering::Ordering(std::size_t ground_size, std::vector<Element> sequence) : sequence_(std::move(sequence)) {
  if (sequence_.size() != ground_size) {
    throw Error(ErrorCode::invalid_ordering, "ordering must list every element exactly once");
  }
  std::vector<bool> seen(ground_size, false);
  for (Element e : sequence_) {
    if (e >= ground_size || seen[e]) {
      throw Error(ErrorCode::invalid_ordering, "ordering must list every element exactly once");
    }
    seen[e] = true;
  }
}

Value recompute_width(const WidthCertificate& certificate) {
  Value width = 0;
  for (Value w : certificate.prefix_values) width = std::max(width, w);
  if (certificate.variant == WidthVariant::paper) {
    for (Value w : certificate.singleton_values) width = std::max(width, w);
  }
  return width;
}

WidthCertificate width_of_ordering(const ConnectivitySystem& system, const Ordering& ordering, WidthVariant variant) {
  require_validated(system);
  if (ordering.size() != system.size()) {
    throw Error(ErrorCode::ground_set_mismatch, "ordering does not cover the system's ground set");
  }
  WidthCertificate cert;
  cert.ordering = ordering;
  cert.variant = variant;
  Subset prefix;
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    prefix = prefix.with(ordering[i]);
    if (i + 1 < ordering.size()) cert.prefix_values.push_back(system.value(prefix));
    cert.singleton_values.push_back(system.singleton_value(ordering[i]));
  }
  cert.width = recompute_width(cert);
  return cert;
}

WidthCertificate linear_width(const ConnectivitySystem& system, WidthVariant variant, Exec exec) {
  require_validated(system);
  require_size_at_most(system, kWidthCap, "linear_width");
  const std::size_t n = system.size();
  const auto table = system.dense_table();
  const std::uint64_t full = system.full().bits();

  Value prefix_width = 0;
  if (n > 1) {
    const auto best = kernels::prefix_bottleneck(table, n, exec);
    prefix_width = ~Value{0};
    for (Element e = 0; e < n; ++e) prefix_width = std::min(prefix_width, best[full & ~(std::uint64_t{1} << e)]);
  }
  Value width = prefix_width;
  if (variant == WidthVariant::paper) {
    for (Element e = 0; e < n; ++e) width = std::max(width, system.singleton_value(e));
  }

  // Smallest-index greedy over prefixes that can still be completed within the bound.
  const auto ok = kernels::completable(table, n, width, exec);
  std::vector<Element> sequence;
  std::uint64_t prefix = 0;
  while (prefix != full) {
    for (Element e = 0; e < n; ++e) {
      const std::uint64_t next = prefix | (std::uint64_t{1} << e);
      if (next != prefix && ok[next]) {
        sequence.push_back(e);
        prefix = next;
        break;
      }
    }
  }
  return width_of_ordering(system, Ordering(n, std::move(sequence)), variant);
}

Value linear_width_oracle(const ConnectivitySystem& system, WidthVariant variant) {
  require_validated(system);
  require_size_at_most(system, kOracleCap, "linear_width_oracle");
  std::vector<Element> perm(system.size());
  std::iota(perm.begin(), perm.end(), Element{0});
  Value best = ~Value{0};
  do {
    best = std::min(best, width_of_ordering(system, Ordering(perm.size(), perm), variant).width);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool is_k_linear_branched(const ConnectivitySystem& system, Subset a, Value k) {
  require_validated(system);
  if (!system.ground().owns(a)) {
    throw Error(ErrorCode::ground_set_mismatch, "subset is not over the system's ground set");
  }
  if (a.size() > kBranchedCap) {
    throw Error(ErrorCode::size_limit_exceeded, "is_k_linear_branched supports subsets of at most 16 elements");
  }
  const auto elements = a.elements();
  const std::size_t m = elements.size();
  const std::uint32_t count = std::uint32_t{1} << m;
  std::vector<Subset> global(count);
  std::vector<std::uint8_t> reach(count, 0);
  reach[0] = 1;
  for (std::uint32_t t = 1; t < count; ++t) {
    global[t] = global[t & (t - 1)].with(elements[std::countr_zero(t)]);
    if (system.value(global[t]) > k) continue;
    for (std::uint32_t rest = t; rest != 0; rest &= rest - 1) {
      if (reach[t & ~(rest & -rest)]) {
        reach[t] = 1;
        break;
      }
    }
  }
  return reach[count - 1] != 0;
}

}  // namespace linwidth
