#pragma once

#include "linwidth/system.hpp"

#include <string_view>
#include <vector>

namespace linwidth {

/// paper: max of proper prefix values and every singleton value.
/// prefix_only: max of proper prefix values only.
enum class WidthVariant { paper, prefix_only };

std::string_view to_string(WidthVariant variant);

/// A permutation of the ground-set indices, e_1 .. e_n.
class Ordering {
 public:
  Ordering() = default;
  Ordering(std::size_t ground_size, std::vector<Element> sequence);

  const std::vector<Element>& sequence() const { return sequence_; }
  std::size_t size() const { return sequence_.size(); }
  Element operator[](std::size_t i) const { return sequence_[i]; }

  friend bool operator==(const Ordering&, const Ordering&) = default;

 private:
  std::vector<Element> sequence_;
};

struct WidthCertificate {
  Ordering ordering;
  // w_i = f({e_1..e_i}) for 1 <= i <= n-1.
  std::vector<Value> prefix_values;
  // f({e_i}) for 1 <= i <= n.
  std::vector<Value> singleton_values;
  Value width = 0;
  WidthVariant variant = WidthVariant::paper;

  friend bool operator==(const WidthCertificate&, const WidthCertificate&) = default;
};

/// Width recomputed from the certificate's own value lists.
Value recompute_width(const WidthCertificate& certificate);

WidthCertificate width_of_ordering(const ConnectivitySystem& system, const Ordering& ordering,
                                   WidthVariant variant = WidthVariant::paper);

/// Exact linear width by dynamic programming over subsets. The certificate's
/// ordering is the lexicographically least sequence achieving the minimum.
WidthCertificate linear_width(const ConnectivitySystem& system, WidthVariant variant = WidthVariant::paper,
                              Exec exec = Exec::parallel);

/// Brute force over all n! orderings; kept as an independent cross-check.
Value linear_width_oracle(const ConnectivitySystem& system, WidthVariant variant = WidthVariant::paper);

/// True iff some ordering of `a` keeps f of every nonempty prefix (a itself
/// included) at most k. Values are those of the whole system.
bool is_k_linear_branched(const ConnectivitySystem& system, Subset a, Value k);

}  // namespace linwidth
