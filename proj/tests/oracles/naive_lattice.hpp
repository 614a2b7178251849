#pragma once

// Independent subgroup-lattice oracle: enumerates every subset of the
// element set that contains the identity and has divisor size, and keeps
// the ones closed under multiplication (a nonempty closed subset of a
// finite group is a subgroup, so this is the complete lattice). Meant for
// |G| <= 24; cost grows as binomial(|G|-1, d-1) per divisor d.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "tiverify/group.hpp"

namespace naive_oracle {

/// Sorted bitmasks of all subgroups of g.
inline std::vector<uint32_t> all_subgroup_masks(const tiv::GroupTable& g) {
  const int n = g.order();
  std::vector<uint32_t> found;

  std::vector<int> chosen{0};
  auto closed_or_pending = [&](uint32_t mask, int limit) {
    // Every product of chosen elements must be chosen already or still
    // addable (index above the last chosen one).
    for (int a : chosen)
      for (int b : chosen) {
        int p = g.mul(a, b);
        if (!((mask >> p) & 1) && p <= limit) return false;
      }
    return true;
  };

  auto fully_closed = [&](uint32_t mask) {
    for (int a : chosen)
      for (int b : chosen)
        if (!((mask >> g.mul(a, b)) & 1)) return false;
    return true;
  };

  std::vector<int> divisors;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);

  for (int d : divisors) {
    // Choose d-1 non-identity elements in increasing order.
    std::vector<int> stack;
    uint32_t mask = 1;  // identity
    std::function<void(int, int)> extend = [&](int last, int remaining) {
      if (remaining == 0) {
        if (fully_closed(mask)) found.push_back(mask);
        return;
      }
      for (int next = last + 1; next <= n - remaining; ++next) {
        mask |= uint32_t{1} << next;
        chosen.push_back(next);
        if (closed_or_pending(mask, next)) extend(next, remaining - 1);
        chosen.pop_back();
        mask &= ~(uint32_t{1} << next);
      }
    };
    extend(0, d - 1);
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace naive_oracle
