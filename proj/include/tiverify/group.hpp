#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tiverify/perm.hpp"

namespace tiv {

/// Closure construction aborts beyond this many elements unless the caller
/// raises the limit explicitly.
inline constexpr int kDefaultMaxGroupOrder = 2000;

/// A finite group given by its full multiplication table over dense element
/// indices 0..order-1. The identity is always index 0. Immutable after
/// construction, so instances can be shared freely across threads.
class GroupTable {
 public:
  static constexpr int kIdentity = 0;

  int order() const { return order_; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }

  /// g^-1 * x * g.
  int conjugate(int x, int g) const { return mul(mul(inv(g), x), g); }

  /// x^k for k >= 0.
  int power(int x, int k) const;

  /// Least k >= 1 with x^k = identity (cached).
  int element_order(int x) const { return element_orders_[x]; }

  const std::string& name() const { return name_; }
  const std::string& provenance() const { return provenance_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Present only for groups built from permutations.
  bool has_perms() const { return !perms_.empty(); }
  const Permutation& perm(int index) const { return perms_[index]; }
  /// Index of a permutation element, or -1.
  int index_of(const Permutation& p) const;

  bool same_table(const GroupTable& other) const {
    return order_ == other.order_ && mul_ == other.mul_;
  }

  /// Builds a table from raw row-major data. Validates the group axioms:
  /// index 0 must be a two-sided identity, rows and columns must be
  /// permutations, and associativity is checked exhaustively up to order
  /// 256 (100000 random triples above that).
  static GroupTable from_mul_table(int order, std::vector<int32_t> mul,
                                   std::string name, std::string provenance);

  friend GroupTable group_from_generators(std::vector<Permutation> gens,
                                          std::string name, int max_order);

 private:
  GroupTable() = default;
  void finalize();  // inv_, element_orders_, axiom validation

  int order_ = 0;
  std::vector<int32_t> mul_;
  std::vector<int32_t> inv_;
  std::vector<int32_t> element_orders_;
  std::string name_;
  std::string provenance_;
  std::vector<Permutation> perms_;
};

/// Closure of the generators under composition, breadth-first from the
/// identity in generator order, so the same generator list always produces
/// the identical table. The identity gets index 0. An empty generator list
/// yields the trivial group. Throws CapError("group too large") if the
/// closure exceeds max_order.
GroupTable group_from_generators(std::vector<Permutation> gens,
                                 std::string name,
                                 int max_order = kDefaultMaxGroupOrder);

/// Strictly increasing list of the primes dividing n (empty for n = 1).
std::vector<int> prime_divisors(long long n);

/// Exact p-part of n: the largest power of p dividing n.
long long p_part(long long n, int p);

}  // namespace tiv
