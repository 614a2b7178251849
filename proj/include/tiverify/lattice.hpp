#pragma once

#include <unordered_map>
#include <vector>

#include "tiverify/subgroup.hpp"

namespace tiv {

struct LatticeLimits {
  int max_order = 512;        // refuse groups larger than this
  long max_subgroups = 100000;  // refuse lattices larger than this
};

/// The complete list of subgroups of one group, sorted by (order, bitset),
/// together with the partition into conjugacy classes.
struct SubgroupLattice {
  const GroupTable* parent = nullptr;
  std::vector<Subgroup> all;
  std::vector<std::vector<int>> conjugacy_classes;  // indices into `all`
  std::vector<int> class_of;                        // per subgroup

  int size() const { return static_cast<int>(all.size()); }
  /// Index of a subgroup with these members, or -1.
  int index_of(const ElementSet& members) const;
  bool is_normal(int index) const { return conjugacy_classes[class_of[index]].size() == 1; }
  /// Indices of all subgroups contained in `h`, ascending lattice order.
  std::vector<int> indices_within(const Subgroup& h) const;

 private:
  friend SubgroupLattice all_subgroups(const GroupTable&, const LatticeLimits&);
  std::unordered_map<size_t, std::vector<int>> by_hash_;
};

/// Enumerates every subgroup: seeds with all cyclic subgroups, then closes
/// under pairwise join to a fixpoint. Conjugacy classes by orbit expansion.
/// Throws CapError("lattice too large") when either limit is exceeded.
SubgroupLattice all_subgroups(const GroupTable& g,
                              const LatticeLimits& limits = {});

}  // namespace tiv
