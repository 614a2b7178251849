#pragma once

#include <cstdint>
#include <vector>

#include "tiverify/group.hpp"

namespace tiv {

/// Fixed-universe bitset over element indices of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  int universe() const { return universe_; }
  void add(int e) { words_[e >> 6] |= uint64_t{1} << (e & 63); }
  void remove(int e) { words_[e >> 6] &= ~(uint64_t{1} << (e & 63)); }
  bool contains(int e) const {
    return (words_[e >> 6] >> (e & 63)) & 1;
  }
  int count() const;
  bool is_subset_of(const ElementSet& other) const;
  std::vector<int> elements() const;  // ascending

  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator|=(const ElementSet& other);

  const std::vector<uint64_t>& words() const { return words_; }
  size_t hash() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.words_ == b.words_;
  }
  /// Deterministic total order (word-lexicographic); used to fix the
  /// lattice ordering and witness selection.
  friend bool operator<(const ElementSet& a, const ElementSet& b) {
    return a.words_ < b.words_;
  }

 private:
  int universe_ = 0;
  std::vector<uint64_t> words_;
};

/// A subgroup of a GroupTable, stored as the bitset of its members.
/// Instances are only created by operations that guarantee closure.
struct Subgroup {
  const GroupTable* parent = nullptr;
  ElementSet members;
  int order = 0;

  bool contains(int e) const { return members.contains(e); }
  std::vector<int> elements() const { return members.elements(); }
  bool is_subgroup_of(const Subgroup& other) const {
    return members.is_subset_of(other.members);
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent == b.parent && a.members == b.members;
  }
};

Subgroup trivial_subgroup(const GroupTable& g);
Subgroup whole_group(const GroupTable& g);

/// Least subgroup containing the seed elements (closure under products;
/// inverses follow from finiteness). Empty seeds give the trivial subgroup.
Subgroup generated_subgroup(const GroupTable& g, const std::vector<int>& seeds);

/// Wraps an element set that is already known to be closed. Validates in
/// debug-style: identity present and closure under products.
Subgroup subgroup_from_members(const GroupTable& g, const ElementSet& members);

/// Bitset intersection; a subgroup again. Throws Error on parent mismatch.
Subgroup intersect(const Subgroup& h, const Subgroup& k);

/// Subgroup generated by the union. Throws Error on parent mismatch.
Subgroup join(const Subgroup& h, const Subgroup& k);

/// { g^-1 h g : h in H }.
Subgroup conjugate_subgroup(const Subgroup& h, int g);

/// Small generating set, grown greedily over the members in index order.
std::vector<int> generating_set(const Subgroup& h);

}  // namespace tiv
