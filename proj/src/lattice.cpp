#include "tiverify/lattice.hpp"

#include <algorithm>

#include "tiverify/errors.hpp"

namespace tiv {

int SubgroupLattice::index_of(const ElementSet& members) const {
  auto it = by_hash_.find(members.hash());
  if (it == by_hash_.end()) return -1;
  for (int i : it->second)
    if (all[i].members == members) return i;
  return -1;
}

std::vector<int> SubgroupLattice::indices_within(const Subgroup& h) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (all[i].members.is_subset_of(h.members)) out.push_back(i);
  return out;
}

SubgroupLattice all_subgroups(const GroupTable& g, const LatticeLimits& limits) {
  if (g.order() > limits.max_order) throw CapError("lattice too large");

  struct Dedup {
    std::unordered_map<size_t, std::vector<int>> map;
    const std::vector<Subgroup>* found;
    bool insert(const Subgroup& s, int idx) {
      auto& bucket = map[s.members.hash()];
      for (int i : bucket)
        if ((*found)[i].members == s.members) return false;
      bucket.push_back(idx);
      return true;
    }
    int lookup(const ElementSet& m) const {
      auto it = map.find(m.hash());
      if (it == map.end()) return -1;
      for (int i : it->second)
        if ((*found)[i].members == m) return i;
      return -1;
    }
  };

  std::vector<Subgroup> found;
  Dedup dedup;
  dedup.found = &found;
  auto add = [&](Subgroup s) {
    int idx = static_cast<int>(found.size());
    found.push_back(std::move(s));
    if (!dedup.insert(found.back(), idx)) {
      found.pop_back();
      return;
    }
    if (static_cast<long>(found.size()) > limits.max_subgroups)
      throw CapError("lattice too large");
  };

  // Seed: trivial plus every cyclic subgroup.
  add(trivial_subgroup(g));
  for (int x = 1; x < g.order(); ++x) add(generated_subgroup(g, {x}));

  // Close under pairwise join. Every subgroup is the join of its cyclic
  // subgroups, so the fixpoint is the full lattice.
  for (size_t i = 1; i < found.size(); ++i) {
    for (size_t j = 1; j <= i; ++j) {
      if (found[j].members.is_subset_of(found[i].members)) continue;
      add(join(found[i], found[j]));
    }
  }

  SubgroupLattice lattice;
  lattice.parent = &g;
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.members < b.members;
  });
  lattice.all = std::move(found);
  for (int i = 0; i < lattice.size(); ++i)
    lattice.by_hash_[lattice.all[i].members.hash()].push_back(i);

  // Conjugacy classes by orbit expansion. The join closure of a
  // conjugation-closed seed set is conjugation-closed, so every conjugate
  // is already listed.
  lattice.class_of.assign(lattice.size(), -1);
  for (int i = 0; i < lattice.size(); ++i) {
    if (lattice.class_of[i] != -1) continue;
    int cls = static_cast<int>(lattice.conjugacy_classes.size());
    std::vector<int> orbit{i};
    lattice.class_of[i] = cls;
    for (size_t q = 0; q < orbit.size(); ++q) {
      const Subgroup& s = lattice.all[orbit[q]];
      for (int x = 0; x < g.order(); ++x) {
        Subgroup c = conjugate_subgroup(s, x);
        int idx = lattice.index_of(c.members);
        if (idx < 0) throw Error("lattice is not closed under conjugation");
        if (lattice.class_of[idx] == -1) {
          lattice.class_of[idx] = cls;
          orbit.push_back(idx);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    lattice.conjugacy_classes.push_back(std::move(orbit));
  }
  return lattice;
}

}  // namespace tiv
