#pragma once

#include <vector>

#include "tiverify/lattice.hpp"
#include "tiverify/subgroup.hpp"

namespace tiv {

/// { g : gh = hg for all h in H }.
Subgroup centralizer(const GroupTable& g, const Subgroup& h);

/// { g : H^g = H }.
Subgroup normalizer(const GroupTable& g, const Subgroup& h);

/// Least normal subgroup of K containing H (the join of all K-conjugates
/// of H). Requires H <= K.
Subgroup normal_closure(const Subgroup& h, const Subgroup& k);

bool is_normal(const Subgroup& h, const GroupTable& g);

/// Descending normal-closure chain criterion: K0 = G, K_{i+1} =
/// normal_closure(H, K_i); H is subnormal iff the chain stabilizes at H.
bool is_subnormal(const Subgroup& h, const GroupTable& g);

/// Trivial-intersection property: H^x cap H is trivial or H for every x.
/// Only one representative per coset of the normalizer is tested, since
/// H^x depends only on that coset.
bool is_ti(const Subgroup& h, const GroupTable& g);

/// C_G(H) <= H.
bool is_self_centralizing(const Subgroup& h, const GroupTable& g);

/// All subgroups in the lattice whose order is the exact p-part of |G|.
/// Throws Error when p does not divide |G|.
std::vector<Subgroup> sylow_subgroups(const GroupTable& g,
                                      const SubgroupLattice& lattice, int p);

/// One Sylow p-subgroup of H, grown from a p-element through normalizer
/// steps; does not need the subgroup lattice. Returns the trivial subgroup
/// when p does not divide |H|.
Subgroup sylow_subgroup_of(const Subgroup& h, int p);

}  // namespace tiv
