#pragma once

#include <optional>
#include <utility>

#include "tiverify/lattice.hpp"
#include "tiverify/predicates.hpp"

namespace tiv {

/// Kernel/complement pair witnessing Frobenius structure: the kernel is
/// normal, the complement acts on it without non-identity fixed points,
/// and |kernel| * |complement| = |G|. kernel_prime/kernel_rank are set
/// when the kernel is elementary abelian.
struct FrobeniusDecomposition {
  Subgroup kernel;
  Subgroup complement;
  std::optional<int> kernel_prime;
  std::optional<int> kernel_rank;
};

/// H = q8_part x odd_cyclic_part with the parts commuting elementwise and
/// intersecting trivially. The odd part may be trivial.
struct Q8OddCyclicDecomposition {
  Subgroup q8_part;
  Subgroup odd_cyclic_part;
};

bool is_abelian(const Subgroup& h);
bool is_cyclic(const Subgroup& h);

/// True iff every Sylow subgroup of H is normal in H (equivalently H is
/// the direct product of its Sylow subgroups).
bool is_nilpotent(const Subgroup& h);

/// Every subgroup of H is normal in H. `lattice` is the lattice of the
/// parent group; only the subgroups inside H are consulted.
bool is_dedekind(const Subgroup& h, const SubgroupLattice& lattice);

/// (q, r) when H is abelian of order q^r and exponent q; nullopt otherwise
/// (including the trivial group).
std::optional<std::pair<int, int>> elementary_abelian_params(const Subgroup& h);

/// |H| = 2^n with n >= 3, non-cyclic, exactly one element of order 2.
bool is_generalized_quaternion(const Subgroup& h);

/// Searches the lattice for A isomorphic to Q8 and B odd-order cyclic with
/// A, B commuting elementwise, A cap B = 1 and |A||B| = |H|.
std::optional<Q8OddCyclicDecomposition> q8_odd_cyclic_decomposition(
    const Subgroup& h, const SubgroupLattice& lattice);

/// All nontrivial normal subgroups containing no smaller nontrivial normal
/// subgroup. For a simple group this is the group itself.
std::vector<Subgroup> minimal_normal_subgroups(const GroupTable& g,
                                               const SubgroupLattice& lattice);

/// Searches proper nontrivial normal subgroups N for a complement M with
/// fixed-point-free conjugation action; the kernel is unique when one
/// exists.
std::optional<FrobeniusDecomposition> frobenius_decomposition(
    const GroupTable& g, const SubgroupLattice& lattice);

/// True iff no subgroup L with 1 < L < N satisfies L^x = L for all x in
/// p1. Requires p1 to normalize N (Error otherwise) and both nontrivial.
bool acts_irreducibly(const Subgroup& p1, const Subgroup& n,
                      const SubgroupLattice& lattice);

/// Some a in A, b in B with [a, b] != 1.
bool commutator_nontrivial(const Subgroup& a, const Subgroup& b);

/// Elementwise commuting test between two subgroups.
bool commute_elementwise(const Subgroup& a, const Subgroup& b);

}  // namespace tiv
