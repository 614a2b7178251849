#include "doctest.h"
#include "tiverify/corpus.hpp"
#include "tiverify/errors.hpp"
#include "tiverify/structure.hpp"

using namespace tiv;

namespace {

struct Analyzed {
  GroupTable table;
  SubgroupLattice lattice;
  explicit Analyzed(GroupTable g) : table(std::move(g)), lattice(all_subgroups(table)) {}
  Subgroup whole() const { return whole_group(table); }
};

}  // namespace

TEST_CASE("abelian / cyclic / nilpotent recognition") {
  Analyzed q8(build(GroupRecipe::make_dicyclic(2)));
  CHECK_FALSE(is_abelian(q8.whole()));
  CHECK(is_abelian(trivial_subgroup(q8.table)));
  CHECK(is_nilpotent(q8.whole()));  // 2-group

  Analyzed v4(build(GroupRecipe::make_elementary_abelian(2, 2)));
  CHECK(is_abelian(v4.whole()));
  CHECK_FALSE(is_cyclic(v4.whole()));

  CHECK(is_cyclic(trivial_subgroup(v4.table)));
  CHECK(is_cyclic(whole_group(build(GroupRecipe::make_cyclic(15)))));

  Analyzed s3(build(GroupRecipe::make_symmetric(3)));
  CHECK_FALSE(is_nilpotent(s3.whole()));
  CHECK(is_nilpotent(whole_group(build(GroupRecipe::make_cyclic(6)))));
  CHECK(is_nilpotent(whole_group(build(GroupRecipe::make_dihedral(4)))));
}

TEST_CASE("Dedekind groups") {
  Analyzed q8(build(GroupRecipe::make_dicyclic(2)));
  CHECK(is_dedekind(q8.whole(), q8.lattice));
  Analyzed s3(build(GroupRecipe::make_symmetric(3)));
  CHECK_FALSE(is_dedekind(s3.whole(), s3.lattice));
  Analyzed z12(build(GroupRecipe::make_cyclic(12)));
  CHECK(is_dedekind(z12.whole(), z12.lattice));
}

TEST_CASE("elementary abelian parameters") {
  Analyzed v4(build(GroupRecipe::make_elementary_abelian(2, 2)));
  auto p = elementary_abelian_params(v4.whole());
  REQUIRE(p.has_value());
  CHECK(p->first == 2);
  CHECK(p->second == 2);

  Analyzed z9(build(GroupRecipe::make_cyclic(9)));
  CHECK_FALSE(elementary_abelian_params(z9.whole()).has_value());

  Analyzed z5(build(GroupRecipe::make_cyclic(5)));
  auto p5 = elementary_abelian_params(z5.whole());
  REQUIRE(p5.has_value());
  CHECK(*p5 == std::make_pair(5, 1));

  CHECK_FALSE(elementary_abelian_params(trivial_subgroup(z5.table)).has_value());
}

TEST_CASE("generalized quaternion recognition") {
  CHECK(is_generalized_quaternion(whole_group(build(GroupRecipe::make_dicyclic(2)))));
  CHECK(is_generalized_quaternion(whole_group(build(GroupRecipe::make_dicyclic(4)))));
  CHECK(is_generalized_quaternion(whole_group(build(GroupRecipe::make_dicyclic(8)))));
  CHECK_FALSE(is_generalized_quaternion(whole_group(build(GroupRecipe::make_dihedral(4)))));
  CHECK_FALSE(is_generalized_quaternion(whole_group(build(GroupRecipe::make_cyclic(8)))));
  // Dic3 has a unique involution but order 12 is not a 2-power.
  CHECK_FALSE(is_generalized_quaternion(whole_group(build(GroupRecipe::make_dicyclic(3)))));
}

TEST_CASE("Q8 x odd-cyclic decompositions") {
  Analyzed q8(build(GroupRecipe::make_dicyclic(2)));
  auto d = q8_odd_cyclic_decomposition(q8.whole(), q8.lattice);
  REQUIRE(d.has_value());
  CHECK(d->q8_part.order == 8);
  CHECK(d->odd_cyclic_part.order == 1);

  Analyzed q8z3(build(GroupRecipe::make_direct_product(GroupRecipe::make_dicyclic(2),
                                                       GroupRecipe::make_cyclic(3))));
  CHECK(q8z3.table.order() == 24);
  auto d2 = q8_odd_cyclic_decomposition(q8z3.whole(), q8z3.lattice);
  REQUIRE(d2.has_value());
  CHECK(d2->q8_part.order == 8);
  CHECK(d2->odd_cyclic_part.order == 3);

  Analyzed z12(build(GroupRecipe::make_cyclic(12)));
  CHECK_FALSE(q8_odd_cyclic_decomposition(z12.whole(), z12.lattice).has_value());

  // round trip at larger odd cofactors
  for (int m : {5, 7, 9}) {
    CAPTURE(m);
    Analyzed g(build(GroupRecipe::make_direct_product(GroupRecipe::make_dicyclic(2),
                                                      GroupRecipe::make_cyclic(m))));
    auto dm = q8_odd_cyclic_decomposition(g.whole(), g.lattice);
    REQUIRE(dm.has_value());
    CHECK(dm->q8_part.order == 8);
    CHECK(dm->odd_cyclic_part.order == m);
  }
}

TEST_CASE("minimal normal subgroups") {
  Analyzed a5(build(GroupRecipe::make_alternating(5)));
  auto mins = minimal_normal_subgroups(a5.table, a5.lattice);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0].order == 60);  // simple

  Analyzed s3(build(GroupRecipe::make_symmetric(3)));
  auto mins3 = minimal_normal_subgroups(s3.table, s3.lattice);
  REQUIRE(mins3.size() == 1);
  CHECK(mins3[0].order == 3);

  Analyzed a4(build(GroupRecipe::make_alternating(4)));
  auto mins4 = minimal_normal_subgroups(a4.table, a4.lattice);
  REQUIRE(mins4.size() == 1);
  CHECK(mins4[0].order == 4);
}

TEST_CASE("Frobenius decompositions") {
  Analyzed s3(build(GroupRecipe::make_symmetric(3)));
  auto fd = frobenius_decomposition(s3.table, s3.lattice);
  REQUIRE(fd.has_value());
  CHECK(fd->kernel.order == 3);
  CHECK(fd->complement.order == 2);
  CHECK(fd->kernel_prime == 3);
  CHECK(fd->kernel_rank == 1);

  Analyzed a4(build(GroupRecipe::make_alternating(4)));
  auto fda = frobenius_decomposition(a4.table, a4.lattice);
  REQUIRE(fda.has_value());
  CHECK(fda->kernel.order == 4);
  CHECK(fda->complement.order == 3);

  Analyzed q8(build(GroupRecipe::make_dicyclic(2)));
  CHECK_FALSE(frobenius_decomposition(q8.table, q8.lattice).has_value());

  Analyzed s4(build(GroupRecipe::make_symmetric(4)));
  CHECK_FALSE(frobenius_decomposition(s4.table, s4.lattice).has_value());
}

TEST_CASE("Frobenius structure invariants on detected instances") {
  for (GroupTable g : {build(GroupRecipe::make_symmetric(3)),
                       build(GroupRecipe::make_alternating(4)),
                       build(GroupRecipe::make_semidirect(
                           GroupRecipe::make_cyclic(5), GroupRecipe::make_cyclic(4),
                           SemidirectAction{{1}, {1}, {{2}}}, "Z5:Z4")),
                       build(GroupRecipe::make_semidirect(
                           GroupRecipe::make_cyclic(7), GroupRecipe::make_cyclic(3),
                           SemidirectAction{{1}, {1}, {{2}}}, "Z7:Z3"))}) {
    CAPTURE(g.name());
    SubgroupLattice lat = all_subgroups(g);
    auto fd = frobenius_decomposition(g, lat);
    REQUIRE(fd.has_value());
    // complement order divides |kernel| - 1 (free action on non-identity
    // kernel elements)
    CHECK((fd->kernel.order - 1) % fd->complement.order == 0);
    // complement is self-normalizing and TI; C_G(N) = N
    CHECK(normalizer(g, fd->complement).members == fd->complement.members);
    CHECK(is_ti(fd->complement, g));
    CHECK(centralizer(g, fd->kernel).members == fd->kernel.members);
  }
}

TEST_CASE("irreducible actions") {
  // prime kernel: vacuously irreducible
  Analyzed f20(build(GroupRecipe::make_semidirect(GroupRecipe::make_cyclic(5),
                                                  GroupRecipe::make_cyclic(4),
                                                  SemidirectAction{{1}, {1}, {{2}}},
                                                  "Z5:Z4")));
  auto fd = frobenius_decomposition(f20.table, f20.lattice);
  REQUIRE(fd.has_value());
  CHECK(acts_irreducibly(fd->complement, fd->kernel, f20.lattice));

  // A4: the Sylow 3 permutes the three lines of V4
  Analyzed a4(build(GroupRecipe::make_alternating(4)));
  auto fda = frobenius_decomposition(a4.table, a4.lattice);
  REQUIRE(fda.has_value());
  CHECK(acts_irreducibly(fda->complement, fda->kernel, a4.lattice));

  // trivial action on V4 leaves every line invariant
  Analyzed v4z3(build(GroupRecipe::make_direct_product(
      GroupRecipe::make_elementary_abelian(2, 2), GroupRecipe::make_cyclic(3))));
  Subgroup kernel = generated_subgroup(v4z3.table, {3, 6});  // the V4 factor
  REQUIRE(kernel.order == 4);
  Subgroup z3 = generated_subgroup(v4z3.table, {1});
  REQUIRE(z3.order == 3);
  CHECK_FALSE(acts_irreducibly(z3, kernel, v4z3.lattice));

  // error path: subgroup that does not normalize the target
  Analyzed s4(build(GroupRecipe::make_symmetric(4)));
  Subgroup point_stab = generated_subgroup(
      s4.table, {s4.table.index_of(Permutation::from_cycles("(0 1)", 4)),
                 s4.table.index_of(Permutation::from_cycles("(0 1 2)", 4))});
  REQUIRE(point_stab.order == 6);
  Subgroup z2 = generated_subgroup(
      s4.table, {s4.table.index_of(Permutation::from_cycles("(2 3)", 4))});
  CHECK_THROWS_AS(acts_irreducibly(z2, point_stab, s4.lattice), Error);
}

TEST_CASE("commutators") {
  Analyzed s3(build(GroupRecipe::make_symmetric(3)));
  Subgroup r = generated_subgroup(
      s3.table, {s3.table.index_of(Permutation::from_cycles("(0 1 2)"))});
  Subgroup t = generated_subgroup(
      s3.table, {s3.table.index_of(Permutation::from_cycles("(0 1)", 3))});
  CHECK(commutator_nontrivial(r, t));
  CHECK_FALSE(commutator_nontrivial(trivial_subgroup(s3.table),
                                    trivial_subgroup(s3.table)));

  Analyzed z6(build(GroupRecipe::make_cyclic(6)));
  CHECK_FALSE(commutator_nontrivial(whole_group(z6.table), whole_group(z6.table)));
}

TEST_CASE("implication chain cyclic => abelian => dedekind => nilpotent") {
  // D4 is nilpotent but not Dedekind (reflections are not normal), so the
  // chain runs through Dedekind before nilpotency, not after.
  for (GroupTable g : {build(GroupRecipe::make_cyclic(8)),
                       build(GroupRecipe::make_elementary_abelian(3, 2)),
                       build(GroupRecipe::make_dihedral(4)),
                       build(GroupRecipe::make_dicyclic(2)),
                       build(GroupRecipe::make_symmetric(3))}) {
    CAPTURE(g.name());
    SubgroupLattice lat = all_subgroups(g);
    Subgroup whole = whole_group(g);
    if (is_cyclic(whole)) CHECK(is_abelian(whole));
    if (is_abelian(whole)) CHECK(is_dedekind(whole, lat));
    if (is_dedekind(whole, lat)) CHECK(is_nilpotent(whole));
  }
  GroupTable d4 = build(GroupRecipe::make_dihedral(4));
  CHECK(is_nilpotent(whole_group(d4)));
  CHECK_FALSE(is_dedekind(whole_group(d4), all_subgroups(d4)));
}

TEST_CASE("generalized quaternion is Dedekind exactly at order 8") {
  Analyzed q8(build(GroupRecipe::make_dicyclic(2)));
  CHECK(is_dedekind(q8.whole(), q8.lattice));
  Analyzed q16(build(GroupRecipe::make_dicyclic(4)));
  CHECK_FALSE(is_dedekind(q16.whole(), q16.lattice));
  Analyzed q32(build(GroupRecipe::make_dicyclic(8)));
  CHECK_FALSE(is_dedekind(q32.whole(), q32.lattice));
}
