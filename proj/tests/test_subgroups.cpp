#include "doctest.h"
#include "oracles/naive_lattice.hpp"
#include "tiverify/corpus.hpp"
#include "tiverify/errors.hpp"
#include "tiverify/lattice.hpp"
#include "tiverify/predicates.hpp"

using namespace tiv;

namespace {

GroupTable make_s3() {
  return group_from_generators(
      {Permutation::from_cycles("(0 1 2)"), Permutation::from_cycles("(0 1)", 3)},
      "S3");
}

Subgroup cyclic_of(const GroupTable& g, int x) { return generated_subgroup(g, {x}); }

}  // namespace

TEST_CASE("generated subgroups") {
  GroupTable s3 = make_s3();
  CHECK(generated_subgroup(s3, {}).order == 1);
  int rot = s3.index_of(Permutation::from_cycles("(0 1 2)"));
  CHECK(generated_subgroup(s3, {rot}).order == 3);
  int t1 = s3.index_of(Permutation::from_cycles("(0 1)", 3));
  int t2 = s3.index_of(Permutation::from_cycles("(0 2)", 3));
  CHECK(generated_subgroup(s3, {t1, t2}).order == 6);
}

TEST_CASE("lattice sizes for small groups") {
  CHECK(all_subgroups(build(GroupRecipe::make_cyclic(6))).size() == 4);
  CHECK(all_subgroups(make_s3()).size() == 6);
  CHECK(all_subgroups(build(GroupRecipe::make_alternating(4))).size() == 10);
}

TEST_CASE("lattice equals the naive subset oracle on mixed small groups") {
  for (const GroupTable& g :
       {make_s3(), build(GroupRecipe::make_cyclic(12)),
        build(GroupRecipe::make_dicyclic(2)), build(GroupRecipe::make_dihedral(4)),
        build(GroupRecipe::make_alternating(4)),
        build(GroupRecipe::make_symmetric(4))}) {
    CAPTURE(g.name());
    auto expected = naive_oracle::all_subgroup_masks(g);
    SubgroupLattice lattice = all_subgroups(g);
    REQUIRE(lattice.size() == static_cast<int>(expected.size()));
    std::vector<uint32_t> got;
    for (const Subgroup& s : lattice.all)
      got.push_back(static_cast<uint32_t>(s.members.words()[0]));
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
}

TEST_CASE("intersection and join") {
  GroupTable s3 = make_s3();
  int t1 = s3.index_of(Permutation::from_cycles("(0 1)", 3));
  int t2 = s3.index_of(Permutation::from_cycles("(0 2)", 3));
  int rot = s3.index_of(Permutation::from_cycles("(0 1 2)"));
  Subgroup h1 = cyclic_of(s3, t1), h2 = cyclic_of(s3, t2), r = cyclic_of(s3, rot);

  CHECK(intersect(h1, h1).order == 2);
  CHECK(intersect(h1, trivial_subgroup(s3)).order == 1);
  CHECK(intersect(h1, h2).order == 1);

  CHECK(join(h1, trivial_subgroup(s3)).members == h1.members);
  CHECK(join(h1, h1).members == h1.members);
  CHECK(join(h1, r).order == 6);

  GroupTable other = build(GroupRecipe::make_cyclic(6));
  CHECK_THROWS_AS(intersect(h1, trivial_subgroup(other)), Error);
  CHECK_THROWS_AS(join(h1, trivial_subgroup(other)), Error);
}

TEST_CASE("conjugate subgroup") {
  GroupTable s3 = make_s3();
  int t1 = s3.index_of(Permutation::from_cycles("(0 1)", 3));
  int rot = s3.index_of(Permutation::from_cycles("(0 1 2)"));
  Subgroup h = cyclic_of(s3, t1);
  Subgroup hc = conjugate_subgroup(h, rot);
  int t12 = s3.index_of(Permutation::from_cycles("(1 2)", 3));
  CHECK(hc.contains(t12));
  CHECK(hc.order == 2);
  // conjugating by a member fixes the subgroup
  CHECK(conjugate_subgroup(h, t1).members == h.members);
}

TEST_CASE("centralizer and normalizer") {
  GroupTable s3 = make_s3();
  int rot = s3.index_of(Permutation::from_cycles("(0 1 2)"));
  Subgroup r = cyclic_of(s3, rot);
  CHECK(centralizer(s3, trivial_subgroup(s3)).order == 6);
  CHECK(centralizer(s3, r).members == r.members);

  GroupTable z6 = build(GroupRecipe::make_cyclic(6));
  CHECK(centralizer(z6, cyclic_of(z6, 2)).order == 6);

  // Sylow 2-subgroups of S4 are self-normalizing.
  GroupTable s4 = build(GroupRecipe::make_symmetric(4));
  SubgroupLattice lat = all_subgroups(s4);
  auto sylows = sylow_subgroups(s4, lat, 2);
  REQUIRE(sylows.size() == 3);
  for (const Subgroup& p : sylows) {
    CHECK(p.order == 8);
    CHECK(normalizer(s4, p).members == p.members);
  }

  CHECK(normalizer(s3, whole_group(s3)).order == 6);
  CHECK(normalizer(s3, r).order == 6);  // index 2, normal
}

TEST_CASE("normal closure") {
  GroupTable s3 = make_s3();
  int t1 = s3.index_of(Permutation::from_cycles("(0 1)", 3));
  Subgroup h = cyclic_of(s3, t1);
  CHECK(normal_closure(h, whole_group(s3)).order == 6);
  Subgroup r = cyclic_of(s3, s3.index_of(Permutation::from_cycles("(0 1 2)")));
  CHECK(normal_closure(r, whole_group(s3)).members == r.members);
  CHECK(normal_closure(h, h).members == h.members);
  CHECK_THROWS_AS(normal_closure(whole_group(s3), h), Error);
}

TEST_CASE("normality, subnormality, TI") {
  GroupTable s3 = make_s3();
  int t1 = s3.index_of(Permutation::from_cycles("(0 1)", 3));
  int rot = s3.index_of(Permutation::from_cycles("(0 1 2)"));
  Subgroup h = cyclic_of(s3, t1), r = cyclic_of(s3, rot);

  CHECK(is_normal(trivial_subgroup(s3), s3));
  CHECK(is_normal(r, s3));
  CHECK_FALSE(is_normal(h, s3));

  CHECK(is_subnormal(whole_group(s3), s3));
  CHECK_FALSE(is_subnormal(h, s3));

  // all subgroups of the nilpotent Q8 are subnormal
  GroupTable q8 = build(GroupRecipe::make_dicyclic(2));
  for (const Subgroup& s : all_subgroups(q8).all) CHECK(is_subnormal(s, q8));

  CHECK(is_ti(r, s3));                   // normal
  CHECK(is_ti(trivial_subgroup(s3), s3));
  CHECK(is_ti(h, s3));                   // prime order

  // D4 <= S4 is not TI: two Sylow 2-subgroups share the normal V4.
  GroupTable s4 = build(GroupRecipe::make_symmetric(4));
  SubgroupLattice lat = all_subgroups(s4);
  for (const Subgroup& p : sylow_subgroups(s4, lat, 2)) {
    CHECK_FALSE(is_ti(p, s4));
    CHECK_FALSE(is_subnormal(p, s4));
  }
}

TEST_CASE("self-centralizing") {
  GroupTable s3 = make_s3();
  CHECK(is_self_centralizing(whole_group(s3), s3));
  CHECK_FALSE(is_self_centralizing(trivial_subgroup(s3), s3));
  Subgroup r = cyclic_of(s3, s3.index_of(Permutation::from_cycles("(0 1 2)")));
  CHECK(is_self_centralizing(r, s3));

  GroupTable trivial = group_from_generators({}, "1");
  CHECK(is_self_centralizing(whole_group(trivial), trivial));
}

TEST_CASE("Sylow subgroups") {
  GroupTable z6 = build(GroupRecipe::make_cyclic(6));
  CHECK(sylow_subgroups(z6, all_subgroups(z6), 2).size() == 1);

  GroupTable s3 = make_s3();
  CHECK(sylow_subgroups(s3, all_subgroups(s3), 2).size() == 3);
  CHECK_THROWS_AS(sylow_subgroups(s3, all_subgroups(s3), 5), Error);
}

TEST_CASE("lattice caps") {
  GroupTable s4 = build(GroupRecipe::make_symmetric(4));
  LatticeLimits tight;
  tight.max_subgroups = 5;
  CHECK_THROWS_AS(all_subgroups(s4, tight), CapError);
  LatticeLimits small_order;
  small_order.max_order = 10;
  CHECK_THROWS_AS(all_subgroups(s4, small_order), CapError);
}

TEST_CASE("predicate invariants across a mid-size lattice") {
  GroupTable s4 = build(GroupRecipe::make_symmetric(4));
  SubgroupLattice lat = all_subgroups(s4);
  for (const Subgroup& h : lat.all) {
    CHECK(s4.order() % h.order == 0);
    Subgroup n = normalizer(s4, h), c = centralizer(s4, h);
    CHECK(h.members.is_subset_of(n.members));
    CHECK(c.members.is_subset_of(n.members));
    if (is_normal(h, s4)) {
      CHECK(is_subnormal(h, s4));
      CHECK(is_ti(h, s4));
    }
  }

  // lattice closure under the set operations
  for (int i = 0; i < lat.size(); i += 3)
    for (int j = i; j < lat.size(); j += 5) {
      CHECK(lat.index_of(intersect(lat.all[i], lat.all[j]).members) >= 0);
      CHECK(lat.index_of(join(lat.all[i], lat.all[j]).members) >= 0);
    }
  for (int i = 0; i < lat.size(); ++i)
    for (int g = 0; g < s4.order(); g += 7)
      CHECK(lat.index_of(conjugate_subgroup(lat.all[i], g).members) >= 0);

  // conjugation invariance of the named predicates
  for (const auto& cls : lat.conjugacy_classes) {
    bool ti = is_ti(lat.all[cls[0]], s4);
    bool sub = is_subnormal(lat.all[cls[0]], s4);
    bool sc = is_self_centralizing(lat.all[cls[0]], s4);
    for (int idx : cls) {
      CHECK(is_ti(lat.all[idx], s4) == ti);
      CHECK(is_subnormal(lat.all[idx], s4) == sub);
      CHECK(is_self_centralizing(lat.all[idx], s4) == sc);
    }
  }

  // Sylow counting
  for (int p : {2, 3}) {
    auto sylows = sylow_subgroups(s4, lat, p);
    CHECK(static_cast<int>(sylows.size()) % p == 1 % p);
    CHECK(s4.order() % static_cast<int>(sylows.size()) == 0);
  }
}
