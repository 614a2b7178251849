// Randomized property checks: build groups from random recipes (fixed seed)
// and run the invariant battery plus every checked statement on each one.

#include <random>

#include "doctest.h"
#include "tiverify/corpus.hpp"
#include "tiverify/errors.hpp"
#include "tiverify/predicates.hpp"
#include "tiverify/theorems.hpp"

using namespace tiv;

namespace {

GroupRecipe random_atom(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 5);
  switch (kind(rng)) {
    case 0: return GroupRecipe::make_cyclic(std::uniform_int_distribution<int>(1, 16)(rng));
    case 1: return GroupRecipe::make_dihedral(std::uniform_int_distribution<int>(3, 9)(rng));
    case 2: return GroupRecipe::make_dicyclic(std::uniform_int_distribution<int>(2, 5)(rng));
    case 3: {
      int q = std::vector<int>{2, 2, 3, 5}[std::uniform_int_distribution<int>(0, 3)(rng)];
      int r = std::uniform_int_distribution<int>(1, q == 2 ? 3 : 2)(rng);
      return GroupRecipe::make_elementary_abelian(q, r);
    }
    case 4: return GroupRecipe::make_symmetric(std::uniform_int_distribution<int>(2, 4)(rng));
    default: return GroupRecipe::make_alternating(std::uniform_int_distribution<int>(3, 4)(rng));
  }
}

GroupRecipe random_recipe(std::mt19937& rng) {
  // atom, product of two atoms, or a power-action semidirect product
  int shape = std::uniform_int_distribution<int>(0, 3)(rng);
  if (shape <= 1) return random_atom(rng);
  if (shape == 2)
    return GroupRecipe::make_direct_product(random_atom(rng), random_atom(rng));
  const int qs[] = {3, 5, 7, 11, 13};
  int q = qs[std::uniform_int_distribution<int>(0, 4)(rng)];
  // any unit power gives a valid action once its multiplicative order
  // divides the complement order
  int k = std::uniform_int_distribution<int>(1, q - 1)(rng);
  int order_of_k = 1, acc = k;
  while (acc != 1) {
    acc = acc * k % q;
    ++order_of_k;
  }
  int m = order_of_k * std::uniform_int_distribution<int>(1, 2)(rng);
  return GroupRecipe::make_semidirect(GroupRecipe::make_cyclic(q),
                                      GroupRecipe::make_cyclic(m), power_action(q, k),
                                      "Z" + std::to_string(q) + ":Z" + std::to_string(m) +
                                          "@" + std::to_string(k));
}

}  // namespace

TEST_CASE("random groups satisfy the invariant battery and every statement") {
  std::mt19937 rng(20240811);
  int built = 0;
  while (built < 40) {
    GroupRecipe recipe = random_recipe(rng);
    GroupTable g = [&]() -> GroupTable {
      try {
        return build(recipe);
      } catch (const CapError&) {
        return build(GroupRecipe::make_cyclic(1));
      }
    }();
    if (g.order() > 120 || g.order() == 1) continue;
    ++built;
    CAPTURE(g.name());
    CAPTURE(g.provenance());

    GroupAnalysis a(g);
    const SubgroupLattice& lat = a.lattice();
    const GroupTable& gt = a.group();

    bool all_subnormal = true;
    for (int i = 0; i < lat.size(); ++i) {
      const Subgroup& h = lat.all[i];
      const auto& f = a.facts(i);
      CHECK(gt.order() % h.order == 0);
      if (f.normal) {
        CHECK(f.subnormal);
        CHECK(f.ti);
      }
      if (!f.subnormal) all_subnormal = false;
      Subgroup cent = centralizer(gt, h);
      Subgroup norm = normalizer(gt, h);
      CHECK(h.members.is_subset_of(norm.members));
      CHECK(cent.members.is_subset_of(norm.members));
    }
    CHECK(a.facts(lat.size() - 1).nilpotent == all_subnormal);

    for (const auto& cls : lat.conjugacy_classes) {
      const auto& first = a.facts(cls.front());
      for (int idx : cls) {
        CHECK(a.facts(idx).ti == first.ti);
        CHECK(a.facts(idx).subnormal == first.subnormal);
        CHECK(a.facts(idx).self_centralizing == first.self_centralizing);
      }
    }

    for (int p : prime_divisors(gt.order())) {
      CAPTURE(p);
      auto sylows = sylow_subgroups(gt, lat, p);
      CHECK(static_cast<int>(sylows.size()) % p == 1);

      for (TheoremId id : {TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T5,
                           TheoremId::T6, TheoremId::T7}) {
        TheoremReport rep = verify(a, p, id);
        CHECK(rep.biconditional_holds);
        CHECK_FALSE(rep.falsification_candidate);
      }
    }
    TheoremReport c1 = verify_corollary1(a);
    CHECK(c1.biconditional_holds);
  }
  CHECK(built == 40);
}
