#include "tiverify/predicates.hpp"

#include "tiverify/errors.hpp"

namespace tiv {

Subgroup centralizer(const GroupTable& g, const Subgroup& h) {
  Subgroup out{&g, ElementSet(g.order()), 0};
  auto elems = h.elements();
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int e : elems)
      if (g.mul(x, e) != g.mul(e, x)) {
        central = false;
        break;
      }
    if (central) out.members.add(x);
  }
  out.order = out.members.count();
  return out;
}

Subgroup normalizer(const GroupTable& g, const Subgroup& h) {
  Subgroup out{&g, ElementSet(g.order()), 0};
  auto elems = h.elements();
  for (int x = 0; x < g.order(); ++x) {
    bool normalizes = true;
    for (int e : elems)
      if (!h.contains(g.conjugate(e, x))) {
        normalizes = false;
        break;
      }
    if (normalizes) out.members.add(x);
  }
  out.order = out.members.count();
  return out;
}

Subgroup normal_closure(const Subgroup& h, const Subgroup& k) {
  if (h.parent != k.parent) throw Error("subgroup parent mismatch");
  if (!h.is_subgroup_of(k)) throw Error("normal_closure requires H <= K");
  const GroupTable& g = *h.parent;
  // Conjugates of a generating set of H generate the closure.
  ElementSet seen(g.order());
  std::vector<int> seeds;
  for (int e : generating_set(h))
    for (int x : k.elements()) {
      int c = g.conjugate(e, x);
      if (!seen.contains(c)) {
        seen.add(c);
        seeds.push_back(c);
      }
    }
  return generated_subgroup(g, seeds);
}

bool is_normal(const Subgroup& h, const GroupTable& g) {
  return normalizer(g, h).order == g.order();
}

bool is_subnormal(const Subgroup& h, const GroupTable& g) {
  Subgroup chain = whole_group(g);
  while (true) {
    if (chain.members == h.members) return true;
    Subgroup next = normal_closure(h, chain);
    if (next.members == chain.members) return false;
    chain = std::move(next);
  }
}

bool is_ti(const Subgroup& h, const GroupTable& g) {
  Subgroup norm = normalizer(g, h);
  ElementSet seen(g.order());
  for (int x = 0; x < g.order(); ++x) {
    if (seen.contains(x)) continue;
    for (int n : norm.elements()) seen.add(g.mul(n, x));
    if (norm.contains(x)) continue;  // H^x = H
    Subgroup inter = intersect(conjugate_subgroup(h, x), h);
    if (inter.order != 1 && inter.order != h.order) return false;
  }
  return true;
}

bool is_self_centralizing(const Subgroup& h, const GroupTable& g) {
  return centralizer(g, h).members.is_subset_of(h.members);
}

std::vector<Subgroup> sylow_subgroups(const GroupTable& g,
                                      const SubgroupLattice& lattice, int p) {
  if (g.order() % p != 0) throw Error("p does not divide the group order");
  long long target = p_part(g.order(), p);
  std::vector<Subgroup> out;
  for (const Subgroup& s : lattice.all)
    if (s.order == target) out.push_back(s);
  return out;
}

Subgroup sylow_subgroup_of(const Subgroup& h, int p) {
  const GroupTable& g = *h.parent;
  long long target = p_part(h.order, p);
  auto elems = h.elements();

  auto is_p_element = [&](int x) {
    int o = g.element_order(x);
    while (o % p == 0) o /= p;
    return o == 1;
  };

  Subgroup sylow = trivial_subgroup(g);
  while (sylow.order < target) {
    // Some p-element of N_H(P) \ P pushes P up by a factor of p.
    bool grew = false;
    for (int x : elems) {
      if (sylow.contains(x) || !is_p_element(x) || x == GroupTable::kIdentity)
        continue;
      bool normalizes = true;
      for (int e : sylow.elements())
        if (!sylow.contains(g.conjugate(e, x))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      std::vector<int> seeds = sylow.elements();
      seeds.push_back(x);
      Subgroup bigger = generated_subgroup(g, seeds);
      long long o = bigger.order;
      while (o % p == 0) o /= p;
      if (o != 1) continue;  // not a p-group; keep looking
      sylow = std::move(bigger);
      grew = true;
      break;
    }
    if (!grew) throw Error("Sylow growth stalled (broken table?)");
  }
  return sylow;
}

}  // namespace tiv
