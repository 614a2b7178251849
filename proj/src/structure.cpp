#include "tiverify/structure.hpp"

#include "tiverify/errors.hpp"

namespace tiv {

bool is_abelian(const Subgroup& h) {
  const GroupTable& g = *h.parent;
  auto elems = h.elements();
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = i + 1; j < elems.size(); ++j)
      if (g.mul(elems[i], elems[j]) != g.mul(elems[j], elems[i])) return false;
  return true;
}

bool is_cyclic(const Subgroup& h) {
  const GroupTable& g = *h.parent;
  for (int e : h.elements())
    if (g.element_order(e) == h.order) return true;
  return h.order == 1;
}

bool is_nilpotent(const Subgroup& h) {
  const GroupTable& g = *h.parent;
  for (int p : prime_divisors(h.order)) {
    Subgroup sylow = sylow_subgroup_of(h, p);
    for (int x : h.elements()) {
      for (int e : sylow.elements())
        if (!sylow.contains(g.conjugate(e, x))) return false;
    }
  }
  return true;
}

bool is_dedekind(const Subgroup& h, const SubgroupLattice& lattice) {
  const GroupTable& g = *h.parent;
  for (int idx : lattice.indices_within(h)) {
    const Subgroup& s = lattice.all[idx];
    for (int x : h.elements())
      for (int e : s.elements())
        if (!s.contains(g.conjugate(e, x))) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> elementary_abelian_params(const Subgroup& h) {
  if (h.order == 1) return std::nullopt;
  auto primes = prime_divisors(h.order);
  if (primes.size() != 1) return std::nullopt;
  int q = primes[0];
  const GroupTable& g = *h.parent;
  for (int e : h.elements())
    if (e != GroupTable::kIdentity && g.element_order(e) != q)
      return std::nullopt;
  if (!is_abelian(h)) return std::nullopt;
  int r = 0;
  for (long long o = h.order; o > 1; o /= q) ++r;
  return std::make_pair(q, r);
}

bool is_generalized_quaternion(const Subgroup& h) {
  if (h.order < 8) return false;
  long long o = h.order;
  while (o % 2 == 0) o /= 2;
  if (o != 1) return false;
  if (is_cyclic(h)) return false;
  const GroupTable& g = *h.parent;
  int involutions = 0;
  for (int e : h.elements())
    if (g.element_order(e) == 2) ++involutions;
  return involutions == 1;
}

bool commute_elementwise(const Subgroup& a, const Subgroup& b) {
  const GroupTable& g = *a.parent;
  for (int x : a.elements())
    for (int y : b.elements())
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

std::optional<Q8OddCyclicDecomposition> q8_odd_cyclic_decomposition(
    const Subgroup& h, const SubgroupLattice& lattice) {
  auto within = lattice.indices_within(h);
  for (int ai : within) {
    const Subgroup& a = lattice.all[ai];
    if (a.order != 8 || !is_generalized_quaternion(a)) continue;
    for (int bi : within) {
      const Subgroup& b = lattice.all[bi];
      if (b.order % 2 == 0) continue;
      if (static_cast<long long>(a.order) * b.order != h.order) continue;
      if (!is_cyclic(b)) continue;
      if (intersect(a, b).order != 1) continue;
      if (!commute_elementwise(a, b)) continue;
      return Q8OddCyclicDecomposition{a, b};
    }
  }
  return std::nullopt;
}

std::vector<Subgroup> minimal_normal_subgroups(const GroupTable&,
                                               const SubgroupLattice& lattice) {
  std::vector<int> normals;
  for (int i = 0; i < lattice.size(); ++i)
    if (lattice.all[i].order > 1 && lattice.is_normal(i)) normals.push_back(i);
  std::vector<Subgroup> out;
  for (int i : normals) {
    bool minimal = true;
    for (int j : normals)
      if (j != i && lattice.all[j].order < lattice.all[i].order &&
          lattice.all[j].members.is_subset_of(lattice.all[i].members)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(lattice.all[i]);
  }
  return out;
}

namespace {

bool fixed_point_free(const GroupTable& g, const Subgroup& kernel,
                      const Subgroup& complement) {
  for (int m : complement.elements()) {
    if (m == GroupTable::kIdentity) continue;
    for (int x : kernel.elements()) {
      if (x == GroupTable::kIdentity) continue;
      if (g.conjugate(x, m) == x) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<FrobeniusDecomposition> frobenius_decomposition(
    const GroupTable& g, const SubgroupLattice& lattice) {
  for (int ni = 0; ni < lattice.size(); ++ni) {
    const Subgroup& n = lattice.all[ni];
    if (n.order <= 1 || n.order >= g.order()) continue;
    if (!lattice.is_normal(ni)) continue;
    for (int mi = 0; mi < lattice.size(); ++mi) {
      const Subgroup& m = lattice.all[mi];
      if (static_cast<long long>(n.order) * m.order != g.order()) continue;
      if (intersect(n, m).order != 1) continue;
      if (!fixed_point_free(g, n, m)) continue;
      FrobeniusDecomposition fd{n, m, std::nullopt, std::nullopt};
      if (auto params = elementary_abelian_params(n)) {
        fd.kernel_prime = params->first;
        fd.kernel_rank = params->second;
      }
      return fd;
    }
  }
  return std::nullopt;
}

bool acts_irreducibly(const Subgroup& p1, const Subgroup& n,
                      const SubgroupLattice& lattice) {
  const GroupTable& g = *p1.parent;
  if (p1.order <= 1 || n.order <= 1)
    throw Error("acts_irreducibly requires nontrivial subgroups");
  for (int x : p1.elements())
    for (int e : n.elements())
      if (!n.contains(g.conjugate(e, x)))
        throw Error("subgroup does not normalize the target");

  auto p1_elems = p1.elements();
  for (int li : lattice.indices_within(n)) {
    const Subgroup& l = lattice.all[li];
    if (l.order <= 1 || l.order >= n.order) continue;
    bool invariant = true;
    for (int x : p1_elems) {
      for (int e : l.elements())
        if (!l.contains(g.conjugate(e, x))) {
          invariant = false;
          break;
        }
      if (!invariant) break;
    }
    if (invariant) return false;
  }
  return true;
}

bool commutator_nontrivial(const Subgroup& a, const Subgroup& b) {
  if (a.parent != b.parent) throw Error("subgroup parent mismatch");
  const GroupTable& g = *a.parent;
  for (int x : a.elements())
    for (int y : b.elements()) {
      int comm = g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
      if (comm != GroupTable::kIdentity) return true;
    }
  return false;
}

}  // namespace tiv
