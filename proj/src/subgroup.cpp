#include "tiverify/subgroup.hpp"

#include <bit>

#include "tiverify/errors.hpp"

namespace tiv {

int ElementSet::count() const {
  int c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  for (int e = 0; e < universe_; ++e)
    if (contains(e)) out.push_back(e);
  return out;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

size_t ElementSet::hash() const {
  size_t h = 1469598103934665603ull;
  for (uint64_t w : words_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return h;
}

Subgroup trivial_subgroup(const GroupTable& g) {
  Subgroup s{&g, ElementSet(g.order()), 1};
  s.members.add(GroupTable::kIdentity);
  return s;
}

Subgroup whole_group(const GroupTable& g) {
  Subgroup s{&g, ElementSet(g.order()), g.order()};
  for (int e = 0; e < g.order(); ++e) s.members.add(e);
  return s;
}

Subgroup generated_subgroup(const GroupTable& g, const std::vector<int>& seeds) {
  ElementSet members(g.order());
  std::vector<int> list;
  members.add(GroupTable::kIdentity);
  list.push_back(GroupTable::kIdentity);
  for (int s : seeds)
    if (!members.contains(s)) {
      members.add(s);
      list.push_back(s);
    }
  for (size_t i = 0; i < list.size(); ++i) {
    for (int s : seeds) {
      int p = g.mul(list[i], s);
      if (!members.contains(p)) {
        members.add(p);
        list.push_back(p);
      }
    }
  }
  return Subgroup{&g, members, static_cast<int>(list.size())};
}

Subgroup subgroup_from_members(const GroupTable& g, const ElementSet& members) {
  if (!members.contains(GroupTable::kIdentity))
    throw Error("subgroup must contain the identity");
  auto elems = members.elements();
  for (int a : elems)
    for (int b : elems)
      if (!members.contains(g.mul(a, b)))
        throw Error("element set is not closed under multiplication");
  return Subgroup{&g, members, static_cast<int>(elems.size())};
}

Subgroup intersect(const Subgroup& h, const Subgroup& k) {
  if (h.parent != k.parent) throw Error("subgroup parent mismatch");
  Subgroup out{h.parent, h.members, 0};
  out.members &= k.members;
  out.order = out.members.count();
  return out;
}

Subgroup join(const Subgroup& h, const Subgroup& k) {
  if (h.parent != k.parent) throw Error("subgroup parent mismatch");
  if (h.members.is_subset_of(k.members)) return k;
  if (k.members.is_subset_of(h.members)) return h;
  std::vector<int> seeds = generating_set(h);
  for (int e : generating_set(k)) seeds.push_back(e);
  return generated_subgroup(*h.parent, seeds);
}

Subgroup conjugate_subgroup(const Subgroup& h, int g) {
  const GroupTable& G = *h.parent;
  Subgroup out{h.parent, ElementSet(G.order()), h.order};
  for (int e : h.elements()) out.members.add(G.conjugate(e, g));
  return out;
}

std::vector<int> generating_set(const Subgroup& h) {
  std::vector<int> gens;
  Subgroup closure = trivial_subgroup(*h.parent);
  for (int e : h.elements()) {
    if (closure.contains(e)) continue;
    gens.push_back(e);
    std::vector<int> seeds = gens;
    closure = generated_subgroup(*h.parent, seeds);
    if (closure.order == h.order) break;
  }
  return gens;
}

}  // namespace tiv
