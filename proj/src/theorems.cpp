#include "tiverify/theorems.hpp"

#include <algorithm>
#include <sstream>

#include "tiverify/errors.hpp"
#include "tiverify/predicates.hpp"

namespace tiv {

const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return "T1";
    case TheoremId::T2: return "T2";
    case TheoremId::T3: return "T3";
    case TheoremId::C1: return "C1";
    case TheoremId::T5: return "T5";
    case TheoremId::T6: return "T6";
    case TheoremId::T7: return "T7";
  }
  return "?";
}

std::optional<TheoremId> theorem_from_name(const std::string& name) {
  for (TheoremId id : {TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::C1,
                       TheoremId::T5, TheoremId::T6, TheoremId::T7})
    if (name == theorem_name(id)) return id;
  return std::nullopt;
}

GroupAnalysis::GroupAnalysis(GroupTable g, const LatticeLimits& limits)
    : group_(std::make_shared<const GroupTable>(std::move(g))),
      lattice_(all_subgroups(*group_, limits)) {
  const GroupTable& gt = *group_;
  facts_.resize(lattice_.size());
  for (int i = 0; i < lattice_.size(); ++i) {
    const Subgroup& h = lattice_.all[i];
    Facts& f = facts_[i];
    f.normal = lattice_.is_normal(i);
    f.ti = f.normal ? true : is_ti(h, gt);
    f.subnormal = f.normal ? true : is_subnormal(h, gt);
    f.self_centralizing = is_self_centralizing(h, gt);
    f.abelian = is_abelian(h);
    f.nilpotent = f.abelian ? true : is_nilpotent(h);
  }
  frobenius_ = frobenius_decomposition(gt, lattice_);
}

bool GroupAnalysis::passes_filter(int index, SubgroupFilter filter) const {
  const Facts& f = facts_[index];
  switch (filter) {
    case SubgroupFilter::All: return true;
    case SubgroupFilter::NonNilpotent: return !f.nilpotent;
    case SubgroupFilter::NonAbelian: return !f.abelian;
    case SubgroupFilter::SelfCentralizing: return f.self_centralizing;
    case SubgroupFilter::SelfCentralizingNonNilpotent:
      return f.self_centralizing && !f.nilpotent;
    case SubgroupFilter::SelfCentralizingNonAbelian:
      return f.self_centralizing && !f.abelian;
  }
  return true;
}

LhsResult lhs_condition(const GroupAnalysis& a, int p, SubgroupFilter filter) {
  if (a.group().order() % p != 0) throw Error("p does not divide the group order");
  const SubgroupLattice& lat = a.lattice();
  for (int i = lat.size() - 1; i >= 0; --i) {
    if (!a.passes_filter(i, filter)) continue;
    if (lat.all[i].order % p != 0) continue;  // p'-order
    const auto& f = a.facts(i);
    if (f.ti || f.subnormal) continue;
    return LhsResult{false, i};
  }
  return LhsResult{true, std::nullopt};
}

namespace {

void note(std::vector<std::string>* trace, const std::string& line) {
  if (trace) trace->push_back(line);
}

/// Case (1) of each structure theorem: every subgroup passing the filter
/// whose order is divisible by p is subnormal.
bool p_divisible_filtered_all_subnormal(const GroupAnalysis& a, int p,
                                        SubgroupFilter filter) {
  const SubgroupLattice& lat = a.lattice();
  for (int i = 0; i < lat.size(); ++i) {
    if (!a.passes_filter(i, filter)) continue;
    if (lat.all[i].order % p != 0) continue;
    if (!a.facts(i).subnormal) return false;
  }
  return true;
}

/// p = 2 and G = Z_q : <a> Frobenius with kernel of odd prime order q and
/// a cyclic complement of even order.
bool matches_case_prime_kernel_cyclic_complement(const GroupAnalysis& a,
                                                 std::vector<std::string>* trace) {
  const auto& fd = a.frobenius();
  if (!fd) {
    note(trace, "no Frobenius decomposition");
    return false;
  }
  const Subgroup& kernel = fd->kernel;
  const Subgroup& m = fd->complement;
  if (!fd->kernel_prime || fd->kernel_rank != 1) {
    note(trace, "kernel is not of prime order");
    return false;
  }
  if (*fd->kernel_prime == 2) {
    note(trace, "kernel prime must be odd");
    return false;
  }
  (void)kernel;
  if (!is_cyclic(m)) {
    note(trace, "complement is not cyclic");
    return false;
  }
  if (m.order % 2 != 0) {
    note(trace, "complement order is odd");
    return false;
  }
  note(trace, "Frobenius Z" + std::to_string(*fd->kernel_prime) +
                  " : Z" + std::to_string(m.order) + " with cyclic even complement");
  return true;
}

struct ComplementSplit {
  int sylow_index = -1;   // P
  int cofactor_index = -1;  // H
};

bool h_part_admissible(const GroupAnalysis& a, const Subgroup& h, bool allow_cyclic) {
  if (allow_cyclic && is_cyclic(h)) return true;
  return q8_odd_cyclic_decomposition(h, a.lattice()).has_value();
}

/// Every nontrivial subgroup of P acts irreducibly on the kernel.
bool all_p_subgroups_irreducible(const GroupAnalysis& a, const Subgroup& p_sub,
                                 const Subgroup& kernel) {
  for (int li : a.lattice().indices_within(p_sub)) {
    const Subgroup& l = a.lattice().all[li];
    if (l.order <= 1) continue;
    if (!acts_irreducibly(l, kernel, a.lattice())) return false;
  }
  return true;
}

/// p > 2 and G = Z_q^r : (P x H) Frobenius, q != p, P the cyclic Sylow
/// p-subgroup, H cyclic (when allowed) or Q8 x odd-cyclic, and every
/// nontrivial subgroup of P acting irreducibly on the kernel.
bool matches_case_direct_split(const GroupAnalysis& a, int p, bool require_rank_gt1,
                               bool allow_cyclic_h, std::vector<std::string>* trace) {
  const auto& fd = a.frobenius();
  if (!fd) {
    note(trace, "no Frobenius decomposition");
    return false;
  }
  if (!fd->kernel_prime) {
    note(trace, "kernel is not elementary abelian");
    return false;
  }
  int q = *fd->kernel_prime, r = *fd->kernel_rank;
  if (q == p) {
    note(trace, "kernel prime equals p");
    return false;
  }
  if (require_rank_gt1 && r <= 1) {
    note(trace, "kernel rank must exceed 1");
    return false;
  }
  const Subgroup& m = fd->complement;
  long long sylow_order = p_part(a.group().order(), p);
  if (m.order % p != 0) {
    note(trace, "complement order not divisible by p");
    return false;
  }

  const SubgroupLattice& lat = a.lattice();
  auto within = lat.indices_within(m);
  for (int pi : within) {
    const Subgroup& sylow = lat.all[pi];
    if (sylow.order != sylow_order) continue;
    if (!is_cyclic(sylow)) {
      note(trace, "a Sylow p-subgroup of the complement is not cyclic");
      continue;
    }
    for (int hi : within) {
      const Subgroup& h = lat.all[hi];
      if (static_cast<long long>(h.order) * sylow.order != m.order) continue;
      if (intersect(h, sylow).order != 1) continue;
      if (!commute_elementwise(sylow, h)) continue;
      if (!h_part_admissible(a, h, allow_cyclic_h)) continue;
      if (!all_p_subgroups_irreducible(a, sylow, fd->kernel)) {
        note(trace, "some nontrivial subgroup of P acts reducibly on the kernel");
        return false;
      }
      note(trace, "complement = P x H with |P| = " + std::to_string(sylow.order) +
                      ", |H| = " + std::to_string(h.order) +
                      ", kernel Z" + std::to_string(q) + "^" + std::to_string(r));
      return true;
    }
  }
  note(trace, "no direct P x H split of the complement with admissible H");
  return false;
}

/// p > 2 and G = Z_q^r : (Z_p : H) Frobenius with r > 1, the Sylow
/// p-subgroup of order exactly p and normal in the complement, H cyclic or
/// Q8 x odd-cyclic with [Z_p, H] != 1, and Z_p acting irreducibly.
bool matches_case_twisted_split(const GroupAnalysis& a, int p,
                                std::vector<std::string>* trace) {
  const auto& fd = a.frobenius();
  if (!fd) {
    note(trace, "no Frobenius decomposition");
    return false;
  }
  if (!fd->kernel_prime) {
    note(trace, "kernel is not elementary abelian");
    return false;
  }
  int q = *fd->kernel_prime, r = *fd->kernel_rank;
  if (q == p) {
    note(trace, "kernel prime equals p");
    return false;
  }
  if (r <= 1) {
    note(trace, "kernel rank must exceed 1");
    return false;
  }
  if (p_part(a.group().order(), p) != p) {
    note(trace, "Sylow p-subgroup is not of prime order");
    return false;
  }
  const Subgroup& m = fd->complement;
  const SubgroupLattice& lat = a.lattice();
  auto within = lat.indices_within(m);
  const GroupTable& g = a.group();
  for (int pi : within) {
    const Subgroup& zp = lat.all[pi];
    if (zp.order != p) continue;
    bool normal_in_m = true;
    for (int x : m.elements()) {
      for (int e : zp.elements())
        if (!zp.contains(g.conjugate(e, x))) {
          normal_in_m = false;
          break;
        }
      if (!normal_in_m) break;
    }
    if (!normal_in_m) continue;
    for (int hi : within) {
      const Subgroup& h = lat.all[hi];
      if (static_cast<long long>(h.order) * p != m.order) continue;
      if (intersect(h, zp).order != 1) continue;
      if (!h_part_admissible(a, h, /*allow_cyclic=*/true)) continue;
      if (!commutator_nontrivial(zp, h)) continue;
      if (!acts_irreducibly(zp, fd->kernel, lat)) {
        note(trace, "Z_p acts reducibly on the kernel");
        return false;
      }
      note(trace, "complement = Z" + std::to_string(p) + " : H with |H| = " +
                      std::to_string(h.order) + ", kernel Z" + std::to_string(q) +
                      "^" + std::to_string(r) + ", [Z_p, H] != 1");
      return true;
    }
  }
  note(trace, "no Z_p : H split of the complement with admissible H");
  return false;
}

void require_prime_divides(const GroupAnalysis& a, int p) {
  if (a.group().order() % p != 0) throw Error("p does not divide the group order");
}

}  // namespace

std::optional<std::string> rhs_theorem1(const GroupAnalysis& a, int p,
                                        std::vector<std::string>* trace) {
  require_prime_divides(a, p);
  if (p_divisible_filtered_all_subnormal(a, p, SubgroupFilter::All)) {
    note(trace, "case 1: every subgroup of order divisible by p is subnormal");
    return "C1_subnormal";
  }
  if (p == 2 && matches_case_prime_kernel_cyclic_complement(a, trace)) return "C2";
  if (p > 2 && matches_case_direct_split(a, p, /*require_rank_gt1=*/false,
                                         /*allow_cyclic_h=*/true, trace))
    return "C3";
  if (p > 2 && matches_case_twisted_split(a, p, trace)) return "C4";
  return std::nullopt;
}

std::optional<std::string> rhs_theorem2(const GroupAnalysis& a, int p,
                                        std::vector<std::string>* trace) {
  require_prime_divides(a, p);
  if (p_divisible_filtered_all_subnormal(a, p, SubgroupFilter::NonNilpotent)) {
    note(trace, "case 1: every non-nilpotent subgroup of order divisible by p is subnormal");
    return "C1_subnormal_nn";
  }
  if (p > 2 && matches_case_twisted_split(a, p, trace)) return "C2";
  return std::nullopt;
}

std::optional<std::string> rhs_theorem3(const GroupAnalysis& a, int p,
                                        std::vector<std::string>* trace) {
  require_prime_divides(a, p);
  if (p_divisible_filtered_all_subnormal(a, p, SubgroupFilter::NonAbelian)) {
    note(trace, "case 1: every non-abelian subgroup of order divisible by p is subnormal");
    return "C1_subnormal_na";
  }
  if (p > 2 && matches_case_direct_split(a, p, /*require_rank_gt1=*/true,
                                         /*allow_cyclic_h=*/false, trace))
    return "C2_Q8H";
  if (p > 2 && matches_case_twisted_split(a, p, trace)) return "C3";
  return std::nullopt;
}

namespace {

std::string describe_subgroup(const GroupAnalysis& a, int index) {
  const Subgroup& h = a.lattice().all[index];
  const auto& f = a.facts(index);
  std::ostringstream out;
  out << "subgroup #" << index << " order " << h.order << " {";
  auto elems = h.elements();
  for (size_t i = 0; i < elems.size() && i < 16; ++i) {
    if (i) out << ' ';
    out << elems[i];
  }
  if (elems.size() > 16) out << " ...";
  out << "} TI=" << (f.ti ? 1 : 0) << " subnormal=" << (f.subnormal ? 1 : 0)
      << " self-centralizing=" << (f.self_centralizing ? 1 : 0);
  return out.str();
}

SubgroupFilter structure_filter(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return SubgroupFilter::All;
    case TheoremId::T2: return SubgroupFilter::NonNilpotent;
    case TheoremId::T3: return SubgroupFilter::NonAbelian;
    default: throw Error("not a structure theorem");
  }
}

}  // namespace

TheoremReport verify_biconditional(const GroupAnalysis& a, int p, TheoremId id) {
  TheoremReport rep;
  rep.group_name = a.group().name();
  rep.group_order = a.group().order();
  rep.prime = p;
  rep.theorem = id;

  LhsResult lhs = lhs_condition(a, p, structure_filter(id));
  std::optional<std::string> rhs;
  switch (id) {
    case TheoremId::T1: rhs = rhs_theorem1(a, p); break;
    case TheoremId::T2: rhs = rhs_theorem2(a, p); break;
    case TheoremId::T3: rhs = rhs_theorem3(a, p); break;
    default: throw Error("not a structure theorem");
  }

  rep.lhs = lhs.holds;
  rep.rhs_case = rhs;
  rep.biconditional_holds = (lhs.holds == rhs.has_value());
  rep.falsification_candidate = lhs.holds && !rhs.has_value();
  if (lhs.witness_index) {
    rep.witness_index = lhs.witness_index;
    rep.witness_order = a.lattice().all[*lhs.witness_index].order;
    rep.witness = describe_subgroup(a, *lhs.witness_index);
  } else if (rep.falsification_candidate) {
    rep.witness = "LHS holds but no RHS case matched (falsification candidate)";
  }
  return rep;
}

TheoremReport verify_equivalence(const GroupAnalysis& a, int p, TheoremId id) {
  SubgroupFilter restricted, full;
  switch (id) {
    case TheoremId::T5:
      restricted = SubgroupFilter::SelfCentralizing;
      full = SubgroupFilter::All;
      break;
    case TheoremId::T6:
      restricted = SubgroupFilter::SelfCentralizingNonNilpotent;
      full = SubgroupFilter::NonNilpotent;
      break;
    case TheoremId::T7:
      restricted = SubgroupFilter::SelfCentralizingNonAbelian;
      full = SubgroupFilter::NonAbelian;
      break;
    default: throw Error("not an equivalence theorem");
  }
  TheoremReport rep;
  rep.group_name = a.group().name();
  rep.group_order = a.group().order();
  rep.prime = p;
  rep.theorem = id;

  LhsResult r = lhs_condition(a, p, restricted);
  LhsResult f = lhs_condition(a, p, full);
  rep.lhs = r.holds;
  rep.unrestricted_lhs = f.holds;
  rep.biconditional_holds = (r.holds == f.holds);
  if (f.witness_index) {
    rep.witness_index = f.witness_index;
    rep.witness_order = a.lattice().all[*f.witness_index].order;
    rep.witness = describe_subgroup(a, *f.witness_index);
  }
  return rep;
}

TheoremReport verify_corollary1(const GroupAnalysis& a) {
  if (a.group().order() <= 1) throw Error("corollary requires a nontrivial group");
  int p = prime_divisors(a.group().order()).front();
  TheoremReport rep;
  rep.group_name = a.group().name();
  rep.group_order = a.group().order();
  rep.prime = p;
  rep.theorem = TheoremId::C1;

  LhsResult lhs = lhs_condition(a, p, SubgroupFilter::NonNilpotent);
  bool case1 = p_divisible_filtered_all_subnormal(a, p, SubgroupFilter::NonNilpotent);
  rep.lhs = lhs.holds;
  if (case1) rep.rhs_case = "C1_subnormal_nn";
  rep.biconditional_holds = (lhs.holds == case1);
  rep.falsification_candidate = lhs.holds && !case1;
  if (lhs.witness_index) {
    rep.witness_index = lhs.witness_index;
    rep.witness_order = a.lattice().all[*lhs.witness_index].order;
    rep.witness = describe_subgroup(a, *lhs.witness_index);
  }
  return rep;
}

TheoremReport verify(const GroupAnalysis& a, int p, TheoremId id) {
  switch (id) {
    case TheoremId::T1:
    case TheoremId::T2:
    case TheoremId::T3:
      return verify_biconditional(a, p, id);
    case TheoremId::T5:
    case TheoremId::T6:
    case TheoremId::T7:
      return verify_equivalence(a, p, id);
    case TheoremId::C1:
      return verify_corollary1(a);
  }
  throw Error("unknown theorem id");
}

}  // namespace tiv
