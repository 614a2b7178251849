#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tiverify/lattice.hpp"
#include "tiverify/structure.hpp"

namespace tiv {

/// Quantifier classes for "every ... subgroup of G is a TI-subgroup or
/// subnormal or has p'-order".
enum class SubgroupFilter {
  All,
  NonNilpotent,
  NonAbelian,
  SelfCentralizing,
  SelfCentralizingNonNilpotent,
  SelfCentralizingNonAbelian,
};

enum class TheoremId { T1, T2, T3, C1, T5, T6, T7 };

const char* theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);

/// One verdict for a (group, prime, theorem) triple. For the structure
/// theorems T1/T2/T3 (and C1) `holds` means LHS <-> some RHS case matched;
/// for the equivalence theorems T5/T6/T7 it means the restricted and
/// unrestricted LHS agree (`rhs_case` stays empty and `unrestricted_lhs`
/// is set instead).
struct TheoremReport {
  std::string group_name;
  int group_order = 0;
  int prime = 0;
  TheoremId theorem = TheoremId::T1;
  bool lhs = false;
  std::optional<std::string> rhs_case;
  bool biconditional_holds = false;
  /// Set exactly when lhs is true but no RHS case matched; such a report
  /// never counts as passing.
  bool falsification_candidate = false;
  std::optional<bool> unrestricted_lhs;
  std::optional<int> witness_index;  // lattice index
  std::optional<int> witness_order;
  std::optional<std::string> witness;  // human-readable description
};

/// Per-subgroup predicate cache plus the lattice and the Frobenius
/// decomposition of one group. Built once, shared by every theorem and
/// prime. Owns a copy of the table, so temporaries are fine.
class GroupAnalysis {
 public:
  explicit GroupAnalysis(GroupTable g, const LatticeLimits& limits = {});

  const GroupTable& group() const { return *group_; }
  const SubgroupLattice& lattice() const { return lattice_; }

  struct Facts {
    bool ti = false;
    bool subnormal = false;
    bool self_centralizing = false;
    bool nilpotent = false;
    bool abelian = false;
    bool normal = false;
  };
  const Facts& facts(int index) const { return facts_[index]; }
  bool passes_filter(int index, SubgroupFilter filter) const;

  const std::optional<FrobeniusDecomposition>& frobenius() const { return frobenius_; }

 private:
  std::shared_ptr<const GroupTable> group_;  // stable address for Subgroup parents
  SubgroupLattice lattice_;
  std::vector<Facts> facts_;
  std::optional<FrobeniusDecomposition> frobenius_;
};

/// Evaluates "every subgroup passing `filter` is TI or subnormal or has
/// p'-order". On failure the witness is the largest violating subgroup
/// (descending order scan, bitset order as tiebreak); this matches the
/// maximal-counterexample structure the classification is built around.
struct LhsResult {
  bool holds = true;
  std::optional<int> witness_index;
};
LhsResult lhs_condition(const GroupAnalysis& a, int p, SubgroupFilter filter);

/// Structure-side case evaluation; returns the first matching case label
/// in case order, or nullopt. `trace` (optional) receives one line per
/// sub-check for explain-style output.
std::optional<std::string> rhs_theorem1(const GroupAnalysis& a, int p,
                                        std::vector<std::string>* trace = nullptr);
std::optional<std::string> rhs_theorem2(const GroupAnalysis& a, int p,
                                        std::vector<std::string>* trace = nullptr);
std::optional<std::string> rhs_theorem3(const GroupAnalysis& a, int p,
                                        std::vector<std::string>* trace = nullptr);

/// Biconditional verdict for T1/T2/T3 at prime p.
TheoremReport verify_biconditional(const GroupAnalysis& a, int p, TheoremId id);

/// Restricted-vs-unrestricted equivalence verdict for T5/T6/T7 at prime p.
TheoremReport verify_equivalence(const GroupAnalysis& a, int p, TheoremId id);

/// T2's statement specialized to the smallest prime divisor of |G|: LHS
/// must match case (1) exactly. Requires |G| > 1.
TheoremReport verify_corollary1(const GroupAnalysis& a);

/// Dispatches on the theorem id (p is ignored for C1).
TheoremReport verify(const GroupAnalysis& a, int p, TheoremId id);

}  // namespace tiv
