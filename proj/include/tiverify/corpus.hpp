#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tiverify/group.hpp"

namespace tiv {

/// Semidirect-product action: for each acting generator of M, the images of
/// the kernel generators of N. The builder extends the generator images to
/// full automorphisms, extends those to a map on all of M, and validates
/// both the automorphism and homomorphism axioms before constructing the
/// table.
struct SemidirectAction {
  std::vector<int> kernel_generators;        // element indices in N
  std::vector<int> acting_generators;        // element indices in M
  std::vector<std::vector<int>> images;      // images[j][i]: kernel_generators[i] under acting gen j
};

struct GroupRecipe {
  enum class Kind {
    cyclic,
    dihedral,
    dicyclic,  // order 4n; generalized quaternion at 2-power orders
    elementary_abelian,
    symmetric,
    alternating,
    direct_product,
    semidirect_product,
    from_generators,
  };

  Kind kind;
  std::vector<int> params;
  std::shared_ptr<GroupRecipe> left, right;  // product kinds: N then M
  std::optional<SemidirectAction> action;
  std::vector<std::string> generator_cycles;  // from_generators
  std::string name;

  static GroupRecipe make_cyclic(int n, std::string name = "");
  static GroupRecipe make_dihedral(int ngon, std::string name = "");
  static GroupRecipe make_dicyclic(int n, std::string name = "");
  static GroupRecipe make_elementary_abelian(int q, int r, std::string name = "");
  static GroupRecipe make_symmetric(int n, std::string name = "");
  static GroupRecipe make_alternating(int n, std::string name = "");
  static GroupRecipe make_direct_product(GroupRecipe a, GroupRecipe b,
                                         std::string name = "");
  static GroupRecipe make_semidirect(GroupRecipe n, GroupRecipe m,
                                     SemidirectAction action, std::string name);
  static GroupRecipe make_from_generators(std::vector<std::string> cycles,
                                          std::string name);
};

/// Realizes a recipe as a GroupTable. Semidirect products multiply as
/// (n1, m1)(n2, m2) = (n1 * alpha_{m1}(n2), m1 * m2). Throws Error with the
/// violated axiom for invalid actions and CapError beyond max_order.
GroupTable build(const GroupRecipe& recipe, int max_order = kDefaultMaxGroupOrder);

/// Action of the generator of a cyclic complement on a cyclic kernel Z_q
/// by x -> x^k (kernel element index i is the i-th power of the generator).
SemidirectAction power_action(int q, int k);

/// Matrix action on an elementary abelian kernel Z_q^r whose element index
/// encodes the digit vector (v_0, ..., v_{r-1}) as sum v_t q^t. One r x r
/// row-major matrix per acting generator; basis images are the columns.
SemidirectAction matrix_action(int q, int r, const std::vector<int>& acting_gens,
                               const std::vector<std::vector<int>>& matrices);

/// Direct product of two already-built tables, pairs indexed (a, b) -> a*|B|+b.
GroupTable direct_product_table(const GroupTable& a, const GroupTable& b,
                                std::string name, int max_order = kDefaultMaxGroupOrder);

/// Semidirect product of two built tables under a validated action.
GroupTable semidirect_product_table(const GroupTable& n, const GroupTable& m,
                                    const SemidirectAction& action, std::string name,
                                    int max_order = kDefaultMaxGroupOrder);

/// One representative per isomorphism class of groups of order n, found by
/// a backtracking Cayley-table search with isomorph rejection. n is capped
/// (default 12) because the search cost climbs steeply; raise hard_cap
/// explicitly at your own risk.
std::vector<GroupTable> enumerate_all_of_order(int n, int hard_cap = 12);

struct CorpusConfig {
  int max_order = 512;
  std::vector<std::string> corpus_files;
};

/// The deterministic built-in corpus: everything of order <= 12, classical
/// families (symmetric, alternating, dihedral, dicyclic), Frobenius
/// instances for each classification case reachable within the caps, and
/// Q8 x Z_m direct products. User files are appended in order.
std::vector<GroupTable> default_corpus(const CorpusConfig& config = {});

/// Line format: "name; degree; cycles; cycles; ...". Blank lines and '#'
/// comments are skipped; a record with no generators is the trivial group.
/// Throws ParseError with the offending line number.
std::vector<GroupTable> load_groups(std::istream& in,
                                    int max_order = kDefaultMaxGroupOrder);
std::vector<GroupTable> load_groups_file(const std::string& path,
                                         int max_order = kDefaultMaxGroupOrder);

/// Cheap isomorphism invariants: order, sorted element orders, abelian
/// flag, center size.
struct GroupFingerprint {
  int order = 0;
  std::vector<int> element_orders;
  bool abelian = false;
  int center_size = 0;

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

GroupFingerprint fingerprint(const GroupTable& g);

/// Full isomorphism test by backtracking over generator images.
bool isomorphic(const GroupTable& a, const GroupTable& b);

}  // namespace tiv
