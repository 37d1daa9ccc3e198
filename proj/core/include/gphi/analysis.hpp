#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "gphi/group_table.hpp"
#include "gphi/lattice.hpp"

namespace gphi {

// ---------------------------------------------------------------------------
// Sylow subgroups and nilpotency

struct SylowSubgroup {
  std::uint64_t p = 0;
  unsigned valuation = 0;
  /// First subgroup of order p^valuation in canonical lattice order.
  SubgroupSet subgroup;
  bool unique = false;
};

struct SylowDecomposition {
  std::vector<SylowSubgroup> parts;  // ascending p
};

/// Throws PrimeDoesNotDivide.
SylowSubgroup sylow_subgroup(const GroupTable& g, const Lattice& l, std::uint64_t p);
SylowDecomposition sylow_decomposition(const GroupTable& g, const Lattice& l);

/// G, [G, G], [G, [G, G]], ... until it stabilises.
std::vector<SubgroupSet> lower_central_series(const GroupTable& g);

/// Ground truth: the lower central series reaches the trivial subgroup.
bool is_nilpotent_lcs(const GroupTable& g);

/// Cross-check: phi(S) != 0 for every section S = H/N of G.
/// Throws LatticeBudgetExceeded.
bool is_nilpotent_sections(const GroupTable& g, const LatticeOptions& options = {});
bool is_nilpotent_sections(const GroupTable& g, const Lattice& l);

// ---------------------------------------------------------------------------
// phi conditions over the subgroup lattice

struct Condition1Result {
  bool holds = true;
  /// Smallest subgroup (canonical order) with phi = 0.
  std::optional<SubgroupSet> witness;
};

/// Every subgroup has phi != 0.
Condition1Result condition1(const GroupTable& g, const Lattice& l);

struct Condition2Witness {
  SubgroupSet smaller;
  SubgroupSet larger;
  std::uint64_t phi_smaller = 0;
  std::uint64_t phi_larger = 0;
};

struct Condition2Result {
  bool holds = true;
  std::optional<Condition2Witness> witness;
};

/// phi(H) | phi(K) for every H <= K, under the convention of phi_divides().
/// The witness is the first failing pair, scanning H then K in canonical
/// order.
Condition2Result condition2(const GroupTable& g, const Lattice& l);

// ---------------------------------------------------------------------------
// Sylow shapes and the classification

enum class SylowShape { cyclic, q8, p_by_p, generalized_quaternion, other };

std::string_view to_string(SylowShape s);

/// Precedence: cyclic, Q8, p_by_p, generalized_quaternion, other.
/// Throws NotPrimePower unless |P| is 1 or a prime power.
SylowShape recognize_sylow_shape(const GroupTable& p_group);

/// cyclic, Q8, or Z_p x Z_p.
bool is_admissible_shape(SylowShape s);

struct Classification {
  bool nilpotent = false;
  std::vector<std::pair<std::uint64_t, SylowShape>> shapes;
  bool classified = false;
};

/// Nilpotent, and every Sylow subgroup is cyclic, Q8 or Z_p x Z_p.
Classification classification_predicate(const GroupTable& g, const Lattice& l);

struct VerdictReport {
  bool cond1 = true;
  std::optional<SubgroupSet> cond1_witness;
  bool cond2 = true;
  std::optional<Condition2Witness> cond2_witness;
  bool nilpotent = false;
  std::vector<std::pair<std::uint64_t, SylowShape>> sylow_shapes;
  bool classified = false;
  /// (not cond1) or (cond2 == classified).
  bool agrees = false;
};

VerdictReport verify_theorem(const GroupTable& g, const Lattice& l);
VerdictReport verify_theorem(const GroupTable& g, const LatticeOptions& options = {});

struct Lemma21Check {
  bool cond2 = false;
  SylowShape shape = SylowShape::other;
  /// cond2 == is_admissible_shape(shape)
  bool holds = false;
};

/// For a p-group: condition2 holds iff it is cyclic, Q8 or Z_p x Z_p.
/// Throws NotPrimePower.
Lemma21Check lemma21_check(const GroupTable& p_group, const LatticeOptions& options = {});
Lemma21Check lemma21_check(const GroupTable& p_group, const Lattice& l);

// ---------------------------------------------------------------------------
// Schmidt groups

/// Non-nilpotent with every proper subgroup nilpotent. Checking the
/// maximal subgroups suffices since subgroups of nilpotent groups are
/// nilpotent.
bool is_schmidt(const GroupTable& g, const Lattice& l);

struct SchmidtReport {
  bool is_schmidt = false;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  unsigned m = 0;
  unsigned n = 0;
  unsigned r = 0;
  /// Generator of the chosen Sylow q-subgroup.
  ElementId y = 0;
  SylowShape p_shape = SylowShape::other;

  bool yq_central = false;
  bool center_eq_frattini = false;
  bool center_eq_phiP_times_yq = false;
  bool derived_eq_P = false;
  bool P_derived_eq_frattini_P = false;
  bool index_formula = false;
  bool abelian_case = false;
  bool nonabelian_case = false;
  bool quotient_schmidt = false;
  bool no_cyclic_pq = false;

  bool all_clauses() const;
};

/// Evaluates every structural clause on G. Throws NotSchmidt.
SchmidtReport schmidt_structure_report(const GroupTable& g, const LatticeOptions& options = {});

struct Lemma22Probe {
  /// 'a': P cyclic, 'b': P = Z_p x Z_p, 'c': P = Q8.
  char case_tag = '?';
  std::uint64_t phi = 0;
  /// phi(G) = 0, so G itself violates condition1.
  bool phi_zero = false;
  /// An element of order pq in G/Z(G); only searched when phi(G) != 0.
  std::optional<ElementId> quotient_pq_element;
  /// Whether a concrete reason that condition1 and condition2 cannot both
  /// hold was found.
  bool contradiction_found = false;
};

/// Throws NotApplicable unless G is a Schmidt group whose normal Sylow
/// subgroup is cyclic, Z_p x Z_p or Q8.
Lemma22Probe lemma22_case_probe(const GroupTable& g, const LatticeOptions& options = {});

/// Indices of the groups that are not nilpotent yet satisfy condition1.
std::vector<std::size_t> search_nonnilpotent_with_subgroup_phi(std::span<const GroupTable> catalog,
                                                               const LatticeOptions& options = {});

}  // namespace gphi
