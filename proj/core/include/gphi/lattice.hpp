#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gphi/group_table.hpp"

namespace gphi {

inline constexpr std::size_t kDefaultMaxLattice = 256;

struct LatticeOptions {
  /// Largest group whose subgroups we are willing to enumerate.
  std::size_t max_order = kDefaultMaxLattice;
  /// When set, the cyclic seeds and the join order are shuffled with this
  /// seed. The resulting lattice must not depend on it.
  std::optional<std::uint64_t> shuffle_seed;
};

/// All subgroups of one group, in canonical order (size, then members),
/// together with the Hasse cover relation.
class Lattice {
 public:
  Lattice(std::vector<SubgroupSet> subgroups, std::vector<std::pair<std::size_t, std::size_t>> covers);

  std::span<const SubgroupSet> subgroups() const noexcept { return subgroups_; }
  const SubgroupSet& operator[](std::size_t i) const { return subgroups_[i]; }
  std::size_t size() const noexcept { return subgroups_.size(); }

  /// (smaller, larger) index pairs with nothing in between.
  std::span<const std::pair<std::size_t, std::size_t>> covers() const noexcept { return covers_; }

  std::size_t trivial_index() const noexcept { return 0; }
  std::size_t whole_index() const noexcept { return subgroups_.size() - 1; }

  /// Index of an exact member set, if present.
  std::optional<std::size_t> find(const SubgroupSet& h) const;

  /// The sublattice of everything inside subgroups()[i], in the same
  /// (parent) ids.
  Lattice restrict_to(std::size_t i) const;

 private:
  std::vector<SubgroupSet> subgroups_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

/// Seeds with every cyclic subgroup and closes under joins with cyclic
/// subgroups until nothing new appears. Throws LatticeBudgetExceeded when
/// |G| > options.max_order.
Lattice all_subgroups(const GroupTable& g, const LatticeOptions& options = {});

std::vector<SubgroupSet> maximal_subgroups(const Lattice& l);

/// Intersection of all maximal subgroups; the whole group when trivial.
SubgroupSet frattini(const GroupTable& g, const Lattice& l);

struct QuotientResult {
  GroupTable quotient;
  /// Parent element id -> coset label. Cosets are numbered by their
  /// smallest member, so the kernel is label 0.
  std::vector<ElementId> projection;
};

/// Throws NotNormal.
QuotientResult quotient(const GroupTable& g, const SubgroupSet& n);

/// Calls `visit(h_index, n, section)` for every H in `l` and every N normal
/// in H. Stops early when `visit` returns false.
void for_each_section(const GroupTable& g, const Lattice& l,
                      const std::function<bool(std::size_t, const SubgroupSet&, const QuotientResult&)>& visit);

/// Every quotient H/N with H in `l` and N normal in H.
std::vector<QuotientResult> all_sections(const GroupTable& g, const Lattice& l);

/// PhiReport of every subgroup, indexed like `l`.
std::vector<PhiReport> phi_annotations(const GroupTable& g, const Lattice& l);

/// Graphviz digraph of the Hasse diagram. Cover edges H -> K with
/// phi(H) not dividing phi(K) are drawn red and bold.
std::string lattice_to_dot(const Lattice& l, std::span<const PhiReport> annotations);

/// Whether a divides b, with 0 | 0 counted as true and 0 | b false for b != 0.
bool phi_divides(std::uint64_t a, std::uint64_t b);

}  // namespace gphi
