#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

namespace gphi {

/// Index of an element inside one GroupTable. Only meaningful relative to
/// the table it came from.
using ElementId = std::uint32_t;

/// Raw square table as read from user input, before any validation.
using RawTable = std::vector<std::vector<std::int64_t>>;

/// Groups up to this order get the exhaustive n^3 associativity scan;
/// larger tables fall back to Light's test over a generating set.
inline constexpr std::size_t kFullAssociativityScanLimit = 256;

/// A finite group stored as a dense, validated multiplication table.
///
/// The identity is always element 0. Inverses and element orders are
/// computed once at construction; the object is immutable afterwards and
/// safe to share between threads.
class GroupTable {
 public:
  /// Validates the group axioms and renumbers the identity to id 0.
  /// Throws GroupError with kind Malformed, NotClosed, NoIdentity,
  /// NoInverse or NotAssociative.
  static GroupTable validate(const RawTable& raw);
  static GroupTable validate(std::size_t order, std::span<const std::int64_t> flat);

  /// Skips validation. The caller guarantees the table is a group whose
  /// identity is id 0. Used for tables derived from an already validated
  /// group (subgroups, quotients).
  static GroupTable from_trusted(std::size_t order, std::vector<ElementId> flat);

  std::size_t order() const noexcept { return order_; }
  static constexpr ElementId identity() noexcept { return 0; }

  ElementId mul(ElementId a, ElementId b) const noexcept { return table_[a * order_ + b]; }
  ElementId inv(ElementId a) const noexcept { return inverse_[a]; }
  std::uint64_t element_order(ElementId a) const noexcept { return orders_[a]; }
  ElementId pow(ElementId a, std::uint64_t k) const noexcept;

  std::span<const ElementId> row(ElementId a) const noexcept {
    return {table_.data() + a * order_, order_};
  }
  std::span<const ElementId> flat() const noexcept { return table_; }
  std::span<const std::uint64_t> element_orders() const noexcept { return orders_; }

  bool is_abelian() const noexcept;

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  GroupTable(std::size_t order, std::vector<ElementId> flat);

  std::size_t order_ = 0;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
  std::vector<std::uint64_t> orders_;
};

/// A subgroup of some parent table: a strictly sorted list of member ids
/// plus a membership bitmask. Canonical order is by size, then
/// lexicographic on members.
class SubgroupSet {
 public:
  SubgroupSet() = default;
  SubgroupSet(std::size_t parent_order, std::vector<ElementId> members);

  static SubgroupSet from_mask(std::size_t parent_order, std::vector<std::uint64_t> mask);
  static SubgroupSet trivial(std::size_t parent_order) { return {parent_order, {0}}; }
  static SubgroupSet whole(const GroupTable& g);

  std::span<const ElementId> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  std::size_t parent_order() const noexcept { return parent_order_; }
  const std::vector<std::uint64_t>& mask() const noexcept { return mask_; }

  bool contains(ElementId a) const noexcept { return (mask_[a >> 6] >> (a & 63)) & 1U; }
  bool is_subset_of(const SubgroupSet& other) const noexcept;
  bool is_trivial() const noexcept { return members_.size() == 1; }

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    return a.members_ == b.members_;
  }
  friend std::strong_ordering operator<=>(const SubgroupSet& a, const SubgroupSet& b);

 private:
  std::size_t parent_order_ = 0;
  std::vector<ElementId> members_;
  std::vector<std::uint64_t> mask_;
};

SubgroupSet intersect(const SubgroupSet& a, const SubgroupSet& b);

/// Histogram of element orders.
struct OrderSpectrum {
  std::map<std::uint64_t, std::uint64_t> counts;

  std::uint64_t total() const;
  std::uint64_t count(std::uint64_t d) const {
    auto it = counts.find(d);
    return it == counts.end() ? 0 : it->second;
  }
  friend bool operator==(const OrderSpectrum&, const OrderSpectrum&) = default;
};

struct PhiReport {
  std::uint64_t exponent = 1;
  std::uint64_t phi = 0;
  OrderSpectrum spectrum;
};

std::uint64_t element_order(const GroupTable& g, ElementId a);
std::uint64_t exponent(const GroupTable& g);
/// Number of elements whose order equals the exponent.
std::uint64_t phi(const GroupTable& g);
OrderSpectrum order_spectrum(const GroupTable& g);
PhiReport phi_report(const GroupTable& g);

/// Element orders are intrinsic, so a subgroup's report can be read off
/// the parent table without materialising the subgroup.
PhiReport phi_report(const GroupTable& g, const SubgroupSet& h);
std::uint64_t phi(const GroupTable& g, const SubgroupSet& h);

SubgroupSet generated_subgroup(const GroupTable& g, std::span<const ElementId> seeds);
SubgroupSet generated_subgroup(const GroupTable& g, std::initializer_list<ElementId> seeds);

/// Subgroup generated by `gens`, where `inside` is a subgroup already known
/// to lie in the result. Supplying it lets the closure start from there.
SubgroupSet generated_subgroup(const GroupTable& g, const SubgroupSet& inside, std::span<const ElementId> gens);

/// Smallest subgroup containing both.
SubgroupSet join(const GroupTable& g, const SubgroupSet& a, const SubgroupSet& b);

SubgroupSet center(const GroupTable& g);

/// a^-1 b^-1 a b
ElementId commutator(const GroupTable& g, ElementId a, ElementId b);

/// [A, B]: generated by all commutators [a, b], a in A, b in B.
SubgroupSet commutator_subgroup(const GroupTable& g, const SubgroupSet& a, const SubgroupSet& b);
SubgroupSet derived_subgroup(const GroupTable& g);

bool is_normal(const GroupTable& g, const SubgroupSet& h);

/// The subgroup as a standalone table. Local id i corresponds to parent id
/// h.members()[i]; the identity stays at 0.
GroupTable subgroup_table(const GroupTable& g, const SubgroupSet& h);

/// Maps a subgroup of `subgroup_table(g, h)` back into g.
SubgroupSet embed(const SubgroupSet& h, const SubgroupSet& local);

/// Applies a relabeling perm (old id -> new id) and re-canonicalizes.
GroupTable relabel(const GroupTable& g, std::span<const ElementId> perm);

/// Cayley-table text format: the order n on the first line, then n rows of
/// n space-separated 0-based ids. Reading validates; the identity may be
/// any id on input.
GroupTable read_cayley(std::istream& in);
void write_cayley(std::ostream& out, const GroupTable& g);

}  // namespace gphi
