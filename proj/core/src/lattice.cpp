#include "gphi/lattice.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "gphi/errors.hpp"

namespace gphi {

namespace {

struct Candidate {
  SubgroupSet set;
  std::vector<ElementId> gens;
};

SubgroupSet cyclic_subgroup(const GroupTable& g, ElementId a) {
  std::vector<ElementId> powers{0};
  for (ElementId x = a; x != 0; x = g.mul(x, a)) powers.push_back(x);
  return {g.order(), std::move(powers)};
}

std::vector<std::pair<std::size_t, std::size_t>> compute_covers(std::span<const SubgroupSet> subs) {
  const std::size_t s = subs.size();
  // below[j] lists every proper subgroup of subs[j]; subs is sorted by size
  // so only earlier indices can be inside later ones.
  std::vector<std::vector<char>> inside(s, std::vector<char>(s, 0));
  std::vector<std::vector<std::size_t>> below(s);
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (subs[i].size() < subs[j].size() && subs[j].size() % subs[i].size() == 0 &&
          subs[i].is_subset_of(subs[j])) {
        inside[i][j] = 1;
        below[j].push_back(i);
      }
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t i : below[j]) {
      bool direct = true;
      for (std::size_t k : below[j]) {
        if (inside[i][k]) {
          direct = false;
          break;
        }
      }
      if (direct) covers.emplace_back(i, j);
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

// Quotient of the subgroup h by n (normal in h), with cosets labelled in
// order of their smallest member. The projection is indexed by position
// in h.members().
QuotientResult quotient_within(const GroupTable& g, const SubgroupSet& h, const SubgroupSet& n) {
  constexpr ElementId kUnset = static_cast<ElementId>(-1);
  std::vector<ElementId> label(g.order(), kUnset);
  std::vector<ElementId> reps;
  for (ElementId a : h.members()) {
    if (label[a] != kUnset) continue;
    const auto c = static_cast<ElementId>(reps.size());
    reps.push_back(a);
    for (ElementId m : n.members()) label[g.mul(a, m)] = c;
  }
  const std::size_t k = reps.size();
  std::vector<ElementId> flat(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) flat[i * k + j] = label[g.mul(reps[i], reps[j])];
  }
  QuotientResult out{GroupTable::from_trusted(k, std::move(flat)), {}};
  out.projection.reserve(h.size());
  for (ElementId a : h.members()) out.projection.push_back(label[a]);
  return out;
}

bool is_normal_in(const GroupTable& g, const SubgroupSet& h, const SubgroupSet& n) {
  for (ElementId x : h.members()) {
    const ElementId xi = g.inv(x);
    for (ElementId a : n.members()) {
      if (!n.contains(g.mul(g.mul(xi, a), x))) return false;
    }
  }
  return true;
}

}  // namespace

Lattice::Lattice(std::vector<SubgroupSet> subgroups, std::vector<std::pair<std::size_t, std::size_t>> covers)
    : subgroups_(std::move(subgroups)), covers_(std::move(covers)) {}

std::optional<std::size_t> Lattice::find(const SubgroupSet& h) const {
  auto it = std::lower_bound(subgroups_.begin(), subgroups_.end(), h);
  if (it != subgroups_.end() && *it == h) return static_cast<std::size_t>(it - subgroups_.begin());
  return std::nullopt;
}

Lattice Lattice::restrict_to(std::size_t i) const {
  constexpr std::size_t kOut = static_cast<std::size_t>(-1);
  std::vector<std::size_t> remap(subgroups_.size(), kOut);
  std::vector<SubgroupSet> subs;
  for (std::size_t j = 0; j <= i; ++j) {
    if (subgroups_[j].is_subset_of(subgroups_[i])) {
      remap[j] = subs.size();
      subs.push_back(subgroups_[j]);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (auto [a, b] : covers_) {
    if (remap[a] != kOut && remap[b] != kOut) covers.emplace_back(remap[a], remap[b]);
  }
  return {std::move(subs), std::move(covers)};
}

Lattice all_subgroups(const GroupTable& g, const LatticeOptions& options) {
  if (g.order() > options.max_order) {
    throw GroupError(ErrorKind::LatticeBudgetExceeded, "group of order " + std::to_string(g.order()) +
                                                           " exceeds the lattice budget " +
                                                           std::to_string(options.max_order));
  }
  std::optional<std::mt19937_64> rng;
  if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);

  std::map<std::vector<std::uint64_t>, std::size_t> seen;
  std::vector<Candidate> found;
  auto add = [&](SubgroupSet s, std::vector<ElementId> gens) -> bool {
    auto [it, fresh] = seen.emplace(s.mask(), found.size());
    if (fresh) found.push_back({std::move(s), std::move(gens)});
    return fresh;
  };

  add(SubgroupSet::trivial(g.order()), {});
  // One generator per distinct cyclic subgroup.
  std::vector<ElementId> seeds;
  for (ElementId a = 1; a < g.order(); ++a) {
    if (add(cyclic_subgroup(g, a), {a})) seeds.push_back(a);
  }
  if (rng) std::shuffle(seeds.begin(), seeds.end(), *rng);

  std::vector<std::size_t> work(found.size());
  for (std::size_t i = 0; i < work.size(); ++i) work[i] = i;
  while (!work.empty()) {
    std::size_t pick = 0;
    if (rng) pick = std::uniform_int_distribution<std::size_t>(0, work.size() - 1)(*rng);
    else pick = work.size() - 1;
    const std::size_t idx = work[pick];
    work[pick] = work.back();
    work.pop_back();

    for (ElementId c : seeds) {
      if (found[idx].set.contains(c)) continue;
      auto gens = found[idx].gens;
      gens.push_back(c);
      auto joined = generated_subgroup(g, found[idx].set, gens);
      if (add(std::move(joined), std::move(gens))) work.push_back(found.size() - 1);
    }
  }

  std::vector<SubgroupSet> subs;
  subs.reserve(found.size());
  for (auto& c : found) subs.push_back(std::move(c.set));
  std::sort(subs.begin(), subs.end());
  auto covers = compute_covers(subs);
  return {std::move(subs), std::move(covers)};
}

std::vector<SubgroupSet> maximal_subgroups(const Lattice& l) {
  std::vector<SubgroupSet> out;
  if (l.size() < 2) return out;
  for (auto [a, b] : l.covers()) {
    if (b == l.whole_index()) out.push_back(l[a]);
  }
  return out;
}

SubgroupSet frattini(const GroupTable& g, const Lattice& l) {
  auto result = SubgroupSet::whole(g);
  for (const auto& m : maximal_subgroups(l)) result = intersect(result, m);
  return result;
}

QuotientResult quotient(const GroupTable& g, const SubgroupSet& n) {
  if (!is_normal(g, n)) throw GroupError(ErrorKind::NotNormal, "subgroup of order " + std::to_string(n.size()) +
                                                                   " is not normal");
  return quotient_within(g, SubgroupSet::whole(g), n);
}

void for_each_section(const GroupTable& g, const Lattice& l,
                      const std::function<bool(std::size_t, const SubgroupSet&, const QuotientResult&)>& visit) {
  for (std::size_t i = 0; i < l.size(); ++i) {
    const auto& h = l[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const auto& n = l[j];
      if (h.size() % n.size() != 0 || !n.is_subset_of(h) || !is_normal_in(g, h, n)) continue;
      if (!visit(i, n, quotient_within(g, h, n))) return;
    }
  }
}

std::vector<QuotientResult> all_sections(const GroupTable& g, const Lattice& l) {
  std::vector<QuotientResult> out;
  for_each_section(g, l, [&](std::size_t, const SubgroupSet&, const QuotientResult& q) {
    out.push_back(q);
    return true;
  });
  return out;
}

std::vector<PhiReport> phi_annotations(const GroupTable& g, const Lattice& l) {
  std::vector<PhiReport> out;
  out.reserve(l.size());
  for (const auto& h : l.subgroups()) out.push_back(phi_report(g, h));
  return out;
}

bool phi_divides(std::uint64_t a, std::uint64_t b) {
  if (a == 0) return b == 0;
  return b % a == 0;
}

std::string lattice_to_dot(const Lattice& l, std::span<const PhiReport> annotations) {
  std::ostringstream out;
  out << "digraph lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < l.size(); ++i) {
    const auto& a = annotations[i];
    out << "  n" << i << " [label=\"|H|=" << l[i].size() << ", exp=" << a.exponent << ", \xCF\x86=" << a.phi
        << "\"];\n";
  }
  for (auto [lo, hi] : l.covers()) {
    out << "  n" << lo << " -> n" << hi;
    if (!phi_divides(annotations[lo].phi, annotations[hi].phi)) out << " [color=red, style=bold]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gphi
