#include "gphi/analysis.hpp"

#include <algorithm>
#include <string>

#include "gphi/errors.hpp"
#include "gphi/number_theory.hpp"

namespace gphi {

namespace {

// Normal Sylow P and chosen Sylow Q of a group of order p^m q^n.
struct PrimeSplit {
  SylowSubgroup normal;
  SylowSubgroup other;
};

std::optional<PrimeSplit> split_two_primes(const GroupTable& g, const Lattice& l) {
  auto dec = sylow_decomposition(g, l);
  if (dec.parts.size() != 2) return std::nullopt;
  auto& a = dec.parts[0];
  auto& b = dec.parts[1];
  if (a.unique && !b.unique) return PrimeSplit{a, b};
  if (b.unique && !a.unique) return PrimeSplit{b, a};
  return std::nullopt;
}

bool has_element_of_order(const GroupTable& g, std::uint64_t order) {
  const auto orders = g.element_orders();
  return std::find(orders.begin(), orders.end(), order) != orders.end();
}

}  // namespace

SylowSubgroup sylow_subgroup(const GroupTable& g, const Lattice& l, std::uint64_t p) {
  if (!is_prime(p) || g.order() % p != 0) {
    throw GroupError(ErrorKind::PrimeDoesNotDivide,
                     std::to_string(p) + " is not a prime divisor of " + std::to_string(g.order()));
  }
  SylowSubgroup out;
  out.p = p;
  out.valuation = p_valuation(g.order(), p);
  const std::uint64_t target = ipow(p, out.valuation);
  std::size_t count = 0;
  for (const auto& h : l.subgroups()) {
    if (h.size() != target) continue;
    if (count++ == 0) out.subgroup = h;
  }
  out.unique = count == 1;
  return out;
}

SylowDecomposition sylow_decomposition(const GroupTable& g, const Lattice& l) {
  SylowDecomposition d;
  for (auto [p, e] : factorize(g.order())) d.parts.push_back(sylow_subgroup(g, l, p));
  return d;
}

std::vector<SubgroupSet> lower_central_series(const GroupTable& g) {
  const auto whole = SubgroupSet::whole(g);
  std::vector<SubgroupSet> series{whole};
  while (true) {
    auto next = commutator_subgroup(g, whole, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent_lcs(const GroupTable& g) { return lower_central_series(g).back().is_trivial(); }

bool is_nilpotent_sections(const GroupTable& g, const Lattice& l) {
  bool all_nonzero = true;
  for_each_section(g, l, [&](std::size_t, const SubgroupSet&, const QuotientResult& s) {
    all_nonzero = phi(s.quotient) != 0;
    return all_nonzero;
  });
  return all_nonzero;
}

bool is_nilpotent_sections(const GroupTable& g, const LatticeOptions& options) {
  return is_nilpotent_sections(g, all_subgroups(g, options));
}

Condition1Result condition1(const GroupTable& g, const Lattice& l) {
  for (const auto& h : l.subgroups()) {
    if (phi(g, h) == 0) return {false, h};
  }
  return {};
}

Condition2Result condition2(const GroupTable& g, const Lattice& l) {
  std::vector<std::uint64_t> phis;
  phis.reserve(l.size());
  for (const auto& h : l.subgroups()) phis.push_back(phi(g, h));
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = i + 1; j < l.size(); ++j) {
      if (phi_divides(phis[i], phis[j]) || !l[i].is_subset_of(l[j])) continue;
      return {false, Condition2Witness{l[i], l[j], phis[i], phis[j]}};
    }
  }
  return {};
}

std::string_view to_string(SylowShape s) {
  switch (s) {
    case SylowShape::cyclic: return "cyclic";
    case SylowShape::q8: return "Q8";
    case SylowShape::p_by_p: return "p_by_p";
    case SylowShape::generalized_quaternion: return "generalized_quaternion";
    case SylowShape::other: return "other";
  }
  return "other";
}

SylowShape recognize_sylow_shape(const GroupTable& pg) {
  const std::size_t n = pg.order();
  if (n == 1) return SylowShape::cyclic;
  const std::uint64_t p = prime_power_base(n);
  if (p == 0) throw GroupError(ErrorKind::NotPrimePower, "order " + std::to_string(n) + " is not a prime power");

  const auto report = phi_report(pg);
  const auto& spec = report.spectrum;
  if (spec.count(n) > 0) return SylowShape::cyclic;
  if (n == 8 && !pg.is_abelian() && spec.count(1) == 1 && spec.count(2) == 1 && spec.count(4) == 6) {
    return SylowShape::q8;
  }
  if (n == p * p && report.exponent == p) return SylowShape::p_by_p;
  if (p == 2 && n >= 8 && spec.count(2) == 1) return SylowShape::generalized_quaternion;
  return SylowShape::other;
}

bool is_admissible_shape(SylowShape s) {
  return s == SylowShape::cyclic || s == SylowShape::q8 || s == SylowShape::p_by_p;
}

Classification classification_predicate(const GroupTable& g, const Lattice& l) {
  Classification c;
  c.nilpotent = is_nilpotent_lcs(g);
  bool admissible = true;
  for (const auto& part : sylow_decomposition(g, l).parts) {
    const auto shape = recognize_sylow_shape(subgroup_table(g, part.subgroup));
    c.shapes.emplace_back(part.p, shape);
    admissible = admissible && is_admissible_shape(shape);
  }
  c.classified = c.nilpotent && admissible;
  return c;
}

VerdictReport verify_theorem(const GroupTable& g, const Lattice& l) {
  VerdictReport v;
  auto c1 = condition1(g, l);
  v.cond1 = c1.holds;
  v.cond1_witness = std::move(c1.witness);
  auto c2 = condition2(g, l);
  v.cond2 = c2.holds;
  v.cond2_witness = std::move(c2.witness);
  auto cls = classification_predicate(g, l);
  v.nilpotent = cls.nilpotent;
  v.sylow_shapes = std::move(cls.shapes);
  v.classified = cls.classified;
  v.agrees = !v.cond1 || v.cond2 == v.classified;
  return v;
}

VerdictReport verify_theorem(const GroupTable& g, const LatticeOptions& options) {
  return verify_theorem(g, all_subgroups(g, options));
}

Lemma21Check lemma21_check(const GroupTable& pg, const Lattice& l) {
  Lemma21Check out;
  out.shape = recognize_sylow_shape(pg);
  out.cond2 = condition2(pg, l).holds;
  out.holds = out.cond2 == is_admissible_shape(out.shape);
  return out;
}

Lemma21Check lemma21_check(const GroupTable& pg, const LatticeOptions& options) {
  // Shape first: it rejects non-p-groups before any lattice work.
  recognize_sylow_shape(pg);
  return lemma21_check(pg, all_subgroups(pg, options));
}

bool is_schmidt(const GroupTable& g, const Lattice& l) {
  if (is_nilpotent_lcs(g)) return false;
  for (const auto& m : maximal_subgroups(l)) {
    if (!is_nilpotent_lcs(subgroup_table(g, m))) return false;
  }
  return true;
}

bool SchmidtReport::all_clauses() const {
  return yq_central && center_eq_frattini && center_eq_phiP_times_yq && derived_eq_P && P_derived_eq_frattini_P &&
         index_formula && abelian_case && nonabelian_case && quotient_schmidt && no_cyclic_pq;
}

SchmidtReport schmidt_structure_report(const GroupTable& g, const LatticeOptions& options) {
  const Lattice l = all_subgroups(g, options);
  if (!is_schmidt(g, l)) throw GroupError(ErrorKind::NotSchmidt, "group is not a Schmidt group");

  SchmidtReport rep;
  rep.is_schmidt = true;
  // Every clause stays false if the group does not even split as p^m q^n
  // with exactly one normal Sylow subgroup.
  const auto split = split_two_primes(g, l);
  if (!split) return rep;

  const SubgroupSet& big_p = split->normal.subgroup;
  const SubgroupSet& big_q = split->other.subgroup;
  rep.p = split->normal.p;
  rep.m = split->normal.valuation;
  rep.q = split->other.p;
  rep.n = split->other.valuation;
  rep.r = multiplicative_order(rep.p, rep.q);
  const std::uint64_t p_to_r = ipow(rep.p, rep.r);

  bool q_cyclic = false;
  for (ElementId a : big_q.members()) {
    if (g.element_order(a) == big_q.size()) {
      rep.y = a;
      q_cyclic = true;
      break;
    }
  }

  const GroupTable p_table = subgroup_table(g, big_p);
  const Lattice p_lattice = all_subgroups(p_table, options);
  rep.p_shape = recognize_sylow_shape(p_table);
  const SubgroupSet frattini_p = embed(big_p, frattini(p_table, p_lattice));
  const SubgroupSet derived_p = embed(big_p, derived_subgroup(p_table));
  const SubgroupSet center_p = embed(big_p, center(p_table));

  const SubgroupSet z = center(g);
  const SubgroupSet frat = frattini(g, l);
  const ElementId yq = g.pow(rep.y, rep.q);
  const SubgroupSet yq_group = generated_subgroup(g, {yq});

  rep.yq_central = q_cyclic && z.contains(yq);
  rep.center_eq_frattini = z == frat;
  rep.center_eq_phiP_times_yq =
      q_cyclic && z == join(g, frattini_p, yq_group) && intersect(frattini_p, yq_group).is_trivial();

  const SubgroupSet derived = derived_subgroup(g);
  rep.derived_eq_P = derived == big_p;
  const SubgroupSet second_derived = embed(derived, derived_subgroup(subgroup_table(g, derived)));
  rep.P_derived_eq_frattini_P = derived_p == frattini_p && second_derived == derived_p;
  rep.index_formula = big_p.size() / derived_p.size() == p_to_r;

  if (p_table.is_abelian()) {
    bool minimal_normal = true;
    for (const auto& h : l.subgroups()) {
      if (h.is_trivial() || h.size() >= big_p.size() || !h.is_subset_of(big_p)) continue;
      if (is_normal(g, h)) {
        minimal_normal = false;
        break;
      }
    }
    rep.abelian_case = exponent(p_table) == rep.p && big_p.size() == p_to_r && minimal_normal;
    rep.nonabelian_case = true;
  } else {
    rep.abelian_case = true;
    rep.nonabelian_case =
        center_p == derived_p && derived_p == frattini_p && big_p.size() / center_p.size() == p_to_r;
  }

  const QuotientResult central_quotient = quotient(g, z);
  const GroupTable& gz = central_quotient.quotient;
  rep.quotient_schmidt = gz.order() == p_to_r * rep.q && is_schmidt(gz, all_subgroups(gz, options));
  rep.no_cyclic_pq = !has_element_of_order(gz, rep.p * rep.q);
  return rep;
}

Lemma22Probe lemma22_case_probe(const GroupTable& g, const LatticeOptions& options) {
  const Lattice l = all_subgroups(g, options);
  if (!is_schmidt(g, l)) throw GroupError(ErrorKind::NotApplicable, "group is not a Schmidt group");
  const auto split = split_two_primes(g, l);
  if (!split) throw GroupError(ErrorKind::NotApplicable, "no unique normal Sylow subgroup");

  Lemma22Probe probe;
  switch (recognize_sylow_shape(subgroup_table(g, split->normal.subgroup))) {
    case SylowShape::cyclic: probe.case_tag = 'a'; break;
    case SylowShape::p_by_p: probe.case_tag = 'b'; break;
    case SylowShape::q8: probe.case_tag = 'c'; break;
    default: throw GroupError(ErrorKind::NotApplicable, "normal Sylow subgroup is not cyclic, Z_p x Z_p or Q8");
  }
  probe.phi = phi(g);
  probe.phi_zero = probe.phi == 0;
  if (!probe.phi_zero) {
    const auto gz = quotient(g, center(g)).quotient;
    const std::uint64_t pq = split->normal.p * split->other.p;
    for (ElementId a = 0; a < gz.order(); ++a) {
      if (gz.element_order(a) == pq) {
        probe.quotient_pq_element = a;
        break;
      }
    }
  }
  probe.contradiction_found = probe.phi_zero || probe.quotient_pq_element.has_value();
  return probe;
}

std::vector<std::size_t> search_nonnilpotent_with_subgroup_phi(std::span<const GroupTable> catalog,
                                                               const LatticeOptions& options) {
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (is_nilpotent_lcs(catalog[i])) continue;
    if (condition1(catalog[i], all_subgroups(catalog[i], options)).holds) hits.push_back(i);
  }
  return hits;
}

}  // namespace gphi
