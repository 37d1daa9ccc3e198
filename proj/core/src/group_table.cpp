#include "gphi/group_table.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include "gphi/errors.hpp"

namespace gphi {

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

// Light's associativity test. If (x s) y = x (s y) holds for every x, y and
// every s in a set S, it holds for every element of the right-multiplication
// closure of S, so S only has to generate the table in that weak sense.
void check_associative_light(std::size_t n, std::span<const ElementId> t, std::size_t identity) {
  auto mul = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(t[a * n + b]); };

  std::vector<ElementId> gens;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> reached{identity};
  seen[identity] = 1;

  for (std::size_t cand = 0; cand < n; ++cand) {
    if (seen[cand]) continue;
    gens.push_back(static_cast<ElementId>(cand));
    // Old elements only need the new generator.
    const std::size_t old = reached.size();
    for (std::size_t i = 0; i < old; ++i) {
      std::size_t p = mul(reached[i], cand);
      if (!seen[p]) {
        seen[p] = 1;
        reached.push_back(p);
      }
    }
    if (!seen[cand]) {
      seen[cand] = 1;
      reached.push_back(cand);
    }
    for (std::size_t i = old; i < reached.size(); ++i) {
      for (ElementId s : gens) {
        std::size_t p = mul(reached[i], s);
        if (!seen[p]) {
          seen[p] = 1;
          reached.push_back(p);
        }
      }
    }
  }

  for (ElementId s : gens) {
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t xs = mul(x, s);
      for (std::size_t y = 0; y < n; ++y) {
        if (mul(xs, y) != mul(x, mul(s, y))) {
          throw GroupError(ErrorKind::NotAssociative,
                           "(a*b)*c != a*(b*c) for (a, b, c) = " + triple(x, s, y));
        }
      }
    }
  }
}

void check_associative_full(std::size_t n, std::span<const ElementId> t) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = t[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (t[ab * n + c] != t[a * n + t[b * n + c]]) {
          throw GroupError(ErrorKind::NotAssociative,
                           "(a*b)*c != a*(b*c) for (a, b, c) = " + triple(a, b, c));
        }
      }
    }
  }
}

std::vector<std::uint64_t> make_mask(std::size_t n) { return std::vector<std::uint64_t>((n + 63) / 64, 0); }

void set_bit(std::vector<std::uint64_t>& mask, ElementId a) { mask[a >> 6] |= std::uint64_t{1} << (a & 63); }

bool test_bit(const std::vector<std::uint64_t>& mask, ElementId a) { return (mask[a >> 6] >> (a & 63)) & 1U; }

// Closure of `start` (already a subgroup, or {e}) under right
// multiplication by `gens`. Gives the generated subgroup in a finite group.
SubgroupSet close_under(const GroupTable& g, std::span<const ElementId> start, std::span<const ElementId> gens) {
  auto mask = make_mask(g.order());
  std::vector<ElementId> list(start.begin(), start.end());
  for (ElementId a : list) set_bit(mask, a);
  if (list.empty()) {
    list.push_back(0);
    set_bit(mask, 0);
  }
  // Elements of `start` are closed among themselves but not under `gens`.
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (ElementId s : gens) {
      ElementId p = g.mul(list[i], s);
      if (!test_bit(mask, p)) {
        set_bit(mask, p);
        list.push_back(p);
      }
    }
  }
  return SubgroupSet::from_mask(g.order(), std::move(mask));
}

std::vector<ElementId> generators_of(const GroupTable& g, const SubgroupSet& h) {
  std::vector<ElementId> gens;
  SubgroupSet cur = SubgroupSet::trivial(g.order());
  for (ElementId a : h.members()) {
    if (cur.contains(a)) continue;
    gens.push_back(a);
    cur = close_under(g, cur.members(), gens);
  }
  return gens;
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupTable

GroupTable::GroupTable(std::size_t order, std::vector<ElementId> flat)
    : order_(order), table_(std::move(flat)), inverse_(order), orders_(order) {
  for (ElementId a = 0; a < order_; ++a) {
    for (ElementId b = 0; b < order_; ++b) {
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
    }
    std::uint64_t k = 1;
    for (ElementId x = a; x != 0; x = mul(x, a)) ++k;
    orders_[a] = k;
  }
}

GroupTable GroupTable::from_trusted(std::size_t order, std::vector<ElementId> flat) {
  return GroupTable(order, std::move(flat));
}

GroupTable GroupTable::validate(const RawTable& raw) {
  const std::size_t n = raw.size();
  std::vector<std::int64_t> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (raw[r].size() != n) {
      throw GroupError(ErrorKind::Malformed, "row " + std::to_string(r) + " has " +
                                                 std::to_string(raw[r].size()) + " entries, expected " +
                                                 std::to_string(n));
    }
    flat.insert(flat.end(), raw[r].begin(), raw[r].end());
  }
  return validate(n, flat);
}

GroupTable GroupTable::validate(std::size_t n, std::span<const std::int64_t> raw) {
  if (n == 0) throw GroupError(ErrorKind::Malformed, "empty table");
  if (raw.size() != n * n) {
    throw GroupError(ErrorKind::Malformed, "expected " + std::to_string(n * n) + " entries, got " +
                                               std::to_string(raw.size()));
  }
  std::vector<ElementId> t(n * n);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 0 || static_cast<std::uint64_t>(raw[i]) >= n) {
      throw GroupError(ErrorKind::NotClosed, "entry at (" + std::to_string(i / n) + ", " +
                                                 std::to_string(i % n) + ") is " + std::to_string(raw[i]) +
                                                 ", outside [0, " + std::to_string(n) + ")");
    }
    t[i] = static_cast<ElementId>(raw[i]);
  }
  auto at = [&](std::size_t a, std::size_t b) { return t[a * n + b]; };

  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = at(c, a) == a && at(a, c) == a;
    if (ok) e = c;
  }
  if (e == n) throw GroupError(ErrorKind::NoIdentity, "no two-sided identity element");

  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = at(a, b) == e && at(b, a) == e;
    if (!found) throw GroupError(ErrorKind::NoInverse, "element " + std::to_string(a) + " has no inverse");
  }

  if (n <= kFullAssociativityScanLimit) {
    check_associative_full(n, t);
  } else {
    check_associative_light(n, t, e);
  }

  if (e != 0) {
    auto swap_id = [&](ElementId x) -> ElementId {
      if (x == e) return 0;
      if (x == 0) return static_cast<ElementId>(e);
      return x;
    };
    std::vector<ElementId> canon(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        canon[swap_id(static_cast<ElementId>(a)) * n + swap_id(static_cast<ElementId>(b))] = swap_id(at(a, b));
      }
    }
    t = std::move(canon);
  }
  return GroupTable(n, std::move(t));
}

ElementId GroupTable::pow(ElementId a, std::uint64_t k) const noexcept {
  k %= orders_[a];
  ElementId r = 0;
  ElementId base = a;
  while (k > 0) {
    if (k & 1U) r = mul(r, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return r;
}

bool GroupTable::is_abelian() const noexcept {
  for (ElementId a = 0; a < order_; ++a) {
    for (ElementId b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// SubgroupSet

SubgroupSet::SubgroupSet(std::size_t parent_order, std::vector<ElementId> members)
    : parent_order_(parent_order), members_(std::move(members)), mask_(make_mask(parent_order)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (ElementId a : members_) set_bit(mask_, a);
}

SubgroupSet SubgroupSet::from_mask(std::size_t parent_order, std::vector<std::uint64_t> mask) {
  SubgroupSet s;
  s.parent_order_ = parent_order;
  for (ElementId a = 0; a < parent_order; ++a) {
    if (test_bit(mask, a)) s.members_.push_back(a);
  }
  s.mask_ = std::move(mask);
  return s;
}

SubgroupSet SubgroupSet::whole(const GroupTable& g) {
  std::vector<ElementId> all(g.order());
  std::iota(all.begin(), all.end(), ElementId{0});
  return {g.order(), std::move(all)};
}

bool SubgroupSet::is_subset_of(const SubgroupSet& other) const noexcept {
  if (members_.size() > other.members_.size()) return false;
  for (std::size_t w = 0; w < mask_.size(); ++w) {
    if (mask_[w] & ~other.mask_[w]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const SubgroupSet& a, const SubgroupSet& b) {
  if (auto c = a.members_.size() <=> b.members_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(), b.members_.begin(),
                                                b.members_.end());
}

SubgroupSet intersect(const SubgroupSet& a, const SubgroupSet& b) {
  auto mask = a.mask();
  for (std::size_t w = 0; w < mask.size(); ++w) mask[w] &= b.mask()[w];
  return SubgroupSet::from_mask(a.parent_order(), std::move(mask));
}

// ---------------------------------------------------------------------------
// Invariants

std::uint64_t OrderSpectrum::total() const {
  std::uint64_t s = 0;
  for (const auto& [d, c] : counts) s += c;
  return s;
}

std::uint64_t element_order(const GroupTable& g, ElementId a) { return g.element_order(a); }

std::uint64_t exponent(const GroupTable& g) { return phi_report(g).exponent; }

std::uint64_t phi(const GroupTable& g) { return phi_report(g).phi; }

OrderSpectrum order_spectrum(const GroupTable& g) { return phi_report(g).spectrum; }

PhiReport phi_report(const GroupTable& g) { return phi_report(g, SubgroupSet::whole(g)); }

PhiReport phi_report(const GroupTable& g, const SubgroupSet& h) {
  PhiReport r;
  for (ElementId a : h.members()) {
    const std::uint64_t o = g.element_order(a);
    ++r.spectrum.counts[o];
    r.exponent = std::lcm(r.exponent, o);
  }
  r.phi = r.spectrum.count(r.exponent);
  return r;
}

std::uint64_t phi(const GroupTable& g, const SubgroupSet& h) { return phi_report(g, h).phi; }

SubgroupSet generated_subgroup(const GroupTable& g, std::span<const ElementId> seeds) {
  return close_under(g, {}, seeds);
}

SubgroupSet generated_subgroup(const GroupTable& g, std::initializer_list<ElementId> seeds) {
  return close_under(g, {}, std::span<const ElementId>(seeds.begin(), seeds.size()));
}

SubgroupSet generated_subgroup(const GroupTable& g, const SubgroupSet& inside, std::span<const ElementId> gens) {
  return close_under(g, inside.members(), gens);
}

SubgroupSet join(const GroupTable& g, const SubgroupSet& a, const SubgroupSet& b) {
  if (b.is_subset_of(a)) return a;
  if (a.is_subset_of(b)) return b;
  auto gens = generators_of(g, a);
  for (ElementId x : generators_of(g, b)) gens.push_back(x);
  return close_under(g, a.members(), gens);
}

SubgroupSet center(const GroupTable& g) {
  std::vector<ElementId> z;
  for (ElementId a = 0; a < g.order(); ++a) {
    bool central = true;
    for (ElementId b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return {g.order(), std::move(z)};
}

ElementId commutator(const GroupTable& g, ElementId a, ElementId b) {
  return g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
}

SubgroupSet commutator_subgroup(const GroupTable& g, const SubgroupSet& a, const SubgroupSet& b) {
  SubgroupSet cur = SubgroupSet::trivial(g.order());
  std::vector<ElementId> gens;
  for (ElementId x : a.members()) {
    for (ElementId y : b.members()) {
      const ElementId c = commutator(g, x, y);
      if (cur.contains(c)) continue;
      gens.push_back(c);
      cur = close_under(g, cur.members(), gens);
    }
  }
  return cur;
}

SubgroupSet derived_subgroup(const GroupTable& g) {
  const auto all = SubgroupSet::whole(g);
  return commutator_subgroup(g, all, all);
}

bool is_normal(const GroupTable& g, const SubgroupSet& h) {
  for (ElementId x = 0; x < g.order(); ++x) {
    const ElementId xi = g.inv(x);
    for (ElementId a : h.members()) {
      if (!h.contains(g.mul(g.mul(xi, a), x))) return false;
    }
  }
  return true;
}

GroupTable subgroup_table(const GroupTable& g, const SubgroupSet& h) {
  const auto members = h.members();
  const std::size_t k = members.size();
  std::vector<ElementId> local(g.order(), 0);
  for (std::size_t i = 0; i < k; ++i) local[members[i]] = static_cast<ElementId>(i);
  std::vector<ElementId> flat(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) flat[i * k + j] = local[g.mul(members[i], members[j])];
  }
  return GroupTable::from_trusted(k, std::move(flat));
}

SubgroupSet embed(const SubgroupSet& h, const SubgroupSet& local) {
  std::vector<ElementId> out;
  out.reserve(local.size());
  for (ElementId a : local.members()) out.push_back(h.members()[a]);
  return {h.parent_order(), std::move(out)};
}

GroupTable relabel(const GroupTable& g, std::span<const ElementId> perm) {
  const std::size_t n = g.order();
  std::vector<std::int64_t> flat(n * n);
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) flat[perm[a] * n + perm[b]] = perm[g.mul(a, b)];
  }
  return GroupTable::validate(n, flat);
}

GroupTable read_cayley(std::istream& in) {
  long long n = 0;
  if (!(in >> n) || n <= 0) throw GroupError(ErrorKind::ParseError, "missing or invalid order on line 1");
  const auto count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<std::int64_t> flat;
  flat.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    long long v = 0;
    if (!(in >> v)) {
      throw GroupError(ErrorKind::ParseError, "expected " + std::to_string(count) + " table entries, read " +
                                                  std::to_string(i));
    }
    flat.push_back(v);
  }
  std::string extra;
  if (in >> extra) throw GroupError(ErrorKind::ParseError, "trailing data after table: '" + extra + "'");
  return GroupTable::validate(static_cast<std::size_t>(n), flat);
}

void write_cayley(std::ostream& out, const GroupTable& g) {
  out << g.order() << '\n';
  for (ElementId a = 0; a < g.order(); ++a) {
    for (ElementId b = 0; b < g.order(); ++b) {
      if (b) out << ' ';
      out << g.mul(a, b);
    }
    out << '\n';
  }
}

}  // namespace gphi
