// Property checks over randomly generated groups. Generators are seeded,
// so a failure reproduces on rerun.

#include <doctest.h>

#include <numeric>
#include <random>

#include "gphi/analysis.hpp"
#include "gphi/catalog.hpp"
#include "gphi/constructors.hpp"
#include "gphi/number_theory.hpp"
#include "support/oracles.hpp"

using namespace gphi;

namespace {

constexpr std::uint64_t kSeed = 0x5eed'f1e1dULL;

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

// One random group from the constructor families, order <= 96 before
// products.
GroupTable random_factor(std::mt19937_64& rng) {
  static const std::uint64_t primes[] = {2, 3, 5, 7};
  switch (pick(rng, 0, 9)) {
    case 0: return cyclic(pick(rng, 1, 40));
    case 1: {
      const auto p = primes[pick(rng, 0, 2)];
      return elementary_abelian(p, static_cast<unsigned>(pick(rng, 1, p == 2 ? 4 : 2)));
    }
    case 2: return dihedral(2 * pick(rng, 2, 16));
    case 3: return generalized_quaternion(std::size_t{1} << pick(rng, 3, 5));
    case 4: return modular_p3(3);
    case 5: return extraspecial_p3(3);
    case 6: return pick(rng, 0, 1) ? symmetric(static_cast<unsigned>(pick(rng, 1, 4)))
                                   : alternating(static_cast<unsigned>(pick(rng, 3, 4)));
    case 7: {
      static const std::tuple<unsigned, unsigned, unsigned> params[] = {{2, 3, 1}, {3, 2, 1}, {2, 3, 2},
                                                                        {3, 2, 2}, {5, 2, 1}, {2, 7, 1}};
      auto [p, q, e] = params[pick(rng, 0, 5)];
      return schmidt_group(p, q, e);
    }
    case 8: return quaternion_by_cyclic3();
    default: return cyclic(pick(rng, 1, 12));
  }
}

GroupTable random_group(std::mt19937_64& rng, std::size_t max_order) {
  for (;;) {
    auto g = random_factor(rng);
    if (pick(rng, 0, 2) == 0) {
      auto h = random_factor(rng);
      if (g.order() * h.order() <= max_order) return direct_product(g, h);
    }
    if (g.order() <= max_order) return g;
  }
}

std::vector<GroupTable> catalog_groups() {
  auto spec = CatalogSpec::load(std::filesystem::path(GPHI_CATALOG_DIR) / "default_catalog.json");
  std::vector<GroupTable> out;
  BuildOptions opts{spec.max_order, GPHI_CATALOG_DIR};
  for (const auto& e : spec.entries) out.push_back(build_group(e.descriptor, opts));
  return out;
}

bool is_p_group(const GroupTable& g) {
  return g.order() == 1 || prime_power_base(g.order()) != 0;
}

}  // namespace

TEST_CASE("order spectrum invariants on random groups") {
  std::mt19937_64 rng(kSeed);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = random_group(rng, 400);
    CAPTURE(trial);
    CAPTURE(g.order());
    auto r = phi_report(g);
    CHECK(r.spectrum.total() == g.order());
    CHECK(r.spectrum.count(1) == 1);
    std::uint64_t l = 1;
    for (auto [d, c] : r.spectrum.counts) {
      CHECK(g.order() % d == 0);
      CHECK(c % oracle::totient(d) == 0);  // Frobenius
      l = std::lcm(l, d);
    }
    CHECK(r.exponent == l);
    CHECK(r.phi == r.spectrum.count(r.exponent));
    CHECK(r.spectrum.counts == oracle::spectrum(g));
    for (ElementId a = 0; a < g.order(); ++a) CHECK(r.exponent % g.element_order(a) == 0);
    CHECK(g.order() % r.exponent == 0);
  }
}

TEST_CASE("Frobenius divisibility on every catalog group") {
  for (const auto& g : catalog_groups()) {
    for (auto [d, c] : order_spectrum(g).counts) CHECK(c % oracle::totient(d) == 0);
  }
}

TEST_CASE("phi of Z_n is the totient for n <= 200") {
  for (std::size_t n = 1; n <= 200; ++n) {
    CAPTURE(n);
    CHECK(phi(cyclic(n)) == oracle::totient(n));
  }
}

TEST_CASE("phi is multiplicative over coprime exponents on random catalog pairs") {
  auto groups = catalog_groups();
  std::mt19937_64 rng(kSeed + 1);
  int checked = 0;
  int attempts = 0;
  while (checked < 20) {
    REQUIRE(++attempts < 100000);
    const auto& a = groups[pick(rng, 0, groups.size() - 1)];
    const auto& b = groups[pick(rng, 0, groups.size() - 1)];
    if (std::gcd(exponent(a), exponent(b)) != 1 || a.order() * b.order() > kDefaultMaxOrder) continue;
    auto ab = direct_product(a, b);
    CAPTURE(a.order());
    CAPTURE(b.order());
    CHECK(phi(ab) == phi(a) * phi(b));
    CHECK(exponent(ab) == exponent(a) * exponent(b));
    ++checked;
  }
  CHECK(checked == 20);
}

TEST_CASE("Sylow shape recognition is invariant under relabelling") {
  std::vector<GroupTable> pgroups;
  for (auto& g : catalog_groups()) {
    if (is_p_group(g)) pgroups.push_back(std::move(g));
  }
  for (std::size_t order : {8, 16, 32}) pgroups.push_back(dihedral(order));
  REQUIRE(pgroups.size() > 20);

  std::mt19937_64 rng(kSeed + 2);
  for (const auto& g : pgroups) {
    const auto shape = recognize_sylow_shape(g);
    for (int t = 0; t < 3; ++t) {
      auto h = relabel(g, oracle::random_permutation(g.order(), rng));
      CAPTURE(g.order());
      CHECK(recognize_sylow_shape(h) == shape);
      CHECK(order_spectrum(h) == order_spectrum(g));
    }
  }
}

TEST_CASE("verdicts are invariant under relabelling") {
  std::mt19937_64 rng(kSeed + 3);
  for (const auto& g : {dihedral(8), generalized_quaternion(16), direct_product(generalized_quaternion(8), cyclic(3)),
                        symmetric(4), schmidt_group(2, 3, 2), direct_product(cyclic(2), cyclic(4))}) {
    auto v = verify_theorem(g);
    auto w = verify_theorem(relabel(g, oracle::random_permutation(g.order(), rng)));
    CHECK(v.cond1 == w.cond1);
    CHECK(v.cond2 == w.cond2);
    CHECK(v.nilpotent == w.nilpotent);
    CHECK(v.classified == w.classified);
    CHECK(v.sylow_shapes == w.sylow_shapes);
    CHECK(w.agrees);
  }
}

TEST_CASE("quotient projections are homomorphisms on random groups") {
  std::mt19937_64 rng(kSeed + 4);
  int quotients = 0;
  for (int trial = 0; trial < 25; ++trial) {
    auto g = random_group(rng, 96);
    auto l = all_subgroups(g);
    std::vector<SubgroupSet> normals;
    for (const auto& h : l.subgroups()) {
      if (is_normal(g, h)) normals.push_back(h);
    }
    const auto& n = normals[pick(rng, 0, normals.size() - 1)];
    auto q = quotient(g, n);
    CAPTURE(g.order());
    CAPTURE(n.size());
    CHECK(q.quotient.order() * n.size() == g.order());
    std::vector<char> hit(q.quotient.order(), 0);
    for (ElementId a = 0; a < g.order(); ++a) {
      hit[q.projection[a]] = 1;
      CHECK((q.projection[a] == 0) == n.contains(a));
      for (ElementId b = 0; b < g.order(); ++b) {
        REQUIRE(q.projection[g.mul(a, b)] == q.quotient.mul(q.projection[a], q.projection[b]));
      }
    }
    CHECK(std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; }));
    ++quotients;
  }
  CHECK(quotients == 25);
}

TEST_CASE("center, derived subgroup and Frattini subgroup are normal") {
  std::mt19937_64 rng(kSeed + 5);
  for (int trial = 0; trial < 25; ++trial) {
    auto g = random_group(rng, 128);
    CAPTURE(g.order());
    CHECK(is_normal(g, center(g)));
    CHECK(is_normal(g, derived_subgroup(g)));
    CHECK(is_normal(g, frattini(g, all_subgroups(g))));
    // G/G' is abelian.
    CHECK(quotient(g, derived_subgroup(g)).quotient.is_abelian());
  }
}

TEST_CASE("condition2 is inherited by subgroups") {
  std::mt19937_64 rng(kSeed + 6);
  int positive = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_group(rng, 128);
    auto l = all_subgroups(g);
    if (!condition2(g, l).holds) continue;
    ++positive;
    for (std::size_t i = 0; i < l.size(); ++i) {
      auto h = subgroup_table(g, l[i]);
      CAPTURE(g.order());
      CAPTURE(h.order());
      CHECK(condition2(h, all_subgroups(h)).holds);
    }
  }
  CHECK(positive > 0);
}

TEST_CASE("subgroup lattices do not depend on the join order") {
  std::mt19937_64 rng(kSeed + 7);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_group(rng, 128);
    auto base = all_subgroups(g);
    auto shuffled = all_subgroups(g, {kDefaultMaxLattice, rng()});
    REQUIRE(base.size() == shuffled.size());
    for (std::size_t i = 0; i < base.size(); ++i) CHECK(base[i] == shuffled[i]);
  }
}

TEST_CASE("theorem agreement and nilpotency cross-check on random groups") {
  std::mt19937_64 rng(kSeed + 8);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_group(rng, 200);
    CAPTURE(g.order());
    auto l = all_subgroups(g);
    CHECK(verify_theorem(g, l).agrees);
    CHECK(is_nilpotent_sections(g, l) == is_nilpotent_lcs(g));
  }
}

TEST_CASE("family invariants") {
  for (unsigned n = 3; n <= 5; ++n) {
    auto q = generalized_quaternion(std::size_t{1} << n);
    CHECK(order_spectrum(q).count(2) == 1);
    CHECK(exponent(q) < q.order());
    CHECK(phi(q) == (n == 3 ? 6u : (1u << (n - 2))));
  }
  for (std::uint64_t p : {3, 5}) {
    auto m = modular_p3(p);
    auto e = extraspecial_p3(p);
    CHECK(m.order() == p * p * p);
    CHECK(e.order() == p * p * p);
    CHECK(exponent(m) == p * p);
    CHECK(exponent(e) == p);
    CHECK_FALSE(m.is_abelian());
    CHECK_FALSE(e.is_abelian());
  }
  std::mt19937_64 rng(kSeed + 9);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_factor(rng);
    auto b = random_factor(rng);
    if (a.order() * b.order() > kDefaultMaxOrder) continue;
    CHECK(semidirect_product(a, b, ActionTable::trivial(a, b)) == direct_product(a, b));
  }
}
