#include <doctest.h>

#include "gphi/analysis.hpp"
#include "gphi/constructors.hpp"
#include "gphi/descriptor.hpp"
#include "gphi/errors.hpp"
#include "gphi/number_theory.hpp"
#include "support/oracles.hpp"

using namespace gphi;
using Spectrum = std::map<std::uint64_t, std::uint64_t>;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const GroupError& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Malformed;
}

// Round-trips through the validating entry point; every constructor output
// must survive it unchanged.
void require_valid(const GroupTable& g) {
  std::vector<std::int64_t> flat(g.flat().begin(), g.flat().end());
  REQUIRE(GroupTable::validate(g.order(), flat) == g);
}

}  // namespace

TEST_CASE("cyclic") {
  CHECK(cyclic(1).order() == 1);
  auto z6 = cyclic(6);
  CHECK(z6.is_abelian());
  CHECK(exponent(z6) == 6);
  CHECK(phi(z6) == oracle::totient(6));
  CHECK(order_spectrum(cyclic(8)).count(8) == oracle::totient(8));
  CHECK(kind_of([] { (void)cyclic(0); }) == ErrorKind::InvalidParameter);
  CHECK(kind_of([] { (void)cyclic(2000); }) == ErrorKind::SizeBudgetExceeded);
  CHECK(cyclic(2000, 2000).order() == 2000);
}

TEST_CASE("elementary abelian") {
  CHECK(phi(elementary_abelian(2, 2)) == 3);
  CHECK(phi(elementary_abelian(3, 3)) == 26);
  CHECK(elementary_abelian(5, 1) == cyclic(5));
  CHECK(exponent(elementary_abelian(3, 4)) == 3);
  CHECK(kind_of([] { (void)elementary_abelian(4, 2); }) == ErrorKind::InvalidParameter);
  CHECK(kind_of([] { (void)elementary_abelian(2, 0); }) == ErrorKind::InvalidParameter);
  CHECK(kind_of([] { (void)elementary_abelian(2, 11); }) == ErrorKind::SizeBudgetExceeded);
  // Z_p^k is the iterated direct product of Z_p.
  CHECK(elementary_abelian(3, 2) == direct_product(cyclic(3), cyclic(3)));
}

TEST_CASE("direct product") {
  auto q8 = generalized_quaternion(8);
  CHECK(order_spectrum(direct_product(cyclic(1), q8)) == order_spectrum(q8));

  auto g = direct_product(q8, cyclic(3));
  CHECK(g.order() == 24);
  CHECK(exponent(g) == 12);
  CHECK(phi(g) == 12);
  CHECK(phi(g) == oracle::phi(g));

  auto z2z4 = direct_product(cyclic(2), cyclic(4));
  CHECK(exponent(z2z4) == 4);
  CHECK(phi(z2z4) == 4);

  CHECK(kind_of([] { (void)direct_product(cyclic(40), cyclic(40)); }) == ErrorKind::SizeBudgetExceeded);
}

TEST_CASE("dihedral") {
  CHECK(order_spectrum(dihedral(6)).counts == Spectrum{{1, 1}, {2, 3}, {3, 2}});
  CHECK(order_spectrum(dihedral(6)) == order_spectrum(symmetric(3)));
  auto d8 = dihedral(8);
  CHECK(exponent(d8) == 4);
  CHECK(phi(d8) == 2);
  CHECK(order_spectrum(dihedral(4)) == order_spectrum(elementary_abelian(2, 2)));
  CHECK(kind_of([] { (void)dihedral(7); }) == ErrorKind::InvalidParameter);
  CHECK(kind_of([] { (void)dihedral(2); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("generalized quaternion") {
  CHECK(phi(generalized_quaternion(8)) == 6);
  CHECK(phi(generalized_quaternion(16)) == 4);
  CHECK(phi(generalized_quaternion(32)) == 8);
  for (std::size_t order : {8, 16, 32, 64}) {
    auto g = generalized_quaternion(order);
    CHECK(order_spectrum(g).count(2) == 1);
    CHECK(exponent(g) == order / 2);  // non-cyclic
    CHECK_FALSE(g.is_abelian());
  }
  CHECK(kind_of([] { (void)generalized_quaternion(4); }) == ErrorKind::InvalidParameter);
  CHECK(kind_of([] { (void)generalized_quaternion(24); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("modular p^3") {
  auto m27 = modular_p3(3);
  CHECK(m27.order() == 27);
  CHECK(exponent(m27) == 9);
  CHECK(phi(m27) == 18);
  CHECK_FALSE(m27.is_abelian());
  CHECK(center(m27).size() == 3);

  auto m125 = modular_p3(5);
  CHECK(m125.order() == 125);
  CHECK(exponent(m125) == 25);
  CHECK_FALSE(m125.is_abelian());

  try {
    (void)modular_p3(2);
    FAIL("p = 2 accepted");
  } catch (const GroupError& e) {
    CHECK(e.kind() == ErrorKind::InvalidParameter);
    CHECK(std::string(e.what()).find("dihedral(8)") != std::string::npos);
  }
  CHECK(kind_of([] { (void)modular_p3(9); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("extraspecial p^3") {
  auto e27 = extraspecial_p3(3);
  CHECK(e27.order() == 27);
  CHECK(exponent(e27) == 3);
  CHECK(phi(e27) == 26);
  CHECK_FALSE(e27.is_abelian());
  CHECK(derived_subgroup(e27) == center(e27));
  CHECK(center(e27).size() == 3);

  auto e125 = extraspecial_p3(5);
  CHECK(phi(e125) == 124);
  CHECK(exponent(e125) == 5);
  CHECK_FALSE(e125.is_abelian());
  CHECK(kind_of([] { (void)extraspecial_p3(2); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("symmetric and alternating") {
  CHECK(phi(symmetric(3)) == 0);
  auto a4 = alternating(4);
  CHECK(a4.order() == 12);
  CHECK(exponent(a4) == 6);
  CHECK(phi(a4) == 0);
  CHECK(order_spectrum(a4).count(6) == 0);
  CHECK(symmetric(2) == cyclic(2));
  CHECK(symmetric(5).order() == 120);
  CHECK(symmetric(6).order() == 720);
  CHECK(kind_of([] { (void)symmetric(7); }) == ErrorKind::SizeBudgetExceeded);
}

TEST_CASE("semidirect product") {
  auto z3 = cyclic(3);
  auto z2 = cyclic(2);
  CHECK(semidirect_product(z3, z2, ActionTable::trivial(z3, z2)) == direct_product(z3, z2));

  auto q8 = generalized_quaternion(8);
  CHECK(semidirect_product(q8, z3, ActionTable::trivial(q8, z3)) == direct_product(q8, z3));

  // Inversion on Z3.
  std::vector<ElementId> inversion{0, 2, 1};
  auto s3 = semidirect_product(z3, z2, ActionTable::cyclic(inversion, 2));
  CHECK(order_spectrum(s3).counts == Spectrum{{1, 1}, {2, 3}, {3, 2}});

  auto g = quaternion_by_cyclic3();
  CHECK(g.order() == 24);
  CHECK(exponent(g) == 12);
  CHECK(phi(g) == oracle::phi(g));
  CHECK(phi(g) == 0);
}

TEST_CASE("semidirect product rejects bad actions") {
  auto z3 = cyclic(3);
  auto z2 = cyclic(2);
  // Not a bijection.
  CHECK(kind_of([&] { (void)semidirect_product(z3, z2, ActionTable{{{0, 1, 2}, {0, 1, 1}}}); }) ==
        ErrorKind::ActionNotAutomorphism);
  // A bijection that does not preserve products.
  auto z4 = cyclic(4);
  CHECK(kind_of([&] { (void)semidirect_product(z4, z2, ActionTable{{{0, 1, 2, 3}, {0, 2, 1, 3}}}); }) ==
        ErrorKind::ActionNotAutomorphism);
  // Inversion has order 2, so Z3 cannot act by it.
  CHECK(kind_of([&] { (void)semidirect_product(z3, z3, ActionTable::cyclic(std::vector<ElementId>{0, 2, 1}, 3)); }) ==
        ErrorKind::ActionNotHomomorphism);
  // The identity of H must act trivially.
  CHECK(kind_of([&] { (void)semidirect_product(z3, z2, ActionTable{{{0, 2, 1}, {0, 2, 1}}}); }) ==
        ErrorKind::ActionNotHomomorphism);
  CHECK(kind_of([&] { (void)semidirect_product(z3, z2, ActionTable{{{0, 1, 2}}}); }) ==
        ErrorKind::ActionNotHomomorphism);
}

TEST_CASE("quaternion cycling automorphism") {
  auto q8 = generalized_quaternion(8);
  auto f = quaternion_cycling_automorphism();
  REQUIRE(f.size() == 8);
  for (ElementId a = 0; a < 8; ++a) {
    for (ElementId b = 0; b < 8; ++b) CHECK(f[q8.mul(a, b)] == q8.mul(f[a], f[b]));
  }
  // a -> b -> ab, of order 3.
  CHECK(f[1] == 4);
  CHECK(f[4] == q8.mul(1, 4));
  std::vector<ElementId> f3(8);
  for (ElementId a = 0; a < 8; ++a) f3[a] = f[f[f[a]]];
  for (ElementId a = 0; a < 8; ++a) CHECK(f3[a] == a);
}

TEST_CASE("multiplicative order") {
  CHECK(multiplicative_order(2, 3) == 2);
  CHECK(multiplicative_order(3, 2) == 1);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(2, 5) == 4);
  CHECK(kind_of([] { (void)multiplicative_order(6, 3); }) == ErrorKind::InvalidParameter);
  CHECK(kind_of([] { (void)multiplicative_order(2, 4); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("irreducible action matrices") {
  auto m = irreducible_order_q_matrix(2, 2, 3);
  CHECK(m.p == 2);
  CHECK(m.dim == 2);
  CHECK(m.entries.size() == 4);
  CHECK(kind_of([] { (void)irreducible_order_q_matrix(2, 1, 3); }) == ErrorKind::NoIrreducibleAction);
}

TEST_CASE("Schmidt groups") {
  auto a = schmidt_group(2, 3, 1);
  CHECK(a.order() == 12);
  CHECK(order_spectrum(a).counts == Spectrum{{1, 1}, {2, 3}, {3, 8}});

  auto s = schmidt_group(3, 2, 1);
  CHECK(order_spectrum(s).counts == Spectrum{{1, 1}, {2, 3}, {3, 2}});

  auto g = schmidt_group(2, 3, 2);
  CHECK(g.order() == 36);
  // The Z9 generator is id 1 (pair (0, 1)); its cube must be central.
  const ElementId y = 1;
  CHECK(element_order(g, y) == 9);
  const ElementId y3 = g.pow(y, 3);
  for (ElementId x = 0; x < g.order(); ++x) CHECK(g.mul(x, y3) == g.mul(y3, x));

  for (auto [p, q, e] : {std::tuple{2u, 3u, 1u}, {2u, 3u, 2u}, {3u, 2u, 1u}, {3u, 2u, 2u}, {5u, 2u, 1u},
                         {2u, 7u, 1u}, {2u, 5u, 1u}}) {
    auto t = schmidt_group(p, q, e);
    CHECK(is_schmidt(t, all_subgroups(t)));
  }
  CHECK(kind_of([] { (void)schmidt_group(3, 3, 1); }) == ErrorKind::InvalidParameter);
  CHECK(kind_of([] { (void)schmidt_group(4, 3, 1); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("every constructor output passes full validation") {
  for (const auto& g :
       {cyclic(1), cyclic(12), elementary_abelian(3, 3), dihedral(16), generalized_quaternion(32), modular_p3(3),
        extraspecial_p3(3), modular_p3(5), extraspecial_p3(5), symmetric(4), alternating(4), schmidt_group(2, 3, 2),
        schmidt_group(2, 7, 1), quaternion_by_cyclic3(), quaternion_by_cyclic3(2),
        direct_product(generalized_quaternion(8), cyclic(9))}) {
    require_valid(g);
  }
}

TEST_CASE("descriptors build the same groups as the constructors") {
  auto build = [](const char* text) { return build_group(GroupDescriptor::from_json(nlohmann::json::parse(text))); };
  CHECK(build(R"({"kind":"cyclic","n":12})") == cyclic(12));
  CHECK(build(R"({"kind":"generalized_quaternion","order":16})") == generalized_quaternion(16));
  CHECK(build(R"({"kind":"schmidt","p":2,"q":3,"q_exp":1})") == schmidt_group(2, 3, 1));
  CHECK(build(R"({"kind":"schmidt","p":2,"q":3})") == schmidt_group(2, 3, 1));
  CHECK(build(R"({"kind":"direct_product","factors":[{"kind":"cyclic","n":2},{"kind":"cyclic","n":4}]})") ==
        direct_product(cyclic(2), cyclic(4)));
  CHECK(build(R"({"kind":"direct_product","factors":[{"kind":"cyclic","n":2},{"kind":"cyclic","n":3},
                   {"kind":"cyclic","n":5}]})") == direct_product(direct_product(cyclic(2), cyclic(3)), cyclic(5)));
  auto s3 = build(R"({"kind":"semidirect_product","normal":{"kind":"cyclic","n":3},
                       "acting":{"kind":"cyclic","n":2},"action":[[0,1,2],[0,2,1]]})");
  CHECK(s3 == semidirect_product(cyclic(3), cyclic(2), ActionTable::cyclic(std::vector<ElementId>{0, 2, 1}, 2)));
  CHECK(order_spectrum(s3) == order_spectrum(symmetric(3)));

  auto bad = [](const char* text) {
    return kind_of([&] { (void)build_group(GroupDescriptor::from_json(nlohmann::json::parse(text))); });
  };
  CHECK(bad(R"({"kind":"nonsense"})") == ErrorKind::ParseError);
  CHECK(bad(R"({"kind":"cyclic"})") == ErrorKind::ParseError);
  CHECK(bad(R"({"kind":"cyclic","n":"six"})") == ErrorKind::ParseError);
  CHECK(bad(R"({"kind":"cyclic","n":-3})") == ErrorKind::ParseError);
  CHECK(bad(R"([1,2])") == ErrorKind::ParseError);
  CHECK(bad(R"({"kind":"modular_M_p3","p":2})") == ErrorKind::InvalidParameter);

  auto d = GroupDescriptor::from_json(nlohmann::json::parse(R"({"kind":"schmidt","p":2,"q":3,"q_exp":2})"));
  CHECK(build_group(GroupDescriptor::from_json(d.to_json())) == schmidt_group(2, 3, 2));
}
