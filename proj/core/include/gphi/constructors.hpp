#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gphi/group_table.hpp"

namespace gphi {

/// Largest group any constructor will build unless told otherwise.
inline constexpr std::size_t kDefaultMaxOrder = 1024;

/// Z_n with (i, j) -> (i + j) mod n.
GroupTable cyclic(std::size_t n, std::size_t max_order = kDefaultMaxOrder);

/// Z_p^k. Element ids are the base-p digit vectors read most significant
/// coordinate first, matching iterated direct products of Z_p.
GroupTable elementary_abelian(std::uint64_t p, unsigned k, std::size_t max_order = kDefaultMaxOrder);

/// Pair (a, b) gets id a * |B| + b.
GroupTable direct_product(const GroupTable& a, const GroupTable& b, std::size_t max_order = kDefaultMaxOrder);

/// Symmetries of the n-gon, order `two_n`. Rotations r^i are ids 0..n-1,
/// reflections s r^i are ids n..2n-1.
GroupTable dihedral(std::size_t two_n, std::size_t max_order = kDefaultMaxOrder);

/// Q_{2^n} = <a, b | a^{2^{n-2}} = b^2, a^{2^{n-1}} = 1, b^-1 a b = a^-1>.
/// Element a^i b^j has id i + j * 2^{n-1}.
GroupTable generalized_quaternion(std::size_t order, std::size_t max_order = kDefaultMaxOrder);

/// M(p^3) = <x, y | x^{p^2} = y^p = 1, y^-1 x y = x^{p+1}> for odd p.
/// Element x^i y^j has id i + j * p^2.
GroupTable modular_p3(std::uint64_t p);

/// Heisenberg group mod p (odd p): order p^3, exponent p.
GroupTable extraspecial_p3(std::uint64_t p);

/// Permutations of n points in lexicographic order; product is composition
/// (a * b)(i) = a(b(i)).
GroupTable symmetric(unsigned n, std::size_t max_order = kDefaultMaxOrder);
GroupTable alternating(unsigned n, std::size_t max_order = kDefaultMaxOrder);

/// Homomorphism H -> Aut(N): `images[h][x]` is the image of x in N under h.
struct ActionTable {
  std::vector<std::vector<ElementId>> images;

  static ActionTable trivial(const GroupTable& normal, const GroupTable& acting);

  /// Action of cyclic(acting_order) whose generator (id 1) acts by
  /// `generator_image`; h acts by generator_image^h.
  static ActionTable cyclic(std::span<const ElementId> generator_image, std::size_t acting_order);
};

/// Throws ActionNotAutomorphism or ActionNotHomomorphism.
void check_action(const GroupTable& normal, const GroupTable& acting, const ActionTable& action);

/// N x| H on pairs (n, h) with (n1, h1)(n2, h2) = (n1 * h1(n2), h1 h2).
/// Pair (n, h) gets id n * |H| + h, so a trivial action reproduces
/// direct_product(N, H) exactly.
GroupTable semidirect_product(const GroupTable& normal, const GroupTable& acting, const ActionTable& action,
                              std::size_t max_order = kDefaultMaxOrder);

/// Row-major r x r matrix over F_p.
struct FieldMatrix {
  std::uint64_t p = 2;
  unsigned dim = 1;
  std::vector<std::uint64_t> entries;
};

/// First matrix in lexicographic entry order of multiplicative order q
/// with no proper nonzero invariant subspace of F_p^r.
/// Throws NoIrreducibleAction if none exists.
FieldMatrix irreducible_order_q_matrix(std::uint64_t p, unsigned r, std::uint64_t q);

/// Z_p^r x| Z_{q^q_exp} with r = ord_q(p): the generator y acts by an
/// irreducible matrix of order q, so y^q is central.
GroupTable schmidt_group(std::uint64_t p, std::uint64_t q, unsigned q_exp = 1,
                         std::size_t max_order = kDefaultMaxOrder);

/// Automorphism of generalized_quaternion(8) cycling i -> j -> k, written
/// as a -> b -> ab on the presentation generators.
std::vector<ElementId> quaternion_cycling_automorphism();

/// Q_8 x| Z_{3^q_exp} with the generator acting by
/// quaternion_cycling_automorphism().
GroupTable quaternion_by_cyclic3(unsigned q_exp = 1, std::size_t max_order = kDefaultMaxOrder);

}  // namespace gphi
