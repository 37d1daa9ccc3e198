#include "gphi/constructors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gphi/errors.hpp"
#include "gphi/number_theory.hpp"

namespace gphi {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw GroupError(ErrorKind::InvalidParameter, msg); }

void check_budget(std::size_t order, std::size_t max_order, const char* what) {
  if (order > max_order) {
    throw GroupError(ErrorKind::SizeBudgetExceeded, std::string(what) + " of order " + std::to_string(order) +
                                                        " exceeds the size budget " + std::to_string(max_order));
  }
}

template <typename Mul>
GroupTable from_product(std::size_t n, Mul&& mul) {
  std::vector<std::int64_t> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = static_cast<std::int64_t>(mul(a, b));
  }
  return GroupTable::validate(n, flat);
}

// Vectors of F_p^r are encoded as ids with coordinate 0 most significant.
std::vector<std::uint64_t> decode(std::uint64_t id, std::uint64_t p, unsigned r) {
  std::vector<std::uint64_t> v(r);
  for (unsigned i = r; i-- > 0;) {
    v[i] = id % p;
    id /= p;
  }
  return v;
}

std::uint64_t encode(const std::vector<std::uint64_t>& v, std::uint64_t p) {
  std::uint64_t id = 0;
  for (auto c : v) id = id * p + c;
  return id;
}

std::vector<std::uint64_t> mat_vec(const FieldMatrix& m, const std::vector<std::uint64_t>& v) {
  std::vector<std::uint64_t> out(m.dim, 0);
  for (unsigned i = 0; i < m.dim; ++i) {
    std::uint64_t s = 0;
    for (unsigned j = 0; j < m.dim; ++j) s += m.entries[i * m.dim + j] * v[j];
    out[i] = s % m.p;
  }
  return out;
}

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b) {
  FieldMatrix c{a.p, a.dim, std::vector<std::uint64_t>(a.entries.size(), 0)};
  for (unsigned i = 0; i < a.dim; ++i) {
    for (unsigned j = 0; j < a.dim; ++j) {
      std::uint64_t s = 0;
      for (unsigned k = 0; k < a.dim; ++k) s += a.entries[i * a.dim + k] * b.entries[k * a.dim + j];
      c.entries[i * a.dim + j] = s % a.p;
    }
  }
  return c;
}

bool is_identity(const FieldMatrix& m) {
  for (unsigned i = 0; i < m.dim; ++i) {
    for (unsigned j = 0; j < m.dim; ++j) {
      if (m.entries[i * m.dim + j] != (i == j ? 1U : 0U)) return false;
    }
  }
  return true;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1U) r = r * a % p;
    a = a * a % p;
    e >>= 1U;
  }
  return r;
}

unsigned rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  unsigned rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint64_t inv = inverse_mod(rows[rank][c], p);
    for (auto& x : rows[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::uint64_t f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = (rows[r][k] + (p - f) * rows[rank][k]) % p;
    }
    ++rank;
  }
  return rank;
}

// Irreducible iff every nonzero v has a Krylov space {v, Mv, M^2 v, ...}
// spanning F_p^r, since that space is the smallest invariant one holding v.
bool is_irreducible(const FieldMatrix& m) {
  const std::uint64_t count = ipow(m.p, m.dim);
  for (std::uint64_t id = 1; id < count; ++id) {
    std::vector<std::vector<std::uint64_t>> krylov;
    auto v = decode(id, m.p, m.dim);
    for (unsigned i = 0; i < m.dim; ++i) {
      krylov.push_back(v);
      v = mat_vec(m, v);
    }
    if (rank_mod_p(krylov, m.p) < m.dim) return false;
  }
  return true;
}

std::vector<ElementId> compose(std::span<const ElementId> f, std::span<const ElementId> g) {
  std::vector<ElementId> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
  return out;
}

std::size_t factorial(unsigned n) {
  std::size_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// Position of a permutation of 0..n-1 in lexicographic order.
std::size_t lex_rank(const std::vector<unsigned>& perm) {
  const auto n = static_cast<unsigned>(perm.size());
  std::size_t rank = 0;
  for (unsigned i = 0; i < n; ++i) {
    unsigned smaller = 0;
    for (unsigned j = i + 1; j < n; ++j) smaller += perm[j] < perm[i] ? 1U : 0U;
    rank += smaller * factorial(n - 1 - i);
  }
  return rank;
}

bool is_even(const std::vector<unsigned>& perm) {
  unsigned inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[j] < perm[i] ? 1U : 0U;
  }
  return inversions % 2 == 0;
}

GroupTable permutation_group(unsigned n, bool even_only, std::size_t max_order) {
  if (n == 0) invalid("permutation degree must be at least 1");
  std::size_t full = factorial(n);
  check_budget(even_only && n >= 2 ? full / 2 : full, max_order, even_only ? "alternating group" : "symmetric group");

  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0U);
  do {
    if (!even_only || is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index_of(full, kAbsent);
  for (std::size_t i = 0; i < perms.size(); ++i) index_of[lex_rank(perms[i])] = i;

  std::vector<unsigned> prod(n);
  return from_product(perms.size(), [&](std::size_t a, std::size_t b) {
    for (unsigned i = 0; i < n; ++i) prod[i] = perms[a][perms[b][i]];
    return index_of[lex_rank(prod)];
  });
}

}  // namespace

GroupTable cyclic(std::size_t n, std::size_t max_order) {
  if (n < 1) invalid("cyclic group order must be at least 1");
  check_budget(n, max_order, "cyclic group");
  return from_product(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

GroupTable elementary_abelian(std::uint64_t p, unsigned k, std::size_t max_order) {
  if (!is_prime(p)) invalid("elementary abelian group needs a prime, got p = " + std::to_string(p));
  if (k < 1) invalid("elementary abelian rank must be at least 1");
  const std::uint64_t n = ipow(p, k);
  check_budget(n, max_order, "elementary abelian group");
  return from_product(n, [p, k](std::size_t a, std::size_t b) {
    auto va = decode(a, p, k);
    auto vb = decode(b, p, k);
    for (unsigned i = 0; i < k; ++i) va[i] = (va[i] + vb[i]) % p;
    return encode(va, p);
  });
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b, std::size_t max_order) {
  const std::size_t nb = b.order();
  check_budget(a.order() * nb, max_order, "direct product");
  return from_product(a.order() * nb, [&](std::size_t x, std::size_t y) {
    const auto xa = static_cast<ElementId>(x / nb);
    const auto xb = static_cast<ElementId>(x % nb);
    const auto ya = static_cast<ElementId>(y / nb);
    const auto yb = static_cast<ElementId>(y % nb);
    return a.mul(xa, ya) * nb + b.mul(xb, yb);
  });
}

GroupTable dihedral(std::size_t two_n, std::size_t max_order) {
  if (two_n < 4 || two_n % 2 != 0) invalid("dihedral group order must be even and at least 4");
  check_budget(two_n, max_order, "dihedral group");
  const std::size_t n = two_n / 2;
  return from_product(two_n, [n](std::size_t x, std::size_t y) -> std::size_t {
    if (x < n && y < n) return (x + y) % n;
    if (x < n) return (y - n + x) % n + n;
    if (y < n) return (x - n + n - y) % n + n;
    return (x - y + n) % n;
  });
}

GroupTable generalized_quaternion(std::size_t order, std::size_t max_order) {
  if (order < 8 || (order & (order - 1)) != 0) {
    invalid("generalized quaternion order must be a power of 2 and at least 8, got " + std::to_string(order));
  }
  check_budget(order, max_order, "generalized quaternion group");
  const std::size_t m = order / 2;  // order of a
  return from_product(order, [m](std::size_t x, std::size_t y) -> std::size_t {
    const std::size_t i = x % m;
    const std::size_t j = x / m;
    const std::size_t k = y % m;
    const std::size_t l = y / m;
    if (j == 0) return (i + k) % m + l * m;
    // a^i b a^k b^l = a^{i-k} b^{1+l}, with b^2 = a^{m/2}.
    const std::size_t base = (i + m - k) % m;
    if (l == 0) return base + m;
    return (base + m / 2) % m;
  });
}

GroupTable modular_p3(std::uint64_t p) {
  if (p == 2) invalid("M(p^3) needs an odd prime; for p = 2 this presentation gives D8, use dihedral(8)");
  if (!is_prime(p)) invalid("M(p^3) needs a prime, got p = " + std::to_string(p));
  const std::uint64_t p2 = p * p;
  // y^j x^k = x^{k (1+p)^{-j}} y^j and (1+p)^{-1} = 1-p mod p^2.
  std::vector<std::uint64_t> twist(p);
  twist[0] = 1;
  for (std::uint64_t j = 1; j < p; ++j) twist[j] = twist[j - 1] * (p2 + 1 - p) % p2;
  return from_product(p2 * p, [=](std::size_t x, std::size_t y) {
    const std::uint64_t i = x % p2;
    const std::uint64_t j = x / p2;
    const std::uint64_t k = y % p2;
    const std::uint64_t l = y / p2;
    return (i + k * twist[j]) % p2 + ((j + l) % p) * p2;
  });
}

GroupTable extraspecial_p3(std::uint64_t p) {
  if (p == 2) invalid("E(p^3) needs an odd prime; exponent 2 forces an abelian group");
  if (!is_prime(p)) invalid("E(p^3) needs a prime, got p = " + std::to_string(p));
  // Unitriangular matrices: (a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b').
  return from_product(p * p * p, [p](std::size_t x, std::size_t y) {
    const auto vx = decode(x, p, 3);
    const auto vy = decode(y, p, 3);
    return encode({(vx[0] + vy[0]) % p, (vx[1] + vy[1]) % p, (vx[2] + vy[2] + vx[0] * vy[1]) % p}, p);
  });
}

GroupTable symmetric(unsigned n, std::size_t max_order) { return permutation_group(n, false, max_order); }

GroupTable alternating(unsigned n, std::size_t max_order) { return permutation_group(n, true, max_order); }

ActionTable ActionTable::trivial(const GroupTable& normal, const GroupTable& acting) {
  std::vector<ElementId> id(normal.order());
  std::iota(id.begin(), id.end(), ElementId{0});
  return {std::vector<std::vector<ElementId>>(acting.order(), id)};
}

ActionTable ActionTable::cyclic(std::span<const ElementId> generator_image, std::size_t acting_order) {
  ActionTable t;
  std::vector<ElementId> cur(generator_image.size());
  std::iota(cur.begin(), cur.end(), ElementId{0});
  for (std::size_t h = 0; h < acting_order; ++h) {
    t.images.push_back(cur);
    cur = compose(generator_image, cur);
  }
  return t;
}

void check_action(const GroupTable& normal, const GroupTable& acting, const ActionTable& action) {
  const std::size_t n = normal.order();
  if (action.images.size() != acting.order()) {
    throw GroupError(ErrorKind::ActionNotHomomorphism, "action lists " + std::to_string(action.images.size()) +
                                                           " images for an acting group of order " +
                                                           std::to_string(acting.order()));
  }
  for (std::size_t h = 0; h < action.images.size(); ++h) {
    const auto& img = action.images[h];
    const std::string who = "image of acting element " + std::to_string(h);
    if (img.size() != n) throw GroupError(ErrorKind::ActionNotAutomorphism, who + " has the wrong length");
    std::vector<char> hit(n, 0);
    for (ElementId x : img) {
      if (x >= n || hit[x]) throw GroupError(ErrorKind::ActionNotAutomorphism, who + " is not a permutation");
      hit[x] = 1;
    }
    for (ElementId a = 0; a < n; ++a) {
      for (ElementId b = 0; b < n; ++b) {
        if (img[normal.mul(a, b)] != normal.mul(img[a], img[b])) {
          throw GroupError(ErrorKind::ActionNotAutomorphism,
                           who + " breaks the product of " + std::to_string(a) + " and " + std::to_string(b));
        }
      }
    }
  }
  for (ElementId h1 = 0; h1 < acting.order(); ++h1) {
    for (ElementId h2 = 0; h2 < acting.order(); ++h2) {
      if (action.images[acting.mul(h1, h2)] != compose(action.images[h1], action.images[h2])) {
        throw GroupError(ErrorKind::ActionNotHomomorphism, "action of " + std::to_string(h1) + " * " +
                                                               std::to_string(h2) +
                                                               " differs from the composite action");
      }
    }
  }
}

GroupTable semidirect_product(const GroupTable& normal, const GroupTable& acting, const ActionTable& action,
                              std::size_t max_order) {
  const std::size_t nh = acting.order();
  check_budget(normal.order() * nh, max_order, "semidirect product");
  check_action(normal, acting, action);
  return from_product(normal.order() * nh, [&](std::size_t x, std::size_t y) {
    const auto n1 = static_cast<ElementId>(x / nh);
    const auto h1 = static_cast<ElementId>(x % nh);
    const auto n2 = static_cast<ElementId>(y / nh);
    const auto h2 = static_cast<ElementId>(y % nh);
    return normal.mul(n1, action.images[h1][n2]) * nh + acting.mul(h1, h2);
  });
}

FieldMatrix irreducible_order_q_matrix(std::uint64_t p, unsigned r, std::uint64_t q) {
  if (!is_prime(p) || !is_prime(q)) invalid("matrix search needs prime p and q");
  const unsigned cells = r * r;
  const std::uint64_t total = ipow(p, cells);
  FieldMatrix m{p, r, std::vector<std::uint64_t>(cells, 0)};
  for (std::uint64_t code = 0; code < total; ++code) {
    m.entries = decode(code, p, cells);
    if (is_identity(m)) continue;
    FieldMatrix power = m;
    for (std::uint64_t i = 1; i < q; ++i) power = mat_mul(power, m);
    if (!is_identity(power)) continue;
    if (is_irreducible(m)) return m;
  }
  throw GroupError(ErrorKind::NoIrreducibleAction, "no irreducible element of order " + std::to_string(q) +
                                                       " in GL(" + std::to_string(r) + ", " + std::to_string(p) +
                                                       ")");
}

GroupTable schmidt_group(std::uint64_t p, std::uint64_t q, unsigned q_exp, std::size_t max_order) {
  if (!is_prime(p) || !is_prime(q)) {
    invalid("Schmidt group needs primes p, q; got p = " + std::to_string(p) + ", q = " + std::to_string(q));
  }
  if (p == q) invalid("Schmidt group needs distinct primes p and q");
  if (q_exp < 1) invalid("Schmidt group q-exponent must be at least 1");
  const unsigned r = multiplicative_order(p, q);
  const std::uint64_t p_part = ipow(p, r);
  const std::uint64_t q_part = ipow(q, q_exp);
  check_budget(p_part * q_part, max_order, "Schmidt group");

  const FieldMatrix m = irreducible_order_q_matrix(p, r, q);
  std::vector<ElementId> image(p_part);
  for (std::uint64_t id = 0; id < p_part; ++id) {
    image[id] = static_cast<ElementId>(encode(mat_vec(m, decode(id, p, r)), p));
  }
  const GroupTable normal = elementary_abelian(p, r, max_order);
  const GroupTable acting = cyclic(q_part, max_order);
  return semidirect_product(normal, acting, ActionTable::cyclic(image, q_part), max_order);
}

std::vector<ElementId> quaternion_cycling_automorphism() {
  const GroupTable q8 = generalized_quaternion(8);
  // a = id 1, b = id 4; a^i b^j = id i + 4j.
  const ElementId a_img = 4;
  const ElementId b_img = q8.mul(1, 4);
  std::vector<ElementId> image(8);
  for (ElementId x = 0; x < 8; ++x) {
    image[x] = q8.mul(q8.pow(a_img, x % 4), q8.pow(b_img, x / 4));
  }
  return image;
}

GroupTable quaternion_by_cyclic3(unsigned q_exp, std::size_t max_order) {
  if (q_exp < 1) invalid("q-exponent must be at least 1");
  const std::size_t acting_order = ipow(3, q_exp);
  const auto sigma = quaternion_cycling_automorphism();
  return semidirect_product(generalized_quaternion(8), cyclic(acting_order, max_order),
                            ActionTable::cyclic(sigma, acting_order), max_order);
}

}  // namespace gphi
