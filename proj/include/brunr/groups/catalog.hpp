#pragma once

#include <brunr/groups/construct.hpp>

#include <string>
#include <utility>
#include <vector>

namespace brunr::groups {

inline CayleyGroup cyclic(std::size_t n) { return n == 1 ? from_permutations(1, {}) : from_abelian({n}); }

inline CayleyGroup symmetric(std::size_t n) {
  if (n < 2) return from_permutations(1, {});
  Permutation cycle(n), swap(n);
  for (std::size_t i = 0; i < n; ++i) {
    cycle[i] = (i + 1) % n;
    swap[i] = i;
  }
  std::swap(swap[0], swap[1]);
  return from_permutations(n, {cycle, swap});
}

inline CayleyGroup alternating4() { return from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}); }

/// Dihedral group of order 2n acting on the n-gon.
inline CayleyGroup dihedral(std::size_t n) {
  Permutation rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return from_permutations(n, {rot, refl});
}

/// Quaternion group {+-1, +-i, +-j, +-k}; element 4s + u is (-1)^s times unit u in (1, i, j, k).
inline CayleyGroup quaternion8() {
  // unit products: sign and unit of u*v for u, v in (1, i, j, k)
  const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  const std::size_t unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      const std::size_t ua = a % 4, ub = b % 4;
      const std::size_t s = (a / 4 + b / 4 + static_cast<std::size_t>(sign[ua][ub])) % 2;
      t[a][b] = 4 * s + unit[ua][ub];
    }
  return CayleyGroup::from_table(t);
}

/// Heisenberg group of order p^3: central extension of (Z/p)^2 by Z/p with lambda(e1 ^ e2) = 1.
inline CayleyGroup heisenberg(std::int64_t p) {
  return from_central_extension(class2::CentralExtensionData(p, 2, 1, exactalg::ModMatrix<std::int64_t>(p, {{1}})));
}

/// Named small groups used throughout the tests and the CLI.
inline std::vector<std::pair<std::string, CayleyGroup>> standard_catalog() {
  std::vector<std::pair<std::string, CayleyGroup>> c;
  for (std::size_t n = 1; n <= 12; ++n) c.emplace_back("Z/" + std::to_string(n), cyclic(n));
  c.emplace_back("(Z/2)^2", from_abelian({2, 2}));
  c.emplace_back("(Z/2)^3", from_abelian({2, 2, 2}));
  c.emplace_back("(Z/3)^3", from_abelian({3, 3, 3}));
  c.emplace_back("S3", symmetric(3));
  c.emplace_back("S4", symmetric(4));
  c.emplace_back("A4", alternating4());
  c.emplace_back("D4", dihedral(4));
  c.emplace_back("Q8", quaternion8());
  c.emplace_back("Heisenberg27", heisenberg(3));
  return c;
}

}  // namespace brunr::groups
