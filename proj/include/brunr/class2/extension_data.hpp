#pragma once

#include <brunr/error.hpp>
#include <brunr/exactalg/abelian.hpp>
#include <brunr/exactalg/modular.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace brunr::class2 {

/// Number of wedge coordinates e_i ^ e_j (i < j) for a rank-d space.
constexpr std::size_t wedge_dim(std::size_t d) { return d * (d - 1) / 2; }

/// Position of e_i ^ e_j (0-based, i < j) in the lexicographic wedge basis (0,1) < (0,2) < ... < (d-2,d-1).
constexpr std::size_t wedge_index(std::size_t i, std::size_t j, std::size_t d) {
  return i * d - i * (i + 1) / 2 + (j - i - 1);
}

/// Inverse of wedge_index.
inline std::pair<std::size_t, std::size_t> wedge_pair(std::size_t k, std::size_t d) {
  for (std::size_t i = 0; i + 1 < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (wedge_index(i, j, d) == k) return {i, j};
  throw DimensionMismatch("wedge_pair: index out of range");
}

/// A central extension 1 -> C -> G -> Gamma -> 1 with Gamma = (Z/p)^d, C = (Z/p)^r, given by its
/// commutator pairing lambda: Lambda^2 Gamma -> C as an r x d(d-1)/2 matrix over F_p.
struct CentralExtensionData {
  std::int64_t p = 2;
  std::size_t gamma_rank = 0;
  std::size_t c_rank = 0;
  exactalg::ModMatrix<std::int64_t> lambda{2, 0, 0};

  CentralExtensionData() = default;
  CentralExtensionData(std::int64_t prime, std::size_t d, std::size_t r, exactalg::ModMatrix<std::int64_t> lam)
      : p(prime), gamma_rank(d), c_rank(r), lambda(std::move(lam)) {
    validate();
  }

  /// The zero pairing: G = C x Gamma abelian.
  static CentralExtensionData zero(std::int64_t prime, std::size_t d, std::size_t r) {
    return {prime, d, r, exactalg::ModMatrix<std::int64_t>(prime, r, wedge_dim(d))};
  }

  void validate() const {
    if (!num::is_prime(p)) throw Error("CentralExtensionData: p must be prime");
    if (lambda.modulus() != p) throw DimensionMismatch("CentralExtensionData: lambda modulus differs from p");
    if (lambda.rows() != c_rank || lambda.cols() != wedge_dim(gamma_rank))
      throw DimensionMismatch("CentralExtensionData: lambda must be c_rank x d(d-1)/2");
  }

  exactalg::AbelianStructure c_structure() const {
    exactalg::AbelianStructure s;
    s.invariant_factors.assign(c_rank, BigInt(p));
    s.ambient = exactalg::Ambient::mod_m(BigInt(p), c_rank);
    return s;
  }

  /// log_p |G|
  std::size_t order_exponent() const { return gamma_rank + c_rank; }

  friend bool operator==(const CentralExtensionData&, const CentralExtensionData&) = default;
};

}  // namespace brunr::class2
