#pragma once

#include <brunr/bigint.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace brunr::exactalg {

/// The module a structure's generators live in: Z^rank or (Z/modulus)^rank.
struct Ambient {
  enum class Kind { FreeZ, ModM };
  Kind kind = Kind::FreeZ;
  BigInt modulus = 0;
  std::size_t rank = 0;

  static Ambient free_z(std::size_t rank) { return {Kind::FreeZ, 0, rank}; }
  static Ambient mod_m(BigInt m, std::size_t rank) { return {Kind::ModM, std::move(m), rank}; }
};

/// A finitely generated abelian group Z^free_rank + Z/d1 + ... + Z/dk with d1 | d2 | ... and every di >= 2.
struct AbelianStructure {
  std::vector<BigInt> invariant_factors;
  std::size_t free_rank = 0;
  /// One representative per invariant factor (then one per free summand), in the ambient module.
  std::optional<std::vector<std::vector<BigInt>>> generators;
  Ambient ambient;

  bool is_finite() const { return free_rank == 0; }
  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }

  /// Cardinality; only meaningful for finite groups.
  BigInt order() const {
    BigInt n = 1;
    for (const auto& d : invariant_factors) n *= d;
    return n;
  }

  /// Smallest positive integer killing the torsion part.
  BigInt exponent() const { return invariant_factors.empty() ? BigInt(1) : invariant_factors.back(); }

  /// Isomorphism type equality (ignores generators and ambient).
  bool isomorphic_to(const AbelianStructure& other) const {
    return free_rank == other.free_rank && invariant_factors == other.invariant_factors;
  }

  /// "0", "Z/2", "Z/2 x Z/4 x Z^1", ...
  std::string to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& d : invariant_factors) {
      os << (first ? "" : " x ") << "Z/" << d;
      first = false;
    }
    if (free_rank > 0) os << (first ? "" : " x ") << "Z^" << free_rank;
    return os.str();
  }
};

/// Structure with the given factors; drops units and sorts into a divisibility chain via prime-power splitting.
inline AbelianStructure structure_from_factors(std::vector<BigInt> factors) {
  // Normalize an arbitrary list of cyclic orders into invariant-factor form.
  std::vector<std::vector<BigInt>> by_prime;  // prime -> list of prime powers
  std::vector<BigInt> primes;
  for (BigInt d : factors) {
    if (d < 0) d = -d;
    if (d <= 1) continue;
    for (BigInt p = 2; p * p <= d; ++p) {
      if (d % p != 0) continue;
      BigInt q = 1;
      while (d % p == 0) {
        d /= p;
        q *= p;
      }
      auto it = std::find(primes.begin(), primes.end(), p);
      if (it == primes.end()) {
        primes.push_back(p);
        by_prime.push_back({q});
      } else {
        by_prime[static_cast<std::size_t>(it - primes.begin())].push_back(q);
      }
    }
    if (d > 1) {
      auto it = std::find(primes.begin(), primes.end(), d);
      if (it == primes.end()) {
        primes.push_back(d);
        by_prime.push_back({d});
      } else {
        by_prime[static_cast<std::size_t>(it - primes.begin())].push_back(d);
      }
    }
  }
  std::size_t len = 0;
  for (auto& pw : by_prime) {
    std::sort(pw.begin(), pw.end());
    len = std::max(len, pw.size());
  }
  std::vector<BigInt> inv(len, BigInt(1));
  for (const auto& pw : by_prime)
    for (std::size_t i = 0; i < pw.size(); ++i) inv[len - pw.size() + i] *= pw[i];
  AbelianStructure s;
  s.invariant_factors = std::move(inv);
  return s;
}

}  // namespace brunr::exactalg
