#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace brunr {

using BigInt = boost::multiprecision::cpp_int;

namespace num {

inline bool fits_int64(const BigInt& v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t to_int64(const BigInt& v) { return v.convert_to<std::int64_t>(); }
inline std::int64_t to_int64(std::int64_t v) { return v; }

inline std::string to_string(const BigInt& v) { return v.str(); }
inline std::string to_string(std::int64_t v) { return std::to_string(v); }

inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

inline std::int64_t abs(std::int64_t a) { return a < 0 ? -a : a; }
inline BigInt abs(const BigInt& a) { return boost::multiprecision::abs(a); }

/// Least non-negative residue.
template <class Int>
Int mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

/// Floor division for integer types whose `/` truncates toward zero.
template <class Int>
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  if (m <= (std::int64_t{1} << 31)) return (a * b) % m;
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}
inline BigInt mulmod(const BigInt& a, const BigInt& b, const BigInt& m) { return (a * b) % m; }

/// Extended gcd: returns g = gcd(a, b) >= 0 with s*a + t*b = g.
/// When a divides b (a != 0) the result is (|a|, sign(a), 0).
template <class Int>
struct Xgcd {
  Int g, s, t;
};

template <class Int>
Xgcd<Int> xgcd(const Int& a, const Int& b) {
  if (a != 0 && b % a == 0) return {abs(a), Int(a < 0 ? -1 : 1), Int(0)};
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {Int(-old_r), Int(-old_s), Int(-old_t)};
  return {old_r, old_s, old_t};
}

/// A unit w of Z/m with w*a = gcd(a, m) (mod m). Returns 1 when a = 0.
template <class Int>
Int unit_normalizer(const Int& a, const Int& m) {
  if (a == 0) return Int(1);
  Int g = gcd(a, m);
  Int a1 = a / g, m1 = m / g;
  Int w0 = 0;
  if (m1 != 1) w0 = mod(xgcd(a1, m1).s, m1);
  if (m1 == 1) w0 = 1;
  Int w = w0;
  while (gcd(w, m) != 1) w += m1;
  return mod(w, m);
}

/// Multiplicity of the prime p in n (n > 0).
inline int valuation(std::int64_t n, std::int64_t p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

inline BigInt ipow(const BigInt& base, int exp) {
  BigInt r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

inline std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace num
}  // namespace brunr
