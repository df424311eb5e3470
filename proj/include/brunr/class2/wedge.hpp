#pragma once

#include <brunr/class2/extension_data.hpp>
#include <brunr/exactalg/modular.hpp>

#include <cstdint>
#include <vector>

namespace brunr::class2 {

/// An element of Lambda^2 (F_p^d) in the lexicographic wedge basis.
struct Wedge2 {
  std::int64_t p = 2;
  std::size_t d = 0;
  std::vector<std::int64_t> coords;

  Wedge2() = default;
  Wedge2(std::int64_t prime, std::size_t dim, std::vector<std::int64_t> c) : p(prime), d(dim), coords(std::move(c)) {
    if (coords.size() != wedge_dim(d)) throw DimensionMismatch("Wedge2: need d(d-1)/2 coordinates");
    for (auto& x : coords) x = num::mod(x, p);
  }
  static Wedge2 zero(std::int64_t prime, std::size_t dim) { return {prime, dim, std::vector<std::int64_t>(wedge_dim(dim), 0)}; }

  std::int64_t at(std::size_t i, std::size_t j) const {
    if (i == j) return 0;
    return i < j ? coords[wedge_index(i, j, d)] : num::mod(-coords[wedge_index(j, i, d)], p);
  }
  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](std::int64_t x) { return x == 0; });
  }

  friend bool operator==(const Wedge2&, const Wedge2&) = default;
};

/// u ^ v, coordinate (i,j) = u_i v_j - u_j v_i.
inline Wedge2 wedge(std::span<const std::int64_t> u, std::span<const std::int64_t> v, std::int64_t p) {
  if (u.size() != v.size()) throw DimensionMismatch("wedge: vectors of different length");
  const std::size_t d = u.size();
  std::vector<std::int64_t> c(wedge_dim(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) c[wedge_index(i, j, d)] = num::mod(u[i] * v[j] - u[j] * v[i], p);
  return {p, d, std::move(c)};
}

/// The alternating d x d matrix of w.
inline std::vector<std::vector<std::int64_t>> alternating_matrix(const Wedge2& w) {
  std::vector<std::vector<std::int64_t>> a(w.d, std::vector<std::int64_t>(w.d, 0));
  for (std::size_t i = 0; i < w.d; ++i)
    for (std::size_t j = 0; j < w.d; ++j) a[i][j] = w.at(i, j);
  return a;
}

/// Rank of the alternating matrix of w over F_p (always even). w is decomposable iff the rank is at most 2.
inline std::size_t rank_of_form(const Wedge2& w) {
  return exactalg::howell_form(alternating_matrix(w), w.d, w.p).size();
}

inline bool is_decomposable(const Wedge2& w) { return rank_of_form(w) <= 2; }

/// Q(w) = w01 w23 - w02 w13 + w03 w12 (0-based indices) for d = 4; zero exactly on decomposables.
inline std::int64_t plucker_quadric(const Wedge2& w) {
  if (w.d != 4) throw DimensionMismatch("plucker_quadric needs d = 4");
  const auto& c = w.coords;  // order: 01 02 03 12 13 23
  return num::mod(c[0] * c[5] - c[1] * c[4] + c[2] * c[3], w.p);
}

namespace detail {

inline std::int64_t pfaffian_rec(const std::vector<std::vector<std::int64_t>>& a, std::vector<std::size_t>& idx, std::int64_t p) {
  if (idx.empty()) return 1;
  const std::size_t first = idx[0];
  std::int64_t acc = 0;
  for (std::size_t k = 1; k < idx.size(); ++k) {
    const std::int64_t entry = a[first][idx[k]];
    if (entry == 0) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t t = 1; t < idx.size(); ++t)
      if (t != k) rest.push_back(idx[t]);
    const std::int64_t sub = pfaffian_rec(a, rest, p);
    const std::int64_t term = entry * sub % p;
    acc = (k % 2 == 1) ? acc + term : acc - term;  // sign (-1)^(k+1) with k counted from 0
    acc = num::mod(acc, p);
  }
  return acc;
}

}  // namespace detail

/// Pfaffian of the alternating matrix of w, by expansion along the first row. Needs even d.
inline std::int64_t pfaffian(const Wedge2& w) {
  if (w.d % 2 != 0) throw DimensionMismatch("pfaffian needs even d");
  const auto a = alternating_matrix(w);
  std::vector<std::size_t> idx(w.d);
  for (std::size_t i = 0; i < w.d; ++i) idx[i] = i;
  return detail::pfaffian_rec(a, idx, w.p);
}

}  // namespace brunr::class2
