#pragma once

#include <brunr/error.hpp>
#include <brunr/exactalg/modular.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace brunr::class2 {

/// A subspace of F_p^n held by its reduced row echelon basis (canonical).
class Subspace {
 public:
  Subspace(std::int64_t p, std::size_t n) : p_(p), n_(n) {}

  static Subspace span(std::int64_t p, std::size_t n, std::vector<std::vector<std::int64_t>> gens) {
    Subspace s(p, n);
    if (!num::is_prime(p)) throw Error("Subspace: p must be prime");
    auto h = exactalg::howell_form(std::move(gens), n, p);
    s.basis_ = std::move(h.rows);
    s.pivots_ = std::move(h.pivot_cols);
    return s;
  }
  static Subspace whole(std::int64_t p, std::size_t n) {
    std::vector<std::vector<std::int64_t>> id(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return span(p, n, std::move(id));
  }

  std::int64_t p() const { return p_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::vector<std::int64_t>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const std::int64_t> x) const { return as_howell().contains(x); }
  bool contains(const Subspace& other) const {
    for (const auto& r : other.basis_)
      if (!contains(r)) return false;
    return true;
  }

  /// {y : y . x = 0 for all x in S}
  Subspace annihilator() const {
    exactalg::ModMatrix<std::int64_t> m(p_, basis_.empty() ? std::vector<std::vector<std::int64_t>>{} : basis_);
    if (basis_.empty()) return whole(p_, n_);
    auto k = exactalg::kernel_mod(m);
    return span(p_, n_, std::move(k.rows));
  }

  /// Calls f on every vector of S (p^dim of them), coefficient vector counted with the first basis row fastest.
  void for_each_vector(const std::function<void(const std::vector<std::int64_t>&)>& f) const {
    std::vector<std::int64_t> coeff(dim(), 0), x(n_, 0);
    while (true) {
      f(x);
      std::size_t i = 0;
      for (; i < dim(); ++i) {
        for (std::size_t j = 0; j < n_; ++j) x[j] = (x[j] + basis_[i][j]) % p_;
        if (++coeff[i] < p_) break;
        coeff[i] = 0;  // x has wrapped back in this coordinate after p additions
      }
      if (i == dim()) return;
    }
  }

  /// Calls f once per projective point of P(S): vectors whose leading coefficient is 1.
  void for_each_point(const std::function<void(const std::vector<std::int64_t>&)>& f) const {
    for (std::size_t lead = 0; lead < dim(); ++lead) {
      // x = basis[lead] + sum_{i > lead} c_i basis[i]
      Subspace tail(p_, n_);
      tail.basis_.assign(basis_.begin() + static_cast<std::ptrdiff_t>(lead) + 1, basis_.end());
      tail.for_each_vector([&](const std::vector<std::int64_t>& t) {
        std::vector<std::int64_t> x(n_);
        for (std::size_t j = 0; j < n_; ++j) x[j] = (t[j] + basis_[lead][j]) % p_;
        f(x);
      });
    }
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.p_ == b.p_ && a.n_ == b.n_ && a.basis_ == b.basis_; }

 private:
  exactalg::HowellForm<std::int64_t> as_howell() const { return {p_, n_, basis_, pivots_}; }

  std::int64_t p_;
  std::size_t n_;
  std::vector<std::vector<std::int64_t>> basis_;
  std::vector<std::size_t> pivots_;
};

/// Every k-dimensional subspace of F_p^n in lexicographic order of their echelon bases:
/// pivot sets in lexicographic order, then free entries (row-major) as a base-p counter, most significant first.
/// f returns false to stop early.
inline void for_each_subspace(std::int64_t p, std::size_t n, std::size_t k, const std::function<bool(const Subspace&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    // free slots: (row i, col j) with j > piv[i] and j not a pivot
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = piv[i] + 1; j < n; ++j)
        if (std::find(piv.begin(), piv.end(), j) == piv.end()) free.emplace_back(i, j);
    std::vector<std::int64_t> val(free.size(), 0);
    while (true) {
      std::vector<std::vector<std::int64_t>> rows(k, std::vector<std::int64_t>(n, 0));
      for (std::size_t i = 0; i < k; ++i) rows[i][piv[i]] = 1;
      for (std::size_t t = 0; t < free.size(); ++t) rows[free[t].first][free[t].second] = val[t];
      if (!f(Subspace::span(p, n, std::move(rows)))) return;
      std::size_t t = free.size();
      while (t > 0) {
        if (++val[t - 1] < p) break;
        val[t - 1] = 0;
        --t;
      }
      if (t == 0) break;
    }
    // next pivot combination
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
}

}  // namespace brunr::class2
