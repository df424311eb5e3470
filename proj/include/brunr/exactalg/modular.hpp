#pragma once

#include <brunr/bigint.hpp>
#include <brunr/error.hpp>
#include <brunr/exactalg/abelian.hpp>

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace brunr::exactalg {

template <class Int>
using ModVector = std::vector<Int>;

/// Dense matrix over Z/m, entries kept in [0, m).
///
/// `Int` is either std::int64_t (any modulus below 2^62) or BigInt.
template <class Int>
class ModMatrix {
 public:
  ModMatrix(Int modulus, std::size_t rows, std::size_t cols)
      : modulus_(std::move(modulus)), rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {
    if (modulus_ < 2) throw Error("ModMatrix: modulus must be at least 2");
  }

  ModMatrix(Int modulus, const std::vector<std::vector<Int>>& rows) : ModMatrix(modulus, rows.size(), rows.empty() ? 0 : rows[0].size()) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (rows[i].size() != cols_) throw DimensionMismatch("ModMatrix: ragged rows");
      for (std::size_t j = 0; j < cols_; ++j) set(i, j, rows[i][j]);
    }
  }

  static ModMatrix identity(Int modulus, std::size_t n) {
    ModMatrix m(std::move(modulus), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Int(1));
    return m;
  }

  const Int& modulus() const { return modulus_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Int& v) { data_[i * cols_ + j] = num::mod(v, modulus_); }

  std::vector<Int> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_), data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }
  std::vector<std::vector<Int>> row_list() const {
    std::vector<std::vector<Int>> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  ModMatrix transposed() const {
    ModMatrix t(modulus_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = (*this)(i, j);
    return t;
  }

  std::vector<Int> apply(std::span<const Int> x) const {
    if (x.size() != cols_) throw DimensionMismatch("ModMatrix::apply: length mismatch");
    std::vector<Int> y(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      Int acc = 0;
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && x[j] != 0) acc = (acc + num::mulmod((*this)(i, j), num::mod(x[j], modulus_), modulus_)) % modulus_;
      y[i] = acc;
    }
    return y;
  }

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  Int modulus_;
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

namespace detail {

// row_a <- s*row_a + t*row_b ; row_b <- u*row_a + v*row_b, columns [from, end).
template <class Int>
void combine_rows(std::vector<Int>& ra, std::vector<Int>& rb, const Int& s, const Int& t, const Int& u, const Int& v, const Int& m,
                  std::size_t from) {
  for (std::size_t k = from; k < ra.size(); ++k) {
    const Int a = ra[k], b = rb[k];
    if (a == 0 && b == 0) continue;
    ra[k] = (num::mulmod(s, a, m) + num::mulmod(t, b, m)) % m;
    rb[k] = (num::mulmod(u, a, m) + num::mulmod(v, b, m)) % m;
  }
}

// row_b <- row_b - q*row_a
template <class Int>
void sub_multiple(std::vector<Int>& rb, const std::vector<Int>& ra, const Int& q, const Int& m, std::size_t from) {
  const Int nq = num::mod(Int(-q), m);
  if (nq == 0) return;
  for (std::size_t k = from; k < ra.size(); ++k)
    if (ra[k] != 0) rb[k] = (rb[k] + num::mulmod(nq, ra[k], m)) % m;
}

template <class Int>
bool is_zero(const std::vector<Int>& r) {
  return std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
}

}  // namespace detail

/// Howell form: the unique reduced strong echelon basis of a submodule of (Z/m)^cols.
///
/// Rows are sorted by pivot column; every pivot divides m, entries above a pivot lie in [0, pivot),
/// and for every column j the rows with pivot >= j generate all elements vanishing before j.
template <class Int>
struct HowellForm {
  Int modulus;
  std::size_t cols = 0;
  std::vector<std::vector<Int>> rows;
  std::vector<std::size_t> pivot_cols;

  std::size_t size() const { return rows.size(); }

  /// Cardinality of the spanned submodule.
  BigInt cardinality() const {
    BigInt n = 1;
    for (std::size_t t = 0; t < rows.size(); ++t) n *= BigInt(modulus / rows[t][pivot_cols[t]]);
    return n;
  }

  struct Reduction {
    std::vector<Int> remainder;
    std::vector<Int> coefficients;  // one per row, x - remainder = sum coefficients[t] * rows[t]
  };

  Reduction reduce(std::span<const Int> x) const {
    if (x.size() != cols) throw DimensionMismatch("HowellForm::reduce: length mismatch");
    Reduction r{std::vector<Int>(x.begin(), x.end()), std::vector<Int>(rows.size(), Int(0))};
    for (auto& v : r.remainder) v = num::mod(v, modulus);
    for (std::size_t t = 0; t < rows.size(); ++t) {
      const std::size_t j = pivot_cols[t];
      const Int q = r.remainder[j] / rows[t][j];
      if (q == 0) continue;
      detail::sub_multiple(r.remainder, rows[t], q, modulus, j);
      r.coefficients[t] = num::mod(q, modulus);
    }
    return r;
  }

  bool contains(std::span<const Int> x) const { return detail::is_zero(reduce(x).remainder); }

  friend bool operator==(const HowellForm&, const HowellForm&) = default;
};

/// Howell form of the row span of `input` (each row of length `cols`).
template <class Int>
HowellForm<Int> howell_form(std::vector<std::vector<Int>> input, std::size_t cols, const Int& m) {
  using detail::combine_rows;
  std::vector<std::vector<Int>> a;
  a.reserve(input.size());
  for (auto& r : input) {
    if (r.size() != cols) throw DimensionMismatch("howell_form: row length mismatch");
    for (auto& v : r) v = num::mod(v, m);
    if (!detail::is_zero(r)) a.push_back(std::move(r));
  }

  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t j = 0; j < cols && r < a.size(); ++j) {
    std::size_t first = a.size();
    for (std::size_t i = r; i < a.size(); ++i)
      if (a[i][j] != 0) {
        first = i;
        break;
      }
    if (first == a.size()) continue;
    std::swap(a[r], a[first]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][j] == 0) continue;
      const Int pa = a[r][j], pb = a[i][j];
      if (pb % pa == 0) {
        detail::sub_multiple(a[i], a[r], Int(pb / pa), m, j);
        continue;
      }
      auto [g, s, t] = num::xgcd(pa, pb);
      combine_rows(a[r], a[i], num::mod(s, m), num::mod(t, m), num::mod(Int(-pb / g), m), num::mod(Int(pa / g), m), m, j);
    }
    const Int w = num::unit_normalizer(a[r][j], m);
    if (w != 1)
      for (std::size_t k = j; k < cols; ++k) a[r][k] = num::mulmod(a[r][k], w, m);
    const Int p = a[r][j];
    for (std::size_t k = 0; k < r; ++k) {
      const Int q = a[k][j] / p;
      if (q != 0) detail::sub_multiple(a[k], a[r], q, m, j);
    }
    if (p != 1) {
      std::vector<Int> extra(cols, Int(0));
      const Int ann = m / p;
      for (std::size_t k = j + 1; k < cols; ++k) extra[k] = num::mulmod(a[r][k], ann, m);
      if (!detail::is_zero(extra)) a.push_back(std::move(extra));
    }
    pivots.push_back(j);
    ++r;
  }
  a.resize(r);
  return HowellForm<Int>{m, cols, std::move(a), std::move(pivots)};
}

template <class Int>
HowellForm<Int> howell_form(const ModMatrix<Int>& a) {
  return howell_form(a.row_list(), a.cols(), a.modulus());
}

/// Generators of {x : A x = 0 (mod m)} in Howell form (canonical: equal kernels give identical output).
template <class Int>
HowellForm<Int> kernel_mod(const ModMatrix<Int>& a) {
  const Int& m = a.modulus();
  const std::size_t n = a.cols();
  const HowellForm<Int> h = howell_form(a);
  const std::size_t hr = h.size();
  std::vector<std::vector<Int>> aug(n, std::vector<Int>(hr + n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < hr; ++t) aug[i][t] = h.rows[t][i];
    aug[i][hr + i] = 1;
  }
  HowellForm<Int> full = howell_form(std::move(aug), hr + n, m);
  HowellForm<Int> out{m, n, {}, {}};
  for (std::size_t t = 0; t < full.size(); ++t) {
    if (full.pivot_cols[t] < hr) continue;
    out.rows.emplace_back(full.rows[t].begin() + static_cast<std::ptrdiff_t>(hr), full.rows[t].end());
    out.pivot_cols.push_back(full.pivot_cols[t] - hr);
  }
  return out;
}

/// Smith normal form over Z/m restricted to what quotient computations need:
/// diag = P * R * Q with Q (and its inverse) tracked. Diagonal entries divide m and form a divisibility chain.
template <class Int>
struct ModSmith {
  std::vector<Int> diagonal;  // length min(rows, cols); 0 means the entry vanishes mod m
  std::vector<std::vector<Int>> right, right_inverse;
};

template <class Int>
ModSmith<Int> mod_smith(std::vector<std::vector<Int>> a, std::size_t cols, const Int& m) {
  const std::size_t rows = a.size();
  std::vector<std::vector<Int>> q(cols, std::vector<Int>(cols, Int(0))), qi = q;
  for (std::size_t i = 0; i < cols; ++i) q[i][i] = qi[i][i] = 1;
  for (auto& r : a)
    for (auto& v : r) v = num::mod(v, m);

  auto col_combine = [&](std::size_t c1, std::size_t c2, const Int& s, const Int& t, const Int& u, const Int& v) {
    // new c1 = s*c1 + t*c2 ; new c2 = u*c1 + v*c2
    for (auto& r : a) {
      const Int x = r[c1], y = r[c2];
      r[c1] = (num::mulmod(s, x, m) + num::mulmod(t, y, m)) % m;
      r[c2] = (num::mulmod(u, x, m) + num::mulmod(v, y, m)) % m;
    }
    for (auto& r : q) {
      const Int x = r[c1], y = r[c2];
      r[c1] = (num::mulmod(s, x, m) + num::mulmod(t, y, m)) % m;
      r[c2] = (num::mulmod(u, x, m) + num::mulmod(v, y, m)) % m;
    }
    // inverse of [[s,u],[t,v]] (column-action block) is [[v,-u],[-t,s]]
    detail::combine_rows(qi[c1], qi[c2], v, num::mod(Int(-u), m), num::mod(Int(-t), m), s, m, 0);
  };
  auto col_swap = [&](std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (auto& r : a) std::swap(r[c1], r[c2]);
    for (auto& r : q) std::swap(r[c1], r[c2]);
    std::swap(qi[c1], qi[c2]);
  };
  auto normalize_row = [&](std::size_t i, std::size_t j) {
    const Int w = num::unit_normalizer(a[i][j], m);
    if (w != 1)
      for (auto& v : a[i]) v = num::mulmod(v, w, m);
  };

  const std::size_t steps = std::min(rows, cols);
  std::vector<Int> diag(steps, Int(0));
  for (std::size_t t = 0; t < steps; ++t) {
    // pivot: entry of smallest gcd with m
    std::size_t bi = rows, bj = cols;
    Int best = m;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0) {
          Int g = num::gcd(a[i][j], m);
          if (g < best) {
            best = g;
            bi = i;
            bj = j;
          }
        }
    if (bi == rows) break;
    std::swap(a[t], a[bi]);
    col_swap(t, bj);
    normalize_row(t, t);

    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const Int p = a[t][t], b = a[i][t];
        if (b % p == 0) {
          detail::sub_multiple(a[i], a[t], Int(b / p), m, t);
        } else {
          auto [g, s, tt] = num::xgcd(p, b);
          detail::combine_rows(a[t], a[i], num::mod(s, m), num::mod(tt, m), num::mod(Int(-b / g), m), num::mod(Int(p / g), m), m, t);
          normalize_row(t, t);
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const Int p = a[t][t], b = a[t][j];
        if (b % p == 0) {
          const Int qq = b / p;
          col_combine(t, j, Int(1), Int(0), num::mod(Int(-qq), m), Int(1));
        } else {
          auto [g, s, tt] = num::xgcd(p, b);
          col_combine(t, j, num::mod(s, m), num::mod(tt, m), num::mod(Int(-b / g), m), num::mod(Int(p / g), m));
          normalize_row(t, t);
          changed = true;
        }
      }
      if (!changed) {
        bool clear = true;
        for (std::size_t i = t + 1; i < rows && clear; ++i)
          if (a[i][t] != 0) clear = false;
        if (clear) {
          // divisibility of the remaining block by the pivot
          const Int p = a[t][t];
          std::size_t bad = rows;
          for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
            for (std::size_t j = t + 1; j < cols; ++j)
              if (a[i][j] % p != 0) {
                bad = i;
                break;
              }
          if (bad == rows) break;
          for (std::size_t k = t; k < cols; ++k) a[t][k] = (a[t][k] + a[bad][k]) % m;
        }
      }
    }
    diag[t] = a[t][t];
  }
  return {std::move(diag), std::move(q), std::move(qi)};
}

/// The quotient N/D of submodules D <= N <= (Z/m)^n, with invariant factors,
/// representative generators, and a coordinate map onto the cyclic factors.
template <class Int>
class ModSubquotient {
 public:
  ModSubquotient(const HowellForm<Int>& numerator, std::span<const std::vector<Int>> denominator_gens)
      : m_(numerator.modulus), num_(numerator) {
    const std::size_t k = num_.size();
    const std::size_t n = num_.cols;
    std::vector<std::vector<Int>> rel;
    for (const auto& d : denominator_gens) {
      auto red = num_.reduce(d);
      if (!detail::is_zero(red.remainder)) throw ContainmentViolation("subquotient: denominator generator outside numerator span");
      rel.push_back(std::move(red.coefficients));
    }
    if (k > 0) {
      // syzygies among the numerator basis: y with sum y_t h_t = 0
      ModMatrix<Int> ht(m_, n, k);
      for (std::size_t t = 0; t < k; ++t)
        for (std::size_t i = 0; i < n; ++i) ht.set(i, t, num_.rows[t][i]);
      auto syz = kernel_mod(ht);
      for (auto& r : syz.rows) rel.push_back(std::move(r));
    }
    ModSmith<Int> snf = mod_smith(std::move(rel), k, m_);
    right_ = std::move(snf.right);
    for (std::size_t t = 0; t < k; ++t) {
      Int d = t < snf.diagonal.size() ? snf.diagonal[t] : Int(0);
      Int f = d == 0 ? m_ : num::gcd(d, m_);
      if (f == 1) continue;
      slots_.push_back(t);
      factors_.push_back(f);
      std::vector<Int> g(n, Int(0));
      for (std::size_t s = 0; s < k; ++s) {
        const Int c = snf.right_inverse[t][s];
        if (c == 0) continue;
        for (std::size_t i = 0; i < n; ++i) g[i] = (g[i] + num::mulmod(c, num_.rows[s][i], m_)) % m_;
      }
      generators_.push_back(std::move(g));
    }
  }

  const Int& modulus() const { return m_; }
  std::size_t ambient_rank() const { return num_.cols; }
  const std::vector<Int>& factors() const { return factors_; }
  const std::vector<std::vector<Int>>& generators() const { return generators_; }
  const HowellForm<Int>& numerator() const { return num_; }

  /// Coordinates of x (an element of N) on the cyclic factors; entry i lies in [0, factors()[i]).
  std::vector<Int> coordinates(std::span<const Int> x) const {
    auto red = num_.reduce(x);
    if (!detail::is_zero(red.remainder)) throw ContainmentViolation("subquotient: element outside numerator span");
    std::vector<Int> out;
    out.reserve(slots_.size());
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      Int acc = 0;
      for (std::size_t s = 0; s < red.coefficients.size(); ++s)
        if (red.coefficients[s] != 0) acc = (acc + num::mulmod(red.coefficients[s], right_[s][slots_[i]], m_)) % m_;
      out.push_back(acc % factors_[i]);
    }
    return out;
  }

  bool is_zero_class(std::span<const Int> x) const {
    auto c = coordinates(x);
    return std::all_of(c.begin(), c.end(), [](const Int& v) { return v == 0; });
  }

  AbelianStructure structure() const {
    AbelianStructure s;
    for (const auto& f : factors_) s.invariant_factors.push_back(BigInt(f));
    std::vector<std::vector<BigInt>> gens;
    for (const auto& g : generators_) {
      std::vector<BigInt> v;
      v.reserve(g.size());
      for (const auto& x : g) v.push_back(BigInt(x));
      gens.push_back(std::move(v));
    }
    s.generators = std::move(gens);
    s.ambient = Ambient::mod_m(BigInt(m_), num_.cols);
    return s;
  }

 private:
  Int m_;
  HowellForm<Int> num_;
  std::vector<std::vector<Int>> right_;
  std::vector<std::size_t> slots_;
  std::vector<Int> factors_;
  std::vector<std::vector<Int>> generators_;
};

/// Structure of span(numerator_gens) / span(denominator_gens) inside (Z/m)^n.
/// Throws ContainmentViolation when a denominator generator is not in the numerator span.
template <class Int>
AbelianStructure subquotient_structure(const std::vector<std::vector<Int>>& numerator_gens, const std::vector<std::vector<Int>>& denominator_gens,
                                       const Int& m, std::size_t n) {
  auto h = howell_form(numerator_gens, n, m);
  return ModSubquotient<Int>(h, denominator_gens).structure();
}

}  // namespace brunr::exactalg
