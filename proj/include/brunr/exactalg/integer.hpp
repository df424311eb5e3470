#pragma once

#include <brunr/bigint.hpp>
#include <brunr/error.hpp>
#include <brunr/exactalg/abelian.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace brunr::exactalg {

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries) : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw DimensionMismatch("IntMatrix: entry count does not match shape");
  }
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("IntMatrix: ragged rows");
      for (long long v : r) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("IntMatrix::from_rows: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_columns(const std::vector<std::vector<BigInt>>& columns, std::size_t rows) {
    IntMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw DimensionMismatch("IntMatrix::from_columns: ragged columns");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<BigInt> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_), data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }
  std::vector<BigInt> column(std::size_t j) const {
    std::vector<BigInt> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  std::vector<std::vector<BigInt>> row_list() const {
    std::vector<std::vector<BigInt>> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v == 0; });
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("IntMatrix product: inner dimensions differ");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const BigInt& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) c(i, j) += x * b(k, j);
      }
    return c;
  }

  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("IntMatrix difference: shapes differ");
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }

  std::vector<BigInt> apply(std::span<const BigInt> x) const {
    if (x.size() != cols_) throw DimensionMismatch("IntMatrix::apply: length mismatch");
    std::vector<BigInt> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && x[j] != 0) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

/// Determinant by fraction-free (Bareiss) elimination.
inline BigInt determinant(IntMatrix a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && a(s, k) == 0) ++s;
      if (s == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(s, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ... >= 0.
struct SmithForm {
  IntMatrix D, U, V;
  IntMatrix U_inverse, V_inverse;

  std::vector<BigInt> diagonal() const {
    std::vector<BigInt> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }
};

namespace detail {

// rows i1, i2 of m: (r1, r2) <- (s r1 + t r2, u r1 + v r2)
inline void int_combine_rows(IntMatrix& m, std::size_t i1, std::size_t i2, const BigInt& s, const BigInt& t, const BigInt& u, const BigInt& v) {
  for (std::size_t k = 0; k < m.cols(); ++k) {
    const BigInt a = m(i1, k), b = m(i2, k);
    if (a == 0 && b == 0) continue;
    m(i1, k) = s * a + t * b;
    m(i2, k) = u * a + v * b;
  }
}
inline void int_combine_cols(IntMatrix& m, std::size_t j1, std::size_t j2, const BigInt& s, const BigInt& t, const BigInt& u, const BigInt& v) {
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const BigInt a = m(k, j1), b = m(k, j2);
    if (a == 0 && b == 0) continue;
    m(k, j1) = s * a + t * b;
    m(k, j2) = u * a + v * b;
  }
}

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& a) {
  using detail::int_combine_cols;
  using detail::int_combine_rows;
  const std::size_t rows = a.rows(), cols = a.cols();
  SmithForm f{a, IntMatrix::identity(rows), IntMatrix::identity(cols), IntMatrix::identity(rows), IntMatrix::identity(cols)};
  IntMatrix& d = f.D;

  // Row transform on D and U; inverse column transform on U^-1.
  auto row_op = [&](std::size_t i1, std::size_t i2, const BigInt& s, const BigInt& t, const BigInt& u, const BigInt& v) {
    int_combine_rows(d, i1, i2, s, t, u, v);
    int_combine_rows(f.U, i1, i2, s, t, u, v);
    // [[s,t],[u,v]]^-1 = det * [[v,-t],[-u,s]], det = +-1
    const BigInt det = s * v - t * u;
    int_combine_cols(f.U_inverse, i1, i2, det * v, det * -u, det * -t, det * s);
  };
  auto col_op = [&](std::size_t j1, std::size_t j2, const BigInt& s, const BigInt& t, const BigInt& u, const BigInt& v) {
    int_combine_cols(d, j1, j2, s, t, u, v);
    int_combine_cols(f.V, j1, j2, s, t, u, v);
    const BigInt det = s * v - t * u;
    int_combine_rows(f.V_inverse, j1, j2, det * v, det * -u, det * -t, det * s);
  };
  auto swap_rows = [&](std::size_t i1, std::size_t i2) {
    if (i1 != i2) row_op(i1, i2, 0, 1, 1, 0);
  };
  auto swap_cols = [&](std::size_t j1, std::size_t j2) {
    if (j1 != j2) col_op(j1, j2, 0, 1, 1, 0);
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t bi = rows, bj = cols;
    BigInt best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (d(i, j) != 0 && (bi == rows || num::abs(d(i, j)) < best)) {
          best = num::abs(d(i, j));
          bi = i;
          bj = j;
        }
    if (bi == rows) break;
    swap_rows(t, bi);
    swap_cols(t, bj);
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        const BigInt p = d(t, t), b = d(i, t);
        if (b % p == 0) {
          row_op(t, i, 1, 0, -(b / p), 1);
        } else {
          auto [g, s, tt] = num::xgcd(p, b);
          row_op(t, i, s, tt, -(b / g), p / g);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        const BigInt p = d(t, t), b = d(t, j);
        if (b % p == 0) {
          col_op(t, j, 1, 0, -(b / p), 1);
        } else {
          auto [g, s, tt] = num::xgcd(p, b);
          col_op(t, j, s, tt, -(b / g), p / g);
          dirty = true;
        }
      }
      if (dirty) continue;
      const BigInt p = d(t, t);
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % p != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      row_op(t, bad, 1, 1, 0, 1);
    }
    if (d(t, t) < 0) {
      for (std::size_t k = 0; k < cols; ++k) d(t, k) = -d(t, k);
      for (std::size_t k = 0; k < rows; ++k) f.U(t, k) = -f.U(t, k);
      for (std::size_t k = 0; k < rows; ++k) f.U_inverse(k, t) = -f.U_inverse(k, t);
    }
  }
  return f;
}

/// Integer row-echelon (Hermite) basis of a lattice in Z^n; canonical for the lattice.
class IntLattice {
 public:
  IntLattice() = default;

  /// Lattice spanned by the given vectors in Z^n.
  IntLattice(std::vector<std::vector<BigInt>> gens, std::size_t n) : n_(n) {
    for (const auto& g : gens)
      if (g.size() != n) throw DimensionMismatch("IntLattice: generator length mismatch");
    std::vector<std::vector<BigInt>> a;
    for (auto& g : gens)
      if (std::any_of(g.begin(), g.end(), [](const BigInt& v) { return v != 0; })) a.push_back(std::move(g));
    std::size_t r = 0;
    for (std::size_t j = 0; j < n && r < a.size(); ++j) {
      // Euclid on column j among rows r..
      for (;;) {
        std::size_t piv = a.size();
        for (std::size_t i = r; i < a.size(); ++i)
          if (a[i][j] != 0 && (piv == a.size() || num::abs(a[i][j]) < num::abs(a[piv][j]))) piv = i;
        if (piv == a.size()) break;
        std::swap(a[r], a[piv]);
        bool more = false;
        for (std::size_t i = r + 1; i < a.size(); ++i) {
          if (a[i][j] == 0) continue;
          const BigInt q = num::floor_div(a[i][j], a[r][j]);
          for (std::size_t k = j; k < n; ++k)
            if (a[r][k] != 0) a[i][k] -= q * a[r][k];
          if (a[i][j] != 0) more = true;
        }
        if (!more) break;
      }
      if (r >= a.size() || a[r][j] == 0) continue;
      if (a[r][j] < 0)
        for (std::size_t k = j; k < n; ++k) a[r][k] = -a[r][k];
      for (std::size_t i = 0; i < r; ++i) {
        const BigInt q = num::floor_div(a[i][j], a[r][j]);
        if (q == 0) continue;
        for (std::size_t k = j; k < n; ++k)
          if (a[r][k] != 0) a[i][k] -= q * a[r][k];
      }
      pivots_.push_back(j);
      ++r;
      // drop zero rows that accumulated
      a.erase(std::remove_if(a.begin() + static_cast<std::ptrdiff_t>(r), a.end(),
                             [](const std::vector<BigInt>& row) { return std::all_of(row.begin(), row.end(), [](const BigInt& v) { return v == 0; }); }),
              a.end());
    }
    a.resize(r);
    basis_ = std::move(a);
  }

  std::size_t ambient_rank() const { return n_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::vector<BigInt>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

  /// Coordinates of x in the basis, or nullopt if x is not in the lattice.
  std::optional<std::vector<BigInt>> coordinates(std::span<const BigInt> x) const {
    if (x.size() != n_) throw DimensionMismatch("IntLattice::coordinates: length mismatch");
    std::vector<BigInt> v(x.begin(), x.end()), c(basis_.size());
    for (std::size_t t = 0; t < basis_.size(); ++t) {
      const std::size_t j = pivots_[t];
      if (v[j] == 0) continue;
      if (v[j] % basis_[t][j] != 0) return std::nullopt;
      c[t] = v[j] / basis_[t][j];
      for (std::size_t k = j; k < n_; ++k)
        if (basis_[t][k] != 0) v[k] -= c[t] * basis_[t][k];
    }
    if (std::any_of(v.begin(), v.end(), [](const BigInt& e) { return e != 0; })) return std::nullopt;
    return c;
  }

  bool contains(std::span<const BigInt> x) const { return coordinates(x).has_value(); }

  std::vector<BigInt> combination(std::span<const BigInt> coeffs) const {
    std::vector<BigInt> v(n_);
    for (std::size_t t = 0; t < basis_.size(); ++t)
      if (coeffs[t] != 0)
        for (std::size_t k = 0; k < n_; ++k)
          if (basis_[t][k] != 0) v[k] += coeffs[t] * basis_[t][k];
    return v;
  }

  friend bool operator==(const IntLattice&, const IntLattice&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<BigInt>> basis_;
  std::vector<std::size_t> pivots_;
};

/// Saturated lattice {x in Z^n : A x = 0}, as a canonical Hermite basis.
inline IntLattice integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols(), r = a.rows();
  // rows (A^T | I): echelon on the A-part leaves kernel vectors in the identity part
  std::vector<std::vector<BigInt>> aug(n, std::vector<BigInt>(r + n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < r; ++k) aug[i][k] = a(k, i);
    aug[i][r + i] = 1;
  }
  IntLattice full(std::move(aug), r + n);
  std::vector<std::vector<BigInt>> ker;
  for (std::size_t t = 0; t < full.rank(); ++t)
    if (full.pivot_cols()[t] >= r) ker.emplace_back(full.basis()[t].begin() + static_cast<std::ptrdiff_t>(r), full.basis()[t].end());
  return IntLattice(std::move(ker), n);
}

/// Quotient L1 / L2 of integer lattices L2 <= L1 <= Z^n with a coordinate map.
class IntSubquotient {
 public:
  IntSubquotient(IntLattice numerator, const std::vector<std::vector<BigInt>>& denominator_gens) : num_(std::move(numerator)) {
    const std::size_t k = num_.rank();
    IntMatrix rel(denominator_gens.size(), k);
    for (std::size_t i = 0; i < denominator_gens.size(); ++i) {
      auto c = num_.coordinates(denominator_gens[i]);
      if (!c) throw ContainmentViolation("integer subquotient: denominator generator outside numerator lattice");
      for (std::size_t t = 0; t < k; ++t) rel(i, t) = (*c)[t];
    }
    // quotient Z^k / rowspan(rel): y -> y V maps the row span onto the diagonal's
    SmithForm f = smith_normal_form(rel);
    right_ = f.V;
    const auto diag = f.diagonal();
    for (std::size_t t = 0; t < k; ++t) {
      BigInt d = t < diag.size() ? num::abs(diag[t]) : BigInt(0);
      if (d == 1) continue;
      slots_.push_back(t);
      factors_.push_back(d);
      generators_.push_back(num_.combination(f.V_inverse.row(t)));
    }
  }

  const IntLattice& numerator() const { return num_; }
  /// 0 denotes a free (infinite cyclic) summand.
  const std::vector<BigInt>& factors() const { return factors_; }
  const std::vector<std::vector<BigInt>>& generators() const { return generators_; }

  std::vector<BigInt> coordinates(std::span<const BigInt> x) const {
    auto c = num_.coordinates(x);
    if (!c) throw ContainmentViolation("integer subquotient: element outside numerator lattice");
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      BigInt acc = 0;
      for (std::size_t s = 0; s < c->size(); ++s)
        if ((*c)[s] != 0) acc += (*c)[s] * right_(s, slots_[i]);
      out.push_back(factors_[i] == 0 ? acc : num::mod(acc, factors_[i]));
    }
    return out;
  }

  bool is_zero_class(std::span<const BigInt> x) const {
    auto c = coordinates(x);
    return std::all_of(c.begin(), c.end(), [](const BigInt& v) { return v == 0; });
  }

  AbelianStructure structure() const {
    AbelianStructure s;
    std::vector<std::vector<BigInt>> torsion_gens, free_gens;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i] == 0) {
        ++s.free_rank;
        free_gens.push_back(generators_[i]);
      } else {
        s.invariant_factors.push_back(factors_[i]);
        torsion_gens.push_back(generators_[i]);
      }
    }
    for (auto& g : free_gens) torsion_gens.push_back(std::move(g));
    s.generators = std::move(torsion_gens);
    s.ambient = Ambient::free_z(num_.ambient_rank());
    return s;
  }

 private:
  IntLattice num_;
  IntMatrix right_;
  std::vector<std::size_t> slots_;
  std::vector<BigInt> factors_;
  std::vector<std::vector<BigInt>> generators_;
};

/// Z^ambient_rank / column-span(A), with representative generators.
inline AbelianStructure cokernel_structure(const IntMatrix& a, std::size_t ambient_rank) {
  if (a.rows() != ambient_rank) throw DimensionMismatch("cokernel_structure: row count differs from ambient rank");
  std::vector<std::vector<BigInt>> unit;
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    std::vector<BigInt> e(ambient_rank);
    e[i] = 1;
    unit.push_back(std::move(e));
  }
  std::vector<std::vector<BigInt>> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.column(j));
  return IntSubquotient(IntLattice(std::move(unit), ambient_rank), cols).structure();
}

}  // namespace brunr::exactalg
