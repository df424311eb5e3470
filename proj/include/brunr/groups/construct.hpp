#pragma once

#include <brunr/class2/extension_data.hpp>
#include <brunr/groups/cayley.hpp>

#include <map>
#include <optional>
#include <vector>

namespace brunr::groups {

using Permutation = std::vector<std::size_t>;

/// The permutation group generated by `generators` acting on {0, ..., degree-1}.
///
/// Element 0 is the identity; the rest follow in breadth-first order of right multiplication by the
/// generators. The product is composition: (g h)(x) = g(h(x)).
inline CayleyGroup from_permutations(std::size_t degree, const std::vector<Permutation>& generators, const GroupOptions& opts = {}) {
  for (const auto& s : generators) {
    if (s.size() != degree) throw InvalidPermutation("generator has length " + std::to_string(s.size()) + ", expected " + std::to_string(degree));
    std::vector<char> hit(degree, 0);
    for (std::size_t x : s) {
      if (x >= degree || hit[x]) throw InvalidPermutation("generator is not a bijection of {0..degree-1}");
      hit[x] = 1;
    }
  }
  auto compose = [&](const Permutation& g, const Permutation& h) {
    Permutation r(degree);
    for (std::size_t x = 0; x < degree; ++x) r[x] = g[h[x]];
    return r;
  };
  Permutation id(degree);
  for (std::size_t x = 0; x < degree; ++x) id[x] = x;
  std::vector<Permutation> elems{id};
  std::map<Permutation, std::size_t> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& s : generators) {
      Permutation p = compose(elems[i], s);
      if (index.emplace(p, elems.size()).second) {
        elems.push_back(std::move(p));
        if (elems.size() > opts.order_bound)
          throw OrderBoundExceeded("permutation group order exceeds bound " + std::to_string(opts.order_bound));
      }
    }
  const std::size_t n = elems.size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
  return CayleyGroup::from_table(t, opts);
}

/// Mixed-radix index of a coordinate vector; coordinate 0 varies fastest.
inline std::size_t mixed_radix_index(std::span<const std::size_t> x, std::span<const std::size_t> radices) {
  std::size_t idx = 0, stride = 1;
  for (std::size_t i = 0; i < radices.size(); ++i) {
    idx += x[i] * stride;
    stride *= radices[i];
  }
  return idx;
}

inline std::vector<std::size_t> mixed_radix_digits(std::size_t idx, std::span<const std::size_t> radices) {
  std::vector<std::size_t> x(radices.size());
  for (std::size_t i = 0; i < radices.size(); ++i) {
    x[i] = idx % radices[i];
    idx /= radices[i];
  }
  return x;
}

/// Z/n1 x ... x Z/nk. Element index = x1 + n1*(x2 + n2*(x3 + ...)), so the first coordinate varies fastest.
inline CayleyGroup from_abelian(const std::vector<std::size_t>& invariants, const GroupOptions& opts = {}) {
  std::size_t n = 1;
  for (std::size_t k : invariants) {
    if (k < 2) throw Error("from_abelian: every cyclic order must be at least 2");
    n *= k;
    if (n > opts.order_bound) throw OrderBoundExceeded("abelian group order exceeds bound " + std::to_string(opts.order_bound));
  }
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    const auto xa = mixed_radix_digits(a, invariants);
    for (std::size_t b = 0; b < n; ++b) {
      auto xb = mixed_radix_digits(b, invariants);
      for (std::size_t i = 0; i < invariants.size(); ++i) xb[i] = (xa[i] + xb[i]) % invariants[i];
      t[a][b] = mixed_radix_index(xb, invariants);
    }
  }
  return CayleyGroup::from_table(t, opts);
}

/// A symmetric bilinear form Gamma x Gamma -> C, one symmetric d x d matrix over F_p per coordinate of C.
/// Adding it to the canonical cocycle changes the extension but not its commutator pairing.
using SymmetricShift = std::vector<std::vector<std::vector<std::int64_t>>>;

/// The group on C x Gamma with (c1, g1)(c2, g2) = (c1 + c2 + f(g1, g2), g1 + g2), where
/// f(g1, g2) = sum_{i<j} lambda(e_i ^ e_j) g1_i g2_j (+ the optional symmetric shift).
///
/// Element index = c + p^r * gamma, with c and gamma in base-p digits (coordinate 0 least significant).
inline CayleyGroup from_central_extension(const class2::CentralExtensionData& ext, const std::optional<SymmetricShift>& shift = std::nullopt,
                                          const GroupOptions& opts = {}) {
  ext.validate();
  const std::size_t d = ext.gamma_rank, r = ext.c_rank;
  const std::int64_t p = ext.p;
  const std::size_t nc = static_cast<std::size_t>(num::ipow(p, static_cast<int>(r)));
  const std::size_t ng = static_cast<std::size_t>(num::ipow(p, static_cast<int>(d)));
  if (static_cast<double>(nc) * static_cast<double>(ng) > static_cast<double>(opts.order_bound))
    throw OrderBoundExceeded("central extension of order p^" + std::to_string(d + r) + " exceeds bound " + std::to_string(opts.order_bound));
  if (shift) {
    if (shift->size() != r) throw DimensionMismatch("symmetric shift needs one matrix per coordinate of C");
    for (const auto& b : *shift) {
      if (b.size() != d) throw DimensionMismatch("symmetric shift matrices must be d x d");
      for (std::size_t i = 0; i < d; ++i) {
        if (b[i].size() != d) throw DimensionMismatch("symmetric shift matrices must be d x d");
        for (std::size_t j = 0; j < d; ++j)
          if (num::mod(b[i][j] - b[j][i], p) != 0) throw Error("symmetric shift matrix is not symmetric");
      }
    }
  }
  const std::vector<std::size_t> crad(r, static_cast<std::size_t>(p)), grad(d, static_cast<std::size_t>(p));
  std::vector<std::vector<std::size_t>> gdig(ng), cdig(nc);
  for (std::size_t i = 0; i < ng; ++i) gdig[i] = mixed_radix_digits(i, grad);
  for (std::size_t i = 0; i < nc; ++i) cdig[i] = mixed_radix_digits(i, crad);

  // cocycle table on Gamma x Gamma, as an index into C
  std::vector<std::size_t> f(ng * ng);
  for (std::size_t a = 0; a < ng; ++a)
    for (std::size_t b = 0; b < ng; ++b) {
      std::vector<std::size_t> c(r, 0);
      for (std::size_t k = 0; k < r; ++k) {
        std::int64_t acc = 0;
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = i + 1; j < d; ++j)
            acc += ext.lambda(k, class2::wedge_index(i, j, d)) * static_cast<std::int64_t>(gdig[a][i] * gdig[b][j]);
        if (shift)
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) acc += (*shift)[k][i][j] * static_cast<std::int64_t>(gdig[a][i] * gdig[b][j]);
        c[k] = static_cast<std::size_t>(num::mod(acc, p));
      }
      f[a * ng + b] = mixed_radix_index(c, crad);
    }
  auto add = [&](std::size_t x, std::size_t y, const std::vector<std::vector<std::size_t>>& dig, const std::vector<std::size_t>& rad) {
    std::vector<std::size_t> z(rad.size());
    for (std::size_t i = 0; i < rad.size(); ++i) z[i] = (dig[x][i] + dig[y][i]) % rad[i];
    return mixed_radix_index(z, rad);
  };
  std::vector<std::size_t> cadd(nc * nc), gadd(ng * ng);
  for (std::size_t x = 0; x < nc; ++x)
    for (std::size_t y = 0; y < nc; ++y) cadd[x * nc + y] = add(x, y, cdig, crad);
  for (std::size_t x = 0; x < ng; ++x)
    for (std::size_t y = 0; y < ng; ++y) gadd[x * ng + y] = add(x, y, gdig, grad);

  const std::size_t n = nc * ng;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t u = 0; u < n; ++u) {
    const std::size_t c1 = u % nc, g1 = u / nc;
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t c2 = v % nc, g2 = v / nc;
      const std::size_t c = cadd[cadd[c1 * nc + c2] * nc + f[g1 * ng + g2]];
      t[u][v] = c + nc * gadd[g1 * ng + g2];
    }
  }
  return CayleyGroup::from_table(t, opts);
}

/// Index of (c, gamma) in from_central_extension's element numbering.
inline Element central_extension_element(const class2::CentralExtensionData& ext, std::span<const std::size_t> c, std::span<const std::size_t> gamma) {
  const std::vector<std::size_t> crad(ext.c_rank, static_cast<std::size_t>(ext.p)), grad(ext.gamma_rank, static_cast<std::size_t>(ext.p));
  const std::size_t nc = static_cast<std::size_t>(num::ipow(ext.p, static_cast<int>(ext.c_rank)));
  return mixed_radix_index(c, crad) + nc * mixed_radix_index(gamma, grad);
}

}  // namespace brunr::groups
