#pragma once

#include <brunr/class2/extension_data.hpp>
#include <brunr/class2/subspace.hpp>
#include <brunr/class2/wedge.hpp>

#include <array>
#include <cmath>
#include <optional>
#include <string>

namespace brunr::class2 {

inline constexpr double kDefaultEnumerationBudget = 1e7;

/// S_G = ker lambda inside Lambda^2 Gamma.
inline Subspace s_group(const CentralExtensionData& ext) {
  ext.validate();
  const std::size_t n = wedge_dim(ext.gamma_rank);
  if (ext.c_rank == 0) return Subspace::whole(ext.p, n);
  auto k = exactalg::kernel_mod(ext.lambda);
  return Subspace::span(ext.p, n, std::move(k.rows));
}

/// The span of the decomposable elements of S, by enumerating all p^dim S elements.
inline Subspace s_bic(const Subspace& s, std::size_t gamma_rank, double budget = kDefaultEnumerationBudget) {
  if (s.ambient_dim() != wedge_dim(gamma_rank)) throw DimensionMismatch("s_bic: subspace does not live in Lambda^2 of the given rank");
  if (std::pow(static_cast<double>(s.p()), static_cast<double>(s.dim())) > budget)
    throw BudgetExceeded("s_bic: p^dim S = " + std::to_string(s.p()) + "^" + std::to_string(s.dim()) + " exceeds enumeration budget");
  std::vector<std::vector<std::int64_t>> dec;
  s.for_each_point([&](const std::vector<std::int64_t>& x) {
    if (is_decomposable(Wedge2(s.p(), gamma_rank, x))) dec.push_back(x);
  });
  return Subspace::span(s.p(), s.ambient_dim(), std::move(dec));
}

/// B_G ~ S_G / S_bic (elementary abelian, hence self-dual). Generators are representatives in Lambda^2 Gamma.
inline exactalg::AbelianStructure bogomolov_class2(const CentralExtensionData& ext, double budget = kDefaultEnumerationBudget) {
  const Subspace s = s_group(ext);
  const Subspace b = s_bic(s, ext.gamma_rank, budget);
  return exactalg::subquotient_structure<std::int64_t>(s.basis(), b.basis(), ext.p, s.ambient_dim());
}

/// The extension with C = Lambda^2 Gamma / S and lambda the quotient map (rows span the annihilator of S).
inline CentralExtensionData extension_from_subspace(const Subspace& s, std::size_t gamma_rank) {
  if (s.ambient_dim() != wedge_dim(gamma_rank)) throw DimensionMismatch("extension_from_subspace: wrong ambient dimension");
  const Subspace ann = s.annihilator();
  exactalg::ModMatrix<std::int64_t> lam(s.p(), ann.dim(), s.ambient_dim());
  for (std::size_t i = 0; i < ann.dim(); ++i)
    for (std::size_t j = 0; j < s.ambient_dim(); ++j) lam.set(i, j, ann.basis()[i][j]);
  return CentralExtensionData(s.p(), gamma_rank, ann.dim(), std::move(lam));
}

enum class CaseLabel {
  PointOffQ,
  PointOnQ,
  LineSecant,
  LineTangent,
  LineExternal,
  LineContained,
  PlaneSmoothConic,
  PlaneTwoLines,
  PlaneDoubleLine,
  PlanePoint,
  PlaneContained,
  HigherDim,
};

inline std::string to_string(CaseLabel l) {
  static const std::array<const char*, 12> names = {"point-off-Q",        "point-on-Q",      "line-secant",       "line-tangent",
                                                    "line-external",      "line-contained",  "plane-smooth-conic", "plane-two-lines",
                                                    "plane-double-line",  "plane-point",     "plane-contained",   "higher-dim"};
  return names[static_cast<std::size_t>(l)];
}

inline CaseLabel case_label_from_string(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(CaseLabel::HigherDim); ++i)
    if (to_string(static_cast<CaseLabel>(i)) == s) return static_cast<CaseLabel>(i);
  throw ParseError("unknown case label '" + s + "'");
}

struct SubspaceClassification {
  std::size_t dim = 0;  // projective dimension of P(S)
  CaseLabel label = CaseLabel::HigherDim;
  bool obstructed = false;
  BigInt predicted_group_order;
  std::size_t points_on_quadric = 0;
  exactalg::AbelianStructure bogomolov;
};

/// Places S inside Lambda^2 F_p^4 relative to the Pluecker quadric by counting the points of P(S) on it.
inline SubspaceClassification classify_subspace(const Subspace& s) {
  if (s.ambient_dim() != wedge_dim(4)) throw DimensionMismatch("classify_subspace: S must live in Lambda^2 F_p^4");
  const std::size_t k = s.dim();
  if (k < 1 || k > 3) throw UnsupportedDimension("classify_subspace: dim S must be 1, 2 or 3 (got " + std::to_string(k) + ")");
  const std::int64_t p = s.p();
  std::vector<std::vector<std::int64_t>> on;
  s.for_each_point([&](const std::vector<std::int64_t>& x) {
    if (plucker_quadric(Wedge2(p, 4, x)) == 0) on.push_back(x);
  });
  const std::size_t c = on.size();
  const std::size_t up = static_cast<std::size_t>(p);
  SubspaceClassification out;
  out.dim = k - 1;
  out.points_on_quadric = c;
  auto bad = [&] { return Error("classify_subspace: impossible point count " + std::to_string(c) + " for dim " + std::to_string(k)); };
  if (k == 1) {
    out.label = c == 0 ? CaseLabel::PointOffQ : CaseLabel::PointOnQ;
  } else if (k == 2) {
    if (c == 0) out.label = CaseLabel::LineExternal;
    else if (c == 1) out.label = CaseLabel::LineTangent;
    else if (c == 2) out.label = CaseLabel::LineSecant;
    else if (c == up + 1) out.label = CaseLabel::LineContained;
    else throw bad();
  } else {
    const std::size_t span_dim = Subspace::span(p, 6, on).dim();
    if (c == 1) out.label = CaseLabel::PlanePoint;
    else if (c == up + 1) out.label = span_dim == 3 ? CaseLabel::PlaneSmoothConic : CaseLabel::PlaneDoubleLine;
    else if (c == 2 * up + 1) out.label = CaseLabel::PlaneTwoLines;
    else if (c == up * up + up + 1) out.label = CaseLabel::PlaneContained;
    else throw bad();
  }
  const Subspace sb = s_bic(s, 4);
  out.obstructed = sb.dim() != s.dim();
  out.bogomolov = exactalg::subquotient_structure<std::int64_t>(s.basis(), sb.basis(), p, 6);
  out.predicted_group_order = num::ipow(BigInt(p), static_cast<int>(4 + 6 - k));
  return out;
}

/// The label of each of the five obstructed configurations, in order.
inline CaseLabel example_case_label(int c) {
  switch (c) {
    case 1: return CaseLabel::PointOffQ;
    case 2: return CaseLabel::LineTangent;
    case 3: return CaseLabel::LineExternal;
    case 4: return CaseLabel::PlaneDoubleLine;
    case 5: return CaseLabel::PlanePoint;
    default: throw Error("example_case: case must be 1..5");
  }
}

struct ExampleWitness {
  Subspace s;
  CentralExtensionData ext;
  SubspaceClassification classification;
};

/// First subspace S of Lambda^2 F_p^4 (lexicographic echelon order) realizing the requested case, with its extension.
inline ExampleWitness example_case_witness(int c, std::int64_t p) {
  const CaseLabel want = example_case_label(c);
  if (!num::is_prime(p)) throw Error("example_case: p must be prime");
  const std::size_t k = c == 1 ? 1 : (c <= 3 ? 2 : 3);
  std::optional<Subspace> found;
  for_each_subspace(p, 6, k, [&](const Subspace& s) {
    // cheap point count first, the full classification only for the winner
    std::size_t on = 0;
    std::vector<std::vector<std::int64_t>> pts;
    s.for_each_point([&](const std::vector<std::int64_t>& x) {
      if (plucker_quadric(Wedge2(p, 4, x)) == 0) {
        ++on;
        pts.push_back(x);
      }
    });
    bool hit = false;
    const std::size_t up = static_cast<std::size_t>(p);
    switch (want) {
      case CaseLabel::PointOffQ: hit = on == 0; break;
      case CaseLabel::LineTangent: hit = on == 1; break;
      case CaseLabel::LineExternal: hit = on == 0; break;
      case CaseLabel::PlaneDoubleLine: hit = on == up + 1 && Subspace::span(p, 6, pts).dim() == 2; break;
      case CaseLabel::PlanePoint: hit = on == 1; break;
      default: break;
    }
    if (hit) found = s;
    return !hit;
  });
  if (!found) throw WitnessNotFound("example_case: no witness for case " + std::to_string(c) + " over F_" + std::to_string(p));
  auto cls = classify_subspace(*found);
  if (cls.label != want) throw Error("example_case: witness classified as " + to_string(cls.label));
  return {*found, extension_from_subspace(*found, 4), std::move(cls)};
}

inline CentralExtensionData example_case(int c, std::int64_t p) { return example_case_witness(c, p).ext; }

/// The block family in Lambda^2 F_p^{2m}: alternating matrices [[0, M], [-M^T, 0]] with M upper triangular
/// and constant diagonal. Basis e_0..e_{m-1}, f_0..f_{m-1} at positions 0..m-1, m..2m-1.
/// S is spanned by e_i ^ f_j (i < j) and sum_i e_i ^ f_i; the last basis vector carries the diagonal.
inline Subspace pfaffian_family_subspace(std::size_t m, std::int64_t p) {
  if (m < 1) throw Error("pfaffian_family: m must be positive");
  const std::size_t d = 2 * m, n = wedge_dim(d);
  std::vector<std::vector<std::int64_t>> gens;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<std::int64_t> v(n, 0);
      v[wedge_index(i, m + j, d)] = 1;
      gens.push_back(std::move(v));
    }
  std::vector<std::int64_t> diag(n, 0);
  for (std::size_t i = 0; i < m; ++i) diag[wedge_index(i, m + i, d)] = 1;
  gens.push_back(std::move(diag));
  return Subspace::span(p, n, std::move(gens));
}

/// The subspace {diagonal = 0} of the block family (strictly upper triangular M).
inline Subspace pfaffian_family_hyperplane(std::size_t m, std::int64_t p) {
  const std::size_t d = 2 * m, n = wedge_dim(d);
  std::vector<std::vector<std::int64_t>> gens;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<std::int64_t> v(n, 0);
      v[wedge_index(i, m + j, d)] = 1;
      gens.push_back(std::move(v));
    }
  return Subspace::span(p, n, std::move(gens));
}

inline CentralExtensionData pfaffian_family(std::size_t m, std::int64_t p, double budget = kDefaultEnumerationBudget) {
  const Subspace s = pfaffian_family_subspace(m, p);
  if (std::pow(static_cast<double>(p), static_cast<double>(s.dim())) > budget)
    throw BudgetExceeded("pfaffian_family: p^dim S exceeds enumeration budget");
  return extension_from_subspace(s, 2 * m);
}

}  // namespace brunr::class2
