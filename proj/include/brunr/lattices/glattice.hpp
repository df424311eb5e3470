#pragma once

#include <brunr/exactalg/integer.hpp>
#include <brunr/groups/cayley.hpp>

#include <string>
#include <vector>

namespace brunr::lattices {

using exactalg::IntMatrix;
using groups::CayleyGroup;
using groups::Element;

enum class LatticeKind { Trivial, Regular, Pair, Augmentation, StandardKernel, Custom };

inline std::string to_string(LatticeKind k) {
  switch (k) {
    case LatticeKind::Trivial: return "trivial";
    case LatticeKind::Regular: return "regular";
    case LatticeKind::Pair: return "pair";
    case LatticeKind::Augmentation: return "augmentation";
    case LatticeKind::StandardKernel: return "standard";
    case LatticeKind::Custom: return "custom";
  }
  return "custom";
}

inline LatticeKind lattice_kind_from_string(const std::string& s) {
  for (auto k : {LatticeKind::Trivial, LatticeKind::Regular, LatticeKind::Pair, LatticeKind::Augmentation, LatticeKind::StandardKernel, LatticeKind::Custom})
    if (to_string(k) == s) return k;
  throw ParseError("unknown lattice kind '" + s + "'");
}

/// A free Z-module of finite rank with a left G-action, one integer matrix per group element
/// (acting on column vectors).
class GLattice {
 public:
  /// Validates action[e] = I and action[g] action[h] = action[gh] for all pairs; together these force
  /// action[g] action[g^-1] = I, so every matrix is invertible over Z.
  GLattice(CayleyGroup g, std::vector<IntMatrix> action, LatticeKind kind = LatticeKind::Custom)
      : g_(std::move(g)), action_(std::move(action)), kind_(kind) {
    const std::size_t n = g_.order();
    if (action_.size() != n) throw InvalidLattice("GLattice: need one matrix per group element");
    rank_ = action_[0].rows();
    for (const auto& a : action_)
      if (a.rows() != rank_ || a.cols() != rank_) throw InvalidLattice("GLattice: matrices must all be rank x rank");
    if (!(action_[g_.identity()] == IntMatrix::identity(rank_))) throw InvalidLattice("GLattice: identity must act trivially");
    small_.resize(n);
    for (Element x = 0; x < n; ++x) {
      small_[x].assign(rank_ * rank_, 0);
      for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) {
          if (!num::fits_int64(action_[x](i, j))) throw InvalidLattice("GLattice: entries must fit in 64 bits");
          small_[x][i * rank_ + j] = num::to_int64(action_[x](i, j));
        }
    }
    // homomorphism check, in machine integers
    std::vector<std::int64_t> prod(rank_ * rank_);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        std::fill(prod.begin(), prod.end(), 0);
        for (std::size_t i = 0; i < rank_; ++i)
          for (std::size_t k = 0; k < rank_; ++k) {
            const std::int64_t v = small_[a][i * rank_ + k];
            if (v == 0) continue;
            for (std::size_t j = 0; j < rank_; ++j) prod[i * rank_ + j] += v * small_[b][k * rank_ + j];
          }
        if (prod != small_[g_.mul(a, b)])
          throw InvalidLattice("GLattice: action is not a homomorphism at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
  }

  const CayleyGroup& group() const { return g_; }
  std::size_t rank() const { return rank_; }
  LatticeKind kind() const { return kind_; }
  const std::vector<IntMatrix>& action() const { return action_; }
  const IntMatrix& action(Element x) const { return action_[x]; }
  /// Row-major machine-integer copy of action(x).
  const std::vector<std::int64_t>& small_action(Element x) const { return small_[x]; }

  /// The restriction to a subgroup, indexed by the subgroup's local element positions.
  GLattice restricted(const groups::Subgroup& a) const {
    std::vector<IntMatrix> act;
    for (Element x : a.elements()) act.push_back(action_[x]);
    return GLattice(a.as_group(), std::move(act), kind_);
  }

 private:
  CayleyGroup g_;
  std::vector<IntMatrix> action_;
  LatticeKind kind_;
  std::size_t rank_ = 0;
  std::vector<std::vector<std::int64_t>> small_;
};

inline IntMatrix permutation_matrix(const std::vector<std::size_t>& images) {
  IntMatrix p(images.size(), images.size());
  for (std::size_t j = 0; j < images.size(); ++j) p(images[j], j) = 1;
  return p;
}

/// Z^rank with trivial action.
inline GLattice trivial_lattice(const CayleyGroup& g, std::size_t rank = 1) {
  return GLattice(g, std::vector<IntMatrix>(g.order(), IntMatrix::identity(rank)), LatticeKind::Trivial);
}

/// Z[G], left translation.
inline GLattice regular_lattice(const CayleyGroup& g) {
  std::vector<IntMatrix> act;
  for (Element x = 0; x < g.order(); ++x) {
    std::vector<std::size_t> im(g.order());
    for (Element h = 0; h < g.order(); ++h) im[h] = g.mul(x, h);
    act.push_back(permutation_matrix(im));
  }
  return GLattice(g, std::move(act), LatticeKind::Regular);
}

/// Z[G x G], diagonal left translation; basis vector (g, h) has index g |G| + h.
inline GLattice pair_lattice(const CayleyGroup& g) {
  const std::size_t n = g.order();
  std::vector<IntMatrix> act;
  for (Element x = 0; x < n; ++x) {
    std::vector<std::size_t> im(n * n);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) im[a * n + b] = g.mul(x, a) * n + g.mul(x, b);
    act.push_back(permutation_matrix(im));
  }
  return GLattice(g, std::move(act), LatticeKind::Pair);
}

/// The G-lattice on a G-stable saturated sublattice `sub` of an ambient lattice (action solved in sub's Hermite basis).
inline GLattice sublattice(const GLattice& ambient, const exactalg::IntLattice& sub, LatticeKind kind) {
  const std::size_t k = sub.rank();
  std::vector<IntMatrix> act;
  for (Element x = 0; x < ambient.group().order(); ++x) {
    IntMatrix m(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      auto image = ambient.action(x).apply(sub.basis()[j]);
      auto c = sub.coordinates(image);
      if (!c) throw InvalidLattice("sublattice is not stable under the action");
      for (std::size_t i = 0; i < k; ++i) m(i, j) = (*c)[i];
    }
    act.push_back(std::move(m));
  }
  return GLattice(ambient.group(), std::move(act), kind);
}

/// The matrix of pi: Z[G x G] -> Z[G], (g, h) -> g - h.
inline IntMatrix standard_pi(const CayleyGroup& g) {
  const std::size_t n = g.order();
  IntMatrix pi(n, n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      pi(a, a * n + b) += 1;
      pi(b, a * n + b) -= 1;
    }
  return pi;
}

struct LatticeOptions {
  /// Largest |G|^2 for building the standard kernel lattice.
  std::size_t standard_rank_budget = 256;
  /// Largest |G|^2 * rank for a direct cocycle solve.
  std::size_t direct_budget = 2048;
  bool slow = false;
};

/// ker(pi), rank |G|^2 - |G| + 1, with the induced diagonal action.
inline GLattice standard_kernel_lattice(const CayleyGroup& g, const LatticeOptions& opts = {}) {
  const std::size_t n = g.order();
  if (!opts.slow && n * n > opts.standard_rank_budget)
    throw BudgetExceeded("standard_kernel_lattice: |G|^2 = " + std::to_string(n * n) + " exceeds rank budget " + std::to_string(opts.standard_rank_budget));
  return sublattice(pair_lattice(g), exactalg::integer_kernel(standard_pi(g)), LatticeKind::StandardKernel);
}

/// The augmentation ideal ker(Z[G] -> Z), rank |G| - 1.
inline GLattice augmentation_lattice(const CayleyGroup& g) {
  const std::size_t n = g.order();
  IntMatrix eps(1, n);
  for (std::size_t i = 0; i < n; ++i) eps(0, i) = 1;
  return sublattice(regular_lattice(g), exactalg::integer_kernel(eps), LatticeKind::Augmentation);
}

inline GLattice make_lattice(const CayleyGroup& g, LatticeKind kind, const LatticeOptions& opts = {}) {
  switch (kind) {
    case LatticeKind::Trivial: return trivial_lattice(g);
    case LatticeKind::Regular: return regular_lattice(g);
    case LatticeKind::Pair: return pair_lattice(g);
    case LatticeKind::Augmentation: return augmentation_lattice(g);
    case LatticeKind::StandardKernel: return standard_kernel_lattice(g, opts);
    case LatticeKind::Custom: break;
  }
  throw Error("make_lattice: custom lattices need explicit matrices");
}

}  // namespace brunr::lattices
