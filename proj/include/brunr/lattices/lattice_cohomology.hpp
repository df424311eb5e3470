#pragma once

#include <brunr/cohomology/h2.hpp>
#include <brunr/groups/subgroups.hpp>
#include <brunr/lattices/glattice.hpp>

#include <memory>
#include <numeric>

namespace brunr::lattices {

using BigVec = std::vector<BigInt>;

/// Normalized 2-cocycles G x G -> L (left action) in reduced coordinates.
///
/// Same scheme as cohomology::CocycleSystem: unknowns are the vectors f(g, s), g != e, s in a generating set,
/// and f(g, hs) = f(g, h) + f(gh, s) - g.f(h, s) along a breadth-first tree; the identity on the remaining
/// edges presents Z^2(G, L) (the action terms cancel in the same induction on word length).
class LatticeCocycleSystem {
 public:
  explicit LatticeCocycleSystem(GLattice l) : l_(std::move(l)), gens_(groups::generating_set(l_.group())) {
    const auto& g = l_.group();
    const std::size_t n = g.order(), k = gens_.size();
    r_ = l_.rank();
    slot_.assign(n, n);
    std::size_t next = 0;
    for (Element x = 0; x < n; ++x)
      if (x != g.identity()) slot_[x] = next++;
    v_ = (n - 1) * k * r_;

    std::vector<char> seen(n, 0);
    std::vector<Element> order{g.identity()};
    seen[g.identity()] = 1;
    std::vector<std::pair<Element, std::size_t>> parent(n, {n, 0}), extra;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t s = 0; s < k; ++s) {
        const Element h = order[i], x = g.mul(h, gens_[s]);
        if (!seen[x]) {
          seen[x] = 1;
          parent[x] = {h, s};
          order.push_back(x);
        } else {
          extra.emplace_back(h, s);
        }
      }
    const std::size_t block = r_ * v_;
    values_.assign(n * n * block, 0);
    std::vector<std::int64_t> tmp(block);
    for (Element x = 0; x < n; ++x) {
      if (x == g.identity()) continue;
      for (std::size_t i = 1; i < order.size(); ++i) {
        const Element y = order[i];
        const auto [h, s] = parent[y];
        std::int64_t* out = &values_[(x * n + y) * block];
        const std::int64_t* in = &values_[(x * n + h) * block];
        std::copy(in, in + block, out);
        step(out, x, h, s);
      }
      for (auto [h, s] : extra) {
        std::copy(&values_[(x * n + h) * block], &values_[(x * n + h) * block] + block, tmp.begin());
        step(tmp.data(), x, h, s);
        const std::int64_t* target = &values_[(x * n + g.mul(h, gens_[s])) * block];
        for (std::size_t i = 0; i < r_; ++i) {
          BigVec eq(v_);
          bool nz = false;
          for (std::size_t c = 0; c < v_; ++c) {
            const std::int64_t d = tmp[i * v_ + c] - target[i * v_ + c];
            if (d != 0) {
              eq[c] = d;
              nz = true;
            }
          }
          if (nz) equations_.push_back(std::move(eq));
        }
      }
    }
  }

  const GLattice& lattice() const { return l_; }
  const CayleyGroup& group() const { return l_.group(); }
  const std::vector<Element>& generators() const { return gens_; }
  std::size_t unknowns() const { return v_; }
  /// First coordinate of the vector unknown f(g, gens[s]).
  std::size_t unknown(Element g, std::size_t s) const { return (slot_[g] * gens_.size() + s) * r_; }
  const std::vector<BigVec>& equations() const { return equations_; }

  exactalg::IntLattice cocycles() const {
    if (equations_.empty()) {
      std::vector<BigVec> id(v_, BigVec(v_));
      for (std::size_t i = 0; i < v_; ++i) id[i][i] = 1;
      return exactalg::IntLattice(std::move(id), v_);
    }
    exactalg::IntMatrix e(equations_.size(), v_);
    for (std::size_t i = 0; i < equations_.size(); ++i)
      for (std::size_t c = 0; c < v_; ++c) e(i, c) = equations_[i][c];
    return exactalg::integer_kernel(e);
  }

  /// delta c for a normalized 1-cochain c (c[x] in Z^rank): (g, s) -> g.c(s) - c(gs) + c(g).
  BigVec coboundary(const std::vector<BigVec>& c) const {
    const auto& g = group();
    BigVec out(v_);
    for (Element x = 0; x < g.order(); ++x) {
      if (x == g.identity()) continue;
      for (std::size_t s = 0; s < gens_.size(); ++s) {
        const auto gc = l_.action(x).apply(c[gens_[s]]);
        const auto& cxs = c[g.mul(x, gens_[s])];
        for (std::size_t i = 0; i < r_; ++i) out[unknown(x, s) + i] = gc[i] - cxs[i] + c[x][i];
      }
    }
    return out;
  }

  std::vector<BigVec> coboundary_generators() const {
    std::vector<BigVec> out;
    const auto& g = group();
    std::vector<BigVec> c(g.order(), BigVec(r_));
    for (Element x = 0; x < g.order(); ++x) {
      if (x == g.identity()) continue;
      for (std::size_t i = 0; i < r_; ++i) {
        c[x][i] = 1;
        out.push_back(coboundary(c));
        c[x][i] = 0;
      }
    }
    return out;
  }

  /// f(g, x) in Z^rank for reduced coordinates z.
  BigVec value(Element g, Element x, std::span<const BigInt> z) const {
    const std::size_t n = group().order(), block = r_ * v_;
    const std::int64_t* m = &values_[(g * n + x) * block];
    BigVec out(r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t c = 0; c < v_; ++c)
        if (m[i * v_ + c] != 0 && z[c] != 0) out[i] += m[i * v_ + c] * z[c];
    return out;
  }

  /// Full table f[g][h] in Z^rank.
  std::vector<std::vector<BigVec>> expand(std::span<const BigInt> z) const {
    const std::size_t n = group().order();
    std::vector<std::vector<BigVec>> t(n, std::vector<BigVec>(n));
    for (Element g = 0; g < n; ++g)
      for (Element x = 0; x < n; ++x) t[g][x] = value(g, x, z);
    return t;
  }

  /// Reduced coordinates of a full table.
  BigVec reduce(const std::vector<std::vector<BigVec>>& t) const {
    BigVec out(v_);
    const auto& g = group();
    for (Element x = 0; x < g.order(); ++x) {
      if (x == g.identity()) continue;
      for (std::size_t s = 0; s < gens_.size(); ++s)
        for (std::size_t i = 0; i < r_; ++i) out[unknown(x, s) + i] = t[x][gens_[s]][i];
    }
    return out;
  }

 private:
  // v <- v + E(xh, s) - rho(x) E(h, s)
  void step(std::int64_t* v, Element x, Element h, std::size_t s) const {
    const auto& g = group();
    const Element xh = g.mul(x, h);
    if (xh != g.identity()) {
      const std::size_t c0 = unknown(xh, s);
      for (std::size_t i = 0; i < r_; ++i) v[i * v_ + c0 + i] += 1;
    }
    if (h != g.identity()) {
      const std::size_t c0 = unknown(h, s);
      const auto& a = l_.small_action(x);
      for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < r_; ++j) v[i * v_ + c0 + j] -= a[i * r_ + j];
    }
  }

  GLattice l_;
  std::vector<Element> gens_;
  std::size_t r_ = 0;
  std::vector<std::size_t> slot_;
  std::size_t v_ = 0;
  std::vector<std::int64_t> values_;
  std::vector<BigVec> equations_;
};

/// H^2(G, L) = Z^2 / B^2 by integer linear algebra.
class DirectH2 {
 public:
  explicit DirectH2(GLattice l)
      : sys_(std::make_shared<const LatticeCocycleSystem>(std::move(l))),
        q_(std::make_shared<const exactalg::IntSubquotient>(sys_->cocycles(), sys_->coboundary_generators())) {}

  const LatticeCocycleSystem& system() const { return *sys_; }
  exactalg::AbelianStructure structure() const { return q_->structure(); }
  const std::vector<BigInt>& factors() const { return q_->factors(); }
  /// Reduced-coordinate representatives, one per cyclic factor.
  const std::vector<BigVec>& generators() const { return q_->generators(); }
  std::vector<std::vector<std::vector<BigVec>>> representatives() const {
    std::vector<std::vector<std::vector<BigVec>>> out;
    for (const auto& z : q_->generators()) out.push_back(sys_->expand(z));
    return out;
  }
  BigVec coordinates(std::span<const BigInt> z) const { return q_->coordinates(z); }

 private:
  std::shared_ptr<const LatticeCocycleSystem> sys_;
  std::shared_ptr<const exactalg::IntSubquotient> q_;
};

/// Tate H^0: L^G / N_G L.
inline exactalg::AbelianStructure tate_h0(const GLattice& l) {
  const auto& g = l.group();
  const std::size_t r = l.rank();
  const auto gens = groups::generating_set(g);
  exactalg::IntMatrix stack(gens.size() * r, r);
  for (std::size_t t = 0; t < gens.size(); ++t)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) stack(t * r + i, j) = l.action(gens[t])(i, j) - (i == j ? 1 : 0);
  exactalg::IntLattice fixed = gens.empty() ? exactalg::IntLattice(exactalg::IntMatrix::identity(r).row_list(), r) : exactalg::integer_kernel(stack);
  exactalg::IntMatrix norm(r, r);
  for (Element x = 0; x < g.order(); ++x)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) norm(i, j) += l.action(x)(i, j);
  std::vector<BigVec> images;
  for (std::size_t j = 0; j < r; ++j) images.push_back(norm.column(j));
  return exactalg::IntSubquotient(std::move(fixed), images).structure();
}

enum class Route { Direct, Shifted };

inline std::string to_string(Route r) { return r == Route::Direct ? "direct" : "shifted"; }

struct LatticeCohomology {
  Route route = Route::Direct;
  exactalg::AbelianStructure structure;
  /// Present for the direct route.
  std::shared_ptr<const DirectH2> direct;
};

inline bool within_direct_budget(const GLattice& l, const LatticeOptions& opts) {
  const std::size_t n = l.group().order();
  return opts.slow || n * n * l.rank() <= opts.direct_budget;
}

inline LatticeCohomology h2_lattice_direct(const GLattice& l, const LatticeOptions& opts = {}) {
  if (!within_direct_budget(l, opts)) {
    const std::size_t n = l.group().order();
    std::string msg = "h2_lattice: |G|^2 * rank = " + std::to_string(n * n * l.rank()) + " exceeds direct-solve budget " + std::to_string(opts.direct_budget);
    if (l.kind() == LatticeKind::StandardKernel) msg += "; use the shifted route";
    throw BudgetExceeded(msg);
  }
  auto d = std::make_shared<const DirectH2>(l);
  return {Route::Direct, d->structure(), d};
}

/// Dimension shifting for the standard kernel lattice M: 0 -> M -> Z[G x G] -> Z[G] -> Z -> 0 with the middle
/// terms free over every subgroup, so H^2(G, M) ~ H^0^(G, Z) = Z/|G| and restriction to A is Z/|G| -> Z/|A|.
inline LatticeCohomology h2_lattice_shifted(const CayleyGroup& g) {
  LatticeCohomology out;
  out.route = Route::Shifted;
  out.structure = exactalg::structure_from_factors({BigInt(g.order())});
  out.structure.generators = std::vector<BigVec>(out.structure.invariant_factors.size(), BigVec{1});
  out.structure.ambient = exactalg::Ambient::mod_m(BigInt(g.order()), 1);
  return out;
}

/// Direct solve within budget; otherwise the shifted route for the standard kernel lattice; otherwise BudgetExceeded.
inline LatticeCohomology h2_lattice(const GLattice& l, const LatticeOptions& opts = {}) {
  if (within_direct_budget(l, opts) || l.kind() != LatticeKind::StandardKernel) return h2_lattice_direct(l, opts);
  return h2_lattice_shifted(l.group());
}

/// ker(Z/|G| -> prod Z/|A|) over bicyclic A: generated by L mod |G|, L = lcm of the bicyclic orders.
inline exactalg::AbelianStructure standard_obstruction(const CayleyGroup& g) {
  std::size_t l = 1;
  for (const auto& a : groups::bicyclic_subgroups(g)) l = std::lcm(l, a.order());
  exactalg::AbelianStructure s = exactalg::structure_from_factors({BigInt(g.order() / l)});
  s.ambient = exactalg::Ambient::mod_m(BigInt(g.order()), 1);
  if (!s.is_trivial()) s.generators = std::vector<BigVec>{{BigInt(l % g.order())}};
  return s;
}

/// Kernel of H^2(G, L) -> prod_A H^2(A, L) over the given subgroups, from a direct solve.
inline exactalg::AbelianStructure lattice_restriction_kernel(const DirectH2& h, const std::vector<groups::Subgroup>& family) {
  const auto& sys = h.system();
  const auto& gens = h.generators();
  const auto& fac = h.factors();
  const std::size_t k = gens.size();
  // images of the generators in the product of the subgroups' H^2, with the target orders
  std::vector<BigVec> phi(k);
  std::vector<BigInt> orders;
  for (const auto& a : family) {
    if (a.order() == 1) continue;
    DirectH2 ha(sys.lattice().restricted(a));
    if (ha.factors().empty()) continue;
    const auto& asys = ha.system();
    const auto& el = a.elements();
    for (std::size_t i = 0; i < k; ++i) {
      BigVec za(asys.unknowns());
      for (Element x = 0; x < a.order(); ++x) {
        if (x == asys.group().identity()) continue;
        for (std::size_t s = 0; s < asys.generators().size(); ++s) {
          const auto v = sys.value(el[x], el[asys.generators()[s]], gens[i]);
          for (std::size_t c = 0; c < v.size(); ++c) za[asys.unknown(x, s) + c] = v[c];
        }
      }
      const auto c = ha.coordinates(za);
      phi[i].insert(phi[i].end(), c.begin(), c.end());
    }
    orders.insert(orders.end(), ha.factors().begin(), ha.factors().end());
  }
  // y with sum_i y_i phi_i = 0 in prod Z/orders: kernel of [phi^T | diag(orders)], projected to y
  const std::size_t t = orders.size();
  std::vector<BigVec> ygens;
  if (t == 0) {
    for (std::size_t i = 0; i < k; ++i) {
      BigVec e(k);
      e[i] = 1;
      ygens.push_back(std::move(e));
    }
  } else {
    exactalg::IntMatrix m(t, k + t);
    for (std::size_t j = 0; j < t; ++j) {
      for (std::size_t i = 0; i < k; ++i) m(j, i) = phi[i][j];
      m(j, k + j) = orders[j];
    }
    const auto kern = exactalg::integer_kernel(m);
    for (const auto& v : kern.basis()) ygens.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
  }
  std::vector<BigVec> rel;
  for (std::size_t i = 0; i < k; ++i) {
    BigVec e(k);
    e[i] = fac[i];
    rel.push_back(std::move(e));
  }
  return exactalg::IntSubquotient(exactalg::IntLattice(std::move(ygens), k), rel).structure();
}

struct MultiplicativeKernel {
  /// The k* summand: restriction kernel of H^2(G, Q/Z).
  exactalg::AbelianStructure brauer_part;
  /// The lattice summand: restriction kernel of H^2(G, L).
  exactalg::AbelianStructure lattice_part;
  exactalg::AbelianStructure total;
  Route route = Route::Direct;
};

/// ker[H^2(G, k* + L) -> prod_A H^2(A, k* + L)] over bicyclic A, with k* modelled by Q/Z.
inline MultiplicativeKernel multiplicative_kernel(const GLattice& l, const LatticeOptions& opts = {}, const cohomology::CohomologyOptions& copts = {}) {
  const auto& g = l.group();
  MultiplicativeKernel out;
  out.brauer_part = cohomology::b0(g, cohomology::Family::Bicyclic, copts).structure();
  out.brauer_part.generators.reset();
  const auto h = h2_lattice(l, opts);
  out.route = h.route;
  if (h.route == Route::Direct) {
    out.lattice_part = lattice_restriction_kernel(*h.direct, groups::bicyclic_subgroups(g));
  } else {
    out.lattice_part = standard_obstruction(g);
  }
  std::vector<BigInt> all = out.brauer_part.invariant_factors;
  all.insert(all.end(), out.lattice_part.invariant_factors.begin(), out.lattice_part.invariant_factors.end());
  out.total = exactalg::structure_from_factors(all);
  return out;
}

}  // namespace brunr::lattices
