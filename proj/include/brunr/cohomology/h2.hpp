#pragma once

#include <brunr/cohomology/cocycle_system.hpp>
#include <brunr/exactalg/abelian.hpp>
#include <brunr/groups/construct.hpp>
#include <brunr/groups/subgroups.hpp>

#include <memory>
#include <string>

namespace brunr::cohomology {

struct CohomologyOptions {
  /// Largest |G| for H^2 computations (raised or ignored with `slow`).
  std::size_t max_order_h2 = 48;
  /// Largest |G| for the restriction kernel.
  std::size_t max_order_b0 = 32;
  /// Lift the order budgets entirely.
  bool slow = false;
};

namespace detail {

inline void check_budget(std::size_t order, std::size_t limit, bool slow, const char* what) {
  if (!slow && order > limit)
    throw BudgetExceeded(std::string(what) + ": |G| = " + std::to_string(order) + " exceeds budget " + std::to_string(limit) +
                         " (use the slow flag to override)");
}

}  // namespace detail

/// A group of cohomology classes Z / D for a submodule Z of reduced 2-cocycles and D <= Z.
///
/// For H^2(G, Z/m) the values are residues mod m. For the Q/Z model the same tables are read as
/// values v / m in Q/Z, with m = modulus_context.
class CocycleClassGroup {
 public:
  CocycleClassGroup(std::shared_ptr<const CocycleSystem> sys, std::int64_t m, const exactalg::HowellForm<std::int64_t>& numerator,
                    const std::vector<Vec>& denominator)
      : sys_(std::move(sys)), m_(m), q_(std::make_shared<exactalg::ModSubquotient<std::int64_t>>(numerator, denominator)) {}

  const CayleyGroup& group() const { return sys_->group(); }
  const CocycleSystem& system() const { return *sys_; }
  std::int64_t modulus_context() const { return m_; }

  exactalg::AbelianStructure structure() const { return q_->structure(); }
  const std::vector<std::int64_t>& factors() const { return q_->factors(); }
  bool is_trivial() const { return q_->factors().empty(); }

  /// One normalized cocycle table per invariant factor.
  std::vector<CocycleTable> representatives() const {
    std::vector<CocycleTable> out;
    for (const auto& g : q_->generators()) out.push_back(sys_->expand(g, m_));
    return out;
  }

  /// Coordinates of the class of a cocycle table on the cyclic factors; throws ContainmentViolation if the
  /// table is not in the numerator.
  Vec coordinates(const CocycleTable& t) const { return q_->coordinates(sys_->reduce(t, m_)); }
  Vec coordinates_reduced(std::span<const std::int64_t> z) const { return q_->coordinates(z); }
  bool is_zero_class(const CocycleTable& t) const { return q_->is_zero_class(sys_->reduce(t, m_)); }

 private:
  std::shared_ptr<const CocycleSystem> sys_;
  std::int64_t m_;
  std::shared_ptr<const exactalg::ModSubquotient<std::int64_t>> q_;
};

/// H^2(G, Z/m) = Z^2 / B^2 over normalized cochains.
inline CocycleClassGroup h2_trivial_mod(const CayleyGroup& g, std::int64_t m, const CohomologyOptions& opts = {}) {
  if (m < 2) throw Error("h2_trivial_mod: modulus must be at least 2");
  detail::check_budget(g.order(), opts.max_order_h2, opts.slow, "h2_trivial_mod");
  auto sys = std::make_shared<const CocycleSystem>(g);
  return CocycleClassGroup(sys, m, sys->cocycles(m), sys->coboundary_generators(m));
}

/// B^2(G, Z/m) plus the connecting-map images of Hom(G, Z/m).
inline std::vector<Vec> qz_relations(const CocycleSystem& sys, std::int64_t m) {
  auto rel = sys.coboundary_generators(m);
  for (const auto& chi : sys.homomorphisms(m)) rel.push_back(sys.connecting_image(chi, m));
  return rel;
}

/// H^2(G, Q/Z), modelled as H^2(G, Z/m) modulo the image of the connecting map from Hom(G, Q/Z),
/// for a modulus m that is a multiple of |G| (default |G|).
///
/// From 0 -> Z/m -> Q/Z -(x m)-> Q/Z -> 0: multiplication by m kills H^2(G, Q/Z), so
/// H^2(G, Z/m) -> H^2(G, Q/Z) is onto with kernel the connecting image of Hom(G, Q/Z) = Hom(G, Z/m).
inline CocycleClassGroup h2_qz(const CayleyGroup& g, const CohomologyOptions& opts = {}, std::int64_t modulus = 0) {
  detail::check_budget(g.order(), opts.max_order_h2, opts.slow, "h2_qz");
  const std::int64_t n = static_cast<std::int64_t>(g.order());
  const std::int64_t m = modulus == 0 ? n : modulus;
  if (m % n != 0) throw Error("h2_qz: modulus context must be a multiple of |G|");
  if (n == 1) {
    auto sys = std::make_shared<const CocycleSystem>(g);
    return CocycleClassGroup(sys, std::max<std::int64_t>(m, 2), sys->cocycles(std::max<std::int64_t>(m, 2)), {});
  }
  auto sys = std::make_shared<const CocycleSystem>(g);
  return CocycleClassGroup(sys, m, sys->cocycles(m), qz_relations(*sys, m));
}

struct RestrictedClass {
  groups::Subgroup subgroup;
  /// Table over the subgroup, indexed by local positions (subgroup.elements()[i]).
  CocycleTable table;
  /// Coordinates in the class group of the subgroup computed in the same model (same modulus context).
  Vec coordinates;
  CocycleClassGroup target;
};

/// Restricts a cocycle of `source` to A and expresses it in A's class group (same model and modulus context).
/// `qz` selects the Q/Z model (otherwise Z/m).
inline RestrictedClass restrict_class(const CocycleClassGroup& source, const groups::Subgroup& a, const CocycleTable& cls, bool qz = true) {
  if (!(a.parent() == source.group())) throw NotASubgroup("restrict_class: subgroup of a different group");
  const std::int64_t m = source.modulus_context();
  const auto& el = a.elements();
  CocycleTable t(el.size(), Vec(el.size(), 0));
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = 0; j < el.size(); ++j) t[i][j] = num::mod(cls[el[i]][el[j]], m);
  const CayleyGroup ag = a.as_group();
  auto sys = std::make_shared<const CocycleSystem>(ag);
  CocycleClassGroup target = qz ? CocycleClassGroup(sys, m, sys->cocycles(m), qz_relations(*sys, m))
                                : CocycleClassGroup(sys, m, sys->cocycles(m), sys->coboundary_generators(m));
  Vec coords = target.coordinates(t);
  return {a, std::move(t), std::move(coords), std::move(target)};
}

enum class Family { Bicyclic, Abelian };

inline std::string to_string(Family f) { return f == Family::Bicyclic ? "bicyclic" : "abelian"; }

inline std::vector<groups::Subgroup> family_subgroups(const CayleyGroup& g, Family f) {
  return f == Family::Bicyclic ? groups::bicyclic_subgroups(g) : groups::abelian_subgroups(g);
}

/// Conditions on reduced G-cocycles (mod m) whose joint kernel is the preimage of the classes
/// restricting to zero in H^2(A, Q/Z): the rows phi . Res_A for phi annihilating B^2(A) + connecting image.
inline std::vector<Vec> restriction_kernel_rows(const CocycleSystem& gsys, const groups::Subgroup& a, std::int64_t m) {
  std::vector<Vec> out;
  if (a.order() == 1) return out;
  const CocycleSystem asys(a.as_group());
  const std::size_t ua = asys.unknowns(), ug = gsys.unknowns();
  const auto& el = a.elements();

  // restriction: the A-unknown f(a, t) is the G-value f(el[a], el[t])
  std::vector<Vec> res(ua, Vec(ug, 0));
  for (Element x = 0; x < a.order(); ++x) {
    if (x == asys.group().identity()) continue;
    for (std::size_t s = 0; s < asys.generators().size(); ++s) {
      const auto v = gsys.value_vector(el[x], el[asys.generators()[s]]);
      auto& r = res[asys.unknown(x, s)];
      for (std::size_t i = 0; i < ug; ++i) r[i] = num::mod(v[i], m);
    }
  }

  const auto w = qz_relations(asys, m);
  exactalg::HowellForm<std::int64_t> perp =
      w.empty() ? exactalg::howell_form(exactalg::ModMatrix<std::int64_t>::identity(m, ua)) : exactalg::kernel_mod(exactalg::ModMatrix<std::int64_t>(m, w));
  // phi that kill all of Z^2(A) impose nothing
  const auto za = asys.cocycles(m);
  for (const auto& phi : perp.rows) {
    bool vacuous = true;
    for (const auto& z : za.rows) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < ua; ++k) acc = (acc + num::mulmod(phi[k], z[k], m)) % m;
      if (acc != 0) {
        vacuous = false;
        break;
      }
    }
    if (vacuous) continue;
    Vec row(ug, 0);
    for (std::size_t k = 0; k < ua; ++k) {
      if (phi[k] == 0) continue;
      for (std::size_t i = 0; i < ug; ++i) row[i] = (row[i] + num::mulmod(phi[k], res[k][i], m)) % m;
    }
    out.push_back(std::move(row));
  }
  return out;
}

/// The kernel of H^2(G, Q/Z) -> prod_A H^2(A, Q/Z) over an explicit list of subgroups (no budget check).
inline CocycleClassGroup restriction_kernel(const CayleyGroup& g, const std::vector<groups::Subgroup>& family) {
  const std::int64_t m = static_cast<std::int64_t>(std::max<std::size_t>(g.order(), 2));
  auto sys = std::make_shared<const CocycleSystem>(g);
  if (sys->unknowns() == 0) return CocycleClassGroup(sys, m, exactalg::howell_form(std::vector<Vec>{}, 0, m), {});
  std::vector<Vec> rows = sys->equations();
  for (auto& r : rows)
    for (auto& v : r) v = num::mod(v, m);
  for (const auto& a : family) {
    if (!(a.parent() == g)) throw NotASubgroup("restriction_kernel: subgroup of a different group");
    for (auto& r : restriction_kernel_rows(*sys, a, m)) rows.push_back(std::move(r));
  }
  auto k = rows.empty() ? exactalg::howell_form(exactalg::ModMatrix<std::int64_t>::identity(m, sys->unknowns()))
                        : exactalg::kernel_mod(exactalg::ModMatrix<std::int64_t>(m, rows));
  // B^2 + connecting image lies in every restriction kernel; ModSubquotient re-checks the containment
  return CocycleClassGroup(sys, m, k, qz_relations(*sys, m));
}

/// The Bogomolov obstruction: the restriction kernel over all bicyclic (or all abelian) subgroups.
inline CocycleClassGroup b0(const CayleyGroup& g, Family family = Family::Bicyclic, const CohomologyOptions& opts = {}) {
  detail::check_budget(g.order(), opts.max_order_b0, opts.slow, "b0");
  return restriction_kernel(g, family_subgroups(g, family));
}

/// H^2((Z/p)^d, Q/Z) ~ Hom(Lambda^2, Q/Z) ~ (Z/p)^{d(d-1)/2}, with the bilinear cocycles
/// chi_ij(x, y) = x_i y_j (i < j) as representatives (values in Z/p, read as v/p in Q/Z).
struct WedgeH2 {
  std::int64_t p;
  std::size_t d;
  exactalg::AbelianStructure structure;
  /// Group elements are numbered as in groups::from_abelian({p, ..., p}).
  std::vector<CocycleTable> representatives;
  /// The representatives rescaled to a modulus context m (a multiple of p).
  std::vector<CocycleTable> scaled(std::int64_t m) const {
    auto out = representatives;
    for (auto& t : out)
      for (auto& r : t)
        for (auto& v : r) v = v * (m / p) % m;
    return out;
  }
};

inline WedgeH2 h2_abelian_via_wedge(std::int64_t p, std::size_t d) {
  if (!num::is_prime(p)) throw Error("h2_abelian_via_wedge: p must be prime");
  WedgeH2 out{p, d, {}, {}};
  out.structure.invariant_factors.assign(d * (d - 1) / 2, BigInt(p));
  const std::size_t n = static_cast<std::size_t>(num::ipow(p, static_cast<int>(d)));
  const std::vector<std::size_t> rad(d, static_cast<std::size_t>(p));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      CocycleTable t(n, Vec(n, 0));
      for (std::size_t x = 0; x < n; ++x) {
        const auto dx = groups::mixed_radix_digits(x, rad);
        for (std::size_t y = 0; y < n; ++y) t[x][y] = static_cast<std::int64_t>(dx[i] * groups::mixed_radix_digits(y, rad)[j]) % p;
      }
      out.representatives.push_back(std::move(t));
    }
  return out;
}

}  // namespace brunr::cohomology
