#include <brunr/class2.hpp>
#include <brunr/cohomology.hpp>
#include <brunr/groups.hpp>

#include <gtest/gtest.h>

using namespace brunr;
using namespace brunr::cohomology;
using groups::CayleyGroup;
using groups::Element;

namespace {

// Oracle: the full normalized bar-resolution system, unknowns f(g, h) for g, h != e, one equation per triple.
struct NaiveH2 {
  exactalg::AbelianStructure h2_mod;
  exactalg::AbelianStructure h2_qz;
  exactalg::AbelianStructure b0;  // classes whose cocycles are symmetric on every commuting pair
};

NaiveH2 naive(const CayleyGroup& g, std::int64_t m) {
  const std::size_t n = g.order();
  const Element e = g.identity();
  std::vector<std::size_t> slot(n, n);
  std::size_t k = 0;
  for (Element x = 0; x < n; ++x)
    if (x != e) slot[x] = k++;
  const std::size_t u = k * k;
  auto var = [&](Element a, Element b) -> std::ptrdiff_t { return (a == e || b == e) ? -1 : static_cast<std::ptrdiff_t>(slot[a] * k + slot[b]); };
  std::vector<Vec> eqs;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        Vec r(u, 0);
        auto add = [&](std::ptrdiff_t v, std::int64_t s) {
          if (v >= 0) r[static_cast<std::size_t>(v)] += s;
        };
        add(var(a, b), 1);
        add(var(g.mul(a, b), c), 1);
        add(var(b, c), -1);
        add(var(a, g.mul(b, c)), -1);
        if (std::any_of(r.begin(), r.end(), [](std::int64_t x) { return x != 0; })) eqs.push_back(r);
      }
  auto kernel = [&](const std::vector<Vec>& rows) {
    if (rows.empty()) return exactalg::howell_form(exactalg::ModMatrix<std::int64_t>::identity(m, u));
    return exactalg::kernel_mod(exactalg::ModMatrix<std::int64_t>(m, rows));
  };
  const auto z = kernel(eqs);
  std::vector<Vec> cob, conn;
  for (Element x = 0; x < n; ++x) {
    if (x == e) continue;
    Vec c(n, 0);
    c[x] = 1;
    Vec d(u, 0);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (var(a, b) >= 0) d[static_cast<std::size_t>(var(a, b))] = num::mod(c[a] + c[b] - c[g.mul(a, b)], m);
    cob.push_back(d);
  }
  // characters by brute force over all maps on a generating set is too slow; solve c(ab) = c(a) + c(b) for all pairs instead
  std::vector<Vec> hom_eqs;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      Vec r(k, 0);
      if (a != e) r[slot[a]] += 1;
      if (b != e) r[slot[b]] += 1;
      if (g.mul(a, b) != e) r[slot[g.mul(a, b)]] -= 1;
      hom_eqs.push_back(r);
    }
  if (k > 0)
    for (const auto& chi : exactalg::kernel_mod(exactalg::ModMatrix<std::int64_t>(m, hom_eqs)).rows) {
      auto val = [&](Element x) { return x == e ? std::int64_t{0} : chi[slot[x]]; };
      Vec d(u, 0);
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          if (var(a, b) >= 0) d[static_cast<std::size_t>(var(a, b))] = num::mod((val(a) + val(b) - val(g.mul(a, b))) / m, m);
      conn.push_back(d);
    }
  std::vector<Vec> qz = cob;
  qz.insert(qz.end(), conn.begin(), conn.end());
  NaiveH2 out;
  out.h2_mod = exactalg::ModSubquotient<std::int64_t>(z, cob).structure();
  out.h2_qz = exactalg::ModSubquotient<std::int64_t>(z, qz).structure();
  auto sym = eqs;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (g.commute(a, b) && var(a, b) >= 0 && a != b) {
        Vec r(u, 0);
        r[static_cast<std::size_t>(var(a, b))] += 1;
        r[static_cast<std::size_t>(var(b, a))] -= 1;
        sym.push_back(r);
      }
  out.b0 = exactalg::ModSubquotient<std::int64_t>(kernel(sym), qz).structure();
  return out;
}

std::string str(const exactalg::AbelianStructure& s) { return s.to_string(); }

// b0 through the commuting-pair criterion, in the reduced coordinates (no subgroup restriction machinery).
exactalg::AbelianStructure b0_commuting_pairs(const CayleyGroup& g) {
  const std::int64_t m = static_cast<std::int64_t>(g.order());
  CocycleSystem sys(g);
  auto rows = sys.equations();
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = a + 1; b < g.order(); ++b)
      if (g.commute(a, b)) {
        Vec r(sys.unknowns());
        auto va = sys.value_vector(a, b), vb = sys.value_vector(b, a);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = num::mod(va[i] - vb[i], m);
        rows.push_back(r);
      }
  for (auto& r : rows)
    for (auto& v : r) v = num::mod(v, m);
  auto k = exactalg::kernel_mod(exactalg::ModMatrix<std::int64_t>(m, rows));
  return exactalg::ModSubquotient<std::int64_t>(k, qz_relations(sys, m)).structure();
}

}  // namespace

TEST(H2Mod, Examples) {
  EXPECT_EQ(str(h2_trivial_mod(groups::cyclic(2), 2).structure()), "Z/2");
  EXPECT_EQ(str(h2_trivial_mod(groups::cyclic(3), 2).structure()), "0");
  EXPECT_EQ(str(h2_trivial_mod(groups::cyclic(1), 5).structure()), "0");
  EXPECT_EQ(str(h2_trivial_mod(groups::cyclic(4), 6).structure()), "Z/2");
  EXPECT_THROW(h2_trivial_mod(groups::cyclic(2), 1), Error);
  CohomologyOptions tight;
  tight.max_order_h2 = 4;
  EXPECT_THROW(h2_trivial_mod(groups::cyclic(6), 2, tight), BudgetExceeded);
  tight.slow = true;
  EXPECT_NO_THROW(h2_trivial_mod(groups::cyclic(6), 2, tight));
}

TEST(H2QZ, Examples) {
  for (std::size_t n = 1; n <= 16; ++n) EXPECT_TRUE(h2_qz(groups::cyclic(n)).is_trivial()) << n;
  EXPECT_EQ(str(h2_qz(groups::from_abelian({2, 2})).structure()), "Z/2");
  EXPECT_EQ(str(h2_qz(groups::quaternion8()).structure()), "0");
  // Schur multipliers
  EXPECT_EQ(str(h2_qz(groups::dihedral(4)).structure()), "Z/2");
  EXPECT_EQ(str(h2_qz(groups::symmetric(3)).structure()), "0");
  EXPECT_EQ(str(h2_qz(groups::symmetric(4)).structure()), "Z/2");
  EXPECT_EQ(str(h2_qz(groups::alternating4()).structure()), "Z/2");
  EXPECT_EQ(str(h2_qz(groups::from_abelian({2, 4})).structure()), "Z/2");
  EXPECT_EQ(str(h2_qz(groups::from_abelian({6, 6})).structure()), "Z/6");
  EXPECT_EQ(str(h2_qz(groups::heisenberg(3)).structure()), "Z/3 x Z/3");
}

TEST(H2, AgreesWithFullBarSystem) {
  for (const auto& [name, g] : groups::standard_catalog()) {
    if (g.order() > 12) continue;
    const std::int64_t n = static_cast<std::int64_t>(g.order());
    const std::int64_t m = std::max<std::int64_t>(n, 2);
    auto nv = naive(g, m);
    EXPECT_TRUE(nv.h2_mod.isomorphic_to(h2_trivial_mod(g, m).structure())) << name;
    EXPECT_TRUE(nv.h2_qz.isomorphic_to(h2_qz(g).structure())) << name;
    EXPECT_TRUE(nv.b0.isomorphic_to(b0(g).structure())) << name;
    for (std::int64_t q : {2, 3}) EXPECT_TRUE(naive(g, q).h2_mod.isomorphic_to(h2_trivial_mod(g, q).structure())) << name << " mod " << q;
  }
}

TEST(H2, RepresentativesAreCocyclesAndTorsion) {
  for (const auto& [name, g] : groups::standard_catalog()) {
    if (g.order() > 27) continue;
    auto h = h2_qz(g);
    for (const auto& f : h.factors()) EXPECT_EQ(static_cast<std::int64_t>(g.order()) % f, 0) << name;
    auto reps = h.representatives();
    ASSERT_EQ(reps.size(), h.factors().size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      EXPECT_TRUE(is_normalized_cocycle(g, reps[i], h.modulus_context())) << name;
      // the i-th representative has coordinate 1 on factor i and 0 elsewhere
      auto c = h.coordinates(reps[i]);
      for (std::size_t j = 0; j < c.size(); ++j) EXPECT_EQ(c[j], i == j ? 1 : 0) << name;
    }
  }
}

TEST(H2QZ, ElementaryAbelianMatchesWedge) {
  for (auto [p, d] : {std::pair<std::int64_t, std::size_t>{2, 2}, {2, 3}, {3, 2}, {2, 1}, {3, 3}}) {
    std::vector<std::size_t> inv(d, static_cast<std::size_t>(p));
    auto g = groups::from_abelian(inv);
    auto h = h2_qz(g);
    auto w = h2_abelian_via_wedge(p, d);
    EXPECT_TRUE(h.structure().isomorphic_to(w.structure)) << p << "^" << d;
    // the bilinear cocycles are independent and generate
    std::vector<Vec> coords;
    for (const auto& t : w.scaled(h.modulus_context())) {
      EXPECT_TRUE(is_normalized_cocycle(g, t, h.modulus_context()));
      coords.push_back(h.coordinates(t));
    }
    if (!coords.empty()) {
      auto span = exactalg::howell_form(coords, coords[0].size(), p);
      EXPECT_EQ(span.size(), coords.size());
    }
  }
}

TEST(Restrict, Examples) {
  auto g = groups::from_abelian({2, 2});
  auto h = h2_qz(g);
  auto rep = h.representatives().at(0);
  // diagonal subgroup {0, 3}: element 3 = (1, 1)
  groups::Subgroup diag(g, {0, 3});
  auto r = restrict_class(h, diag, rep);
  EXPECT_TRUE(std::all_of(r.coordinates.begin(), r.coordinates.end(), [](auto v) { return v == 0; }));
  groups::Subgroup triv(g, {0});
  EXPECT_TRUE(restrict_class(h, triv, rep).coordinates.empty());
  CocycleTable zero(4, Vec(4, 0));
  auto rz = restrict_class(h, groups::whole_group(g), zero);
  EXPECT_TRUE(std::all_of(rz.coordinates.begin(), rz.coordinates.end(), [](auto v) { return v == 0; }));
  // restriction to the whole group is an isomorphism onto the class group
  auto rw = restrict_class(h, groups::whole_group(g), rep);
  EXPECT_EQ(rw.coordinates, (Vec{1}));
  groups::Subgroup other(groups::from_abelian({4}), {0, 2});
  EXPECT_THROW(restrict_class(h, other, rep), NotASubgroup);
}

TEST(Restrict, IsAdditive) {
  auto g = groups::from_abelian({2, 2, 2});
  auto h = h2_qz(g);
  auto reps = h.representatives();
  const std::int64_t m = h.modulus_context();
  for (const auto& a : groups::bicyclic_subgroups(g)) {
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = 0; j < reps.size(); ++j) {
        CocycleTable sum = reps[i];
        for (std::size_t x = 0; x < sum.size(); ++x)
          for (std::size_t y = 0; y < sum.size(); ++y) sum[x][y] = (sum[x][y] + reps[j][x][y]) % m;
        auto ri = restrict_class(h, a, reps[i]), rj = restrict_class(h, a, reps[j]), rs = restrict_class(h, a, sum);
        for (std::size_t t = 0; t < rs.coordinates.size(); ++t)
          EXPECT_EQ(rs.coordinates[t], (ri.coordinates[t] + rj.coordinates[t]) % ri.target.factors()[t]);
      }
  }
}

TEST(B0, AbelianVanishes) {
  for (const auto& inv : std::vector<std::vector<std::size_t>>{{2, 2}, {2, 2, 2}, {3, 3}, {2, 4}, {2, 2, 4}, {2, 6}, {3, 3, 3}})
    EXPECT_TRUE(b0(groups::from_abelian(inv)).is_trivial());
}

TEST(B0, SmallNonabelianVanish) {
  for (auto g : {groups::dihedral(4), groups::quaternion8(), groups::symmetric(3), groups::alternating4(), groups::heisenberg(3)})
    EXPECT_TRUE(b0(g).is_trivial());
  EXPECT_TRUE(b0(groups::symmetric(4)).is_trivial());
  CohomologyOptions tight;
  EXPECT_THROW(b0(groups::dihedral(24), Family::Bicyclic, tight), BudgetExceeded);
}

TEST(B0, FamiliesAgreeAndMatchCommutingPairOracle) {
  for (const auto& [name, g] : groups::standard_catalog()) {
    if (g.order() > 32) continue;
    auto bb = b0(g, Family::Bicyclic), ba = b0(g, Family::Abelian);
    EXPECT_TRUE(bb.structure().isomorphic_to(ba.structure())) << name;
    if (g.order() > 1) EXPECT_TRUE(bb.structure().isomorphic_to(b0_commuting_pairs(g))) << name;
  }
}

// The pairing determines the obstruction: a symmetric change of cocycle gives the same b0.
TEST(B0, IndependentOfSymmetricShift) {
  const std::size_t d = 3;
  for (std::size_t mask = 0; mask < 8; ++mask) {
    exactalg::ModMatrix<std::int64_t> lam(2, 1, 3);
    for (std::size_t k = 0; k < 3; ++k) lam.set(0, k, (mask >> k) & 1);
    class2::CentralExtensionData ext(2, d, 1, lam);
    groups::SymmetricShift s{{{1, 0, 1}, {0, 1, 0}, {1, 0, 0}}};
    auto g0 = groups::from_central_extension(ext), g1 = groups::from_central_extension(ext, s);
    EXPECT_TRUE(b0(g0).structure().isomorphic_to(b0(g1).structure()));
    EXPECT_TRUE(b0(g0).structure().isomorphic_to(class2::bogomolov_class2(ext)));
  }
}

// Smaller families give larger kernels: on (Z/2)^3, H^2(-, Q/Z) = (Z/2)^3 is dual to the alternating forms;
// each Klein subgroup kills one form coordinate.
TEST(RestrictionKernel, PartialFamilies) {
  auto g = groups::from_abelian({2, 2, 2});
  std::vector<groups::Subgroup> cyclic, kleins;
  for (const auto& a : groups::bicyclic_subgroups(g)) (a.order() <= 2 ? cyclic : kleins).push_back(a);
  EXPECT_EQ(restriction_kernel(g, cyclic).structure().to_string(), "Z/2 x Z/2 x Z/2");
  EXPECT_EQ(restriction_kernel(g, {kleins[0]}).structure().to_string(), "Z/2 x Z/2");
  EXPECT_EQ(restriction_kernel(g, {kleins[0], kleins[1]}).structure().to_string(), "Z/2");
  EXPECT_TRUE(restriction_kernel(g, kleins).is_trivial());
  // on D4 the two Klein subgroups together detect the Schur multiplier, the cyclic ones do not
  auto d4 = groups::dihedral(4);
  std::vector<groups::Subgroup> small;
  for (const auto& a : groups::bicyclic_subgroups(d4))
    if (groups::is_cyclic(a)) small.push_back(a);
  EXPECT_EQ(restriction_kernel(d4, small).structure().to_string(), "Z/2");
}
