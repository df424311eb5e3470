#include <brunr/groups.hpp>
#include <brunr/lattices.hpp>

#include <gtest/gtest.h>

using namespace brunr;
using namespace brunr::lattices;
using exactalg::IntMatrix;

namespace {

std::string str(const exactalg::AbelianStructure& s) { return s.to_string(); }

// Oracle: all normalized cochains f(g, h), g, h != e, and every triple (no generating-set reduction).
exactalg::AbelianStructure naive_h2(const GLattice& l) {
  const auto& g = l.group();
  const std::size_t n = g.order(), r = l.rank();
  const Element e = g.identity();
  std::vector<std::size_t> slot(n, n);
  std::size_t k = 0;
  for (Element x = 0; x < n; ++x)
    if (x != e) slot[x] = k++;
  const std::size_t v = k * k * r;
  auto col = [&](Element a, Element b) -> std::ptrdiff_t {
    return (a == e || b == e) ? -1 : static_cast<std::ptrdiff_t>((slot[a] * k + slot[b]) * r);
  };
  std::vector<std::vector<BigInt>> rows;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        for (std::size_t i = 0; i < r; ++i) {
          std::vector<BigInt> row(v);
          // a.f(b,c) - f(ab,c) + f(a,bc) - f(a,b)
          if (auto t = col(b, c); t >= 0)
            for (std::size_t j = 0; j < r; ++j) row[static_cast<std::size_t>(t) + j] += l.action(a)(i, j);
          if (auto t = col(g.mul(a, b), c); t >= 0) row[static_cast<std::size_t>(t) + i] -= 1;
          if (auto t = col(a, g.mul(b, c)); t >= 0) row[static_cast<std::size_t>(t) + i] += 1;
          if (auto t = col(a, b); t >= 0) row[static_cast<std::size_t>(t) + i] -= 1;
          if (std::any_of(row.begin(), row.end(), [](const BigInt& x) { return x != 0; })) rows.push_back(row);
        }
  exactalg::IntLattice z = [&] {
    if (rows.empty()) return exactalg::IntLattice(IntMatrix::identity(v).row_list(), v);
    IntMatrix m(rows.size(), v);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < v; ++j) m(i, j) = rows[i][j];
    return exactalg::integer_kernel(m);
  }();
  std::vector<std::vector<BigInt>> cob;
  for (Element x = 0; x < n; ++x) {
    if (x == e) continue;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<std::vector<BigInt>> c(n, std::vector<BigInt>(r));
      c[x][i] = 1;
      std::vector<BigInt> d(v);
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
          auto t = col(a, b);
          if (t < 0) continue;
          auto ac = l.action(a).apply(c[b]);
          for (std::size_t j = 0; j < r; ++j) d[static_cast<std::size_t>(t) + j] = ac[j] - c[g.mul(a, b)][j] + c[a][j];
        }
      cob.push_back(d);
    }
  }
  return exactalg::IntSubquotient(z, cob).structure();
}

GLattice sign_lattice(const groups::CayleyGroup& z2) {
  return GLattice(z2, {IntMatrix{{1}}, IntMatrix{{-1}}});
}

}  // namespace

TEST(GLattice, Constructions) {
  auto z2 = groups::cyclic(2);
  auto reg = regular_lattice(z2);
  EXPECT_EQ(reg.rank(), 2u);
  EXPECT_EQ(reg.action(1), (IntMatrix{{0, 1}, {1, 0}}));
  auto pair = pair_lattice(z2);
  EXPECT_EQ(pair.rank(), 4u);
  // diagonal action on pairs is fixed-point free
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(pair.action(1)(j, j), 0);
  auto t = groups::cyclic(1);
  EXPECT_EQ(regular_lattice(t).action(0), IntMatrix::identity(1));
  EXPECT_EQ(pair_lattice(t).action(0), IntMatrix::identity(1));
}

TEST(GLattice, Validation) {
  auto z2 = groups::cyclic(2);
  EXPECT_THROW(GLattice(z2, {IntMatrix{{1}}, IntMatrix{{2}}}), InvalidLattice);
  EXPECT_THROW(GLattice(z2, {IntMatrix{{-1}}, IntMatrix{{-1}}}), InvalidLattice);
  EXPECT_THROW(GLattice(z2, {IntMatrix{{1}}}), InvalidLattice);
  // a matrix of order 3 for an element of order 2
  EXPECT_THROW(GLattice(z2, {IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{0, -1}, {1, -1}}}), InvalidLattice);
  EXPECT_NO_THROW(sign_lattice(z2));
}

TEST(StandardKernel, Ranks) {
  EXPECT_EQ(standard_kernel_lattice(groups::cyclic(2)).rank(), 3u);
  EXPECT_EQ(standard_kernel_lattice(groups::from_abelian({2, 2})).rank(), 13u);
  EXPECT_EQ(standard_kernel_lattice(groups::from_abelian({2, 2, 2})).rank(), 57u);
  EXPECT_THROW(standard_kernel_lattice(groups::symmetric(4)), BudgetExceeded);
}

// Z[G x G] -> Z[G] -> Z composes to zero, pi has rank |G| - 1, and the kernel rank is |G|^2 - |G| + 1.
TEST(StandardKernel, ExactnessAudit) {
  for (const auto& [name, g] : groups::standard_catalog()) {
    if (g.order() > 12) continue;
    const std::size_t n = g.order();
    auto pi = standard_pi(g);
    IntMatrix eps(1, n);
    for (std::size_t i = 0; i < n; ++i) eps(0, i) = 1;
    EXPECT_TRUE((eps * pi).is_zero()) << name;
    std::vector<std::vector<BigInt>> cols;
    for (std::size_t j = 0; j < n * n; ++j) cols.push_back(pi.column(j));
    EXPECT_EQ(exactalg::IntLattice(cols, n).rank(), n - 1) << name;
    EXPECT_EQ(exactalg::integer_kernel(pi).rank(), n * n - n + 1) << name;
  }
}

TEST(TateH0, Examples) {
  for (std::size_t n : {2, 3, 4, 6}) EXPECT_EQ(str(tate_h0(trivial_lattice(groups::cyclic(n)))), "Z/" + std::to_string(n));
  EXPECT_EQ(str(tate_h0(trivial_lattice(groups::symmetric(3)))), "Z/6");
  EXPECT_TRUE(tate_h0(regular_lattice(groups::symmetric(3))).is_trivial());
  EXPECT_TRUE(tate_h0(regular_lattice(groups::cyclic(4))).is_trivial());
  EXPECT_TRUE(tate_h0(sign_lattice(groups::cyclic(2))).is_trivial());
  EXPECT_TRUE(tate_h0(augmentation_lattice(groups::cyclic(2))).is_trivial());
}

TEST(H2Lattice, Examples) {
  EXPECT_EQ(str(h2_lattice(trivial_lattice(groups::cyclic(2))).structure), "Z/2");
  EXPECT_TRUE(h2_lattice(regular_lattice(groups::cyclic(3))).structure.is_trivial());
  auto k4 = groups::from_abelian({2, 2});
  auto h = h2_lattice(standard_kernel_lattice(k4));
  EXPECT_EQ(h.route, Route::Direct);
  EXPECT_EQ(str(h.structure), "Z/4");
  EXPECT_EQ(str(h2_lattice_shifted(k4).structure), "Z/4");
  // H^2(G, Z) ~ Hom(G, Q/Z)
  EXPECT_EQ(str(h2_lattice(trivial_lattice(k4)).structure), "Z/2 x Z/2");
  EXPECT_EQ(str(h2_lattice(trivial_lattice(groups::symmetric(3))).structure), "Z/2");
}

TEST(H2Lattice, BudgetAndRouting) {
  auto g8 = groups::from_abelian({2, 2, 2});
  auto m = standard_kernel_lattice(g8);
  EXPECT_THROW(h2_lattice_direct(m), BudgetExceeded);
  auto h = h2_lattice(m);
  EXPECT_EQ(h.route, Route::Shifted);
  EXPECT_EQ(str(h.structure), "Z/8");
  EXPECT_THROW(h2_lattice(regular_lattice(groups::dihedral(12))), BudgetExceeded);
}

TEST(H2Lattice, RepresentativesAreCocycles) {
  for (auto l : {trivial_lattice(groups::from_abelian({2, 2})), standard_kernel_lattice(groups::cyclic(3)), sign_lattice(groups::cyclic(2)),
                 augmentation_lattice(groups::cyclic(4))}) {
    auto h = h2_lattice_direct(l);
    const auto& g = l.group();
    for (const auto& f : h.direct->representatives())
      for (Element a = 0; a < g.order(); ++a)
        for (Element b = 0; b < g.order(); ++b)
          for (Element c = 0; c < g.order(); ++c) {
            auto af = l.action(a).apply(f[b][c]);
            for (std::size_t i = 0; i < l.rank(); ++i) ASSERT_EQ(af[i] - f[g.mul(a, b)][c][i] + f[a][g.mul(b, c)][i] - f[a][b][i], 0);
          }
  }
}

// Against the full bar system, and against periodicity H^2 = H^0^ for cyclic groups.
TEST(H2Lattice, AgreesWithOracles) {
  std::vector<GLattice> ls;
  for (std::size_t n : {2, 3, 4}) {
    auto g = groups::cyclic(n);
    ls.push_back(trivial_lattice(g));
    ls.push_back(regular_lattice(g));
    ls.push_back(augmentation_lattice(g));
    ls.push_back(standard_kernel_lattice(g));
  }
  ls.push_back(sign_lattice(groups::cyclic(2)));
  ls.push_back(trivial_lattice(groups::from_abelian({2, 2})));
  ls.push_back(augmentation_lattice(groups::from_abelian({2, 2})));
  ls.push_back(augmentation_lattice(groups::symmetric(3)));
  for (const auto& l : ls) {
    const auto direct = h2_lattice_direct(l).structure;
    if (l.group().order() * l.group().order() * l.rank() <= 400)
      EXPECT_TRUE(direct.isomorphic_to(naive_h2(l))) << to_string(l.kind()) << " |G|=" << l.group().order();
    if (groups::is_cyclic(l.group())) EXPECT_TRUE(direct.isomorphic_to(tate_h0(l))) << to_string(l.kind()) << " |G|=" << l.group().order();
  }
}

TEST(H2Lattice, ShiftedAgreesWithDirect) {
  for (auto g : {groups::cyclic(2), groups::cyclic(3), groups::from_abelian({2, 2})}) {
    auto d = h2_lattice_direct(standard_kernel_lattice(g)).structure;
    EXPECT_TRUE(d.isomorphic_to(h2_lattice_shifted(g).structure));
    EXPECT_EQ(d.order(), g.order());
  }
}

TEST(StandardObstruction, Examples) {
  auto g8 = standard_obstruction(groups::from_abelian({2, 2, 2}));
  EXPECT_EQ(str(g8), "Z/2");
  EXPECT_EQ(g8.generators->at(0).at(0), 4);
  EXPECT_TRUE(standard_obstruction(groups::from_abelian({2, 2})).is_trivial());
  EXPECT_EQ(str(standard_obstruction(groups::symmetric(4))), "Z/2");
}

TEST(StandardObstruction, SylowCriterion) {
  for (const auto& [name, g] : groups::standard_catalog())
    EXPECT_EQ(!standard_obstruction(g).is_trivial(), !groups::all_sylow_bicyclic(g)) << name;
}

TEST(MultiplicativeKernel, Examples) {
  auto z2 = groups::cyclic(2);
  for (auto l : {trivial_lattice(z2), regular_lattice(z2), pair_lattice(z2), standard_kernel_lattice(z2), sign_lattice(z2)})
    EXPECT_TRUE(multiplicative_kernel(l).total.is_trivial());
  for (std::size_t n : {3, 4, 5})
    for (auto l : {trivial_lattice(groups::cyclic(n)), standard_kernel_lattice(groups::cyclic(n)), augmentation_lattice(groups::cyclic(n))})
      EXPECT_TRUE(multiplicative_kernel(l).total.is_trivial()) << n;
  auto k4 = groups::from_abelian({2, 2});
  auto mk = multiplicative_kernel(standard_kernel_lattice(k4));
  EXPECT_EQ(mk.route, Route::Direct);
  EXPECT_TRUE(mk.total.is_trivial());
  auto m8 = multiplicative_kernel(standard_kernel_lattice(groups::from_abelian({2, 2, 2})));
  EXPECT_EQ(m8.route, Route::Shifted);
  EXPECT_EQ(str(m8.total), "Z/2");
}

// Direct restriction kernels see what the subgroup family misses: with only the cyclic subgroups of (Z/2)^2,
// the standard lattice keeps the part of Z/4 that dies on every Z/2.
TEST(MultiplicativeKernel, PartialFamily) {
  auto k4 = groups::from_abelian({2, 2});
  auto h = h2_lattice_direct(standard_kernel_lattice(k4));
  std::vector<groups::Subgroup> cyc;
  for (const auto& a : groups::bicyclic_subgroups(k4))
    if (a.order() < 4) cyc.push_back(a);
  EXPECT_EQ(str(lattice_restriction_kernel(*h.direct, cyc)), "Z/2");
  EXPECT_TRUE(lattice_restriction_kernel(*h.direct, {groups::whole_group(k4)}).is_trivial());
}
