#include <brunr/groups.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace brunr;
using namespace brunr::groups;
using exactalg::ModMatrix;

namespace {

// Every subgroup, by closing the trivial group under one extra element at a time.
std::set<std::vector<Element>> all_subgroups(const CayleyGroup& g) {
  std::set<std::vector<Element>> found{{g.identity()}};
  std::vector<std::vector<Element>> queue{{g.identity()}};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Element x = 0; x < g.order(); ++x) {
      auto gens = queue[i];
      gens.push_back(x);
      auto c = closure(g, gens);
      if (found.insert(c).second) queue.push_back(c);
    }
  return found;
}

// Independent check: does some pair of elements of the (abelian) set generate it?
bool two_generated_abelian(const CayleyGroup& g, const std::vector<Element>& h) {
  for (Element a : h)
    for (Element b : h)
      if (!g.commute(a, b)) return false;
  for (Element a : h)
    for (Element b : h) {
      const Element gens[2] = {a, b};
      if (closure(g, gens).size() == h.size()) return true;
    }
  return false;
}

std::size_t exponent(const CayleyGroup& g) {
  std::size_t e = 1;
  for (auto o : g.element_orders()) e = std::lcm(e, o);
  return e;
}

}  // namespace

TEST(CayleyTable, Examples) {
  auto t = CayleyGroup::from_table({{0}});
  EXPECT_EQ(t.order(), 1u);
  auto z2 = CayleyGroup::from_table({{0, 1}, {1, 0}});
  EXPECT_EQ(z2.element_orders(), (std::vector<std::size_t>{1, 2}));
  EXPECT_THROW(CayleyGroup::from_table({{0, 1}, {0, 1}}), NotAGroup);
}

TEST(CayleyTable, RejectsNonAssociativeLatinSquare) {
  // a loop of order 5 with identity 0 that is not associative
  std::vector<std::vector<std::size_t>> t = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    CayleyGroup::from_table(t);
    FAIL() << "expected NotAGroup";
  } catch (const NotAGroup& e) {
    EXPECT_NE(std::string(e.what()).find("associativity"), std::string::npos);
  }
}

TEST(Permutations, Examples) {
  EXPECT_EQ(from_permutations(3, {{1, 2, 0}, {1, 0, 2}}).order(), 6u);
  auto klein = from_permutations(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
  EXPECT_EQ(klein.order(), 4u);
  for (auto o : klein.element_orders()) EXPECT_LE(o, 2u);
  EXPECT_EQ(from_permutations(1, {}).order(), 1u);
  EXPECT_THROW(from_permutations(3, {{0, 0, 1}}), InvalidPermutation);
  EXPECT_THROW(from_permutations(3, {{0, 1}}), InvalidPermutation);
  GroupOptions small;
  small.order_bound = 10;
  EXPECT_THROW(from_permutations(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}, small), OrderBoundExceeded);
}

TEST(Abelian, Examples) {
  auto k = from_abelian({2, 2});
  EXPECT_EQ(k.order(), 4u);
  EXPECT_FALSE(is_cyclic(k));
  auto c4 = from_abelian({4});
  EXPECT_EQ(std::count(c4.element_orders().begin(), c4.element_orders().end(), 4u), 2);
  EXPECT_TRUE(is_cyclic(c4));
  auto g = from_abelian({2, 4});
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(exponent(g), 4u);
  EXPECT_FALSE(is_cyclic(g));
  EXPECT_THROW(from_abelian({1}), Error);
}

TEST(Catalog, Orders) {
  EXPECT_EQ(symmetric(4).order(), 24u);
  EXPECT_EQ(alternating4().order(), 12u);
  EXPECT_EQ(dihedral(4).order(), 8u);
  EXPECT_EQ(quaternion8().order(), 8u);
  EXPECT_EQ(heisenberg(3).order(), 27u);
  // Q8 has a unique involution
  auto q = quaternion8();
  EXPECT_EQ(std::count(q.element_orders().begin(), q.element_orders().end(), 2u), 1);
  EXPECT_FALSE(is_abelian(q));
  EXPECT_GE(standard_catalog().size(), 12u);
}

TEST(CentralExtension, Heisenberg) {
  auto h = heisenberg(3);
  EXPECT_FALSE(is_abelian(h));
  EXPECT_EQ(exponent(h), 3u);
  // commutator of the two generating lifts is the central generator
  class2::CentralExtensionData ext(3, 2, 1, ModMatrix<std::int64_t>(3, {{1}}));
  const std::size_t c0[1] = {0}, c1[1] = {1}, e1[2] = {1, 0}, e2[2] = {0, 1};
  const Element a = central_extension_element(ext, c0, e1), b = central_extension_element(ext, c0, e2);
  EXPECT_EQ(h.commutator(a, b), central_extension_element(ext, c1, std::vector<std::size_t>{0, 0}));
}

TEST(CentralExtension, ZeroPairingIsAbelian) {
  for (std::int64_t p : {2, 3})
    EXPECT_TRUE(is_abelian(from_central_extension(class2::CentralExtensionData::zero(p, 2, 1))));
}

// [g1, g2] = lambda(gamma1 ^ gamma2), C is central, G' = image of lambda; exhaustive over p = 2, d = 3, r = 1 and 2.
TEST(CentralExtension, CommutatorMatchesPairing) {
  const std::size_t d = 3;
  for (std::size_t r = 1; r <= 2; ++r) {
    const std::size_t nl = r * class2::wedge_dim(d);
    for (std::size_t mask = 0; mask < (std::size_t{1} << nl); ++mask) {
      ModMatrix<std::int64_t> lam(2, r, class2::wedge_dim(d));
      for (std::size_t k = 0; k < nl; ++k) lam.set(k / 3, k % 3, (mask >> k) & 1);
      class2::CentralExtensionData ext(2, d, r, lam);
      auto g = from_central_extension(ext);
      const std::size_t nc = std::size_t{1} << r;
      // C is central
      auto z = center(g);
      for (Element c = 0; c < nc; ++c) EXPECT_TRUE(z.contains(c));
      // commutators
      std::set<Element> image;
      for (Element u = 0; u < g.order(); ++u)
        for (Element v = 0; v < g.order(); ++v) {
          const auto gu = mixed_radix_digits(u / nc, std::vector<std::size_t>(d, 2));
          const auto gv = mixed_radix_digits(v / nc, std::vector<std::size_t>(d, 2));
          std::vector<std::size_t> c(r, 0);
          for (std::size_t k = 0; k < r; ++k) {
            std::int64_t acc = 0;
            for (std::size_t i = 0; i < d; ++i)
              for (std::size_t j = i + 1; j < d; ++j)
                acc += lam(k, class2::wedge_index(i, j, d)) * static_cast<std::int64_t>(gu[i] * gv[j] + gu[j] * gv[i]);
            c[k] = static_cast<std::size_t>(acc % 2);
          }
          const Element expect = mixed_radix_index(c, std::vector<std::size_t>(r, 2));
          ASSERT_EQ(g.commutator(u, v), expect);
          image.insert(expect);
        }
      // commutator subgroup = span of lambda's image
      auto span = closure(g, std::vector<Element>(image.begin(), image.end()));
      EXPECT_EQ(commutator_subgroup(g).elements(), span);
    }
  }
}

TEST(CentralExtension, SymmetricShiftKeepsCommutators) {
  class2::CentralExtensionData ext(2, 2, 1, ModMatrix<std::int64_t>(2, {{1}}));
  SymmetricShift s{{{1, 0}, {0, 1}}};
  auto g0 = from_central_extension(ext), g1 = from_central_extension(ext, s);
  for (Element u = 0; u < 8; ++u)
    for (Element v = 0; v < 8; ++v) EXPECT_EQ(g0.commutator(u, v), g1.commutator(u, v));
  // D4 versus Q8: same pairing, different groups
  auto inv = [](const CayleyGroup& g) { return std::count(g.element_orders().begin(), g.element_orders().end(), 2u); };
  EXPECT_NE(inv(g0), inv(g1));
}

TEST(CentralExtension, OrderBound) {
  auto ext = class2::CentralExtensionData::zero(2, 4, 6);
  EXPECT_THROW(from_central_extension(ext), OrderBoundExceeded);
}

TEST(Bicyclic, Examples) {
  auto q = quaternion8();
  auto bq = bicyclic_subgroups(q);
  // trivial, <-1>, <i>, <j>, <k>
  EXPECT_EQ(bq.size(), 5u);
  for (const auto& s : bq) EXPECT_LT(s.order(), 8u);
  // trivial, the three lines and the whole group
  auto bk = bicyclic_subgroups(from_abelian({2, 2}));
  EXPECT_EQ(bk.size(), 5u);
  EXPECT_EQ(bk.back().order(), 4u);
  auto b8 = bicyclic_subgroups(from_abelian({2, 2, 2}));
  EXPECT_EQ(b8.back().order(), 4u);
}

TEST(Predicates, Examples) {
  EXPECT_FALSE(is_bicyclic(from_abelian({2, 2, 2})));
  EXPECT_TRUE(is_cyclic(from_abelian({6})));
  EXPECT_TRUE(is_cyclic(from_abelian({2, 3})));
  EXPECT_FALSE(is_abelian(dihedral(4)));
  EXPECT_FALSE(is_bicyclic(dihedral(4)));
  EXPECT_TRUE(is_bicyclic(from_abelian({2, 4})));
  EXPECT_TRUE(is_bicyclic(from_abelian({6, 6})));
  EXPECT_TRUE(is_bicyclic(from_abelian({2, 2, 3})));
  EXPECT_FALSE(is_bicyclic(from_abelian({3, 3, 3})));
}

TEST(Sylow, Examples) {
  EXPECT_EQ(sylow_subgroup(symmetric(3), 2).order(), 2u);
  auto p = sylow_subgroup(symmetric(4), 2);
  EXPECT_EQ(p.order(), 8u);
  EXPECT_FALSE(is_abelian(p));
  EXPECT_EQ(sylow_subgroup(from_abelian({6}), 5).order(), 1u);
  EXPECT_TRUE(all_sylow_bicyclic(symmetric(3)));
  EXPECT_TRUE(all_sylow_cyclic(symmetric(3)));
  EXPECT_FALSE(all_sylow_bicyclic(symmetric(4)));
  EXPECT_TRUE(all_sylow_bicyclic(from_abelian({2, 2})));
  EXPECT_FALSE(all_sylow_cyclic(from_abelian({2, 2})));
}

TEST(Sylow, OrderIsFullPrimePower) {
  for (const auto& [name, g] : standard_catalog())
    for (std::int64_t p : {2, 3, 5, 7}) {
      const std::size_t s = sylow_subgroup(g, p).order();
      std::size_t rest = g.order();
      while (rest % static_cast<std::size_t>(p) == 0) rest /= static_cast<std::size_t>(p);
      EXPECT_EQ(s * rest, g.order()) << name << " p=" << p;
    }
}

// Against the full subgroup lattice: the list is exactly the abelian 2-generated subgroups,
// duplicate free, closed under conjugation, and each entry validates.
TEST(Bicyclic, MatchesFullEnumeration) {
  for (const auto& [name, g] : standard_catalog()) {
    if (g.order() > 27) continue;
    std::set<std::vector<Element>> expect;
    for (const auto& h : all_subgroups(g))
      if (two_generated_abelian(g, h)) expect.insert(h);
    const auto got = bicyclic_subgroups(g);
    std::set<std::vector<Element>> got_set;
    for (const auto& s : got) {
      got_set.insert(s.elements());
      EXPECT_TRUE(is_bicyclic(s)) << name;
    }
    EXPECT_EQ(got_set.size(), got.size()) << name << ": duplicates";
    EXPECT_EQ(got_set, expect) << name;
    for (const auto& s : got)
      for (Element x = 0; x < g.order(); ++x) {
        std::vector<Element> conj;
        for (Element a : s.elements()) conj.push_back(g.conjugate(x, a));
        std::sort(conj.begin(), conj.end());
        EXPECT_TRUE(got_set.count(conj)) << name;
      }
  }
}

TEST(Bicyclic, AbelianGroupContainsItselfIffTwoFactors) {
  const std::vector<std::vector<std::size_t>> cases = {{2}, {2, 2}, {2, 4}, {3, 3}, {2, 2, 2}, {2, 2, 4}, {6, 6}, {3, 3, 3}, {2, 6}, {2, 2, 3}};
  for (const auto& inv : cases) {
    auto g = from_abelian(inv);
    const auto structure = exactalg::structure_from_factors(std::vector<BigInt>(inv.begin(), inv.end()));
    const bool two = structure.invariant_factors.size() <= 2;
    const auto list = bicyclic_subgroups(g);
    EXPECT_EQ(list.back().order() == g.order(), two);
    EXPECT_EQ(is_bicyclic(g), two);
  }
}

TEST(AbelianSubgroups, MatchesFullEnumeration) {
  for (const auto& [name, g] : standard_catalog()) {
    if (g.order() > 27) continue;
    std::set<std::vector<Element>> expect;
    for (const auto& h : all_subgroups(g)) {
      bool ab = true;
      for (Element a : h)
        for (Element b : h) ab = ab && g.commute(a, b);
      if (ab) expect.insert(h);
    }
    std::set<std::vector<Element>> got;
    for (const auto& s : abelian_subgroups(g)) got.insert(s.elements());
    EXPECT_EQ(got, expect) << name;
  }
}

TEST(Subgroup, Validation) {
  auto g = symmetric(3);
  EXPECT_THROW(Subgroup(g, {1}), NotASubgroup);
  EXPECT_NO_THROW(Subgroup(g, {0}));
  auto whole = whole_group(g);
  EXPECT_EQ(whole.as_group().order(), 6u);
  auto gens = generating_set(g);
  EXPECT_EQ(closure(g, gens).size(), 6u);
}
