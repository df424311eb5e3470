// Acceptance run: one PASS/FAIL line per criterion, exact comparisons throughout. Exit status 1 if any fails.

#include <brunr/class2.hpp>
#include <brunr/cohomology.hpp>
#include <brunr/crosscheck.hpp>
#include <brunr/groups.hpp>
#include <brunr/lattices.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace brunr;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int number, const std::string& title, double time_limit_s, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail << " [exception: " << e.what() << "]";
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit_s > 0 && s > time_limit_s) v.check(false, "took longer than " + std::to_string(time_limit_s) + " s");
  if (!v.pass) ++failures;
  std::cout << "criterion " << number << ": " << (v.pass ? "PASS" : "FAIL") << "  " << title << " |" << v.detail.str() << " (" << std::fixed
            << std::setprecision(2) << s << " s)" << std::endl;
}

std::string factors(const exactalg::AbelianStructure& s) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < s.invariant_factors.size(); ++i) os << (i ? "," : "") << s.invariant_factors[i];
  os << ")";
  return os.str();
}

exactalg::AbelianStructure elementary(std::int64_t p, std::size_t k) { return exactalg::structure_from_factors(std::vector<BigInt>(k, BigInt(p))); }

// Decomposable elements of S found by running over all pairs (u, v) in F_p^4, independent of the formula's point search.
std::size_t decomposable_span_dim(const class2::Subspace& s, std::int64_t p) {
  std::vector<std::vector<std::int64_t>> found;
  std::vector<std::int64_t> u(4), v(4);
  const std::size_t q = static_cast<std::size_t>(p), n = q * q * q * q;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0, x = a, y = b; i < 4; ++i, x /= q, y /= q) {
        u[i] = static_cast<std::int64_t>(x % q);
        v[i] = static_cast<std::int64_t>(y % q);
      }
      std::vector<std::int64_t> w;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) w.push_back(num::mod(u[i] * v[j] - u[j] * v[i], p));
      if (s.contains(w)) found.push_back(std::move(w));
    }
  return class2::Subspace::span(p, 6, found).dim();
}

// Invariant-factor lists d1 | d2 | ... with product n.
void abelian_types(std::size_t n, std::size_t min_factor, std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (n == 1) {
    out.push_back(cur);
    return;
  }
  for (std::size_t d = min_factor; d <= n; ++d) {
    if (n % d != 0 || (!cur.empty() && d % cur.back() != 0)) continue;
    cur.push_back(d);
    abelian_types(n / d, d, cur, out);
    cur.pop_back();
  }
}

}  // namespace

int main() {
  cohomology::CohomologyOptions wide;
  wide.max_order_b0 = 48;
  wide.max_order_h2 = 48;

  criterion(1, "five-case table: |G| = p^9, p^8, p^8, p^7, p^7 and B_G != 0 for p = 2, 3, 5", 75, [](Verdict& v) {
    const int expected[] = {9, 8, 8, 7, 7};
    for (std::int64_t p : {2, 3, 5})
      for (int c = 1; c <= 5; ++c) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto w = class2::example_case_witness(c, p);
        const auto b = class2::bogomolov_class2(w.ext);
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const std::string tag = "p=" + std::to_string(p) + " case " + std::to_string(c);
        v.check(w.ext.order_exponent() == static_cast<std::size_t>(expected[c - 1]), tag + " order");
        v.check(w.classification.predicted_group_order == num::ipow(BigInt(p), expected[c - 1]), tag + " predicted order");
        v.check(!b.is_trivial(), tag + " B_G trivial");
        v.check(s < 5.0, tag + " slower than 5 s");
      }
    v.detail << " 15 cases";
  });

  criterion(2, "B_G types (p),(p),(p,p),(p),(p,p); formula and pair-enumeration oracle agree for p = 2, 3", 0, [](Verdict& v) {
    const std::size_t ranks[] = {1, 1, 2, 1, 2};
    for (std::int64_t p : {2, 3}) {
      v.detail << " p=" << p << ":";
      for (int c = 1; c <= 5; ++c) {
        const auto w = class2::example_case_witness(c, p);
        const auto formula = class2::bogomolov_class2(w.ext);
        const std::size_t oracle_rank = w.s.dim() - decomposable_span_dim(w.s, p);
        const std::string tag = "p=" + std::to_string(p) + " case " + std::to_string(c);
        v.check(formula.isomorphic_to(elementary(p, ranks[c - 1])), tag + " formula gives " + factors(formula));
        v.check(oracle_rank == ranks[c - 1], tag + " oracle rank " + std::to_string(oracle_rank));
        v.detail << " " << factors(formula);
      }
    }
  });

  criterion(3, "formula = cocycle oracle on every class-2 datum with p = 2, d <= 3, r <= 2, |G| <= 32, and on Heisenberg 27", 600,
            [](Verdict& v) {
              cohomology::CohomologyOptions o;
              // the sweep appends the Heisenberg group of order 27 after the p = 2 data
              const auto cases = crosscheck::formula_oracle_sweep(2, 3, 2, 32, cohomology::Family::Bicyclic, o);
              v.check(cases.back().ext.p == 3, "Heisenberg 27 missing from the sweep");
              std::size_t agreed = 0, nontrivial = 0;
              for (const auto& c : cases) {
                agreed += c.agree();
                nontrivial += !c.formula.is_trivial();
              }
              v.check(agreed == cases.size(), std::to_string(cases.size() - agreed) + " disagreements");
              v.check(cases.size() == 84, "expected 83 p=2 data plus Heisenberg 27, got " + std::to_string(cases.size()));
              v.detail << " " << agreed << "/" << cases.size() << " agree (" << nontrivial << " with B0 != 0)";
            });

  criterion(4, "b0(A) = 0 for every abelian A with |A| <= 36", 0, [&](Verdict& v) {
    std::size_t count = 0;
    for (std::size_t n = 1; n <= 36; ++n) {
      std::vector<std::vector<std::size_t>> types;
      std::vector<std::size_t> cur;
      abelian_types(n, 2, cur, types);
      for (const auto& t : types) {
        const auto g = t.empty() ? groups::cyclic(1) : groups::from_abelian(t);
        const auto k = cohomology::b0(g, cohomology::Family::Bicyclic, wide);
        ++count;
        std::ostringstream name;
        for (auto x : t) name << x << ",";
        v.check(k.is_trivial(), "A = (" + name.str() + ") gives " + k.structure().to_string());
      }
    }
    v.check(count >= 60, "too few abelian groups enumerated");
    v.detail << " " << count << " groups";
  });

  criterion(5, "h2_qz((Z/p)^d) = (Z/p)^(d(d-1)/2) for (p,d) = (2,2), (2,3), (3,2)", 0, [&](Verdict& v) {
    for (auto [p, d] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 2}}) {
      const auto h = cohomology::h2_qz(groups::from_abelian(std::vector<std::size_t>(d, p)), wide).structure();
      v.check(h.isomorphic_to(elementary(static_cast<std::int64_t>(p), d * (d - 1) / 2)), "p=" + std::to_string(p) + " d=" + std::to_string(d));
      v.detail << " " << factors(h);
    }
  });

  criterion(6, "b0(G, bicyclic) = b0(G, abelian) on the catalog, |G| <= 48", 0, [&](Verdict& v) {
    std::size_t count = 0;
    auto catalog = groups::standard_catalog();
    catalog.emplace_back("D6", groups::dihedral(6));
    catalog.emplace_back("D8", groups::dihedral(8));
    catalog.emplace_back("Z/2 x Z/2 x Z/4", groups::from_abelian({2, 2, 4}));
    catalog.emplace_back("Z/6 x Z/6", groups::from_abelian({6, 6}));
    catalog.emplace_back("class-2 extension of order 32",
                         groups::from_central_extension(class2::CentralExtensionData(2, 3, 2, exactalg::ModMatrix<std::int64_t>(2, {{1, 0, 0}, {0, 1, 1}}))));
    for (const auto& [name, g] : catalog) {
      if (g.order() > 48) continue;
      const auto a = cohomology::b0(g, cohomology::Family::Bicyclic, wide).structure();
      const auto b = cohomology::b0(g, cohomology::Family::Abelian, wide).structure();
      v.check(a.isomorphic_to(b), name);
      ++count;
    }
    v.check(count >= 10, "catalog too small");
    v.detail << " " << count << " groups";
  });

  criterion(7, "block family: S_bic = {lambda = 0} and B_G = Z/p for (m,p) = (2,2), (2,3), (3,2)", 5, [](Verdict& v) {
    for (auto [m, p] : std::vector<std::pair<std::size_t, std::int64_t>>{{2, 2}, {2, 3}, {3, 2}}) {
      const auto s = class2::pfaffian_family_subspace(m, p);
      const auto sb = class2::s_bic(s, 2 * m);
      const auto h = class2::pfaffian_family_hyperplane(m, p);
      const auto b = class2::bogomolov_class2(class2::pfaffian_family(m, p));
      const std::string tag = "m=" + std::to_string(m) + " p=" + std::to_string(p);
      v.check(sb.contains(h) && h.contains(sb), tag + " S_bic");
      v.check(b.isomorphic_to(elementary(p, 1)), tag + " B_G = " + b.to_string());
      v.detail << " " << factors(b);
    }
  });

  criterion(8, "standard lattice: (Z/2)^2 direct H^2 = Z/4 = shifted route; (Z/2)^3 standard_obstruction = Z/2", 60, [](Verdict& v) {
    const auto k4 = groups::from_abelian({2, 2});
    const auto direct = lattices::h2_lattice_direct(lattices::standard_kernel_lattice(k4)).structure;
    const auto shifted = lattices::h2_lattice_shifted(k4).structure;
    v.check(direct.isomorphic_to(exactalg::structure_from_factors({BigInt(4)})), "direct gives " + direct.to_string());
    v.check(direct.isomorphic_to(shifted), "shifted gives " + shifted.to_string());
    const auto ob = lattices::standard_obstruction(groups::from_abelian({2, 2, 2}));
    v.check(ob.isomorphic_to(elementary(2, 1)), "(Z/2)^3 obstruction " + ob.to_string());
    v.detail << " direct " << direct.to_string() << ", shifted " << shifted.to_string() << ", (Z/2)^3 obstruction " << ob.to_string();
  });

  criterion(9, "standard_obstruction(G) != 0 iff not all Sylow subgroups bicyclic, full catalog", 0, [](Verdict& v) {
    std::size_t count = 0, obstructed = 0;
    for (const auto& [name, g] : groups::standard_catalog()) {
      const bool ob = !lattices::standard_obstruction(g).is_trivial();
      v.check(ob == !groups::all_sylow_bicyclic(g), name);
      ++count;
      obstructed += ob;
    }
    v.check(count >= 12, "catalog too small");
    v.detail << " " << count << " groups, " << obstructed << " obstructed";
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
