#pragma once

#include <brunr/exactalg/modular.hpp>
#include <brunr/groups/cayley.hpp>

#include <cstdint>
#include <vector>

namespace brunr::cohomology {

using groups::CayleyGroup;
using groups::Element;
using Vec = std::vector<std::int64_t>;
/// A full cochain table: table[g][h], values reduced modulo the context modulus.
using CocycleTable = std::vector<std::vector<std::int64_t>>;

/// Normalized 2-cocycles with trivial coefficients in reduced coordinates.
///
/// With S = generating_set(G), a normalized cocycle is determined by its values f(g, s) for g != e, s in S.
/// Walking a breadth-first spanning tree of the right Cayley graph and applying
///   f(g, hs) = f(g, h) + f(gh, s) - f(h, s)
/// expresses every f(g, x) as an integer combination of these unknowns. The identity along the
/// remaining (non-tree) edges, for every g, is equivalent to the full cocycle identity (induction on the
/// word length of the third argument), so these edge equations present Z^2 exactly.
class CocycleSystem {
 public:
  explicit CocycleSystem(CayleyGroup g) : g_(std::move(g)), gens_(groups::generating_set(g_)) {
    const std::size_t n = g_.order(), k = gens_.size();
    slot_.assign(n, n);
    std::size_t next = 0;
    for (Element x = 0; x < n; ++x)
      if (x != g_.identity()) slot_[x] = next++;
    u_ = (n - 1) * k;

    // breadth-first tree from e by right multiplication
    std::vector<char> seen(n, 0);
    std::vector<Element> order{g_.identity()};
    seen[g_.identity()] = 1;
    std::vector<std::pair<Element, std::size_t>> parent(n, {n, 0});
    std::vector<std::pair<Element, std::size_t>> extra;  // non-tree edges (h, s)
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t s = 0; s < k; ++s) {
        const Element h = order[i], x = g_.mul(h, gens_[s]);
        if (!seen[x]) {
          seen[x] = 1;
          parent[x] = {h, s};
          order.push_back(x);
        } else {
          extra.emplace_back(h, s);
        }
      }

    values_.assign(n * n * u_, 0);
    for (Element g = 0; g < n; ++g) {
      if (g == g_.identity()) continue;
      for (std::size_t i = 1; i < order.size(); ++i) {
        const Element x = order[i];
        const auto [h, s] = parent[x];
        std::int64_t* out = &values_[(g * n + x) * u_];
        const std::int64_t* in = &values_[(g * n + h) * u_];
        for (std::size_t t = 0; t < u_; ++t) out[t] = in[t];
        add_unit(out, g_.mul(g, h), s, 1);
        add_unit(out, h, s, -1);
      }
      for (auto [h, s] : extra) {
        Vec eq(u_, 0);
        const std::int64_t* a = &values_[(g * n + h) * u_];
        const std::int64_t* b = &values_[(g * n + g_.mul(h, gens_[s])) * u_];
        for (std::size_t t = 0; t < u_; ++t) eq[t] = a[t] - b[t];
        add_unit(eq.data(), g_.mul(g, h), s, 1);
        add_unit(eq.data(), h, s, -1);
        if (std::any_of(eq.begin(), eq.end(), [](std::int64_t v) { return v != 0; })) equations_.push_back(std::move(eq));
      }
    }
  }

  const CayleyGroup& group() const { return g_; }
  const std::vector<Element>& generators() const { return gens_; }
  std::size_t unknowns() const { return u_; }
  /// Position of the unknown f(g, gens[s]); g must not be the identity.
  std::size_t unknown(Element g, std::size_t s) const { return slot_[g] * gens_.size() + s; }

  /// Integer coefficients of f(g, x) in the unknowns.
  std::span<const std::int64_t> value_vector(Element g, Element x) const { return {&values_[(g * g_.order() + x) * u_], u_}; }

  /// Edge equations (integer rows over the unknowns).
  const std::vector<Vec>& equations() const { return equations_; }

  /// Cocycle module Z^2(G, Z/m) in reduced coordinates.
  exactalg::HowellForm<std::int64_t> cocycles(std::int64_t m) const {
    exactalg::ModMatrix<std::int64_t> e(m, equations_.size(), u_);
    for (std::size_t i = 0; i < equations_.size(); ++i)
      for (std::size_t t = 0; t < u_; ++t) e.set(i, t, equations_[i][t]);
    if (equations_.empty()) return exactalg::howell_form(exactalg::ModMatrix<std::int64_t>::identity(m, u_));
    return exactalg::kernel_mod(e);
  }

  /// Reduced coordinates of delta c, where c is a normalized 1-cochain indexed by element: c(g) + c(s) - c(gs).
  Vec coboundary(std::span<const std::int64_t> c, std::int64_t m) const {
    Vec out(u_, 0);
    for (Element g = 0; g < g_.order(); ++g) {
      if (g == g_.identity()) continue;
      for (std::size_t s = 0; s < gens_.size(); ++s) out[unknown(g, s)] = num::mod(c[g] + c[gens_[s]] - c[g_.mul(g, gens_[s])], m);
    }
    return out;
  }

  /// Coboundaries of the delta functions at each x != e: generators of B^2.
  std::vector<Vec> coboundary_generators(std::int64_t m) const {
    std::vector<Vec> out;
    Vec c(g_.order(), 0);
    for (Element x = 0; x < g_.order(); ++x) {
      if (x == g_.identity()) continue;
      c[x] = 1;
      out.push_back(coboundary(c, m));
      c[x] = 0;
    }
    return out;
  }

  /// Generators of Hom(G, Z/m), each as the list of its values on all elements.
  std::vector<Vec> homomorphisms(std::int64_t m) const {
    const std::size_t n = g_.order();
    // unknowns c(x), x != e; equations c(g) + c(s) - c(gs) = 0
    std::vector<Vec> rows;
    auto col = [&](Element x) { return slot_[x]; };
    for (Element g = 0; g < n; ++g)
      for (Element s : gens_) {
        Vec r(n - 1, 0);
        if (g != g_.identity()) r[col(g)] += 1;
        r[col(s)] += 1;
        const Element gs = g_.mul(g, s);
        if (gs != g_.identity()) r[col(gs)] -= 1;
        rows.push_back(std::move(r));
      }
    std::vector<Vec> out;
    if (n == 1) return out;
    exactalg::ModMatrix<std::int64_t> a(m, rows);
    for (const auto& k : exactalg::kernel_mod(a).rows) {
      Vec chi(n, 0);
      for (Element x = 0; x < n; ++x)
        if (x != g_.identity()) chi[x] = k[col(x)];
      out.push_back(std::move(chi));
    }
    return out;
  }

  /// Image of a character chi: G -> Z/m under the connecting map into H^2(G, Z/m):
  /// (g, h) -> (a(g) + a(h) - a(gh)) / m, with a the lift of chi to [0, m).
  Vec connecting_image(std::span<const std::int64_t> chi, std::int64_t m) const {
    Vec out(u_, 0);
    for (Element g = 0; g < g_.order(); ++g) {
      if (g == g_.identity()) continue;
      for (std::size_t s = 0; s < gens_.size(); ++s) {
        const std::int64_t v = num::mod(chi[g], m) + num::mod(chi[gens_[s]], m) - num::mod(chi[g_.mul(g, gens_[s])], m);
        if (v % m != 0) throw Error("connecting_image: argument is not a homomorphism");
        out[unknown(g, s)] = num::mod(v / m, m);
      }
    }
    return out;
  }

  /// Full table from reduced coordinates.
  CocycleTable expand(std::span<const std::int64_t> z, std::int64_t m) const {
    const std::size_t n = g_.order();
    CocycleTable t(n, Vec(n, 0));
    for (Element g = 0; g < n; ++g)
      for (Element x = 0; x < n; ++x) {
        const auto v = value_vector(g, x);
        std::int64_t acc = 0;
        for (std::size_t i = 0; i < u_; ++i)
          if (v[i] != 0) acc = num::mod(acc + num::mulmod(num::mod(v[i], m), z[i], m), m);
        t[g][x] = acc;
      }
    return t;
  }

  /// Reduced coordinates of a full table (its values at (g, s)); no validity check.
  Vec reduce(const CocycleTable& t, std::int64_t m) const {
    Vec out(u_, 0);
    for (Element g = 0; g < g_.order(); ++g) {
      if (g == g_.identity()) continue;
      for (std::size_t s = 0; s < gens_.size(); ++s) out[unknown(g, s)] = num::mod(t[g][gens_[s]], m);
    }
    return out;
  }

 private:
  void add_unit(std::int64_t* v, Element x, std::size_t s, std::int64_t c) const {
    if (x != g_.identity()) v[unknown(x, s)] += c;
  }

  CayleyGroup g_;
  std::vector<Element> gens_;
  std::vector<std::size_t> slot_;
  std::size_t u_ = 0;
  std::vector<std::int64_t> values_;
  std::vector<Vec> equations_;
};

/// Whether a full table is a normalized 2-cocycle modulo m (checks all |G|^3 triples).
inline bool is_normalized_cocycle(const CayleyGroup& g, const CocycleTable& f, std::int64_t m) {
  const std::size_t n = g.order();
  const Element e = g.identity();
  for (Element x = 0; x < n; ++x)
    if (num::mod(f[e][x], m) != 0 || num::mod(f[x][e], m) != 0) return false;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (num::mod(f[a][b] + f[g.mul(a, b)][c] - f[b][c] - f[a][g.mul(b, c)], m) != 0) return false;
  return true;
}

}  // namespace brunr::cohomology
