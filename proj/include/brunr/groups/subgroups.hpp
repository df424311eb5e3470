#pragma once

#include <brunr/bigint.hpp>
#include <brunr/groups/cayley.hpp>

#include <algorithm>
#include <set>
#include <vector>

namespace brunr::groups {

inline bool is_abelian(const CayleyGroup& g) {
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = a + 1; b < g.order(); ++b)
      if (!g.commute(a, b)) return false;
  return true;
}

inline bool is_cyclic(const CayleyGroup& g) {
  const auto& o = g.element_orders();
  return std::find(o.begin(), o.end(), g.order()) != o.end();
}

/// Abelian and generated by at most two elements. For abelian G this holds iff every
/// q-torsion subgroup {x : x^q = e} has at most q^2 elements.
inline bool is_bicyclic(const CayleyGroup& g) {
  if (!is_abelian(g)) return false;
  for (std::int64_t q : num::prime_divisors(static_cast<std::int64_t>(g.order()))) {
    std::size_t count = 0;
    for (Element x = 0; x < g.order(); ++x)
      if (g.element_order(x) == 1 || g.element_order(x) == static_cast<std::size_t>(q)) ++count;
    if (count > static_cast<std::size_t>(q * q)) return false;
  }
  return true;
}

inline bool is_abelian(const Subgroup& s) {
  for (Element a : s.elements())
    for (Element b : s.elements())
      if (!s.parent().commute(a, b)) return false;
  return true;
}
inline bool is_cyclic(const Subgroup& s) { return is_cyclic(s.as_group()); }
inline bool is_bicyclic(const Subgroup& s) { return is_bicyclic(s.as_group()); }

namespace detail {

// deterministic listing order: by order, then lexicographically by element list
inline std::vector<Subgroup> to_sorted_subgroups(const CayleyGroup& g, const std::set<std::vector<Element>>& sets) {
  std::vector<std::vector<Element>> v(sets.begin(), sets.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<Subgroup> out;
  out.reserve(v.size());
  for (auto& e : v) out.emplace_back(g, std::move(e));
  return out;
}

}  // namespace detail

/// All subgroups <a, b> with ab = ba (trivial and cyclic ones included), without duplicates,
/// sorted by order and then by element list.
inline std::vector<Subgroup> bicyclic_subgroups(const CayleyGroup& g) {
  const std::size_t n = g.order();
  std::set<std::vector<Element>> found;
  std::vector<Element> powers_a, elems;
  std::vector<char> mark(n, 0);
  for (Element a = 0; a < n; ++a) {
    powers_a.clear();
    for (Element x = g.identity();;) {
      powers_a.push_back(x);
      x = g.mul(x, a);
      if (x == g.identity()) break;
    }
    for (Element b = a; b < n; ++b) {
      if (!g.commute(a, b)) continue;
      elems.clear();
      for (Element y = g.identity();;) {
        for (Element x : powers_a) {
          const Element z = g.mul(x, y);
          if (!mark[z]) {
            mark[z] = 1;
            elems.push_back(z);
          }
        }
        y = g.mul(y, b);
        if (y == g.identity()) break;
      }
      for (Element z : elems) mark[z] = 0;
      std::sort(elems.begin(), elems.end());
      found.insert(elems);
    }
  }
  return detail::to_sorted_subgroups(g, found);
}

/// Every abelian subgroup, sorted like bicyclic_subgroups.
inline std::vector<Subgroup> abelian_subgroups(const CayleyGroup& g) {
  std::set<std::vector<Element>> found;
  std::vector<std::vector<Element>> queue;
  for (const auto& s : bicyclic_subgroups(g))
    if (found.insert(s.elements()).second) queue.push_back(s.elements());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::vector<Element> h = queue[i];
    std::vector<char> in(g.order(), 0);
    for (Element x : h) in[x] = 1;
    for (Element x = 0; x < g.order(); ++x) {
      if (in[x]) continue;
      if (!std::all_of(h.begin(), h.end(), [&](Element y) { return g.commute(x, y); })) continue;
      std::vector<Element> gens = h;
      gens.push_back(x);
      auto c = closure(g, gens);
      if (found.insert(c).second) queue.push_back(std::move(c));
    }
  }
  return detail::to_sorted_subgroups(g, found);
}

inline Subgroup center(const CayleyGroup& g) {
  std::vector<Element> z;
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element b = 0; b < g.order() && central; ++b) central = g.commute(a, b);
    if (central) z.push_back(a);
  }
  return Subgroup(g, std::move(z));
}

/// Subgroup generated by all commutators.
inline Subgroup commutator_subgroup(const CayleyGroup& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> comms;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) {
      const Element c = g.commutator(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return generated_subgroup(g, comms);
}

/// A Sylow p-subgroup, grown one factor of p at a time inside normalizers; trivial when p does not divide |G|.
inline Subgroup sylow_subgroup(const CayleyGroup& g, std::int64_t p) {
  if (!num::is_prime(p)) throw Error("sylow_subgroup: p must be prime");
  const std::size_t n = g.order();
  const std::size_t target = static_cast<std::size_t>(num::ipow(p, num::valuation(static_cast<std::int64_t>(n), p)));
  std::vector<Element> cur{g.identity()};
  while (cur.size() < target) {
    std::vector<char> in(n, 0);
    for (Element x : cur) in[x] = 1;
    bool grown = false;
    for (Element x = 0; x < n && !grown; ++x) {
      if (in[x]) continue;
      if (!in[g.power(x, static_cast<std::size_t>(p))]) continue;
      if (!std::all_of(cur.begin(), cur.end(), [&](Element y) { return in[g.conjugate(x, y)]; })) continue;
      std::vector<Element> gens = cur;
      gens.push_back(x);
      cur = closure(g, gens);
      grown = true;
    }
    if (!grown) throw Error("sylow_subgroup: no normalizing element found (table is not a group?)");
  }
  return Subgroup(g, std::move(cur));
}

inline bool all_sylow_bicyclic(const CayleyGroup& g) {
  for (std::int64_t p : num::prime_divisors(static_cast<std::int64_t>(g.order())))
    if (!is_bicyclic(sylow_subgroup(g, p))) return false;
  return true;
}

inline bool all_sylow_cyclic(const CayleyGroup& g) {
  for (std::int64_t p : num::prime_divisors(static_cast<std::int64_t>(g.order())))
    if (!is_cyclic(sylow_subgroup(g, p))) return false;
  return true;
}

}  // namespace brunr::groups
