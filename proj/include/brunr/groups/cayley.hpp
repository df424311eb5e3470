#pragma once

#include <brunr/error.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace brunr::groups {

using Element = std::size_t;

struct GroupOptions {
  /// Largest group order any constructor will produce.
  std::size_t order_bound = 512;
  /// Associativity is checked on all triples up to this order.
  std::size_t associativity_check_bound = 512;
};

/// A finite group given by its multiplication table. Immutable; copies share the table.
class CayleyGroup {
 public:
  /// Validating constructor; throws NotAGroup naming the failing axiom and a witness.
  static CayleyGroup from_table(const std::vector<std::vector<std::size_t>>& table, const GroupOptions& opts = {}) {
    const std::size_t n = table.size();
    if (n == 0) throw NotAGroup("empty table");
    if (n > opts.order_bound) throw OrderBoundExceeded("table order " + std::to_string(n) + " exceeds bound " + std::to_string(opts.order_bound));
    std::vector<std::uint32_t> flat;
    flat.reserve(n * n);
    for (std::size_t g = 0; g < n; ++g) {
      if (table[g].size() != n) throw NotAGroup("table is not square (row " + std::to_string(g) + ")");
      for (std::size_t h = 0; h < n; ++h) {
        if (table[g][h] >= n) throw NotAGroup("entry out of range at (" + std::to_string(g) + "," + std::to_string(h) + ")");
        flat.push_back(static_cast<std::uint32_t>(table[g][h]));
      }
    }
    return CayleyGroup(n, std::move(flat), opts);
  }

  std::size_t order() const { return d_->n; }
  Element identity() const { return d_->identity; }
  Element mul(Element a, Element b) const { return d_->table[a * d_->n + b]; }
  Element inverse(Element a) const { return d_->inverses[a]; }
  std::size_t element_order(Element a) const { return d_->orders[a]; }
  const std::vector<std::size_t>& element_orders() const { return d_->orders; }
  const std::vector<Element>& inverses() const { return d_->inverses; }

  Element power(Element a, std::size_t k) const {
    Element r = identity();
    for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
  /// [a, b] = a b a^-1 b^-1
  Element commutator(Element a, Element b) const { return mul(mul(a, b), mul(inverse(a), inverse(b))); }
  Element conjugate(Element g, Element a) const { return mul(mul(g, a), inverse(g)); }
  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }

  std::vector<std::vector<std::size_t>> table() const {
    std::vector<std::vector<std::size_t>> t(d_->n, std::vector<std::size_t>(d_->n));
    for (std::size_t g = 0; g < d_->n; ++g)
      for (std::size_t h = 0; h < d_->n; ++h) t[g][h] = mul(g, h);
    return t;
  }

  friend bool operator==(const CayleyGroup& a, const CayleyGroup& b) { return a.d_ == b.d_ || a.d_->table == b.d_->table; }

 protected:
  struct Data {
    std::size_t n = 0;
    std::vector<std::uint32_t> table;
    Element identity = 0;
    std::vector<Element> inverses;
    std::vector<std::size_t> orders;
  };

  CayleyGroup(std::size_t n, std::vector<std::uint32_t> flat, const GroupOptions& opts) {
    auto d = std::make_shared<Data>();
    d->n = n;
    d->table = std::move(flat);
    auto at = [&](std::size_t a, std::size_t b) -> std::size_t { return d->table[a * n + b]; };
    auto witness = [](std::initializer_list<std::size_t> xs) {
      std::ostringstream os;
      os << "(";
      bool first = true;
      for (auto x : xs) {
        os << (first ? "" : ",") << x;
        first = false;
      }
      os << ")";
      return os.str();
    };

    std::vector<char> seen(n);
    for (std::size_t g = 0; g < n; ++g) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t h = 0; h < n; ++h) {
        if (seen[at(g, h)]) throw NotAGroup("not a Latin square: row " + std::to_string(g) + " repeats " + std::to_string(at(g, h)));
        seen[at(g, h)] = 1;
      }
    }
    for (std::size_t h = 0; h < n; ++h) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t g = 0; g < n; ++g) {
        if (seen[at(g, h)]) throw NotAGroup("not a Latin square: column " + std::to_string(h) + " repeats " + std::to_string(at(g, h)));
        seen[at(g, h)] = 1;
      }
    }
    std::size_t e = n;
    for (std::size_t g = 0; g < n && e == n; ++g) {
      bool ok = true;
      for (std::size_t h = 0; h < n && ok; ++h) ok = at(g, h) == h && at(h, g) == h;
      if (ok) e = g;
    }
    if (e == n) throw NotAGroup("identity: no two-sided identity element");
    d->identity = e;
    if (n <= opts.associativity_check_bound) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const std::size_t ab = at(a, b);
          for (std::size_t c = 0; c < n; ++c)
            if (at(ab, c) != at(a, at(b, c))) throw NotAGroup("associativity fails at " + witness({a, b, c}));
        }
    }
    d->inverses.assign(n, n);
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h)
        if (at(g, h) == e) {
          if (at(h, g) != e) throw NotAGroup("inverse: left and right inverses differ for " + witness({g, h}));
          d->inverses[g] = h;
          break;
        }
    d->orders.assign(n, 0);
    for (std::size_t g = 0; g < n; ++g) {
      std::size_t k = 1, x = g;
      while (x != e) {
        x = at(x, g);
        ++k;
      }
      d->orders[g] = k;
    }
    d_ = std::move(d);
  }

 private:
  std::shared_ptr<const Data> d_;
};

/// A subgroup of a CayleyGroup, stored as a sorted element list.
class Subgroup {
 public:
  Subgroup(CayleyGroup parent, std::vector<Element> elements) : parent_(std::move(parent)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    validate();
  }

  const CayleyGroup& parent() const { return parent_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Element x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

  /// Local index of a parent element (position in the sorted list).
  std::size_t local_index(Element x) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
    if (it == elements_.end() || *it != x) throw NotASubgroup("element not in subgroup");
    return static_cast<std::size_t>(it - elements_.begin());
  }

  /// The subgroup as a group in its own right; element i corresponds to elements()[i].
  CayleyGroup as_group() const {
    const std::size_t k = elements_.size();
    std::vector<std::vector<std::size_t>> t(k, std::vector<std::size_t>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) t[i][j] = local_index(parent_.mul(elements_[i], elements_[j]));
    GroupOptions opts;
    opts.order_bound = std::max<std::size_t>(k, 1);
    opts.associativity_check_bound = 0;  // inherited from the parent
    return CayleyGroup::from_table(t, opts);
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_ && a.parent_ == b.parent_; }

 private:
  void validate() const {
    if (!contains(parent_.identity())) throw NotASubgroup("subgroup lacks the identity");
    for (Element a : elements_) {
      if (!contains(parent_.inverse(a))) throw NotASubgroup("subgroup not closed under inverses");
      for (Element b : elements_)
        if (!contains(parent_.mul(a, b))) throw NotASubgroup("subgroup not closed under products");
    }
  }

  CayleyGroup parent_;
  std::vector<Element> elements_;
};

/// Elements of the subgroup generated by `gens` (breadth-first closure), sorted.
inline std::vector<Element> closure(const CayleyGroup& g, std::span<const Element> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> out{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Element s : gens) {
      const Element x = g.mul(out[i], s);
      if (!in[x]) {
        in[x] = 1;
        out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline Subgroup generated_subgroup(const CayleyGroup& g, std::span<const Element> gens) { return Subgroup(g, closure(g, gens)); }

inline Subgroup whole_group(const CayleyGroup& g) {
  std::vector<Element> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return Subgroup(g, std::move(all));
}

/// Greedy generating set: repeatedly adds the highest-order element outside the current closure.
inline std::vector<Element> generating_set(const CayleyGroup& g) {
  std::vector<Element> by_order(g.order());
  for (std::size_t i = 0; i < by_order.size(); ++i) by_order[i] = i;
  std::stable_sort(by_order.begin(), by_order.end(), [&](Element a, Element b) { return g.element_order(a) > g.element_order(b); });
  std::vector<Element> gens;
  std::vector<char> in(g.order(), 0);
  in[g.identity()] = 1;
  for (Element x : by_order) {
    if (in[x]) continue;
    gens.push_back(x);
    for (Element y : closure(g, gens)) in[y] = 1;
  }
  return gens;
}

}  // namespace brunr::groups
