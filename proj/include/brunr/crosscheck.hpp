#pragma once

// Class-2 formula against the brute-force cocycle oracle.

#include <brunr/class2.hpp>
#include <brunr/cohomology.hpp>
#include <brunr/groups.hpp>

#include <vector>

namespace brunr::crosscheck {

struct ComparisonCase {
  class2::CentralExtensionData ext;
  exactalg::AbelianStructure formula, oracle;
  bool agree() const { return formula.isomorphic_to(oracle); }
};

/// Every central extension of (Z/p)^d by (Z/p)^r with 1 <= d <= max_d, r <= max_r and p^(d+r) <= max_order
/// (all lambda), then the Heisenberg group of order 27 if it fits and is not already swept: formula against oracle.
inline std::vector<ComparisonCase> formula_oracle_sweep(std::int64_t p, std::size_t max_d, std::size_t max_r, std::size_t max_order,
                                                        cohomology::Family family, const cohomology::CohomologyOptions& copts,
                                                        bool include_heisenberg = true) {
  std::vector<ComparisonCase> out;
  auto run = [&](const class2::CentralExtensionData& e) {
    const auto g = groups::from_central_extension(e);
    auto o = cohomology::b0(g, family, copts).structure();
    o.generators.reset();
    out.push_back({e, class2::bogomolov_class2(e), std::move(o)});
  };
  for (std::size_t d = 1; d <= max_d; ++d)
    for (std::size_t r = 0; r <= max_r; ++r) {
      if (num::ipow(BigInt(p), static_cast<int>(d + r)) > BigInt(max_order)) continue;
      const std::size_t w = class2::wedge_dim(d), cells = w * r;
      const BigInt total = num::ipow(BigInt(p), static_cast<int>(cells));
      for (BigInt code = 0; code < total; ++code) {
        exactalg::ModMatrix<std::int64_t> lam(p, r, w);
        BigInt c = code;
        for (std::size_t k = 0; k < cells; ++k) {
          lam.set(k / w, k % w, num::to_int64(BigInt(c % p)));
          c /= p;
        }
        run(class2::CentralExtensionData(p, d, r, std::move(lam)));
      }
    }
  if (include_heisenberg && p != 3 && 27 <= max_order) run(class2::CentralExtensionData(3, 2, 1, exactalg::ModMatrix<std::int64_t>(3, {{1}})));
  return out;
}

}  // namespace brunr::crosscheck
