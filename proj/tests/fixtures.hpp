#pragma once

#include "malg/demo.hpp"
#include "malg/functors.hpp"

namespace fixtures {

inline malg::Signature unary() { return malg::Signature({{"s", 1}}); }
inline malg::Signature unary_binary() { return malg::Signature({{"s", 1}, {"f", 2}}); }
inline malg::Signature with_constant() { return malg::Signature({{"c", 0}, {"s", 1}, {"f", 2}}); }

inline malg::Subset mask(std::size_t width, std::uint64_t m) { return malg::Subset::from_mask(width, m); }

/// Every unary multialgebra over {0..n-1}.
inline std::vector<malg::MultiAlgebra> all_unary(std::size_t n) {
  std::vector<malg::MultiAlgebra> out;
  const std::uint64_t values = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> pick(n, 1);
  while (true) {
    malg::MultiAlgebra::Table t;
    for (auto p : pick) t.push_back(mask(n, p));
    out.emplace_back(unary(), malg::Universe::numbered(n), std::vector<malg::MultiAlgebra::Table>{t});
    std::size_t i = 0;
    while (i < n && ++pick[i] > values) pick[i++] = 1;
    if (i == n) break;
  }
  return out;
}

}  // namespace fixtures
