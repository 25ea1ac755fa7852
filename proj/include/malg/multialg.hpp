#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "malg/core.hpp"

namespace malg {

/// A Sigma-multialgebra: every n-ary symbol is interpreted as a total table
/// from n-tuples over the universe to non-empty subsets of it.
class MultiAlgebra {
 public:
  using Table = std::vector<Subset>;  // indexed by tuple_index

  /// Validates totality, widths and non-emptiness; throws Error otherwise.
  MultiAlgebra(Signature sig, Universe universe, std::vector<Table> tables,
               const Caps& caps = {});

  /// Builds tables by calling fill(symbol, tuple) for every tuple.
  static MultiAlgebra from_function(
      Signature sig, Universe universe,
      const std::function<Subset(std::size_t, const std::vector<std::size_t>&)>& fill,
      const Caps& caps = {});

  [[nodiscard]] const Signature& signature() const { return sig_; }
  [[nodiscard]] const Universe& universe() const { return universe_; }
  [[nodiscard]] std::size_t size() const { return universe_.size(); }
  [[nodiscard]] const Table& table(std::size_t symbol) const { return tables_[symbol]; }
  [[nodiscard]] const Subset& apply(std::size_t symbol, std::span<const std::size_t> args) const {
    return tables_[symbol][tuple_index(args, size())];
  }

  friend bool operator==(const MultiAlgebra&, const MultiAlgebra&) = default;

 private:
  Signature sig_;
  Universe universe_;
  std::vector<Table> tables_;
};

enum class HomMode { hom, full, iso };

/// {h(a) : a in s_src(t)} ⊆ s_dst(h(t)) for every symbol and tuple.
Verdict check_hom(const Morphism& h, const MultiAlgebra& src, const MultiAlgebra& dst,
                  const Caps& caps = {});
/// As check_hom with equality in place of inclusion.
Verdict check_full_hom(const Morphism& h, const MultiAlgebra& src, const MultiAlgebra& dst,
                       const Caps& caps = {});

/// Every map src -> dst satisfying the contract, in lexicographic order of
/// the map vector. Throws CapExceeded when |dst|^|src| > caps.max_maps.
std::vector<Morphism> enumerate_homs(const MultiAlgebra& src, const MultiAlgebra& dst,
                                     HomMode mode, const Caps& caps = {});

/// A bijective full homomorphism a -> b when one exists.
std::optional<Morphism> is_isomorphic(const MultiAlgebra& a, const MultiAlgebra& b,
                                      const Caps& caps = {});

/// All possible outcomes of a term under non-deterministic evaluation.
Subset eval_term_nd(const MultiAlgebra& m, const Term& t, const Valuation& valuation);

/// Same universe and interpretation, elements renamed along a permutation:
/// element i of the result is perm^{-1}(i) of m, i.e. perm : m -> result is
/// an isomorphism.
MultiAlgebra relabel(const MultiAlgebra& m, const Morphism& perm);

}  // namespace malg
