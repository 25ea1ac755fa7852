#pragma once

#include <cstdint>
#include <random>

#include "malg/functors.hpp"
#include "malg/multialg.hpp"
#include "malg/ordalg.hpp"
#include "malg/variants.hpp"

namespace malg {

/// Seeded source of random structures. The same seed yields the same
/// sequence of structures on a given platform.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n);
  std::mt19937_64& engine() { return rng_; }

  /// Values uniform over the non-empty subsets.
  MultiAlgebra multialgebra(const Signature& sig, std::size_t size);
  /// Values uniform over all subsets, so empty values occur.
  PartialMultiAlgebra partial(const Signature& sig, std::size_t size);
  /// P of a random multialgebra on `atoms` points with its carrier shuffled,
  /// rebuilt through the validators so that nothing depends on mask layout.
  OrderedAlgebra ordered_algebra(const Signature& sig, std::size_t atoms);
  Morphism morphism(std::size_t source_size, std::size_t target_size);
  Morphism permutation(std::size_t n);
  SetValuedMorphism set_morphism(std::size_t source_size, std::size_t target_size);
  /// Depth at most `max_depth` over variables 0..variables-1.
  Term term(const Signature& sig, std::size_t max_depth, std::size_t variables);
  Valuation valuation(std::size_t variables, std::size_t size);

 private:
  std::mt19937_64 rng_;
};

}  // namespace malg
