#pragma once

#include <vector>

#include "malg/functors.hpp"

namespace malg {

/// Unary s over {0,1}: s(0) = s(1) = {1}.
MultiAlgebra counterexample_A();
/// Unary s over {0,1}: s(0) = s(1) = {0,1}.
MultiAlgebra counterexample_B();
/// {0} -> {0}, {1} -> {0,1}, {0,1} -> {1} on the carriers of P(A), P(B).
Morphism counterexample_h();

struct CounterexampleResult {
  std::uint64_t maps_examined = 0;          // all maps A -> B
  std::uint64_t bijections_examined = 0;
  std::vector<Morphism> multialgebra_isos;  // bijective full homs A -> B
  std::vector<Morphism> plain_isos;         // P=(A) -> P=(B)
  bool h_is_plain_iso = false;
  std::uint64_t ordered_maps_examined = 0;  // all maps P(A) -> P(B)
  std::vector<Morphism> ordered_isos;       // P(A) -> P(B)
  Verdict h_ordered;                        // h as a (Sigma,<=)-hom

  Verdict no_multialgebra_iso() const;
  Verdict plain_iso_exists() const;
  Verdict no_ordered_iso() const;
};

/// Exhausts every candidate map at each level.
CounterexampleResult analyse_counterexample(const Caps& caps = {});

}  // namespace malg
