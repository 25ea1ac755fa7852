#pragma once

#include <cstdint>
#include <vector>

#include "malg/multialg.hpp"

namespace malg {

/// P~(m): carrier P*(A) in mask order, labelled "{a,b}"; an operation returns
/// the singletons of the union of m's results over all argument choices.
/// Throws CapExceeded when |A| > caps.max_tilde_universe.
MultiAlgebra apply_Ptilde(const MultiAlgebra& m, const Caps& caps = {});

/// The image map P~(h) : P~(src) -> P~(dst). Throws ContractViolation when h
/// is not a homomorphism.
Morphism ptilde_mor(const Morphism& h, const MultiAlgebra& src, const MultiAlgebra& dst,
                    const Caps& caps = {});

/// a -> {a}, as a map m -> P~(m).
Morphism eta(const MultiAlgebra& m);
/// Union, as a map P~P~(m) -> P~(m).
Morphism epsilon(const MultiAlgebra& m);

struct TildeLevel {
  std::size_t depth = 0;
  MultiAlgebra structure;
};

/// P~^0(m) .. P~^depth(m). Throws CapExceeded when a level is too large to
/// take P~ of.
std::vector<TildeLevel> tilde_tower(const MultiAlgebra& m, std::size_t depth,
                                    const Caps& caps = {});

/// P~h . eta_A = eta_B . h and P~h . eps_A = eps_B . P~P~h, pointwise.
Verdict check_naturality_eta_eps(const Morphism& h, const MultiAlgebra& a, const MultiAlgebra& b,
                                 const Caps& caps = {});

struct MonadLawReport {
  Verdict verdict;
  std::size_t associativity_points = 0;
  std::size_t unit_points = 0;
};

struct MonadLawOptions {
  /// Points of P~^3 tried when P~^2 is too large to enumerate.
  std::size_t samples = 2000;
  std::uint64_t seed = 1;
};

/// Checks that eta and eps are homomorphisms, associativity
/// eps . P~eps = eps . eps_{P~} on P~^3(m) and both unit laws on P~(m).
/// Associativity is exhaustive while |P~^2(m)| <= caps.max_powerset_universe
/// and sampled beyond that.
MonadLawReport check_monad_laws(const MultiAlgebra& m, const Caps& caps = {},
                                MonadLawOptions opts = {});

}  // namespace malg
