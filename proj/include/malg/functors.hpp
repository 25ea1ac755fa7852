#pragma once

#include <string>
#include <vector>

#include "malg/multialg.hpp"
#include "malg/ordalg.hpp"

namespace malg {

/// A Sigma-algebra: every symbol returns a single element.
struct PlainAlgebra {
  Signature signature;
  Universe universe;
  std::vector<std::vector<std::size_t>> tables;  // indexed by tuple_index

  [[nodiscard]] std::size_t size() const { return universe.size(); }
  [[nodiscard]] std::size_t apply(std::size_t symbol, std::span<const std::size_t> args) const {
    return tables[symbol][tuple_index(args, size())];
  }
};

enum class Contract { hom, full, iso, ordered, ordered_iso, plain_iso };

std::string to_string(Contract c);

/// All morphisms between two structures satisfying one contract, in
/// lexicographic order of their map vectors.
struct HomSet {
  Contract contract = Contract::hom;
  std::size_t source_size = 0;
  std::size_t target_size = 0;
  std::vector<Morphism> members;

  [[nodiscard]] std::size_t size() const { return members.size(); }
};

HomSet hom_set(const MultiAlgebra& src, const MultiAlgebra& dst, HomMode mode,
               const Caps& caps = {});

enum class OrderedSearch {
  atoms_first,  // extend each atom assignment by continuity, then re-verify
  brute_force,  // filter all |dst|^|src| maps
};

/// (Sigma,<=)-homomorphisms src -> dst (isomorphisms with `iso`).
HomSet enumerate_ordered_homs(const OrderedAlgebra& src, const OrderedAlgebra& dst,
                              bool iso = false, OrderedSearch search = OrderedSearch::atoms_first,
                              OrderedHomOptions opts = {}, const Caps& caps = {});

// --- the functor P -------------------------------------------------------------------

/// Carrier P*(A) in mask order under inclusion; operations accumulate the
/// multialgebra's results over all argument choices.
OrderedAlgebra apply_P(const MultiAlgebra& m, const Caps& caps = {});

/// Image map A' -> h(A'). Throws ContractViolation when h is not a
/// homomorphism src -> dst.
Morphism apply_P_mor(const Morphism& h, const MultiAlgebra& src, const MultiAlgebra& dst,
                     const Caps& caps = {});

// --- the functor A -------------------------------------------------------------------

/// The multialgebra of atoms: universe = atoms, s(a) = atoms below s(a).
MultiAlgebra apply_A(const OrderedAlgebra& b);

/// Restriction to atoms. Throws ContractViolation when h is not a
/// (Sigma,<=)-homomorphism src -> dst.
Morphism apply_A_mor(const Morphism& h, const OrderedAlgebra& src, const OrderedAlgebra& dst,
                     const Caps& caps = {});

// --- equivalence -------------------------------------------------------------------------

struct IsoResult {
  Morphism morphism;
  Verdict verdict;
};

/// a -> {a} as a map m -> A(P(m)), verified to be a bijective full homomorphism.
IsoResult unit_iso(const MultiAlgebra& m, const Caps& caps = {});
/// b -> A_b as a map b -> P(A(b)), verified to be a (Sigma,<=)-isomorphism.
IsoResult counit_iso(const OrderedAlgebra& b, const Caps& caps = {});

/// Given g : P(a) -> P(b), the h : a -> b with P(h) = g.
Morphism full_preimage_P(const Morphism& g, const MultiAlgebra& a, const MultiAlgebra& b,
                         const Caps& caps = {});
/// Given h : A(a) -> A(b), the h' : a -> b with A(h') = h, h'(x) = sup h(A_x).
Morphism full_preimage_A(const Morphism& h, const OrderedAlgebra& a, const OrderedAlgebra& b,
                         const Caps& caps = {});

// --- adjunction --------------------------------------------------------------------------

/// The hom-set bijection Hom(A(B), A) ~ Hom(B, P(A)) for one pair (B, A).
class Adjunction {
 public:
  Adjunction(OrderedAlgebra b, MultiAlgebra a, const Caps& caps = {});

  [[nodiscard]] const OrderedAlgebra& ordered() const { return b_; }
  [[nodiscard]] const MultiAlgebra& multi() const { return a_; }
  [[nodiscard]] const MultiAlgebra& atoms_of_ordered() const { return atoms_b_; }
  [[nodiscard]] const OrderedAlgebra& powerset_of_multi() const { return powerset_a_; }

  /// phi(h)(b) = {h(c) : c in A_b}. Throws ContractViolation unless h is a
  /// homomorphism A(B) -> A.
  [[nodiscard]] Morphism phi(const Morphism& h) const;
  /// phi_inv(g)(b) = the a with g(b) = {a}, for atoms b. Throws
  /// ContractViolation unless g is a (Sigma,<=)-homomorphism B -> P(A).
  [[nodiscard]] Morphism phi_inv(const Morphism& g) const;

  [[nodiscard]] HomSet left_homs() const;   // Hom(A(B), A)
  [[nodiscard]] HomSet right_homs() const;  // Hom(B, P(A)), brute force

  /// Equal cardinalities, phi lands in and covers the right hom-set, and both
  /// round trips are identities.
  [[nodiscard]] Verdict check_bijection() const;

 private:
  OrderedAlgebra b_;
  MultiAlgebra a_;
  MultiAlgebra atoms_b_;
  OrderedAlgebra powerset_a_;
  Caps caps_;
};

/// With ba = (B, A), dc = (D, C), h : A -> C and h' : D -> B, checks
/// P(h) ∘ phi_BA(g) ∘ h' = phi_DC(h ∘ g ∘ A(h')) for every g in Hom(A(B), A).
Verdict check_naturality(const Adjunction& ba, const Adjunction& dc, const Morphism& h,
                         const Morphism& h_prime, const Caps& caps = {});

// --- plain algebras -------------------------------------------------------------------------

/// P(m) with the order forgotten.
PlainAlgebra apply_P_eq(const MultiAlgebra& m, const Caps& caps = {});
PlainAlgebra forget_order(const OrderedAlgebra& a);

/// h(s(t)) = s(h(t)) for every symbol and tuple.
Verdict check_plain_hom(const Morphism& h, const PlainAlgebra& a, const PlainAlgebra& b,
                        const Caps& caps = {});
std::vector<Morphism> enumerate_plain_isos(const PlainAlgebra& a, const PlainAlgebra& b,
                                           const Caps& caps = {});

}  // namespace malg
