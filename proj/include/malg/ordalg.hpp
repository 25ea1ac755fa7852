#pragma once

#include <optional>
#include <vector>

#include "malg/core.hpp"

namespace malg {

using OrderMatrix = std::vector<std::vector<bool>>;

/// A finite partial order stored as up-sets and down-sets.
class FinitePoset {
 public:
  /// Carrier = all non-empty subsets of `base` in mask order, ordered by
  /// inclusion. With `with_empty`, the empty set is prepended as index 0 and
  /// the remaining indices shift by one.
  static FinitePoset powerset_order(const Universe& base, bool with_empty = false);

  [[nodiscard]] std::size_t size() const { return carrier_.size(); }
  [[nodiscard]] const Universe& carrier() const { return carrier_; }
  [[nodiscard]] bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  [[nodiscard]] const Subset& up(std::size_t a) const { return up_[a]; }
  [[nodiscard]] const Subset& down(std::size_t a) const { return down_[a]; }
  [[nodiscard]] std::optional<std::size_t> maximum() const;
  [[nodiscard]] std::optional<std::size_t> minimum() const;
  /// Elements with nothing strictly below them.
  [[nodiscard]] Subset minimal_elements() const;
  [[nodiscard]] OrderMatrix matrix() const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.carrier_ == b.carrier_ && a.up_ == b.up_;
  }

 private:
  friend Checked<FinitePoset> validate_poset(Universe carrier, const OrderMatrix& leq);
  FinitePoset(Universe carrier, std::vector<Subset> up);

  Universe carrier_;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
  std::vector<std::size_t> up_count_;

  friend std::optional<std::size_t> sup(const FinitePoset&, const Subset&);
  friend std::optional<std::size_t> inf(const FinitePoset&, const Subset&);
};

/// Reflexivity, antisymmetry and transitivity, in that order.
Checked<FinitePoset> validate_poset(Universe carrier, const OrderMatrix& leq);

/// Least upper bound of a non-empty set, nullopt when none exists. Throws
/// Error on the empty set.
std::optional<std::size_t> sup(const FinitePoset& p, const Subset& s);
/// Greatest lower bound of a non-empty set, nullopt when none exists.
std::optional<std::size_t> inf(const FinitePoset& p, const Subset& s);

/// Evidence that a poset is a complete, atomic, bottomless Boolean algebra.
struct CablCertificate {
  std::size_t top = 0;
  std::vector<std::size_t> atoms;                    // increasing carrier index
  std::vector<Subset> atom_sets;                     // per element, over the carrier
  std::vector<std::optional<std::size_t>> complement;  // nullopt exactly at top
  bool sampled = false;

  friend bool operator==(const CablCertificate&, const CablCertificate&) = default;
};

/// Checks, in order: "suprema" (every non-empty subset has a sup), "maximum",
/// "semi-complement" (every a != top), "atomicity" (a = sup A_a), and the
/// derived "cardinality" |carrier| = 2^|atoms| - 1. Carriers above
/// caps.max_exhaustive_carrier are checked on sampled pairs and the
/// certificate is marked sampled.
Checked<CablCertificate> validate_cabl(const FinitePoset& p, const Caps& caps = {});

/// The order isomorphism a -> A_a onto P*(atoms), with carrier index
/// mask(A_a) - 1, together with its verification.
struct Canonical {
  Morphism to_powerset;
  Verdict verdict;
};
Canonical canonicalize(const FinitePoset& p, const CablCertificate& cert);

/// A (Sigma,<=)-algebra. Atom sets are cached as bit masks over atom indices
/// so that the canonical powerset arithmetic is cheap.
class OrderedAlgebra {
 public:
  using Table = std::vector<std::size_t>;  // indexed by tuple_index

  [[nodiscard]] const Signature& signature() const { return sig_; }
  [[nodiscard]] const FinitePoset& poset() const { return poset_; }
  [[nodiscard]] const Universe& carrier() const { return poset_.carrier(); }
  [[nodiscard]] const CablCertificate& certificate() const { return cert_; }
  [[nodiscard]] std::size_t size() const { return poset_.size(); }
  [[nodiscard]] const Table& table(std::size_t symbol) const { return tables_[symbol]; }
  [[nodiscard]] std::size_t apply(std::size_t symbol, std::span<const std::size_t> args) const {
    return tables_[symbol][tuple_index(args, size())];
  }

  [[nodiscard]] const std::vector<std::size_t>& atoms() const { return cert_.atoms; }
  [[nodiscard]] std::size_t atom_count() const { return cert_.atoms.size(); }
  [[nodiscard]] bool is_atom(std::size_t e) const { return atom_index_[e].has_value(); }
  [[nodiscard]] std::optional<std::size_t> atom_index(std::size_t e) const { return atom_index_[e]; }
  /// A_e as a mask over atom indices.
  [[nodiscard]] std::uint64_t atom_mask(std::size_t e) const { return atom_mask_[e]; }
  /// The element whose atom set is `mask` (non-zero).
  [[nodiscard]] std::size_t element_with_atoms(std::uint64_t mask) const {
    return element_of_mask_[mask];
  }
  [[nodiscard]] bool leq(std::size_t a, std::size_t b) const {
    return (atom_mask_[a] & ~atom_mask_[b]) == 0;
  }
  [[nodiscard]] std::size_t join(std::size_t a, std::size_t b) const {
    return element_of_mask_[atom_mask_[a] | atom_mask_[b]];
  }
  /// sup of a non-empty subset of the carrier.
  [[nodiscard]] std::size_t sup_of(const Subset& s) const;

  friend bool operator==(const OrderedAlgebra& a, const OrderedAlgebra& b) {
    return a.sig_ == b.sig_ && a.poset_ == b.poset_ && a.tables_ == b.tables_;
  }

 private:
  friend Checked<OrderedAlgebra> validate_ordered_algebra(FinitePoset, CablCertificate,
                                                          Signature, std::vector<Table>,
                                                          const Caps&);
  friend OrderedAlgebra powerset_algebra(Signature sig, const Universe& base,
                                         std::vector<Table> tables);
  OrderedAlgebra(FinitePoset p, CablCertificate cert, Signature sig, std::vector<Table> tables);

  FinitePoset poset_;
  CablCertificate cert_;
  Signature sig_;
  std::vector<Table> tables_;
  std::vector<std::uint64_t> atom_mask_;
  std::vector<std::size_t> element_of_mask_;
  std::vector<std::optional<std::size_t>> atom_index_;
};

/// Checks the atom-generation condition: every s(a1..an) equals the sup of
/// s(b1..bn) over atom tuples b_i <= a_i. Throws Error when a table is not
/// total or mentions elements outside the carrier.
Checked<OrderedAlgebra> validate_ordered_algebra(FinitePoset p, CablCertificate cert,
                                                 Signature sig,
                                                 std::vector<OrderedAlgebra::Table> tables,
                                                 const Caps& caps = {});

/// The (Sigma,<=)-algebra on P*(base) under inclusion with the given tables.
/// The tables are trusted to satisfy atom generation; callers that build
/// them by accumulation over atoms get that for free.
OrderedAlgebra powerset_algebra(Signature sig, const Universe& base,
                                std::vector<OrderedAlgebra::Table> tables);

struct OrderedHomOptions {
  /// Off for the relaxed morphisms matching set-valued homomorphisms.
  bool require_atoms = true;
};

/// Clause checks of a (Sigma,<=)-homomorphism, usable on their own.
Verdict check_atoms_preserved(const Morphism& h, const OrderedAlgebra& src,
                              const OrderedAlgebra& dst);
/// h(sup S) = sup h(S) for every non-empty S. Binary joins decide this on
/// finite carriers; beyond caps.max_exhaustive_carrier pairs are sampled.
Verdict check_continuity(const Morphism& h, const OrderedAlgebra& src,
                         const OrderedAlgebra& dst, const Caps& caps = {});
/// h(s(a)) <= s(h(a)) for every symbol and tuple.
Verdict check_almost_hom(const Morphism& h, const OrderedAlgebra& src,
                         const OrderedAlgebra& dst, const Caps& caps = {});

/// Runs atoms, continuity, then the operation inequality and reports the
/// first failing clause.
Verdict check_ordered_hom(const Morphism& h, const OrderedAlgebra& src,
                          const OrderedAlgebra& dst, OrderedHomOptions opts = {},
                          const Caps& caps = {});

/// Bijective and both directions are (Sigma,<=)-homomorphisms.
Verdict check_ordered_iso(const Morphism& h, const OrderedAlgebra& src,
                          const OrderedAlgebra& dst, const Caps& caps = {});

/// a_i <= b_i for all i implies s(a) <= s(b).
Verdict check_monotone(const OrderedAlgebra& a, const Caps& caps = {});
/// The same on raw tables, which need not satisfy atom generation.
Verdict check_monotone(const FinitePoset& p, const Signature& sig,
                       const std::vector<OrderedAlgebra::Table>& tables, const Caps& caps = {});

/// Deterministic bottom-up evaluation.
std::size_t eval_term_ord(const OrderedAlgebra& a, const Term& t, const Valuation& valuation);

// --- Boolean algebras with bottom (partial multialgebra side) ---------------

struct CabaCertificate {
  std::size_t top = 0;
  std::size_t bottom = 0;
  std::vector<std::size_t> atoms;
  std::vector<Subset> atom_sets;
};

/// Complete atomic Boolean algebra check with sup of the empty set = bottom:
/// "bottom", "maximum", "distinct", "suprema", "complement", "atomicity".
Checked<CabaCertificate> validate_caba(const FinitePoset& p, const Caps& caps = {});

}  // namespace malg
