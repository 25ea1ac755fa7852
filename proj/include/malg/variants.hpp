#pragma once

#include <optional>
#include <vector>

#include "malg/multialg.hpp"
#include "malg/ordalg.hpp"

namespace malg {

/// Like MultiAlgebra, but operations may return the empty set.
class PartialMultiAlgebra {
 public:
  using Table = std::vector<Subset>;

  /// Validates totality and widths only.
  PartialMultiAlgebra(Signature sig, Universe universe, std::vector<Table> tables,
                      const Caps& caps = {});
  explicit PartialMultiAlgebra(const MultiAlgebra& total);

  static PartialMultiAlgebra from_function(
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
  [[nodiscard]] bool is_total() const;
  /// The same structure as a MultiAlgebra when no value is empty.
  [[nodiscard]] std::optional<MultiAlgebra> to_total() const;

  friend bool operator==(const PartialMultiAlgebra&, const PartialMultiAlgebra&) = default;

 private:
  Signature sig_;
  Universe universe_;
  std::vector<Table> tables_;
};

/// Inclusion of image sets, as for multialgebras; an empty value passes
/// vacuously.
Verdict check_partial_hom(const Morphism& h, const PartialMultiAlgebra& src,
                          const PartialMultiAlgebra& dst, const Caps& caps = {});

/// The powerset construction over all 2^|A| subsets, empty set at index 0,
/// so that element i is the subset with mask i.
struct PartialPowerset {
  FinitePoset poset;
  CabaCertificate certificate;
  Signature signature;
  std::vector<std::vector<std::size_t>> tables;

  [[nodiscard]] std::size_t size() const { return poset.size(); }
  [[nodiscard]] std::size_t apply(std::size_t symbol, std::span<const std::size_t> args) const {
    return tables[symbol][tuple_index(args, size())];
  }
};

/// Throws CapExceeded above caps.max_powerset_universe, and Error if the
/// resulting order fails validate_caba.
PartialPowerset apply_P_partial(const PartialMultiAlgebra& m, const Caps& caps = {});

/// Morphisms on the bottomed side: atoms to atoms, every sup preserved
/// (including sup of the empty set, so bottom goes to bottom), and
/// h(s(a)) <= s(h(a)).
Verdict check_caba_hom(const Morphism& h, const PartialPowerset& src, const PartialPowerset& dst,
                       const Caps& caps = {});

/// A map from source elements to non-empty subsets of the target.
class SetValuedMorphism {
 public:
  /// Throws Error when an image is empty or of the wrong width.
  SetValuedMorphism(std::size_t target_size, std::vector<Subset> images);
  static SetValuedMorphism from_morphism(const Morphism& h);

  [[nodiscard]] std::size_t source_size() const { return images_.size(); }
  [[nodiscard]] std::size_t target_size() const { return target_size_; }
  [[nodiscard]] const Subset& operator()(std::size_t a) const { return images_[a]; }
  [[nodiscard]] const std::vector<Subset>& images() const { return images_; }
  /// The ordinary map when every image is a singleton.
  [[nodiscard]] std::optional<Morphism> collapse() const;

  friend bool operator==(const SetValuedMorphism&, const SetValuedMorphism&) = default;

 private:
  std::size_t target_size_;
  std::vector<Subset> images_;
};

/// Union of h(a) over a in s(a_1..a_n) is included in the union of s(b)
/// over b in h(a_1) x .. x h(a_n).
Verdict check_mm_hom(const SetValuedMorphism& h, const MultiAlgebra& src, const MultiAlgebra& dst,
                     const Caps& caps = {});

/// For a multialgebra over the empty signature: P(m) is the bare P*(A), the
/// operation clause of check_ordered_hom is vacuous and every map passes it.
/// Throws Error on a non-empty signature.
Verdict empty_signature_mode(const MultiAlgebra& m, const Caps& caps = {});

struct HomCountIdentity {
  std::uint64_t atom_maps = 0;     // |B|^|A|
  std::uint64_t ordered_maps = 0;  // continuous atom-preserving P*(A) -> P*(B), by brute force
  Verdict verdict;
};

/// Compares the two counts for sets of the given sizes.
HomCountIdentity empty_signature_hom_count(std::size_t a, std::size_t b, const Caps& caps = {});

}  // namespace malg
