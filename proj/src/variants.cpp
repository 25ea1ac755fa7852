#include "malg/variants.hpp"

#include <algorithm>

#include "malg/functors.hpp"

namespace malg {

namespace {

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

void require_typed(std::size_t h_src, std::size_t h_dst, std::size_t src, std::size_t dst) {
  if (h_src != src || h_dst != dst) throw Error("morphism is not typed between the given structures");
}

}  // namespace

// --- partial multialgebras ------------------------------------------------------------

PartialMultiAlgebra::PartialMultiAlgebra(Signature sig, Universe universe, std::vector<Table> tables,
                                         const Caps& caps)
    : sig_(std::move(sig)), universe_(std::move(universe)), tables_(std::move(tables)) {
  if (tables_.size() != sig_.size()) throw Error("one table per symbol required");
  for (std::size_t s = 0; s < sig_.size(); ++s) {
    if (tables_[s].size() != tuple_count(size(), sig_[s].arity, caps))
      throw Error("table for '" + sig_[s].name + "' is not total");
    for (const auto& v : tables_[s])
      if (v.width() != size())
        throw Error("table for '" + sig_[s].name + "' has a value of the wrong width");
  }
}

PartialMultiAlgebra::PartialMultiAlgebra(const MultiAlgebra& total)
    : sig_(total.signature()), universe_(total.universe()) {
  for (std::size_t s = 0; s < sig_.size(); ++s) tables_.push_back(total.table(s));
}

PartialMultiAlgebra PartialMultiAlgebra::from_function(
    Signature sig, Universe universe,
    const std::function<Subset(std::size_t, const std::vector<std::size_t>&)>& fill,
    const Caps& caps) {
  std::vector<Table> tables;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    Table t;
    for (const auto& tuple : Tuples(universe.size(), sig[s].arity, caps)) t.push_back(fill(s, tuple));
    tables.push_back(std::move(t));
  }
  return PartialMultiAlgebra(std::move(sig), std::move(universe), std::move(tables), caps);
}

bool PartialMultiAlgebra::is_total() const {
  for (const auto& t : tables_)
    for (const auto& v : t)
      if (v.empty()) return false;
  return true;
}

std::optional<MultiAlgebra> PartialMultiAlgebra::to_total() const {
  if (!is_total()) return std::nullopt;
  return MultiAlgebra(sig_, universe_, tables_);
}

Verdict check_partial_hom(const Morphism& h, const PartialMultiAlgebra& src,
                          const PartialMultiAlgebra& dst, const Caps& caps) {
  if (!(src.signature() == dst.signature()))
    throw SignatureMismatch("source and target signatures differ");
  require_typed(h.source_size(), h.target_size(), src.size(), dst.size());
  const auto& sig = src.signature();
  std::vector<std::size_t> image;
  for (std::size_t s = 0; s < sig.size(); ++s)
    for (const auto& t : Tuples(src.size(), sig[s].arity, caps)) {
      image.resize(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) image[i] = h(t[i]);
      const auto lhs = h.image(src.apply(s, t));
      const auto& rhs = dst.apply(s, image);
      if (!lhs.is_subset_of(rhs))
        return Verdict::fail("partial-hom",
                             "h(" + sig[s].name + format_tuple(src.universe(), t) + ") = " +
                                 format_subset(dst.universe(), lhs) + " is not included in " +
                                 sig[s].name + format_tuple(dst.universe(), image) + " = " +
                                 format_subset(dst.universe(), rhs),
                             Witness{s, t, {}});
    }
  return Verdict::pass();
}

PartialPowerset apply_P_partial(const PartialMultiAlgebra& m, const Caps& caps) {
  const auto n = m.size();
  if (n > caps.max_powerset_universe)
    throw CapExceeded("P of a " + std::to_string(n) + "-element structure exceeds cap " +
                      std::to_string(caps.max_powerset_universe));
  const std::size_t carrier = bit(n);
  auto poset = FinitePoset::powerset_order(m.universe(), true);
  auto cert = validate_caba(poset, caps);
  if (!cert) throw Error("full powerset failed the Boolean algebra check: " + cert.verdict.detail);

  PartialPowerset out{std::move(poset), *cert.value, m.signature(), {}};
  const auto& sig = m.signature();
  for (std::size_t s = 0; s < sig.size(); ++s) {
    const auto arity = sig[s].arity;
    std::vector<std::size_t> table(static_cast<std::size_t>(tuple_count(carrier, arity, caps)), 0);
    std::vector<std::size_t> elems(arity), probe(arity);
    std::size_t flat = 0;
    for (const auto& t : Tuples(carrier, arity, caps)) {
      bool empty = false;
      for (std::size_t i = 0; i < arity; ++i)
        if (t[i] == 0) empty = true;
      std::optional<std::size_t> split;
      for (std::size_t i = 0; i < arity && !empty; ++i) {
        const std::uint64_t mask = t[i];
        if ((mask & (mask - 1)) != 0) {
          split = i;
          break;
        }
        elems[i] = static_cast<std::size_t>(__builtin_ctzll(mask));
      }
      if (empty) {
        table[flat] = 0;
      } else if (!split) {
        table[flat] = static_cast<std::size_t>(m.apply(s, elems).to_mask());
      } else {
        const std::uint64_t mask = t[*split];
        const std::uint64_t low = mask & (~mask + 1);
        probe.assign(t.begin(), t.end());
        probe[*split] = static_cast<std::size_t>(low);
        const auto a = table[tuple_index(probe, carrier)];
        probe[*split] = static_cast<std::size_t>(mask ^ low);
        const auto b = table[tuple_index(probe, carrier)];
        table[flat] = a | b;
      }
      ++flat;
    }
    out.tables.push_back(std::move(table));
  }
  return out;
}

Verdict check_caba_hom(const Morphism& h, const PartialPowerset& src, const PartialPowerset& dst,
                       const Caps& caps) {
  if (!(src.signature == dst.signature)) throw SignatureMismatch("source and target signatures differ");
  require_typed(h.source_size(), h.target_size(), src.size(), dst.size());
  const auto& su = src.poset.carrier();
  const auto& du = dst.poset.carrier();
  for (auto a : src.certificate.atoms)
    if (std::find(dst.certificate.atoms.begin(), dst.certificate.atoms.end(), h(a)) ==
        dst.certificate.atoms.end())
      return Verdict::fail("atoms", "h(" + su.label(a) + ") = " + du.label(h(a)) + " is not an atom",
                           Witness{{}, {}, {a}});
  if (h(src.certificate.bottom) != dst.certificate.bottom)
    return Verdict::fail("empty-sup", "h(bottom) = " + du.label(h(src.certificate.bottom)) +
                                          " is not the bottom",
                         Witness{{}, {}, {src.certificate.bottom}});
  // elements are their own masks
  for (std::size_t a = 0; a < src.size(); ++a)
    for (std::size_t b = a + 1; b < src.size(); ++b)
      if (h(a | b) != (h(a) | h(b)))
        return Verdict::fail("continuity",
                             "h(sup{" + su.label(a) + "," + su.label(b) + "}) = " + du.label(h(a | b)) +
                                 " but sup of images is " + du.label(h(a) | h(b)),
                             Witness{{}, {}, {a, b}});
  std::vector<std::size_t> image;
  for (std::size_t s = 0; s < src.signature.size(); ++s)
    for (const auto& t : Tuples(src.size(), src.signature[s].arity, caps)) {
      image.resize(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) image[i] = h(t[i]);
      const auto lhs = h(src.apply(s, t));
      const auto rhs = dst.apply(s, image);
      if ((lhs & ~rhs) != 0)
        return Verdict::fail("almost-hom",
                             "h(" + src.signature[s].name + format_tuple(su, t) + ") = " +
                                 du.label(lhs) + " exceeds " + du.label(rhs),
                             Witness{s, t, {}});
    }
  return Verdict::pass();
}

// --- set-valued morphisms -------------------------------------------------------------------

SetValuedMorphism::SetValuedMorphism(std::size_t target_size, std::vector<Subset> images)
    : target_size_(target_size), images_(std::move(images)) {
  for (const auto& s : images_) {
    if (s.width() != target_size_) throw Error("image of the wrong width");
    if (s.empty()) throw Error("empty value forbidden: set-valued morphism image is empty");
  }
}

SetValuedMorphism SetValuedMorphism::from_morphism(const Morphism& h) {
  std::vector<Subset> images;
  for (std::size_t a = 0; a < h.source_size(); ++a)
    images.push_back(Subset::singleton(h.target_size(), h(a)));
  return SetValuedMorphism(h.target_size(), std::move(images));
}

std::optional<Morphism> SetValuedMorphism::collapse() const {
  std::vector<std::size_t> map;
  for (const auto& s : images_) {
    if (s.count() != 1) return std::nullopt;
    map.push_back(*s.first());
  }
  return Morphism(images_.size(), target_size_, std::move(map));
}

Verdict check_mm_hom(const SetValuedMorphism& h, const MultiAlgebra& src, const MultiAlgebra& dst,
                     const Caps& caps) {
  if (!(src.signature() == dst.signature()))
    throw SignatureMismatch("source and target signatures differ");
  require_typed(h.source_size(), h.target_size(), src.size(), dst.size());
  const auto& sig = src.signature();
  for (std::size_t s = 0; s < sig.size(); ++s)
    for (const auto& t : Tuples(src.size(), sig[s].arity, caps)) {
      Subset lhs(dst.size());
      src.apply(s, t).for_each([&](std::size_t a) { lhs |= h(a); });

      std::vector<std::vector<std::size_t>> lists;
      for (auto a : t) lists.push_back(h(a).elements());
      Subset rhs(dst.size());
      std::vector<std::size_t> pos(lists.size(), 0), b(lists.size());
      while (true) {
        for (std::size_t i = 0; i < lists.size(); ++i) b[i] = lists[i][pos[i]];
        rhs |= dst.apply(s, b);
        std::size_t i = lists.size();
        while (i > 0 && ++pos[i - 1] == lists[i - 1].size()) pos[--i] = 0;
        if (i == 0) break;
      }
      if (!lhs.is_subset_of(rhs))
        return Verdict::fail("mm-hom",
                             "images of " + sig[s].name + format_tuple(src.universe(), t) + " give " +
                                 format_subset(dst.universe(), lhs) + ", not included in " +
                                 format_subset(dst.universe(), rhs),
                             Witness{s, t, {}});
    }
  return Verdict::pass();
}

// --- empty signature -----------------------------------------------------------------------

Verdict empty_signature_mode(const MultiAlgebra& m, const Caps& caps) {
  if (!m.signature().empty()) throw Error("empty_signature_mode requires an empty signature");
  const auto p = apply_P(m, caps);
  const std::size_t expected = bit(m.size()) - 1;
  if (p.size() != expected)
    return Verdict::fail("carrier", "P(m) has " + std::to_string(p.size()) + " elements, expected " +
                                        std::to_string(expected));
  if (!(p.poset() == FinitePoset::powerset_order(m.universe())))
    return Verdict::fail("carrier", "P(m) is not ordered by inclusion");
  if (auto c = validate_cabl(p.poset(), caps); !c) return c.verdict;
  // every endomorphism candidate passes the operation clause
  const auto id = Morphism::identity(p.size());
  std::vector<std::size_t> constant(p.size(), 0);
  for (const auto& h : {id, Morphism(p.size(), p.size(), constant)})
    if (auto v = check_almost_hom(h, p, p, caps); !v)
      return Verdict::fail("vacuous-operations", "operation clause is not vacuous: " + v.detail);
  return Verdict::pass();
}

HomCountIdentity empty_signature_hom_count(std::size_t a, std::size_t b, const Caps& caps) {
  const Signature empty;
  const MultiAlgebra ma(empty, Universe::numbered(a), {});
  const MultiAlgebra mb(empty, Universe::numbered(b), {});
  HomCountIdentity out;
  out.atom_maps = *checked_pow(b, a, UINT64_MAX);
  const auto homs = enumerate_ordered_homs(apply_P(ma, caps), apply_P(mb, caps), false,
                                           OrderedSearch::brute_force, {}, caps);
  out.ordered_maps = homs.size();
  out.verdict = out.atom_maps == out.ordered_maps
                    ? Verdict::pass()
                    : Verdict::fail("hom-count", std::to_string(out.atom_maps) + " atom maps but " +
                                                     std::to_string(out.ordered_maps) +
                                                     " continuous atom-preserving maps");
  return out;
}

}  // namespace malg
