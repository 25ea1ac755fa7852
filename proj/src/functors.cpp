#include "malg/functors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace malg {

std::string to_string(Contract c) {
  switch (c) {
    case Contract::hom: return "hom";
    case Contract::full: return "full";
    case Contract::iso: return "iso";
    case Contract::ordered: return "ordered";
    case Contract::ordered_iso: return "ordered-iso";
    case Contract::plain_iso: return "plain-iso";
  }
  return "?";
}

HomSet hom_set(const MultiAlgebra& src, const MultiAlgebra& dst, HomMode mode, const Caps& caps) {
  HomSet out;
  out.contract = mode == HomMode::hom ? Contract::hom
                 : mode == HomMode::full ? Contract::full
                                         : Contract::iso;
  out.source_size = src.size();
  out.target_size = dst.size();
  out.members = enumerate_homs(src, dst, mode, caps);
  return out;
}

namespace {

/// Odometer over every map of the given shape, lexicographic.
void for_each_map(std::size_t src, std::size_t dst, const Caps& caps,
                  const std::function<void(const Morphism&)>& f) {
  if (!checked_pow(dst, src, caps.max_maps))
    throw CapExceeded(std::to_string(dst) + "^" + std::to_string(src) +
                      " candidate maps exceeds cap " + std::to_string(caps.max_maps));
  std::vector<std::size_t> map(src, 0);
  while (true) {
    f(Morphism(src, dst, map));
    std::size_t i = src;
    while (true) {
      if (i == 0) return;
      --i;
      if (++map[i] < dst) break;
      map[i] = 0;
    }
  }
}

}  // namespace

HomSet enumerate_ordered_homs(const OrderedAlgebra& src, const OrderedAlgebra& dst, bool iso,
                              OrderedSearch search, OrderedHomOptions opts, const Caps& caps) {
  if (!(src.signature() == dst.signature()))
    throw SignatureMismatch("source and target signatures differ");
  HomSet out;
  out.contract = iso ? Contract::ordered_iso : Contract::ordered;
  out.source_size = src.size();
  out.target_size = dst.size();
  auto accept = [&](const Morphism& h) {
    const auto v = iso ? check_ordered_iso(h, src, dst, caps)
                       : check_ordered_hom(h, src, dst, opts, caps);
    if (v) out.members.push_back(h);
  };

  if (search == OrderedSearch::brute_force) {
    for_each_map(src.size(), dst.size(), caps, accept);
    return out;
  }

  // A continuous map is fixed by its values on atoms: h(x) = sup h(A_x).
  std::vector<std::size_t> candidates;
  if (opts.require_atoms) {
    candidates = dst.atoms();
  } else {
    for (std::size_t e = 0; e < dst.size(); ++e) candidates.push_back(e);
  }
  const auto k = src.atom_count();
  for_each_map(k, candidates.size(), caps, [&](const Morphism& choice) {
    std::vector<std::size_t> map(src.size());
    for (std::size_t x = 0; x < src.size(); ++x) {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < k; ++i)
        if ((src.atom_mask(x) >> i) & 1u) mask |= dst.atom_mask(candidates[choice(i)]);
      map[x] = dst.element_with_atoms(mask);
    }
    accept(Morphism(src.size(), dst.size(), std::move(map)));
  });
  std::sort(out.members.begin(), out.members.end());
  return out;
}

// --- P ---------------------------------------------------------------------------------

OrderedAlgebra apply_P(const MultiAlgebra& m, const Caps& caps) {
  const auto n = m.size();
  if (n > caps.max_powerset_universe)
    throw CapExceeded("P of a " + std::to_string(n) + "-element multialgebra exceeds cap " +
                      std::to_string(caps.max_powerset_universe));
  const std::size_t carrier = (std::size_t{1} << n) - 1;
  const auto& sig = m.signature();
  std::vector<OrderedAlgebra::Table> tables;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    const auto arity = sig[s].arity;
    const auto count = tuple_count(carrier, arity, caps);
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(count), 0);
    std::size_t flat = 0;
    std::vector<std::size_t> elems(arity), probe(arity);
    for (const auto& t : Tuples(carrier, arity, caps)) {
      // Split the first non-singleton argument at its lowest element; both
      // halves precede t lexicographically and are already computed.
      std::optional<std::size_t> split;
      for (std::size_t i = 0; i < arity; ++i) {
        const std::uint64_t mask = t[i] + 1;
        if ((mask & (mask - 1)) != 0) {
          split = i;
          break;
        }
        elems[i] = static_cast<std::size_t>(__builtin_ctzll(mask));
      }
      if (!split) {
        masks[flat] = m.apply(s, elems).to_mask();
      } else {
        const std::uint64_t mask = t[*split] + 1;
        const std::uint64_t low = mask & (~mask + 1);
        probe.assign(t.begin(), t.end());
        probe[*split] = static_cast<std::size_t>(low - 1);
        const auto a = masks[tuple_index(probe, carrier)];
        probe[*split] = static_cast<std::size_t>((mask ^ low) - 1);
        const auto b = masks[tuple_index(probe, carrier)];
        masks[flat] = a | b;
      }
      ++flat;
    }
    OrderedAlgebra::Table table(masks.size());
    for (std::size_t i = 0; i < masks.size(); ++i) table[i] = static_cast<std::size_t>(masks[i] - 1);
    tables.push_back(std::move(table));
  }
  return powerset_algebra(sig, m.universe(), std::move(tables));
}

Morphism apply_P_mor(const Morphism& h, const MultiAlgebra& src, const MultiAlgebra& dst,
                     const Caps& caps) {
  if (auto v = check_hom(h, src, dst, caps); !v)
    throw ContractViolation("P(h) requires a homomorphism: " + v.detail);
  const std::size_t from = (std::size_t{1} << src.size()) - 1;
  const std::size_t to = (std::size_t{1} << dst.size()) - 1;
  std::vector<std::size_t> map(from);
  for (std::size_t idx = 0; idx < from; ++idx) {
    const std::uint64_t mask = idx + 1;
    std::uint64_t image = 0;
    for (std::size_t a = 0; a < src.size(); ++a)
      if ((mask >> a) & 1u) image |= std::uint64_t{1} << h(a);
    map[idx] = static_cast<std::size_t>(image - 1);
  }
  return Morphism(from, to, std::move(map));
}

// --- A ---------------------------------------------------------------------------------

MultiAlgebra apply_A(const OrderedAlgebra& b) {
  std::vector<std::string> labels;
  for (auto a : b.atoms()) labels.push_back(b.carrier().label(a));
  const auto k = b.atom_count();
  return MultiAlgebra::from_function(
      b.signature(), Universe(std::move(labels)),
      [&](std::size_t s, const std::vector<std::size_t>& t) {
        std::vector<std::size_t> args(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) args[i] = b.atoms()[t[i]];
        return Subset::from_mask(k, b.atom_mask(b.apply(s, args)));
      });
}

Morphism apply_A_mor(const Morphism& h, const OrderedAlgebra& src, const OrderedAlgebra& dst,
                     const Caps& caps) {
  if (auto v = check_ordered_hom(h, src, dst, {}, caps); !v)
    throw ContractViolation("A(h) requires a (Sigma,<=)-homomorphism: " + v.detail);
  std::vector<std::size_t> map;
  for (auto a : src.atoms()) map.push_back(*dst.atom_index(h(a)));
  return Morphism(src.atom_count(), dst.atom_count(), std::move(map));
}

// --- unit / counit -----------------------------------------------------------------------

IsoResult unit_iso(const MultiAlgebra& m, const Caps& caps) {
  const auto p = apply_P(m, caps);
  const auto back = apply_A(p);
  std::vector<std::size_t> map(m.size());
  for (std::size_t a = 0; a < m.size(); ++a) map[a] = *p.atom_index((std::size_t{1} << a) - 1);
  Morphism eta(m.size(), back.size(), std::move(map));
  Verdict v = eta.is_bijective() ? check_full_hom(eta, m, back, caps)
                                 : Verdict::fail("bijective", "a -> {a} is not a bijection");
  return {std::move(eta), std::move(v)};
}

IsoResult counit_iso(const OrderedAlgebra& b, const Caps& caps) {
  const auto atoms = apply_A(b);
  const auto p = apply_P(atoms, caps);
  std::vector<std::size_t> map(b.size());
  for (std::size_t e = 0; e < b.size(); ++e) map[e] = static_cast<std::size_t>(b.atom_mask(e) - 1);
  Morphism eps(b.size(), p.size(), std::move(map));
  auto v = check_ordered_iso(eps, b, p, caps);
  return {std::move(eps), std::move(v)};
}

Morphism full_preimage_P(const Morphism& g, const MultiAlgebra& a, const MultiAlgebra& b,
                         const Caps& caps) {
  const auto pa = apply_P(a, caps);
  const auto pb = apply_P(b, caps);
  if (auto v = check_ordered_hom(g, pa, pb, {}, caps); !v)
    throw ContractViolation("preimage under P requires a (Sigma,<=)-homomorphism: " + v.detail);
  std::vector<std::size_t> map(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    const std::uint64_t image = g((std::size_t{1} << x) - 1) + 1;
    map[x] = static_cast<std::size_t>(__builtin_ctzll(image));
  }
  return Morphism(a.size(), b.size(), std::move(map));
}

Morphism full_preimage_A(const Morphism& h, const OrderedAlgebra& a, const OrderedAlgebra& b,
                         const Caps& caps) {
  const auto aa = apply_A(a);
  const auto ab = apply_A(b);
  if (auto v = check_hom(h, aa, ab, caps); !v)
    throw ContractViolation("preimage under A requires a homomorphism of atoms: " + v.detail);
  std::vector<std::size_t> map(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < a.atom_count(); ++i)
      if ((a.atom_mask(x) >> i) & 1u) mask |= b.atom_mask(b.atoms()[h(i)]);
    map[x] = b.element_with_atoms(mask);
  }
  return Morphism(a.size(), b.size(), std::move(map));
}

// --- adjunction --------------------------------------------------------------------------

Adjunction::Adjunction(OrderedAlgebra b, MultiAlgebra a, const Caps& caps)
    : b_(std::move(b)),
      a_(std::move(a)),
      atoms_b_(apply_A(b_)),
      powerset_a_(apply_P(a_, caps)),
      caps_(caps) {
  if (!(b_.signature() == a_.signature()))
    throw SignatureMismatch("adjunction pair over different signatures");
}

Morphism Adjunction::phi(const Morphism& h) const {
  if (auto v = check_hom(h, atoms_b_, a_, caps_); !v)
    throw ContractViolation("phi requires a homomorphism A(B) -> A: " + v.detail);
  std::vector<std::size_t> map(b_.size());
  for (std::size_t x = 0; x < b_.size(); ++x) {
    std::uint64_t image = 0;
    for (std::size_t i = 0; i < b_.atom_count(); ++i)
      if ((b_.atom_mask(x) >> i) & 1u) image |= std::uint64_t{1} << h(i);
    map[x] = static_cast<std::size_t>(image - 1);
  }
  return Morphism(b_.size(), powerset_a_.size(), std::move(map));
}

Morphism Adjunction::phi_inv(const Morphism& g) const {
  if (auto v = check_ordered_hom(g, b_, powerset_a_, {}, caps_); !v)
    throw ContractViolation("phi_inv requires a (Sigma,<=)-homomorphism B -> P(A): " + v.detail);
  std::vector<std::size_t> map(b_.atom_count());
  for (std::size_t i = 0; i < b_.atom_count(); ++i) {
    const std::uint64_t singleton = g(b_.atoms()[i]) + 1;
    map[i] = static_cast<std::size_t>(__builtin_ctzll(singleton));
  }
  return Morphism(b_.atom_count(), a_.size(), std::move(map));
}

HomSet Adjunction::left_homs() const { return hom_set(atoms_b_, a_, HomMode::hom, caps_); }

HomSet Adjunction::right_homs() const {
  return enumerate_ordered_homs(b_, powerset_a_, false, OrderedSearch::brute_force, {}, caps_);
}

Verdict Adjunction::check_bijection() const {
  const auto left = left_homs();
  const auto right = right_homs();
  if (left.size() != right.size())
    return Verdict::fail("cardinality", "|Hom(A(B),A)| = " + std::to_string(left.size()) +
                                            " but |Hom(B,P(A))| = " + std::to_string(right.size()));
  std::set<Morphism> image;
  for (const auto& h : left.members) {
    const auto g = phi(h);
    if (!std::binary_search(right.members.begin(), right.members.end(), g))
      return Verdict::fail("phi-codomain", "phi(h) is not a (Sigma,<=)-homomorphism",
                           Witness{{}, {}, h.map()});
    if (!(phi_inv(g) == h))
      return Verdict::fail("phi-inv-after-phi", "phi_inv(phi(h)) != h", Witness{{}, {}, h.map()});
    image.insert(g);
  }
  if (image.size() != right.size())
    return Verdict::fail("phi-surjective", "phi misses part of Hom(B,P(A))");
  for (const auto& g : right.members)
    if (!(phi(phi_inv(g)) == g))
      return Verdict::fail("phi-after-phi-inv", "phi(phi_inv(g)) != g", Witness{{}, {}, g.map()});
  return Verdict::pass();
}

Verdict check_naturality(const Adjunction& ba, const Adjunction& dc, const Morphism& h,
                         const Morphism& h_prime, const Caps& caps) {
  // h : A -> C, h' : D -> B
  if (auto v = check_hom(h, ba.multi(), dc.multi(), caps); !v)
    throw ContractViolation("naturality requires h : A -> C to be a homomorphism: " + v.detail);
  const auto left_leg = apply_A_mor(h_prime, dc.ordered(), ba.ordered(), caps);
  const auto p_h = apply_P_mor(h, ba.multi(), dc.multi(), caps);
  for (const auto& g : ba.left_homs().members) {
    const auto right_path = compose(p_h, compose(ba.phi(g), h_prime));
    const auto left_path = dc.phi(compose(h, compose(g, left_leg)));
    if (!(right_path == left_path))
      return Verdict::fail("naturality", "the two paths around the square differ at g",
                           Witness{{}, {}, g.map()});
  }
  return Verdict::pass();
}

// --- plain algebras ---------------------------------------------------------------------

PlainAlgebra forget_order(const OrderedAlgebra& a) {
  PlainAlgebra out{a.signature(), a.carrier(), {}};
  for (std::size_t s = 0; s < a.signature().size(); ++s) out.tables.push_back(a.table(s));
  return out;
}

PlainAlgebra apply_P_eq(const MultiAlgebra& m, const Caps& caps) {
  return forget_order(apply_P(m, caps));
}

Verdict check_plain_hom(const Morphism& h, const PlainAlgebra& a, const PlainAlgebra& b,
                        const Caps& caps) {
  if (!(a.signature == b.signature)) throw SignatureMismatch("signatures differ");
  if (h.source_size() != a.size() || h.target_size() != b.size())
    throw Error("morphism is not typed between the given algebras");
  std::vector<std::size_t> image;
  for (std::size_t s = 0; s < a.signature.size(); ++s) {
    for (const auto& t : Tuples(a.size(), a.signature[s].arity, caps)) {
      image.resize(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) image[i] = h(t[i]);
      const auto lhs = h(a.apply(s, t));
      const auto rhs = b.apply(s, image);
      if (lhs != rhs)
        return Verdict::fail("plain-hom",
                             "h(" + a.signature[s].name + format_tuple(a.universe, t) + ") = " +
                                 b.universe.label(lhs) + " but " + a.signature[s].name +
                                 format_tuple(b.universe, image) + " = " + b.universe.label(rhs),
                             Witness{s, t, {}});
    }
  }
  return Verdict::pass();
}

std::vector<Morphism> enumerate_plain_isos(const PlainAlgebra& a, const PlainAlgebra& b,
                                           const Caps& caps) {
  if (!(a.signature == b.signature)) throw SignatureMismatch("signatures differ");
  if (!checked_pow(b.size(), a.size(), caps.max_maps))
    throw CapExceeded("plain isomorphism search exceeds cap " + std::to_string(caps.max_maps));
  std::vector<Morphism> out;
  if (a.size() != b.size()) return out;
  const auto n = a.size();

  struct Constraint {
    std::size_t symbol;
    std::vector<std::size_t> tuple;
  };
  std::vector<std::vector<Constraint>> by_trigger(n);
  for (std::size_t s = 0; s < a.signature.size(); ++s)
    for (const auto& t : Tuples(n, a.signature[s].arity, caps)) {
      std::size_t trigger = a.apply(s, t);
      for (auto e : t) trigger = std::max(trigger, e);
      by_trigger[trigger].push_back({s, t});
    }

  std::vector<std::size_t> map(n, 0), image;
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == n) {
      out.emplace_back(n, n, map);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      map[k] = v;
      bool ok = true;
      for (const auto& c : by_trigger[k]) {
        image.resize(c.tuple.size());
        for (std::size_t i = 0; i < c.tuple.size(); ++i) image[i] = map[c.tuple[i]];
        if (map[a.apply(c.symbol, c.tuple)] != b.apply(c.symbol, image)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[v] = true;
      go(k + 1);
      used[v] = false;
    }
  };
  go(0);
  return out;
}

}  // namespace malg
