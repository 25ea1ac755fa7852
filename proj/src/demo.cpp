#include "malg/demo.hpp"

namespace malg {

namespace {

MultiAlgebra constant_unary(std::uint64_t mask) {
  return MultiAlgebra(Signature({{"s", 1}}), Universe::numbered(2),
                      {{Subset::from_mask(2, mask), Subset::from_mask(2, mask)}});
}

}  // namespace

MultiAlgebra counterexample_A() { return constant_unary(0b10); }
MultiAlgebra counterexample_B() { return constant_unary(0b11); }
// carrier index = mask - 1: {0} = 0, {1} = 1, {0,1} = 2
Morphism counterexample_h() { return Morphism(3, 3, {0, 2, 1}); }

Verdict CounterexampleResult::no_multialgebra_iso() const {
  if (multialgebra_isos.empty()) return Verdict::pass();
  return Verdict::fail("iso-found", "a bijective full homomorphism A -> B exists",
                       Witness{{}, {}, multialgebra_isos.front().map()});
}

Verdict CounterexampleResult::plain_iso_exists() const {
  if (plain_isos.empty()) return Verdict::fail("no-plain-iso", "no isomorphism P=(A) -> P=(B)");
  if (!h_is_plain_iso)
    return Verdict::fail("h-missing", "the map {0}->{0}, {1}->{0,1}, {0,1}->{1} is not among the isomorphisms");
  return Verdict::pass();
}

Verdict CounterexampleResult::no_ordered_iso() const {
  if (!ordered_isos.empty())
    return Verdict::fail("iso-found", "a (Sigma,<=)-isomorphism P(A) -> P(B) exists",
                         Witness{{}, {}, ordered_isos.front().map()});
  if (h_ordered) return Verdict::fail("h-ordered", "h passes as a (Sigma,<=)-homomorphism");
  return Verdict::pass();
}

CounterexampleResult analyse_counterexample(const Caps& caps) {
  const auto a = counterexample_A();
  const auto b = counterexample_B();
  CounterexampleResult r;

  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) {
      const Morphism m(2, 2, {x, y});
      ++r.maps_examined;
      if (!m.is_bijective()) continue;
      ++r.bijections_examined;
      if (check_full_hom(m, a, b, caps)) r.multialgebra_isos.push_back(m);
    }

  const auto pa = apply_P(a, caps);
  const auto pb = apply_P(b, caps);
  r.plain_isos = enumerate_plain_isos(forget_order(pa), forget_order(pb), caps);
  for (const auto& m : r.plain_isos)
    if (m == counterexample_h()) r.h_is_plain_iso = true;

  const auto ordered = enumerate_ordered_homs(pa, pb, true, OrderedSearch::brute_force, {}, caps);
  r.ordered_maps_examined = *checked_pow(pb.size(), pa.size(), UINT64_MAX);
  r.ordered_isos = ordered.members;
  r.h_ordered = check_ordered_hom(counterexample_h(), pa, pb, {}, caps);
  return r;
}

}  // namespace malg
