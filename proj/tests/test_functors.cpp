#include <doctest.h>

#include "fixtures.hpp"
#include "malg/random.hpp"
#include "oracles.hpp"

using namespace malg;
using fixtures::mask;

namespace {

// index of the element of P(A) that is the subset `s`
std::size_t pidx(const oracle::Set& s) {
  std::size_t m = 0;
  for (auto x : s) m |= std::size_t{1} << x;
  return m - 1;
}

oracle::Set members(std::size_t index) {
  oracle::Set s;
  for (std::size_t i = 0; ((index + 1) >> i) != 0; ++i)
    if (((index + 1) >> i) & 1u) s.insert(i);
  return s;
}

std::vector<Morphism> oracle_homs(const MultiAlgebra& a, const MultiAlgebra& b, bool full = false) {
  std::vector<Morphism> out;
  for (const auto& m : oracle::all_maps(a.size(), b.size()))
    if (oracle::is_hom(m, a, b, full)) out.emplace_back(a.size(), b.size(), m);
  return out;
}

std::vector<Morphism> oracle_ordered_homs(const OrderedAlgebra& a, const OrderedAlgebra& b) {
  std::vector<Morphism> out;
  for (const auto& m : oracle::all_maps(a.size(), b.size()))
    if (oracle::is_ordered_hom(m, a, b)) out.emplace_back(a.size(), b.size(), m);
  return out;
}

}  // namespace

TEST_SUITE("functors") {
  TEST_CASE("P of the small examples") {
    const auto pa = apply_P(counterexample_A());
    const auto pb = apply_P(counterexample_B());
    CHECK(pa.size() == 3);
    CHECK(pa.carrier().labels() == std::vector<std::string>{"{0}", "{1}", "{0,1}"});
    CHECK(pa.table(0) == OrderedAlgebra::Table{1, 1, 1});
    CHECK(pb.table(0) == OrderedAlgebra::Table{2, 2, 2});
    CHECK(pa.atoms() == std::vector<std::size_t>{0, 1});
  }

  TEST_CASE("P accumulates over every argument choice") {
    Generator g(43);
    for (int round = 0; round < 60; ++round) {
      const auto sig = fixtures::with_constant();
      const auto m = g.multialgebra(sig, 1 + g.below(3));
      const auto p = apply_P(m);
      REQUIRE(p.size() == (std::size_t{1} << m.size()) - 1);
      for (std::size_t s = 0; s < sig.size(); ++s)
        for (const auto& t : oracle::all_tuples(p.size(), sig[s].arity)) {
          std::vector<std::vector<std::size_t>> args;
          for (auto x : t) {
            const auto mem = members(x);
            args.emplace_back(mem.begin(), mem.end());
          }
          CHECK(p.apply(s, t) == pidx(oracle::powerset_value(m, s, args)));
        }
      std::vector<OrderedAlgebra::Table> tables;
      for (std::size_t s = 0; s < sig.size(); ++s) tables.push_back(p.table(s));
      CHECK(validate_ordered_algebra(p.poset(), p.certificate(), sig, tables));
    }
  }

  TEST_CASE("A takes the atoms below each value") {
    Generator g(47);
    for (int round = 0; round < 60; ++round) {
      const auto b = g.ordered_algebra(fixtures::unary_binary(), 1 + g.below(3));
      const auto a = apply_A(b);
      REQUIRE(a.size() == b.atoms().size());
      const auto r = oracle::relation_of(b);
      for (std::size_t s = 0; s < 2; ++s)
        for (const auto& t : oracle::all_tuples(a.size(), s + 1)) {
          std::vector<std::size_t> bt;
          for (auto x : t) bt.push_back(b.atoms()[x]);
          const auto v = b.apply(s, bt);
          oracle::Set expected;
          for (std::size_t i = 0; i < a.size(); ++i)
            if (r[b.atoms()[i]][v]) expected.insert(i);
          CHECK(oracle::to_set(a.apply(s, t)) == expected);
        }
    }
  }

  TEST_CASE("hom sets agree with the brute-force oracle") {
    Generator g(53);
    for (int round = 0; round < 40; ++round) {
      const auto sig = round % 2 ? fixtures::unary() : fixtures::unary_binary();
      const auto a = g.multialgebra(sig, 1 + g.below(3));
      const auto b = g.multialgebra(sig, 1 + g.below(3));
      CHECK(hom_set(a, b, HomMode::hom).members == oracle_homs(a, b));
      CHECK(hom_set(a, b, HomMode::full).members == oracle_homs(a, b, true));

      const auto pa = g.ordered_algebra(sig, 1 + g.below(2));
      const auto pb = g.ordered_algebra(sig, 1 + g.below(2));
      const auto expected = oracle_ordered_homs(pa, pb);
      CHECK(enumerate_ordered_homs(pa, pb).members == expected);
      CHECK(enumerate_ordered_homs(pa, pb, false, OrderedSearch::brute_force).members == expected);
    }
  }

  TEST_CASE("P on morphisms is the image map and respects identities and composition") {
    Generator g(59);
    for (int round = 0; round < 30; ++round) {
      const auto a = g.multialgebra(fixtures::unary(), 1 + g.below(3));
      const auto b = g.multialgebra(fixtures::unary(), 1 + g.below(3));
      const auto c = g.multialgebra(fixtures::unary(), 1 + g.below(3));
      const auto pa = apply_P(a);
      const auto pb = apply_P(b);
      CHECK(apply_P_mor(Morphism::identity(a.size()), a, a) == Morphism::identity(pa.size()));
      const auto ab = oracle_homs(a, b);
      const auto bc = oracle_homs(b, c);
      std::set<Morphism> images;
      for (const auto& h : ab) {
        const auto ph = apply_P_mor(h, a, b);
        for (std::size_t x = 0; x < pa.size(); ++x) {
          oracle::Set img;
          for (auto e : members(x)) img.insert(h(e));
          CHECK(ph(x) == pidx(img));
        }
        CHECK(oracle::is_ordered_hom(ph.map(), pa, pb));
        CHECK(full_preimage_P(ph, a, b) == h);
        images.insert(ph);
        for (const auto& k : bc)
          CHECK(apply_P_mor(compose(k, h), a, c) == compose(apply_P_mor(k, b, c), ph));
      }
      CHECK(images.size() == ab.size());
    }
  }

  TEST_CASE("P rejects non-homomorphisms") {
    CHECK_THROWS_AS((void)apply_P_mor(Morphism(2, 2, {0, 0}), counterexample_A(), counterexample_A()),
                    ContractViolation);
  }

  TEST_CASE("A on morphisms restricts to atoms and respects identities and composition") {
    Generator g(61);
    for (int round = 0; round < 30; ++round) {
      const auto a = g.ordered_algebra(fixtures::unary(), 1 + g.below(2));
      const auto b = g.ordered_algebra(fixtures::unary(), 1 + g.below(2));
      const auto c = g.ordered_algebra(fixtures::unary(), 1 + g.below(2));
      const auto aa = apply_A(a);
      const auto ab_atoms = apply_A(b);
      CHECK(apply_A_mor(Morphism::identity(a.size()), a, a) == Morphism::identity(aa.size()));
      const auto ab = oracle_ordered_homs(a, b);
      const auto bc = oracle_ordered_homs(b, c);
      std::set<Morphism> images;
      for (const auto& h : ab) {
        const auto ah = apply_A_mor(h, a, b);
        for (std::size_t i = 0; i < aa.size(); ++i) CHECK(b.atoms()[ah(i)] == h(a.atoms()[i]));
        CHECK(oracle::is_hom(ah.map(), aa, ab_atoms, false));
        images.insert(ah);
        for (const auto& k : bc)
          CHECK(apply_A_mor(compose(k, h), a, c) == compose(apply_A_mor(k, b, c), ah));
      }
      CHECK(images.size() == ab.size());
      for (const auto& h : oracle_homs(aa, ab_atoms)) {
        const auto pre = full_preimage_A(h, a, b);
        CHECK(oracle::is_ordered_hom(pre.map(), a, b));
        CHECK(apply_A_mor(pre, a, b) == h);
      }
    }
  }

  TEST_CASE("unit and counit") {
    for (const auto& m : fixtures::all_unary(2)) {
      const auto u = unit_iso(m);
      CHECK(u.verdict);
      CHECK(u.morphism.map() == std::vector<std::size_t>{0, 1});
      CHECK(is_isomorphic(m, apply_A(apply_P(m))));
    }
    Generator g(67);
    for (int round = 0; round < 40; ++round) {
      const auto b = g.ordered_algebra(fixtures::unary_binary(), 1 + g.below(3));
      const auto c = counit_iso(b);
      REQUIRE(c.verdict);
      const auto pab = apply_P(apply_A(b));
      CHECK(oracle::is_ordered_hom(c.morphism.map(), b, pab));
      CHECK(oracle::is_ordered_hom(c.morphism.inverse().map(), pab, b));
      for (std::size_t x = 0; x < b.size(); ++x) {
        oracle::Set atoms;
        for (std::size_t i = 0; i < b.atoms().size(); ++i)
          if (b.poset().leq(b.atoms()[i], x)) atoms.insert(i);
        CHECK(c.morphism(x) == pidx(atoms));
      }
    }
  }

  TEST_CASE("adjunction bijection") {
    Generator g(71);
    for (int round = 0; round < 25; ++round) {
      const auto sig = round % 2 ? fixtures::unary() : fixtures::unary_binary();
      const Adjunction adj(g.ordered_algebra(sig, 1 + g.below(2)), g.multialgebra(sig, 1 + g.below(2)));
      CHECK(adj.check_bijection());
      const auto left = adj.left_homs();
      const auto right = adj.right_homs();
      CHECK(left.members == oracle_homs(adj.atoms_of_ordered(), adj.multi()));
      CHECK(right.members == oracle_ordered_homs(adj.ordered(), adj.powerset_of_multi()));
      for (const auto& h : left.members) {
        const auto ph = adj.phi(h);
        for (std::size_t x = 0; x < adj.ordered().size(); ++x) {
          oracle::Set img;
          for (std::size_t i = 0; i < adj.ordered().atoms().size(); ++i)
            if (adj.ordered().poset().leq(adj.ordered().atoms()[i], x)) img.insert(h(i));
          CHECK(ph(x) == pidx(img));
        }
        CHECK(adj.phi_inv(ph) == h);
      }
      for (const auto& k : right.members) CHECK(adj.phi(adj.phi_inv(k)) == k);
    }
  }

  TEST_CASE("phi rejects maps outside the hom sets") {
    const Adjunction adj(apply_P(counterexample_A()), counterexample_A());
    CHECK_THROWS_AS((void)adj.phi(Morphism(2, 2, {0, 0})), ContractViolation);
    CHECK_THROWS_AS((void)adj.phi_inv(Morphism(3, 3, {2, 2, 2})), ContractViolation);
  }

  TEST_CASE("adjunction naturality") {
    Generator g(73);
    for (int round = 0; round < 10; ++round) {
      const auto sig = fixtures::unary();
      const auto b = g.ordered_algebra(sig, 1 + g.below(2));
      const auto d = g.ordered_algebra(sig, 1 + g.below(2));
      const auto a = g.multialgebra(sig, 1 + g.below(2));
      const auto c = g.multialgebra(sig, 1 + g.below(2));
      const Adjunction ba(b, a);
      const Adjunction dc(d, c);
      for (const auto& h : oracle_homs(a, c))
        for (const auto& hp : oracle_ordered_homs(d, b)) CHECK(check_naturality(ba, dc, h, hp));
    }
  }

  TEST_CASE("plain isomorphisms of the forgetful images") {
    const auto pa = apply_P_eq(counterexample_A());
    const auto pb = apply_P_eq(counterexample_B());
    CHECK(pa.tables == forget_order(apply_P(counterexample_A())).tables);
    const auto isos = enumerate_plain_isos(pa, pb);
    std::vector<Morphism> expected;
    for (const auto& m : oracle::all_maps(3, 3)) {
      const Morphism h(3, 3, m);
      if (!h.is_bijective()) continue;
      bool ok = true;
      for (std::size_t x = 0; x < 3; ++x) ok = ok && h(pa.apply(0, std::vector<std::size_t>{x})) == pb.apply(0, std::vector<std::size_t>{h(x)});
      if (ok) expected.push_back(h);
    }
    CHECK(isos == expected);
    CHECK(std::find(isos.begin(), isos.end(), counterexample_h()) != isos.end());
    CHECK(check_plain_hom(counterexample_h(), pa, pb));
    CHECK_FALSE(check_plain_hom(Morphism::identity(3), pa, pb));
  }

  TEST_CASE("term evaluation agrees across the functor") {
    Generator g(79);
    for (int round = 0; round < 200; ++round) {
      const auto sig = fixtures::with_constant();
      const auto m = g.multialgebra(sig, 1 + g.below(3));
      const auto p = apply_P(m);
      const auto t = g.term(sig, 3, 2);
      const auto v = g.valuation(2, m.size());
      const auto nd = eval_term_nd(m, t, v);
      CHECK(oracle::to_set(nd) == oracle::eval_by_runs(m, t, v));
      Valuation lifted;
      for (auto x : v) lifted.push_back((std::size_t{1} << x) - 1);
      CHECK(eval_term_ord(p, t, lifted) == pidx(oracle::to_set(nd)));
    }
  }

  TEST_CASE("contract names") {
    CHECK(to_string(Contract::ordered) == "ordered");
    CHECK(to_string(Contract::hom) == "hom");
  }
}
