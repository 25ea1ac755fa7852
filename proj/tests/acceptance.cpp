#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "malg/demo.hpp"
#include "malg/functors.hpp"
#include "malg/lemmas.hpp"
#include "malg/monad.hpp"
#include "malg/random.hpp"
#include "malg/variants.hpp"

using namespace malg;

namespace {

struct Outcome {
  bool ok = true;
  std::string summary;
  std::string first_failure;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
  void require(const Verdict& v, const std::string& what) {
    require(v.ok, what + (v.ok ? "" : ": [" + v.condition + "] " + v.detail));
  }
};

const Signature unary({{"s", 1}});
const Signature unary_binary({{"s", 1}, {"f", 2}});

std::vector<MultiAlgebra> all_structures(const Signature& sig, std::size_t n) {
  std::vector<std::size_t> widths;
  for (std::size_t s = 0; s < sig.size(); ++s) widths.push_back(tuple_count(n, sig[s].arity));
  std::size_t slots = 0;
  for (auto w : widths) slots += w;
  const std::uint64_t values = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> pick(slots, 1);
  std::vector<MultiAlgebra> out;
  while (true) {
    std::vector<MultiAlgebra::Table> tables;
    std::size_t k = 0;
    for (auto w : widths) {
      MultiAlgebra::Table t;
      for (std::size_t i = 0; i < w; ++i) t.push_back(Subset::from_mask(n, pick[k++]));
      tables.push_back(std::move(t));
    }
    out.emplace_back(sig, Universe::numbered(n), std::move(tables));
    std::size_t i = 0;
    while (i < slots && ++pick[i] > values) pick[i++] = 1;
    if (i == slots) break;
  }
  return out;
}

std::vector<std::vector<std::size_t>> tuples(std::size_t n, std::size_t arity) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& t : Tuples(n, arity)) out.emplace_back(t.begin(), t.end());
  return out;
}

Outcome counterexample() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto r = analyse_counterexample();
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  o.require(r.maps_examined == 4, "all 4 maps A -> B examined");
  o.require(r.bijections_examined == 2, "both bijections examined");
  o.require(r.multialgebra_isos.empty(), "no multialgebra isomorphism");
  o.require(r.no_multialgebra_iso(), "no_multialgebra_iso");
  o.require(!r.plain_isos.empty(), "a plain isomorphism exists");
  o.require(r.h_is_plain_iso, "h is a plain isomorphism");
  o.require(r.plain_iso_exists(), "plain_iso_exists");
  o.require(r.ordered_maps_examined == 27, "all 27 maps P(A) -> P(B) examined");
  o.require(r.ordered_isos.empty(), "no ordered isomorphism");
  o.require(r.no_ordered_iso(), "no_ordered_iso");
  o.require(!r.h_ordered.ok, "h is not a (Sigma,<=)-homomorphism");
  o.require(ms < 1000.0, "under one second");
  o.summary = "maps 4, bijections 2, multialgebra isos 0, plain isos " + std::to_string(r.plain_isos.size()) +
              " (h included), ordered maps 27, ordered isos 0, h fails [" + r.h_ordered.condition + "], " +
              std::to_string(static_cast<int>(ms)) + " ms";
  return o;
}

Outcome roundtrips() {
  Outcome o;
  std::size_t exhaustive = 0;
  for (std::size_t n = 1; n <= 2; ++n)
    for (const auto& m : all_structures(unary_binary, n)) {
      o.require(unit_iso(m).verdict, "unit on an enumerated structure");
      ++exhaustive;
    }
  Generator g(2024);
  for (int i = 0; i < 200; ++i) o.require(unit_iso(g.multialgebra(unary_binary, 3)).verdict, "unit on |A| = 3");
  for (int i = 0; i < 100; ++i)
    o.require(counit_iso(g.ordered_algebra(unary_binary, 1 + g.below(3))).verdict, "counit");
  o.summary = "unit on " + std::to_string(exhaustive) + " enumerated + 200 seeded, counit on 100 seeded";
  return o;
}

struct Pair {
  OrderedAlgebra b;
  MultiAlgebra a;
};

std::vector<Pair> adjunction_pairs() {
  Generator g(3);
  std::vector<Pair> out;
  for (int i = 0; i < 50; ++i) {
    auto b = g.ordered_algebra(unary, 1 + g.below(2));
    auto a = g.multialgebra(unary, 1 + g.below(2));
    out.push_back({std::move(b), std::move(a)});
  }
  return out;
}

Outcome adjunction() {
  Outcome o;
  const auto pairs = adjunction_pairs();
  std::vector<Adjunction> adj;
  for (const auto& p : pairs) adj.emplace_back(p.b, p.a);
  std::size_t homs = 0, squares = 0;
  for (const auto& x : adj) {
    const auto left = x.left_homs();
    const auto right = x.right_homs();
    o.require(left.size() == right.size(), "hom-set cardinalities");
    homs += left.size();
    for (const auto& h : left.members) o.require(x.phi_inv(x.phi(h)) == h, "phi_inv . phi = id");
    for (const auto& k : right.members) o.require(x.phi(x.phi_inv(k)) == k, "phi . phi_inv = id");
    o.require(x.check_bijection(), "bijection");
  }
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (auto j : {i, (i + 1) % adj.size()}) {
      const auto hs = enumerate_homs(pairs[i].a, pairs[j].a, HomMode::hom);
      const auto hps = enumerate_ordered_homs(pairs[j].b, pairs[i].b).members;
      for (const auto& h : hs)
        for (const auto& hp : hps) {
          o.require(check_naturality(adj[i], adj[j], h, hp), "naturality");
          squares += adj[i].left_homs().size();
        }
    }
  o.summary = "50 pairs, " + std::to_string(homs) + " homs matched each way, " + std::to_string(squares) +
              " naturality squares";
  return o;
}

Outcome monad() {
  Outcome o;
  auto structures = all_structures(unary, 2);
  structures.push_back(counterexample_A());
  structures.push_back(counterexample_B());
  for (const auto& m : structures) {
    const auto r = check_monad_laws(m);
    o.require(r.verdict, "monad laws");
    o.require(r.verdict.exhaustive, "exhaustive associativity");
    o.require(r.associativity_points == 127, "127 associativity points");
    o.require(r.unit_points == 3, "3 unit points");
  }
  std::size_t naturality = 0;
  for (const auto& a : structures)
    for (const auto& b : structures)
      for (const auto& h : enumerate_homs(a, b, HomMode::hom)) {
        o.require(check_naturality_eta_eps(h, a, b), "eta and eps naturality");
        ++naturality;
      }
  o.summary = std::to_string(structures.size() - 2) + " structures + A, B; 127 + 3 points each; " +
              std::to_string(naturality) + " homs natural";
  return o;
}

FinitePoset from_matrix(const OrderMatrix& m) {
  auto p = validate_poset(Universe::numbered(m.size()), m);
  if (!p) throw Error("mutation produced a non-order: " + p.verdict.detail);
  return *p.value;
}

OrderMatrix without(const OrderMatrix& m, std::size_t drop) {
  OrderMatrix out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == drop) continue;
    std::vector<bool> row;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != drop) row.push_back(m[i][j]);
    out.push_back(row);
  }
  return out;
}

OrderMatrix transitive_closure(OrderMatrix m) {
  for (std::size_t k = 0; k < m.size(); ++k)
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j)
        if (m[i][k] && m[k][j]) m[i][j] = true;
  return m;
}

Outcome validators() {
  Outcome o;
  std::vector<FinitePoset> accepted;
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto p = FinitePoset::powerset_order(Universe::numbered(k));
    const auto c = validate_cabl(p);
    o.require(c.value.has_value() && p.size() == (std::size_t{1} << k) - 1, "P*(X) accepted");
    accepted.push_back(p);
  }
  const auto p2 = FinitePoset::powerset_order(Universe::numbered(2)).matrix();
  const auto p3 = FinitePoset::powerset_order(Universe::numbered(3)).matrix();
  struct Mutation {
    std::string name;
    OrderMatrix order;
  };
  std::vector<Mutation> suite{{"top removed from P*(2)", without(p2, 2)},
                              {"top removed from P*(3)", without(p3, 6)}};
  auto pair_removed = p3;
  pair_removed[0][2] = false;  // {0} <= {0,1}
  suite.push_back({"order pair removed", pair_removed});
  auto pair_added = p2;
  pair_added[0][1] = true;  // {0} <= {1}
  suite.push_back({"order pair added, closed transitively", transitive_closure(pair_added)});
  auto pair_added3 = p3;
  pair_added3[0][1] = true;
  suite.push_back({"order pair added in P*(3), closed transitively", transitive_closure(pair_added3)});
  for (std::size_t drop = 0; drop < 7; ++drop)
    suite.push_back({"element " + std::to_string(drop) + " deleted from P*(3)", without(p3, drop)});
  std::string conditions;
  for (const auto& m : suite) {
    const auto c = validate_cabl(from_matrix(m.order));
    o.require(!c.value && !c.verdict.condition.empty(), "mutation rejected: " + m.name);
    conditions += (conditions.empty() ? "" : ",") + c.verdict.condition;
  }

  std::vector<const FinitePoset*> carriers;
  for (const auto& p : accepted) carriers.push_back(&p);
  const auto pa = apply_P(counterexample_A());
  const auto pb = apply_P(counterexample_B());
  carriers.push_back(&pa.poset());
  carriers.push_back(&pb.poset());
  for (const auto* p : carriers) {
    const auto cert = validate_cabl(*p);
    o.require(check_sup_of_lower_bounds(*p), "sup of low bounds");
    o.require(check_inf_distributivity(*p), "sem-inf-dist");
    o.require(check_union_atoms_is_atoms_sup(*p, *cert), "union atoms is atoms sup");
    std::vector<Subset> small;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << p->size()); ++mask)
      if (p->size() <= 7 || std::popcount(mask) <= 2) small.push_back(Subset::from_mask(p->size(), mask));
    std::vector<std::vector<Subset>> families;
    for (const auto& x : small)
      for (const auto& y : small) families.push_back({x, y});
    o.require(check_supsup_equals_supunion(*p, families), "supsup equals supunion");
  }
  o.require(check_atoms_of_operations(pa), "atoms operations on P(A)");
  o.require(check_atoms_of_operations(pb), "atoms operations on P(B)");
  Generator g(5);
  for (int i = 0; i < 50; ++i)
    o.require(check_atoms_of_operations(g.ordered_algebra(unary_binary, 1 + g.below(4))), "atoms operations");
  o.summary = "P*(X) accepted for |X| = 1..4; " + std::to_string(suite.size()) + " mutations rejected [" +
              conditions + "]; lemmas on 6 carriers";
  return o;
}

Outcome functoriality() {
  Outcome o;
  const auto pairs = adjunction_pairs();
  std::size_t checked = 0, preimages = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [b, a] = pairs[i];
    const Adjunction x(b, a);
    const auto& ab = x.atoms_of_ordered();
    const auto& pa = x.powerset_of_multi();
    const auto left = x.left_homs().members;
    const auto right = x.right_homs().members;

    o.require(apply_P_mor(Morphism::identity(a.size()), a, a) == Morphism::identity(pa.size()), "P(id) = id");
    o.require(apply_A_mor(Morphism::identity(b.size()), b, b) == Morphism::identity(ab.size()), "A(id) = id");
    const auto endo_a = enumerate_homs(a, a, HomMode::hom);
    std::set<Morphism> p_images;
    for (const auto& h : left) {
      const auto ph = apply_P_mor(h, ab, a);
      p_images.insert(ph);
      for (const auto& k : endo_a) {
        o.require(apply_P_mor(compose(k, h), ab, a) == compose(apply_P_mor(k, a, a), ph), "P preserves composition");
        ++checked;
      }
    }
    o.require(p_images.size() == left.size(), "P is injective on hom-sets");
    const auto endo_pa = enumerate_ordered_homs(pa, pa).members;
    std::set<Morphism> a_images;
    for (const auto& g : right) {
      const auto ag = apply_A_mor(g, b, pa);
      a_images.insert(ag);
      for (const auto& k : endo_pa) {
        o.require(apply_A_mor(compose(k, g), b, pa) == compose(apply_A_mor(k, pa, pa), ag),
                  "A preserves composition");
        ++checked;
      }
    }
    o.require(a_images.size() == right.size(), "A is injective on hom-sets");

    const auto& next = pairs[(i + 1) % pairs.size()];
    const auto pnext = apply_P(next.a);
    for (const auto& g : enumerate_ordered_homs(pa, pnext).members) {
      const auto h = full_preimage_P(g, a, next.a);
      o.require(check_hom(h, a, next.a), "P preimage is a homomorphism");
      o.require(apply_P_mor(h, a, next.a) == g, "P(preimage) = g");
      ++preimages;
    }
    const auto abnext = apply_A(next.b);
    for (const auto& h : enumerate_homs(ab, abnext, HomMode::hom)) {
      const auto pre = full_preimage_A(h, b, next.b);
      o.require(check_ordered_hom(pre, b, next.b), "A preimage is an ordered homomorphism");
      o.require(apply_A_mor(pre, b, next.b) == h, "A(preimage) = h");
      ++preimages;
    }
  }
  const auto pa = apply_P(counterexample_A());
  const auto pb = apply_P(counterexample_B());
  for (const auto& g : enumerate_ordered_homs(pa, pb).members) {
    const auto h = full_preimage_P(g, counterexample_A(), counterexample_B());
    o.require(apply_P_mor(h, counterexample_A(), counterexample_B()) == g, "P(preimage) = g on P(A) -> P(B)");
    ++preimages;
  }
  o.summary = std::to_string(checked) + " compositions, " + std::to_string(preimages) + " preimages";
  return o;
}

Outcome variants() {
  Outcome o;
  Generator g(7);
  const Signature sig({{"c", 0}, {"s", 1}, {"f", 2}});
  std::size_t maps = 0;
  for (int i = 0; i < 200; ++i) {
    const auto a = g.multialgebra(sig, 1 + g.below(3));
    const auto b = g.multialgebra(sig, 1 + g.below(3));
    const PartialMultiAlgebra pa(a), pb(b);
    for (const auto& m : tuples(b.size(), a.size())) {
      const Morphism h(a.size(), b.size(), m);
      const bool hom = check_hom(h, a, b).ok;
      o.require(check_partial_hom(h, pa, pb).ok == hom, "partial-hom agrees with hom");
      const auto sv = SetValuedMorphism::from_morphism(h);
      o.require(sv.collapse() == h, "singleton set-valued map collapses");
      o.require(check_mm_hom(sv, a, b).ok == hom, "singleton mm-hom agrees with hom");
      ++maps;
    }
    const auto pp = apply_P_partial(pa);
    const auto p = apply_P(a);
    for (std::size_t s = 0; s < sig.size(); ++s)
      for (const auto& t : tuples(p.size(), sig[s].arity)) {
        std::vector<std::size_t> shifted;
        for (auto x : t) shifted.push_back(x + 1);
        o.require(pp.apply(s, shifted) == p.apply(s, t) + 1, "bottomed powerset restricts to P");
      }
  }
  for (std::size_t x = 1; x <= 3; ++x)
    for (std::size_t y = 1; y <= 3; ++y) {
      const auto c = empty_signature_hom_count(x, y);
      o.require(c.verdict && c.atom_maps == c.ordered_maps, "empty-signature hom count");
    }
  o.summary = "200 structures, " + std::to_string(maps) + " maps, tables agree, hom counts for sizes 1..3";
  return o;
}

Outcome bridge() {
  Outcome o;
  Generator g(11);
  const Signature sig({{"c", 0}, {"s", 1}, {"f", 2}});
  for (int i = 0; i < 500; ++i) {
    const auto m = g.multialgebra(sig, 1 + g.below(3));
    const auto p = apply_P(m);
    const auto t = g.term(sig, 3, 2);
    const auto v = g.valuation(2, m.size());
    Valuation lifted;
    for (auto x : v) lifted.push_back((std::size_t{1} << x) - 1);
    o.require(t.depth() <= 3, "term depth");
    o.require(eval_term_nd(m, t, v).to_mask() == eval_term_ord(p, t, lifted) + 1, "evaluation agrees");
  }
  o.summary = "500 seeded triples";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"counterexample", counterexample}, {"equivalence roundtrips", roundtrips},
      {"adjunction", adjunction},         {"monad laws", monad},
      {"validators and lemmas", validators}, {"functoriality and faithfulness", functoriality},
      {"variants conservativity", variants}, {"term-evaluation bridge", bridge}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.first_failure = std::string("exception: ") + e.what();
    }
    if (!o.ok) ++failures;
    std::printf("%s criterion %zu: %s -- %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.ok ? o.summary.c_str() : o.first_failure.c_str());
  }
  return failures == 0 ? 0 : 1;
}
