#include "malg/random.hpp"

#include <algorithm>
#include <numeric>

namespace malg {

std::size_t Generator::below(std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

MultiAlgebra Generator::multialgebra(const Signature& sig, std::size_t size) {
  const std::size_t masks = (std::size_t{1} << size) - 1;
  return MultiAlgebra::from_function(sig, Universe::numbered(size),
                                     [&](std::size_t, const std::vector<std::size_t>&) {
                                       return Subset::from_mask(size, 1 + below(masks));
                                     });
}

PartialMultiAlgebra Generator::partial(const Signature& sig, std::size_t size) {
  const std::size_t masks = std::size_t{1} << size;
  return PartialMultiAlgebra::from_function(sig, Universe::numbered(size),
                                            [&](std::size_t, const std::vector<std::size_t>&) {
                                              return Subset::from_mask(size, below(masks));
                                            });
}

OrderedAlgebra Generator::ordered_algebra(const Signature& sig, std::size_t atoms) {
  const auto p = apply_P(multialgebra(sig, atoms));
  const auto n = p.size();
  const auto perm = permutation(n);  // old index -> new index
  const auto inv = perm.inverse();

  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[perm(i)] = p.carrier().label(i);
  OrderMatrix leq(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) leq[perm(a)][perm(b)] = p.poset().leq(a, b);

  std::vector<OrderedAlgebra::Table> tables;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    OrderedAlgebra::Table table;
    std::vector<std::size_t> old(sig[s].arity);
    for (const auto& t : Tuples(n, sig[s].arity)) {
      for (std::size_t i = 0; i < t.size(); ++i) old[i] = inv(t[i]);
      table.push_back(perm(p.apply(s, old)));
    }
    tables.push_back(std::move(table));
  }
  auto poset = validate_poset(Universe(std::move(labels)), leq);
  if (!poset) throw Error("generated order is not a poset: " + poset.verdict.detail);
  auto cert = validate_cabl(*poset);
  if (!cert) throw Error("generated order is not a CABL: " + cert.verdict.detail);
  auto algebra = validate_ordered_algebra(*poset.value, *cert.value, sig, std::move(tables));
  if (!algebra) throw Error("generated tables fail atom generation: " + algebra.verdict.detail);
  return *algebra.value;
}

Morphism Generator::morphism(std::size_t source_size, std::size_t target_size) {
  std::vector<std::size_t> map(source_size);
  for (auto& m : map) m = below(target_size);
  return Morphism(source_size, target_size, std::move(map));
}

Morphism Generator::permutation(std::size_t n) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), std::size_t{0});
  std::shuffle(map.begin(), map.end(), rng_);
  return Morphism(n, n, std::move(map));
}

SetValuedMorphism Generator::set_morphism(std::size_t source_size, std::size_t target_size) {
  const std::size_t masks = (std::size_t{1} << target_size) - 1;
  std::vector<Subset> images;
  for (std::size_t a = 0; a < source_size; ++a)
    images.push_back(Subset::from_mask(target_size, 1 + below(masks)));
  return SetValuedMorphism(target_size, std::move(images));
}

Term Generator::term(const Signature& sig, std::size_t max_depth, std::size_t variables) {
  if (max_depth == 0) return Term::variable(below(variables));
  if (sig.empty() || below(4) == 0) {
    std::vector<std::size_t> nullary;
    for (std::size_t s = 0; s < sig.size(); ++s)
      if (sig[s].arity == 0) nullary.push_back(s);
    if (!nullary.empty() && below(3) == 0) return Term::apply(sig, nullary[below(nullary.size())], {});
    return Term::variable(below(variables));
  }
  const auto s = below(sig.size());
  std::vector<Term> args;
  for (std::size_t i = 0; i < sig[s].arity; ++i) args.push_back(term(sig, max_depth - 1, variables));
  return Term::apply(sig, s, std::move(args));
}

Valuation Generator::valuation(std::size_t variables, std::size_t size) {
  Valuation v(variables);
  for (auto& x : v) x = below(size);
  return v;
}

}  // namespace malg
