#include "malg/multialg.hpp"

#include <algorithm>
#include <map>

namespace malg {

MultiAlgebra::MultiAlgebra(Signature sig, Universe universe, std::vector<Table> tables,
                           const Caps& caps)
    : sig_(std::move(sig)), universe_(std::move(universe)), tables_(std::move(tables)) {
  if (tables_.size() != sig_.size()) throw Error("one table per symbol required");
  for (std::size_t s = 0; s < sig_.size(); ++s) {
    const auto expected = tuple_count(size(), sig_[s].arity, caps);
    if (tables_[s].size() != expected)
      throw Error("table for '" + sig_[s].name + "' is not total");
    for (std::size_t k = 0; k < tables_[s].size(); ++k) {
      if (tables_[s][k].width() != size())
        throw Error("table for '" + sig_[s].name + "' has a value of the wrong width");
      if (tables_[s][k].empty())
        throw Error("empty value forbidden: '" + sig_[s].name + "' returns the empty set");
    }
  }
}

MultiAlgebra MultiAlgebra::from_function(
    Signature sig, Universe universe,
    const std::function<Subset(std::size_t, const std::vector<std::size_t>&)>& fill,
    const Caps& caps) {
  std::vector<Table> tables;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    Table t;
    for (const auto& tuple : Tuples(universe.size(), sig[s].arity, caps))
      t.push_back(fill(s, tuple));
    tables.push_back(std::move(t));
  }
  return MultiAlgebra(std::move(sig), std::move(universe), std::move(tables), caps);
}

namespace {

void require_typed(const Morphism& h, std::size_t src, std::size_t dst) {
  if (h.source_size() != src || h.target_size() != dst)
    throw Error("morphism is not typed between the given structures");
}

Verdict check_inclusion(const Morphism& h, const MultiAlgebra& src, const MultiAlgebra& dst,
                        bool full, const Caps& caps) {
  if (!(src.signature() == dst.signature()))
    throw SignatureMismatch("source and target signatures differ");
  require_typed(h, src.size(), dst.size());
  const auto& sig = src.signature();
  std::vector<std::size_t> image_tuple;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    for (const auto& t : Tuples(src.size(), sig[s].arity, caps)) {
      image_tuple.assign(t.size(), 0);
      for (std::size_t i = 0; i < t.size(); ++i) image_tuple[i] = h(t[i]);
      const Subset lhs = h.image(src.apply(s, t));
      const Subset& rhs = dst.apply(s, image_tuple);
      const bool holds = full ? lhs == rhs : lhs.is_subset_of(rhs);
      if (!holds) {
        return Verdict::fail(
            full ? "full-hom" : "hom",
            "at " + sig[s].name + format_tuple(src.universe(), t) + ": image " +
                format_subset(dst.universe(), lhs) + (full ? " != " : " not included in ") +
                sig[s].name + format_tuple(dst.universe(), image_tuple) + " = " +
                format_subset(dst.universe(), rhs),
            Witness{s, t, {}});
      }
    }
  }
  return Verdict::pass();
}

/// One constraint per (symbol, tuple): decidable as soon as every element it
/// mentions is mapped.
struct Constraint {
  std::size_t symbol;
  std::vector<std::size_t> tuple;
};

/// Backtracking over maps src -> dst in lexicographic order. `allowed(a, b)`
/// filters candidate images; `visit` returns false to stop the search.
void search_maps(const MultiAlgebra& src, const MultiAlgebra& dst, HomMode mode,
                 const std::function<bool(std::size_t, std::size_t)>& allowed,
                 const std::function<bool(const Morphism&)>& visit, const Caps& caps) {
  if (!(src.signature() == dst.signature()))
    throw SignatureMismatch("source and target signatures differ");
  if (!checked_pow(dst.size(), src.size(), caps.max_maps))
    throw CapExceeded(std::to_string(dst.size()) + "^" + std::to_string(src.size()) +
                      " candidate maps exceeds cap " + std::to_string(caps.max_maps));
  const bool full = mode != HomMode::hom;
  const bool injective = mode == HomMode::iso;
  if (injective && src.size() != dst.size()) return;

  const auto& sig = src.signature();
  const std::size_t n = src.size();
  std::vector<std::vector<Constraint>> by_trigger(n);
  for (std::size_t s = 0; s < sig.size(); ++s) {
    for (const auto& t : Tuples(n, sig[s].arity, caps)) {
      std::size_t trigger = 0;
      for (auto e : t) trigger = std::max(trigger, e);
      src.apply(s, t).for_each([&](std::size_t e) { trigger = std::max(trigger, e); });
      by_trigger[trigger].push_back({s, t});
    }
  }

  std::vector<std::size_t> map(n, 0);
  std::vector<bool> used(dst.size(), false);
  std::vector<std::size_t> image_tuple;

  auto satisfied = [&](std::size_t k) {
    for (const auto& c : by_trigger[k]) {
      image_tuple.resize(c.tuple.size());
      for (std::size_t i = 0; i < c.tuple.size(); ++i) image_tuple[i] = map[c.tuple[i]];
      Subset lhs(dst.size());
      src.apply(c.symbol, c.tuple).for_each([&](std::size_t e) { lhs.set(map[e]); });
      const Subset& rhs = dst.apply(c.symbol, image_tuple);
      if (full ? !(lhs == rhs) : !lhs.is_subset_of(rhs)) return false;
    }
    return true;
  };

  bool stop = false;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (stop) return;
    if (k == n) {
      if (!visit(Morphism(n, dst.size(), map))) stop = true;
      return;
    }
    for (std::size_t b = 0; b < dst.size() && !stop; ++b) {
      if (injective && used[b]) continue;
      if (allowed && !allowed(k, b)) continue;
      map[k] = b;
      if (!satisfied(k)) continue;
      if (injective) used[b] = true;
      go(k + 1);
      if (injective) used[b] = false;
    }
  };
  go(0);
}

/// Per-element isomorphism invariant: for every symbol and argument position,
/// the sorted sizes of results over tuples holding the element there, plus
/// how many results contain the element.
std::vector<std::vector<std::size_t>> degree_keys(const MultiAlgebra& m, const Caps& caps) {
  const auto& sig = m.signature();
  std::vector<std::vector<std::size_t>> keys(m.size());
  for (std::size_t s = 0; s < sig.size(); ++s) {
    const auto arity = sig[s].arity;
    std::vector<std::vector<std::vector<std::size_t>>> sizes(
        m.size(), std::vector<std::vector<std::size_t>>(arity));
    std::vector<std::size_t> hits(m.size(), 0);
    for (const auto& t : Tuples(m.size(), arity, caps)) {
      const auto& value = m.apply(s, t);
      for (std::size_t i = 0; i < arity; ++i) sizes[t[i]][i].push_back(value.count());
      value.for_each([&](std::size_t e) { ++hits[e]; });
    }
    for (std::size_t e = 0; e < m.size(); ++e) {
      for (auto& per_pos : sizes[e]) {
        std::sort(per_pos.begin(), per_pos.end());
        keys[e].push_back(per_pos.size());
        keys[e].insert(keys[e].end(), per_pos.begin(), per_pos.end());
      }
      keys[e].push_back(hits[e]);
    }
  }
  return keys;
}

}  // namespace

Verdict check_hom(const Morphism& h, const MultiAlgebra& src, const MultiAlgebra& dst,
                  const Caps& caps) {
  return check_inclusion(h, src, dst, false, caps);
}

Verdict check_full_hom(const Morphism& h, const MultiAlgebra& src, const MultiAlgebra& dst,
                       const Caps& caps) {
  return check_inclusion(h, src, dst, true, caps);
}

std::vector<Morphism> enumerate_homs(const MultiAlgebra& src, const MultiAlgebra& dst,
                                     HomMode mode, const Caps& caps) {
  std::vector<Morphism> out;
  search_maps(src, dst, mode, {}, [&](const Morphism& h) {
    out.push_back(h);
    return true;
  }, caps);
  return out;
}

std::optional<Morphism> is_isomorphic(const MultiAlgebra& a, const MultiAlgebra& b,
                                      const Caps& caps) {
  if (!(a.signature() == b.signature()))
    throw SignatureMismatch("isomorphism test across different signatures");
  if (a.size() != b.size()) return std::nullopt;
  const auto ka = degree_keys(a, caps);
  const auto kb = degree_keys(b, caps);
  std::optional<Morphism> found;
  search_maps(
      a, b, HomMode::iso, [&](std::size_t x, std::size_t y) { return ka[x] == kb[y]; },
      [&](const Morphism& h) {
        found = h;
        return false;
      },
      caps);
  return found;
}

Subset eval_term_nd(const MultiAlgebra& m, const Term& t, const Valuation& valuation) {
  if (t.is_variable()) {
    if (t.index() >= valuation.size())
      throw Error("unbound variable x" + std::to_string(t.index()));
    if (valuation[t.index()] >= m.size()) throw Error("valuation maps outside the universe");
    return Subset::singleton(m.size(), valuation[t.index()]);
  }
  std::vector<std::vector<std::size_t>> choices;
  for (const auto& arg : t.args()) choices.push_back(eval_term_nd(m, arg, valuation).elements());

  Subset out(m.size());
  std::vector<std::size_t> pos(choices.size(), 0);
  std::vector<std::size_t> tuple(choices.size());
  while (true) {
    for (std::size_t i = 0; i < choices.size(); ++i) tuple[i] = choices[i][pos[i]];
    out |= m.apply(t.index(), tuple);
    std::size_t i = choices.size();
    while (i > 0) {
      --i;
      if (++pos[i] < choices[i].size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
    if (choices.empty()) return out;
  }
}

MultiAlgebra relabel(const MultiAlgebra& m, const Morphism& perm) {
  if (!perm.is_bijective() || perm.source_size() != m.size())
    throw Error("relabel requires a permutation of the universe");
  std::vector<std::string> labels(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) labels[perm(i)] = m.universe().label(i);
  const Morphism inv = perm.inverse();
  return MultiAlgebra::from_function(
      m.signature(), Universe(std::move(labels)),
      [&](std::size_t s, const std::vector<std::size_t>& t) {
        std::vector<std::size_t> pre(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) pre[i] = inv(t[i]);
        return perm.image(m.apply(s, pre));
      });
}

}  // namespace malg
