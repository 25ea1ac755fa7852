#pragma once

// Brute-force reference implementations. They work on plain std containers
// and share no code paths with the library beyond reading its tables.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "malg/multialg.hpp"
#include "malg/ordalg.hpp"

namespace oracle {

using Set = std::set<std::size_t>;
using Relation = std::vector<std::vector<bool>>;

inline Set to_set(const malg::Subset& s) {
  Set out;
  for (std::size_t i = 0; i < s.width(); ++i)
    if (s.test(i)) out.insert(i);
  return out;
}

/// Every non-empty subset of {0..n-1} as a sorted vector, shortest first.
inline std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.end() - static_cast<long>(k), pick.end(), true);
    do {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) s.push_back(i);
      out.push_back(s);
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return out;
}

/// All maps {0..n-1} -> {0..m-1}.
inline std::vector<std::vector<std::size_t>> all_maps(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(n, 0);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = 0; v < m; ++v) {
      cur[i] = v;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

inline std::vector<std::vector<std::size_t>> all_tuples(std::size_t n, std::size_t arity) {
  return all_maps(arity, n);
}

// --- posets ---------------------------------------------------------------------------

inline bool is_poset(const Relation& r) {
  const auto n = r.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!r[a][a]) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && r[a][b] && r[b][a]) return false;
      for (std::size_t c = 0; c < n; ++c)
        if (r[a][b] && r[b][c] && !r[a][c]) return false;
    }
  }
  return true;
}

inline std::optional<std::size_t> sup(const Relation& r, const std::vector<std::size_t>& s) {
  std::vector<std::size_t> upper;
  for (std::size_t u = 0; u < r.size(); ++u)
    if (std::all_of(s.begin(), s.end(), [&](std::size_t x) { return r[x][u]; })) upper.push_back(u);
  for (auto u : upper)
    if (std::all_of(upper.begin(), upper.end(), [&](std::size_t v) { return r[u][v]; })) return u;
  return std::nullopt;
}

inline std::optional<std::size_t> inf(const Relation& r, const std::vector<std::size_t>& s) {
  std::vector<std::size_t> lower;
  for (std::size_t l = 0; l < r.size(); ++l)
    if (std::all_of(s.begin(), s.end(), [&](std::size_t x) { return r[l][x]; })) lower.push_back(l);
  for (auto l : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](std::size_t v) { return r[v][l]; })) return l;
  return std::nullopt;
}

/// The definition-level conditions: a maximum, sups of every non-empty
/// subset, semi-complements with sup of the empty set undefined, and
/// atomicity. Exponential; for carriers of at most 15 elements.
inline bool is_cabl(const Relation& r) {
  const auto n = r.size();
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::optional<std::size_t> top;
  for (std::size_t t = 0; t < n; ++t)
    if (std::all_of(all.begin(), all.end(), [&](std::size_t x) { return r[x][t]; })) top = t;
  if (!top) return false;
  for (const auto& s : nonempty_subsets(n))
    if (!sup(r, s)) return false;
  for (std::size_t a = 0; a < n; ++a) {
    if (a == *top) continue;
    std::vector<std::size_t> joins, disjoint;
    for (std::size_t c = 0; c < n; ++c) {
      if (sup(r, {a, c}) == top) joins.push_back(c);
      if (!inf(r, {a, c})) disjoint.push_back(c);
    }
    if (joins.empty() || disjoint.empty()) return false;
    const auto b1 = inf(r, joins);
    const auto b2 = sup(r, disjoint);
    if (!b1 || !b2 || *b1 != *b2) return false;
  }
  std::vector<std::size_t> atoms;
  for (std::size_t a = 0; a < n; ++a)
    if (std::none_of(all.begin(), all.end(), [&](std::size_t x) { return x != a && r[x][a]; }))
      atoms.push_back(a);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> below;
    for (auto at : atoms)
      if (r[at][a]) below.push_back(at);
    if (below.empty() || sup(r, below) != a) return false;
  }
  return true;
}

/// Inclusion on the non-empty subsets of {0..k-1}, in mask order.
inline Relation powerset_relation(std::size_t k) {
  const std::size_t n = (std::size_t{1} << k) - 1;
  Relation r(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) r[a][b] = (((a + 1) & ~(b + 1)) == 0);
  return r;
}

inline bool order_isomorphic(const Relation& a, const Relation& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t x = 0; x < a.size() && ok; ++x)
      for (std::size_t y = 0; y < a.size() && ok; ++y) ok = a[x][y] == b[perm[x]][perm[y]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Every partial order on n labelled points.
inline std::vector<Relation> all_posets(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) slots.emplace_back(a, b);
  std::vector<Relation> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    Relation r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    bool anti = true;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((bits >> i) & 1u) r[slots[i].first][slots[i].second] = true;
    for (std::size_t i = 0; i < slots.size() && anti; ++i)
      if (r[slots[i].first][slots[i].second] && r[slots[i].second][slots[i].first]) anti = false;
    if (anti && is_poset(r)) out.push_back(std::move(r));
  }
  return out;
}

// --- multialgebras --------------------------------------------------------------------

/// s(A_1..A_n) = union of s(a_1..a_n) over all choices, by explicit
/// enumeration of choice tuples.
inline Set powerset_value(const malg::MultiAlgebra& m, std::size_t symbol,
                          const std::vector<std::vector<std::size_t>>& args) {
  Set out;
  std::vector<std::size_t> choice(args.size());
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == args.size()) {
      for (auto x : to_set(m.apply(symbol, choice))) out.insert(x);
      return;
    }
    for (auto a : args[i]) {
      choice[i] = a;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

inline bool is_hom(const std::vector<std::size_t>& h, const malg::MultiAlgebra& a,
                   const malg::MultiAlgebra& b, bool full) {
  for (std::size_t s = 0; s < a.signature().size(); ++s)
    for (const auto& t : all_tuples(a.size(), a.signature()[s].arity)) {
      Set image;
      for (auto x : to_set(a.apply(s, t))) image.insert(h[x]);
      std::vector<std::size_t> ht;
      for (auto x : t) ht.push_back(h[x]);
      const auto target = to_set(b.apply(s, ht));
      if (full ? image != target : !std::includes(target.begin(), target.end(), image.begin(), image.end()))
        return false;
    }
  return true;
}

/// Outcomes of a term, by enumerating every assignment of an element to each
/// node occurrence and keeping the consistent ones.
inline Set eval_by_runs(const malg::MultiAlgebra& m, const malg::Term& t, const malg::Valuation& v) {
  std::vector<const malg::Term*> nodes;
  std::function<void(const malg::Term&)> collect = [&](const malg::Term& x) {
    nodes.push_back(&x);
    for (const auto& c : x.args()) collect(c);
  };
  collect(t);
  std::vector<std::size_t> value(nodes.size());
  auto index_of = [&](const malg::Term* p) {
    return static_cast<std::size_t>(std::find(nodes.begin(), nodes.end(), p) - nodes.begin());
  };
  Set out;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == nodes.size()) {
      for (std::size_t k = 0; k < nodes.size(); ++k) {
        const auto& x = *nodes[k];
        if (x.is_variable()) {
          if (value[k] != v[x.index()]) return;
          continue;
        }
        std::vector<std::size_t> args;
        for (const auto& c : x.args()) args.push_back(value[index_of(&c)]);
        if (!m.apply(x.index(), args).test(value[k])) return;
      }
      out.insert(value[0]);
      return;
    }
    for (std::size_t e = 0; e < m.size(); ++e) {
      value[i] = e;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

// --- ordered algebras -----------------------------------------------------------------------

inline Relation relation_of(const malg::OrderedAlgebra& a) {
  Relation r(a.size(), std::vector<bool>(a.size()));
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y) r[x][y] = a.poset().leq(x, y);
  return r;
}

/// The three clauses taken literally: operations up to <=, sups of every
/// non-empty subset, atoms (minimal elements) to atoms.
inline bool is_ordered_hom(const std::vector<std::size_t>& h, const malg::OrderedAlgebra& a,
                           const malg::OrderedAlgebra& b, bool require_atoms = true) {
  const auto ra = relation_of(a);
  const auto rb = relation_of(b);
  for (std::size_t s = 0; s < a.signature().size(); ++s)
    for (const auto& t : all_tuples(a.size(), a.signature()[s].arity)) {
      std::vector<std::size_t> ht;
      for (auto x : t) ht.push_back(h[x]);
      if (!rb[h[a.apply(s, t)]][b.apply(s, ht)]) return false;
    }
  for (const auto& s : nonempty_subsets(a.size())) {
    std::vector<std::size_t> image;
    for (auto x : s) image.push_back(h[x]);
    const auto lhs = sup(ra, s);
    const auto rhs = sup(rb, image);
    if (!lhs || !rhs || h[*lhs] != *rhs) return false;
  }
  if (require_atoms)
    for (std::size_t x = 0; x < a.size(); ++x) {
      bool atom = true;
      for (std::size_t y = 0; y < a.size(); ++y)
        if (y != x && ra[y][x]) atom = false;
      if (!atom) continue;
      for (std::size_t y = 0; y < b.size(); ++y)
        if (y != h[x] && rb[y][h[x]]) return false;
    }
  return true;
}

}  // namespace oracle
