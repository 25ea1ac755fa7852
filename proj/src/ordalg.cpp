#include "malg/ordalg.hpp"

#include <random>

namespace malg {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);
constexpr std::uint64_t kSampleSeed = 0x5eedULL;
constexpr std::size_t kSamplePairs = 200'000;

std::string label(const FinitePoset& p, std::size_t e) { return p.carrier().label(e); }

std::string set_label(const FinitePoset& p, const Subset& s) {
  return format_subset(p.carrier(), s);
}

Subset pair(std::size_t width, std::size_t a, std::size_t b) {
  Subset s(width);
  s.set(a);
  s.set(b);
  return s;
}

}  // namespace

// --- FinitePoset ----------------------------------------------------------------

FinitePoset::FinitePoset(Universe carrier, std::vector<Subset> up)
    : carrier_(std::move(carrier)), up_(std::move(up)) {
  const auto n = carrier_.size();
  down_.assign(n, Subset(n));
  up_count_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    up_[a].for_each([&](std::size_t b) { down_[b].set(a); });
    up_count_[a] = up_[a].count();
  }
}

FinitePoset FinitePoset::powerset_order(const Universe& base, bool with_empty) {
  const auto n = base.size();
  if (n > 16) throw CapExceeded("powerset order over more than 16 elements");
  const std::uint64_t first = with_empty ? 0 : 1;
  const std::uint64_t last = (std::uint64_t{1} << n) - 1;
  const auto size = static_cast<std::size_t>(last - first + 1);
  std::vector<std::string> labels;
  labels.reserve(size);
  for (std::uint64_t m = first; m <= last; ++m)
    labels.push_back(format_subset(base, Subset::from_mask(n, m)));
  std::vector<Subset> up(size, Subset(size));
  for (std::uint64_t m = first; m <= last; ++m)
    for (std::uint64_t m2 = first; m2 <= last; ++m2)
      if ((m & ~m2) == 0) up[m - first].set(static_cast<std::size_t>(m2 - first));
  return FinitePoset(Universe(std::move(labels)), std::move(up));
}

std::optional<std::size_t> FinitePoset::maximum() const {
  for (std::size_t a = 0; a < size(); ++a)
    if (down_[a].count() == size()) return a;
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::minimum() const {
  for (std::size_t a = 0; a < size(); ++a)
    if (up_count_[a] == size()) return a;
  return std::nullopt;
}

Subset FinitePoset::minimal_elements() const {
  Subset out(size());
  for (std::size_t a = 0; a < size(); ++a)
    if (down_[a].count() == 1) out.set(a);
  return out;
}

OrderMatrix FinitePoset::matrix() const {
  OrderMatrix m(size(), std::vector<bool>(size(), false));
  for (std::size_t a = 0; a < size(); ++a) up_[a].for_each([&](std::size_t b) { m[a][b] = true; });
  return m;
}

Checked<FinitePoset> validate_poset(Universe carrier, const OrderMatrix& leq) {
  const auto n = carrier.size();
  if (leq.size() != n) throw Error("order matrix does not match the carrier");
  for (const auto& row : leq)
    if (row.size() != n) throw Error("order matrix is not square");

  auto fail = [&](std::string axiom, std::string detail, std::vector<std::size_t> w) {
    Checked<FinitePoset> out;
    out.verdict = Verdict::fail(std::move(axiom), std::move(detail), Witness{{}, {}, std::move(w)});
    return out;
  };

  for (std::size_t a = 0; a < n; ++a)
    if (!leq[a][a])
      return fail("reflexivity", carrier.label(a) + " <= " + carrier.label(a) + " missing", {a});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (leq[a][b] && leq[b][a])
        return fail("antisymmetry",
                    carrier.label(a) + " <= " + carrier.label(b) + " and back, but they differ",
                    {a, b});

  std::vector<Subset> up(n, Subset(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (leq[a][b]) up[a].set(b);
  for (std::size_t a = 0; a < n; ++a) {
    for (auto b = up[a].first(); b; b = up[a].next(*b)) {
      if (up[*b].is_subset_of(up[a])) continue;
      Subset missing = up[*b] & up[a].complement();
      const auto c = *missing.first();
      return fail("transitivity",
                  carrier.label(a) + " <= " + carrier.label(*b) + " <= " + carrier.label(c) +
                      " but not " + carrier.label(a) + " <= " + carrier.label(c),
                  {a, *b, c});
    }
  }
  Checked<FinitePoset> out;
  out.value = FinitePoset(std::move(carrier), std::move(up));
  return out;
}

std::optional<std::size_t> sup(const FinitePoset& p, const Subset& s) {
  if (s.empty()) throw Error("sup of the empty set");
  Subset upper = Subset::full(p.size());
  s.for_each([&](std::size_t x) { upper &= p.up_[x]; });
  const auto cnt = upper.count();
  if (cnt == 0) return std::nullopt;
  // The least upper bound u is the one whose up-set is the whole of `upper`.
  for (auto u = upper.first(); u; u = upper.next(*u))
    if (p.up_count_[*u] == cnt && p.up_[*u] == upper) return *u;
  return std::nullopt;
}

std::optional<std::size_t> inf(const FinitePoset& p, const Subset& s) {
  if (s.empty()) throw Error("inf of the empty set");
  Subset lower = Subset::full(p.size());
  s.for_each([&](std::size_t x) { lower &= p.down_[x]; });
  const auto cnt = lower.count();
  if (cnt == 0) return std::nullopt;
  for (auto l = lower.first(); l; l = lower.next(*l))
    if (p.down_[*l].count() == cnt && p.down_[*l] == lower) return *l;
  return std::nullopt;
}

// --- CABL validation --------------------------------------------------------------

Checked<CablCertificate> validate_cabl(const FinitePoset& p, const Caps& caps) {
  const auto n = p.size();
  const bool sampled = n > caps.max_exhaustive_carrier;
  Checked<CablCertificate> out;
  auto fail = [&](std::string cond, std::string detail, std::vector<std::size_t> w) {
    out.verdict = Verdict::fail(std::move(cond), std::move(detail), Witness{{}, {}, std::move(w)});
    out.verdict.exhaustive = !sampled;
    return out;
  };

  // suprema. On a finite poset every non-empty subset has a sup iff
  // every pair does, so pairs are exhaustive.
  std::mt19937_64 rng(kSampleSeed);
  auto for_pairs = [&](auto&& f) -> bool {
    if (!sampled) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          if (!f(a, b)) return false;
      return true;
    }
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t i = 0; i < kSamplePairs; ++i)
      if (!f(pick(rng), pick(rng))) return false;
    return true;
  };
  std::size_t bad_a = 0, bad_b = 0;
  if (!for_pairs([&](std::size_t a, std::size_t b) {
        if (sup(p, pair(n, a, b))) return true;
        bad_a = a;
        bad_b = b;
        return false;
      }))
    return fail("suprema", "sup{" + label(p, bad_a) + "," + label(p, bad_b) + "} does not exist",
                {bad_a, bad_b});

  // maximum, implied by suprema on finite carriers
  const auto top = p.maximum();
  if (!top) return fail("maximum", "no element lies above every other", {});

  // semi-complement for every a != top. The sup of an empty candidate
  // set does not exist in a bottomless poset.
  CablCertificate cert;
  cert.top = *top;
  cert.complement.assign(n, std::nullopt);
  std::vector<std::size_t> subjects;
  if (!sampled) {
    for (std::size_t a = 0; a < n; ++a) subjects.push_back(a);
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t i = 0; i < 64; ++i) subjects.push_back(pick(rng));
  }
  for (auto a : subjects) {
    if (a == *top) continue;
    Subset joins_to_top(n), disjoint(n);
    for (std::size_t c = 0; c < n; ++c) {
      if (sup(p, pair(n, a, c)) == top) joins_to_top.set(c);
      if (!inf(p, pair(n, a, c))) disjoint.set(c);
    }
    const auto b1 = inf(p, joins_to_top);
    if (disjoint.empty())
      return fail("semi-complement",
                  "every c has inf{" + label(p, a) + ",c}; sup of the empty set does not exist",
                  {a});
    const auto b2 = sup(p, disjoint);
    if (!b1 || !b2 || *b1 != *b2) {
      std::string d = "complement of " + label(p, a) + ": inf" + set_label(p, joins_to_top) +
                      " = " + (b1 ? label(p, *b1) : "NONE") + ", sup" + set_label(p, disjoint) +
                      " = " + (b2 ? label(p, *b2) : "NONE");
      return fail("semi-complement", std::move(d), {a});
    }
    cert.complement[a] = b1;
  }

  // atomicity
  const Subset atoms = p.minimal_elements();
  cert.atoms = atoms.elements();
  cert.atom_sets.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    Subset below = atoms & p.down(a);
    const auto s = sup(p, below);
    if (s != a)
      return fail("atomicity",
                  label(p, a) + " is not the sup of its atoms " + set_label(p, below), {a});
    cert.atom_sets.push_back(std::move(below));
  }

  const auto k = cert.atoms.size();
  if (k >= 63 || n != (std::size_t{1} << k) - 1)
    return fail("cardinality",
                std::to_string(n) + " elements but " + std::to_string(k) + " atoms", {});

  cert.sampled = sampled;
  out.value = std::move(cert);
  out.verdict.exhaustive = !sampled;
  return out;
}

Canonical canonicalize(const FinitePoset& p, const CablCertificate& cert) {
  const auto n = p.size();
  const auto k = cert.atoms.size();
  if (k > 20) throw CapExceeded("canonical form limited to 20 atoms");
  std::vector<std::size_t> atom_pos(n, kNone);
  for (std::size_t i = 0; i < k; ++i) atom_pos[cert.atoms[i]] = i;

  const std::size_t target = (std::size_t{1} << k) - 1;
  std::vector<std::uint64_t> masks(n, 0);
  std::vector<std::size_t> map(n);
  std::vector<bool> hit(target, false);
  Verdict verdict;
  for (std::size_t a = 0; a < n; ++a) {
    cert.atom_sets[a].for_each([&](std::size_t c) { masks[a] |= std::uint64_t{1} << atom_pos[c]; });
    if (masks[a] == 0 || hit[masks[a] - 1]) {
      verdict = Verdict::fail("bijective", label(p, a) + " collides in the canonical form",
                              Witness{{}, {}, {a}});
      map[a] = 0;
      continue;
    }
    hit[masks[a] - 1] = true;
    map[a] = static_cast<std::size_t>(masks[a] - 1);
  }
  if (verdict.ok && n != target)
    verdict = Verdict::fail("bijective", "carrier size differs from 2^atoms - 1");
  for (std::size_t a = 0; a < n && verdict.ok; ++a)
    for (std::size_t b = 0; b < n && verdict.ok; ++b) {
      const bool order = p.leq(a, b);
      const bool incl = (masks[a] & ~masks[b]) == 0;
      if (order != incl)
        verdict = Verdict::fail("order", label(p, a) + " vs " + label(p, b) +
                                             ": order and atom inclusion disagree",
                                Witness{{}, {}, {a, b}});
    }
  return {Morphism(n, target, std::move(map)), std::move(verdict)};
}

// --- OrderedAlgebra ----------------------------------------------------------------

OrderedAlgebra::OrderedAlgebra(FinitePoset p, CablCertificate cert, Signature sig,
                               std::vector<Table> tables)
    : poset_(std::move(p)), cert_(std::move(cert)), sig_(std::move(sig)), tables_(std::move(tables)) {
  const auto n = poset_.size();
  const auto k = cert_.atoms.size();
  if (k > 24) throw CapExceeded("ordered algebras are limited to 24 atoms");
  atom_index_.assign(n, std::nullopt);
  for (std::size_t i = 0; i < k; ++i) atom_index_[cert_.atoms[i]] = i;
  atom_mask_.assign(n, 0);
  element_of_mask_.assign(std::size_t{1} << k, kNone);
  for (std::size_t a = 0; a < n; ++a) {
    cert_.atom_sets[a].for_each(
        [&](std::size_t c) { atom_mask_[a] |= std::uint64_t{1} << *atom_index_[c]; });
    element_of_mask_[atom_mask_[a]] = a;
  }
}

std::size_t OrderedAlgebra::sup_of(const Subset& s) const {
  if (s.empty()) throw Error("sup of the empty set");
  std::uint64_t mask = 0;
  s.for_each([&](std::size_t e) { mask |= atom_mask_[e]; });
  return element_of_mask_[mask];
}

namespace {

void check_tables(const Signature& sig, std::size_t n,
                  const std::vector<OrderedAlgebra::Table>& tables, const Caps& caps) {
  if (tables.size() != sig.size()) throw Error("table not total: one table per symbol required");
  for (std::size_t s = 0; s < sig.size(); ++s) {
    if (tables[s].size() != tuple_count(n, sig[s].arity, caps))
      throw Error("table not total for '" + sig[s].name + "'");
    for (auto v : tables[s])
      if (v >= n) throw Error("table for '" + sig[s].name + "' leaves the carrier");
  }
}

/// Calls f on every tuple of the product of the given element lists.
template <class F>
void for_each_product(const std::vector<std::vector<std::size_t>>& lists, F&& f) {
  for (const auto& l : lists)
    if (l.empty()) return;
  std::vector<std::size_t> pos(lists.size(), 0), tuple(lists.size());
  while (true) {
    for (std::size_t i = 0; i < lists.size(); ++i) tuple[i] = lists[i][pos[i]];
    f(tuple);
    std::size_t i = lists.size();
    while (true) {
      if (i == 0) return;
      --i;
      if (++pos[i] < lists[i].size()) break;
      pos[i] = 0;
    }
  }
}

}  // namespace

Checked<OrderedAlgebra> validate_ordered_algebra(FinitePoset p, CablCertificate cert,
                                                 Signature sig,
                                                 std::vector<OrderedAlgebra::Table> tables,
                                                 const Caps& caps) {
  const auto n = p.size();
  check_tables(sig, n, tables, caps);
  Checked<OrderedAlgebra> out;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    for (const auto& t : Tuples(n, sig[s].arity, caps)) {
      std::vector<std::vector<std::size_t>> atom_lists;
      for (auto a : t) atom_lists.push_back(cert.atom_sets[a].elements());
      Subset values(n);
      for_each_product(atom_lists, [&](const std::vector<std::size_t>& b) {
        values.set(tables[s][tuple_index(b, n)]);
      });
      const auto expected = sup(p, values);
      const auto actual = tables[s][tuple_index(t, n)];
      if (expected != actual) {
        out.verdict = Verdict::fail(
            "atom-generation",
            sig[s].name + format_tuple(p.carrier(), t) + " = " + p.carrier().label(actual) +
                " but the sup over atom tuples is " +
                (expected ? p.carrier().label(*expected) : std::string("NONE")),
            Witness{s, t, {}});
        return out;
      }
    }
  }
  out.value = OrderedAlgebra(std::move(p), std::move(cert), std::move(sig), std::move(tables));
  return out;
}

OrderedAlgebra powerset_algebra(Signature sig, const Universe& base,
                                std::vector<OrderedAlgebra::Table> tables) {
  FinitePoset p = FinitePoset::powerset_order(base);
  const auto n = p.size();
  const auto width = base.size();
  check_tables(sig, n, tables, Caps{.max_tuples = ~std::uint64_t{0}});
  CablCertificate cert;
  cert.top = n - 1;
  for (std::size_t i = 0; i < width; ++i) cert.atoms.push_back((std::size_t{1} << i) - 1);
  cert.complement.assign(n, std::nullopt);
  for (std::size_t idx = 0; idx < n; ++idx) {
    const std::uint64_t mask = idx + 1;
    Subset atoms(n);
    for (std::size_t i = 0; i < width; ++i)
      if ((mask >> i) & 1u) atoms.set((std::size_t{1} << i) - 1);
    cert.atom_sets.push_back(std::move(atoms));
    const std::uint64_t rest = static_cast<std::uint64_t>(n) ^ mask;
    if (rest != 0) cert.complement[idx] = static_cast<std::size_t>(rest - 1);
  }
  return OrderedAlgebra(std::move(p), std::move(cert), std::move(sig), std::move(tables));
}

// --- (Sigma,<=)-homomorphisms --------------------------------------------------------

namespace {

void require_typed(const Morphism& h, const OrderedAlgebra& src, const OrderedAlgebra& dst) {
  if (h.source_size() != src.size() || h.target_size() != dst.size())
    throw Error("morphism is not typed between the given ordered algebras");
}

}  // namespace

Verdict check_atoms_preserved(const Morphism& h, const OrderedAlgebra& src,
                              const OrderedAlgebra& dst) {
  require_typed(h, src, dst);
  for (auto a : src.atoms())
    if (!dst.is_atom(h(a)))
      return Verdict::fail("atoms",
                           "h(" + src.carrier().label(a) + ") = " + dst.carrier().label(h(a)) +
                               " is not an atom",
                           Witness{{}, {}, {a}});
  return Verdict::pass();
}

Verdict check_continuity(const Morphism& h, const OrderedAlgebra& src,
                         const OrderedAlgebra& dst, const Caps& caps) {
  require_typed(h, src, dst);
  const auto n = src.size();
  const bool sampled = n > caps.max_exhaustive_carrier;
  auto test = [&](std::size_t a, std::size_t b) -> std::optional<Verdict> {
    const auto lhs = h(src.join(a, b));
    const auto rhs = dst.join(h(a), h(b));
    if (lhs == rhs) return std::nullopt;
    return Verdict::fail("continuity",
                         "h(sup{" + src.carrier().label(a) + "," + src.carrier().label(b) +
                             "}) = " + dst.carrier().label(lhs) + " but sup of images is " +
                             dst.carrier().label(rhs),
                         Witness{{}, {}, {a, b}});
  };
  if (!sampled) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (auto v = test(a, b)) return *v;
    return Verdict::pass();
  }
  std::mt19937_64 rng(kSampleSeed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  Verdict v;
  for (std::size_t i = 0; i < kSamplePairs; ++i)
    if (auto f = test(pick(rng), pick(rng))) {
      v = *f;
      break;
    }
  v.exhaustive = false;
  return v;
}

Verdict check_almost_hom(const Morphism& h, const OrderedAlgebra& src,
                         const OrderedAlgebra& dst, const Caps& caps) {
  require_typed(h, src, dst);
  const auto& sig = src.signature();
  std::vector<std::size_t> image;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    for (const auto& t : Tuples(src.size(), sig[s].arity, caps)) {
      image.resize(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) image[i] = h(t[i]);
      const auto lhs = h(src.apply(s, t));
      const auto rhs = dst.apply(s, image);
      if (!dst.leq(lhs, rhs))
        return Verdict::fail("almost-hom",
                             "h(" + sig[s].name + format_tuple(src.carrier(), t) + ") = " +
                                 dst.carrier().label(lhs) + " is not below " + sig[s].name +
                                 format_tuple(dst.carrier(), image) + " = " +
                                 dst.carrier().label(rhs),
                             Witness{s, t, {}});
    }
  }
  return Verdict::pass();
}

Verdict check_ordered_hom(const Morphism& h, const OrderedAlgebra& src,
                          const OrderedAlgebra& dst, OrderedHomOptions opts, const Caps& caps) {
  if (!(src.signature() == dst.signature()))
    throw SignatureMismatch("source and target signatures differ");
  require_typed(h, src, dst);
  if (opts.require_atoms)
    if (auto v = check_atoms_preserved(h, src, dst); !v) return v;
  auto cont = check_continuity(h, src, dst, caps);
  if (!cont) return cont;
  auto op = check_almost_hom(h, src, dst, caps);
  op.exhaustive = cont.exhaustive;
  return op;
}

Verdict check_ordered_iso(const Morphism& h, const OrderedAlgebra& src,
                          const OrderedAlgebra& dst, const Caps& caps) {
  require_typed(h, src, dst);
  if (!h.is_bijective()) return Verdict::fail("bijective", "map is not a bijection");
  if (auto v = check_ordered_hom(h, src, dst, {}, caps); !v) return v;
  auto back = check_ordered_hom(h.inverse(), dst, src, {}, caps);
  if (!back) back.condition = "inverse-" + back.condition;
  return back;
}

Verdict check_monotone(const FinitePoset& p, const Signature& sig,
                       const std::vector<OrderedAlgebra::Table>& tables, const Caps& caps) {
  const auto n = p.size();
  check_tables(sig, n, tables, caps);
  std::vector<std::vector<std::size_t>> ups(n);
  for (std::size_t e = 0; e < n; ++e) ups[e] = p.up(e).elements();
  for (std::size_t s = 0; s < sig.size(); ++s) {
    for (const auto& t : Tuples(n, sig[s].arity, caps)) {
      std::vector<std::vector<std::size_t>> lists;
      for (auto e : t) lists.push_back(ups[e]);
      const auto low = tables[s][tuple_index(t, n)];
      std::optional<Verdict> bad;
      for_each_product(lists, [&](const std::vector<std::size_t>& b) {
        if (bad) return;
        const auto high = tables[s][tuple_index(b, n)];
        if (!p.leq(low, high))
          bad = Verdict::fail("monotone",
                              sig[s].name + format_tuple(p.carrier(), t) + " = " +
                                  p.carrier().label(low) + " is not below " + sig[s].name +
                                  format_tuple(p.carrier(), b) + " = " + p.carrier().label(high),
                              Witness{s, t, b});
      });
      if (bad) return *bad;
    }
  }
  return Verdict::pass();
}

Verdict check_monotone(const OrderedAlgebra& a, const Caps& caps) {
  std::vector<OrderedAlgebra::Table> tables;
  for (std::size_t s = 0; s < a.signature().size(); ++s) tables.push_back(a.table(s));
  return check_monotone(a.poset(), a.signature(), tables, caps);
}

std::size_t eval_term_ord(const OrderedAlgebra& a, const Term& t, const Valuation& valuation) {
  if (t.is_variable()) {
    if (t.index() >= valuation.size())
      throw Error("unbound variable x" + std::to_string(t.index()));
    if (valuation[t.index()] >= a.size()) throw Error("valuation maps outside the carrier");
    return valuation[t.index()];
  }
  std::vector<std::size_t> args;
  args.reserve(t.args().size());
  for (const auto& sub : t.args()) args.push_back(eval_term_ord(a, sub, valuation));
  return a.apply(t.index(), args);
}

// --- CABA ------------------------------------------------------------------------------

Checked<CabaCertificate> validate_caba(const FinitePoset& p, const Caps& caps) {
  const auto n = p.size();
  Checked<CabaCertificate> out;
  auto fail = [&](std::string cond, std::string detail, std::vector<std::size_t> w) {
    out.verdict = Verdict::fail(std::move(cond), std::move(detail), Witness{{}, {}, std::move(w)});
    return out;
  };
  if (n > caps.max_exhaustive_carrier)
    throw CapExceeded("carrier of " + std::to_string(n) + " elements exceeds cap");

  const auto bottom = p.minimum();
  if (!bottom) return fail("bottom", "no element lies below every other", {});
  const auto top = p.maximum();
  if (!top) return fail("maximum", "no element lies above every other", {});
  if (*top == *bottom) return fail("distinct", "top and bottom coincide", {*top});

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!sup(p, pair(n, a, b)))
        return fail("suprema", "sup{" + label(p, a) + "," + label(p, b) + "} does not exist",
                    {a, b});

  for (std::size_t a = 0; a < n; ++a) {
    Subset joins_to_top(n), meets_to_bottom(n);
    for (std::size_t c = 0; c < n; ++c) {
      if (sup(p, pair(n, a, c)) == top) joins_to_top.set(c);
      if (inf(p, pair(n, a, c)) == bottom) meets_to_bottom.set(c);
    }
    const auto b1 = inf(p, joins_to_top);
    const auto b2 = meets_to_bottom.empty() ? bottom : sup(p, meets_to_bottom);
    if (!b1 || !b2 || *b1 != *b2)
      return fail("complement", label(p, a) + " has no complement", {a});
  }

  CabaCertificate cert;
  cert.top = *top;
  cert.bottom = *bottom;
  Subset atoms(n);
  for (std::size_t a = 0; a < n; ++a)
    if (a != *bottom && p.down(a).count() == 2) atoms.set(a);
  cert.atoms = atoms.elements();
  for (std::size_t a = 0; a < n; ++a) {
    Subset below = atoms & p.down(a);
    const auto s = below.empty() ? bottom : sup(p, below);
    if (s != a)
      return fail("atomicity", label(p, a) + " is not the sup of its atoms", {a});
    cert.atom_sets.push_back(std::move(below));
  }
  out.value = std::move(cert);
  return out;
}

}  // namespace malg
