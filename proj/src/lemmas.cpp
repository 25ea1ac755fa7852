#include "malg/lemmas.hpp"

namespace malg {

namespace {

Subset pair(std::size_t width, std::size_t a, std::size_t b) {
  Subset s(width);
  s.set(a);
  s.set(b);
  return s;
}

std::vector<Subset> all_nonempty(const FinitePoset& p, const Caps& caps) {
  return SubsetAlgebra(p.carrier(), caps).nonempty_subsets();
}

std::string name(const FinitePoset& p, const Subset& s) { return format_subset(p.carrier(), s); }

}  // namespace

Verdict check_sup_of_lower_bounds(const FinitePoset& p) {
  const auto n = p.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const Subset lower = p.down(a) & p.down(b);
      if (lower.empty()) continue;
      const auto s = sup(p, lower);
      if (s && !lower.test(*s))
        return Verdict::fail("sup-of-lower-bounds",
                             "sup of lower bounds of {" + p.carrier().label(a) + "," +
                                 p.carrier().label(b) + "} is not a lower bound",
                             Witness{{}, {}, {a, b}});
    }
  return Verdict::pass();
}

Verdict check_inf_distributivity(const FinitePoset& p, const Caps& caps) {
  const auto n = p.size();
  std::vector<std::vector<std::optional<std::size_t>>> meet(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) meet[a][b] = inf(p, pair(n, a, b));

  for (const auto& s : all_nonempty(p, caps)) {
    const auto top_of_s = sup(p, s);
    if (!top_of_s)
      return Verdict::fail("precondition", "sup" + name(p, s) + " does not exist");
    for (std::size_t a = 0; a < n; ++a) {
      Subset meets(n);
      s.for_each([&](std::size_t x) {
        if (meet[a][x]) meets.set(*meet[a][x]);
      });
      const auto rhs = meet[a][*top_of_s];
      if (meets.empty()) {
        if (rhs)
          return Verdict::fail("inf-distributivity",
                               "S^a empty but inf{a, sup S} exists for a = " +
                                   p.carrier().label(a) + ", S = " + name(p, s),
                               Witness{{}, {}, {a}});
        continue;
      }
      const auto lhs = sup(p, meets);
      if (!rhs || lhs != rhs)
        return Verdict::fail("inf-distributivity",
                             "sup of meets differs from inf{a, sup S} for a = " +
                                 p.carrier().label(a) + ", S = " + name(p, s),
                             Witness{{}, {}, {a}});
    }
  }
  return Verdict::pass();
}

Verdict check_supsup_equals_supunion(const FinitePoset& p,
                                     std::span<const std::vector<Subset>> families) {
  const auto n = p.size();
  for (std::size_t f = 0; f < families.size(); ++f) {
    const auto& family = families[f];
    if (family.empty()) throw Error("family must be non-empty");
    Subset sups(n), all(n);
    bool defined = true;
    for (const auto& x : family) {
      const auto sx = sup(p, x);
      if (!sx) {
        defined = false;
        break;
      }
      sups.set(*sx);
      all |= x;
    }
    if (!defined) return Verdict::fail("precondition", "a member of family " + std::to_string(f) + " has no sup");
    if (sup(p, sups) != sup(p, all))
      return Verdict::fail("supsup-equals-supunion",
                           "family " + std::to_string(f) + ": sup of sups differs from sup " +
                               name(p, all),
                           Witness{{}, {}, {f}});
  }
  return Verdict::pass();
}

Verdict check_union_atoms_is_atoms_sup(const FinitePoset& p, const CablCertificate& cert,
                                       const Caps& caps) {
  const auto n = p.size();
  for (const auto& c : all_nonempty(p, caps)) {
    Subset atoms(n);
    c.for_each([&](std::size_t e) { atoms |= cert.atom_sets[e]; });
    const auto s = sup(p, c);
    if (!s || !(cert.atom_sets[*s] == atoms))
      return Verdict::fail("union-atoms-is-atoms-sup",
                           "atoms of sup" + name(p, c) + " differ from the union of atoms",
                           Witness{{}, {}, c.elements()});
  }
  return Verdict::pass();
}

Verdict check_atoms_of_operations(const OrderedAlgebra& a, const Caps& caps) {
  const auto& sig = a.signature();
  const auto n = a.size();
  const auto& sets = a.certificate().atom_sets;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    for (const auto& t : Tuples(n, sig[s].arity, caps)) {
      std::vector<std::vector<std::size_t>> lists;
      for (auto e : t) lists.push_back(sets[e].elements());
      Subset united(n);
      std::vector<std::size_t> pos(lists.size(), 0), c(lists.size());
      bool done = false;
      while (!done) {
        for (std::size_t i = 0; i < lists.size(); ++i) c[i] = lists[i][pos[i]];
        united |= sets[a.apply(s, c)];
        done = true;
        for (std::size_t i = lists.size(); i-- > 0;) {
          if (++pos[i] < lists[i].size()) {
            done = false;
            break;
          }
          pos[i] = 0;
        }
      }
      if (!(united == sets[a.apply(s, t)]))
        return Verdict::fail("atoms-of-operations",
                             "atoms of " + sig[s].name + format_tuple(a.carrier(), t) +
                                 " differ from the union over atom tuples",
                             Witness{s, t, {}});
    }
  }
  return Verdict::pass();
}

}  // namespace malg
