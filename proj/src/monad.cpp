#include "malg/monad.hpp"

#include <random>

#include "malg/functors.hpp"

namespace malg {

namespace {

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

Universe powerset_labels(const Universe& u) {
  std::vector<std::string> labels;
  const std::size_t n = (std::size_t{1} << u.size()) - 1;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(format_subset(u, powerset_element(i, u.size())));
  return Universe(std::move(labels));
}

void require_tilde(const MultiAlgebra& m, const Caps& caps) {
  if (m.size() > caps.max_tilde_universe)
    throw CapExceeded("P~ of a " + std::to_string(m.size()) + "-element multialgebra exceeds cap " +
                      std::to_string(caps.max_tilde_universe));
}

}  // namespace

MultiAlgebra apply_Ptilde(const MultiAlgebra& m, const Caps& caps) {
  require_tilde(m, caps);
  Caps inner = caps;
  inner.max_powerset_universe = std::max(inner.max_powerset_universe, m.size());
  const auto p = apply_P(m, inner);
  const std::size_t n = p.size();
  return MultiAlgebra::from_function(
      m.signature(), powerset_labels(m.universe()),
      [&](std::size_t s, const std::vector<std::size_t>& t) {
        const std::uint64_t united = p.apply(s, t) + 1;
        Subset out(n);
        for (std::size_t a = 0; a < m.size(); ++a)
          if (united & bit(a)) out.set(bit(a) - 1);
        return out;
      },
      caps);
}

Morphism ptilde_mor(const Morphism& h, const MultiAlgebra& src, const MultiAlgebra& dst,
                    const Caps& caps) {
  require_tilde(src, caps);
  require_tilde(dst, caps);
  if (auto v = check_hom(h, src, dst, caps); !v)
    throw ContractViolation("P~(h) requires a homomorphism: " + v.detail);
  const std::size_t from = bit(src.size()) - 1;
  std::vector<std::size_t> map(from);
  for (std::size_t idx = 0; idx < from; ++idx) {
    std::uint64_t image = 0;
    for (std::size_t a = 0; a < src.size(); ++a)
      if ((idx + 1) & bit(a)) image |= bit(h(a));
    map[idx] = static_cast<std::size_t>(image - 1);
  }
  return Morphism(from, bit(dst.size()) - 1, std::move(map));
}

Morphism eta(const MultiAlgebra& m) {
  std::vector<std::size_t> map(m.size());
  for (std::size_t a = 0; a < m.size(); ++a) map[a] = bit(a) - 1;
  return Morphism(m.size(), bit(m.size()) - 1, std::move(map));
}

Morphism epsilon(const MultiAlgebra& m) {
  const std::size_t level1 = bit(m.size()) - 1;
  if (level1 > 63) throw CapExceeded("P~P~ of a multialgebra above 6 elements is not addressable");
  const std::size_t level2 = bit(level1) - 1;
  std::vector<std::size_t> map(level2);
  for (std::size_t j = 0; j < level2; ++j) {
    std::uint64_t united = 0;
    for (std::size_t i = 0; i < level1; ++i)
      if ((j + 1) & bit(i)) united |= i + 1;
    map[j] = static_cast<std::size_t>(united - 1);
  }
  return Morphism(level2, level1, std::move(map));
}

std::vector<TildeLevel> tilde_tower(const MultiAlgebra& m, std::size_t depth, const Caps& caps) {
  std::vector<TildeLevel> out;
  out.push_back({0, m});
  for (std::size_t k = 1; k <= depth; ++k) out.push_back({k, apply_Ptilde(out.back().structure, caps)});
  return out;
}

Verdict check_naturality_eta_eps(const Morphism& h, const MultiAlgebra& a, const MultiAlgebra& b,
                                 const Caps& caps) {
  const auto ta = apply_Ptilde(a, caps);
  const auto tb = apply_Ptilde(b, caps);
  const auto th = ptilde_mor(h, a, b, caps);
  const auto tth = ptilde_mor(th, ta, tb, caps);

  const auto lhs_eta = compose(th, eta(a));
  const auto rhs_eta = compose(eta(b), h);
  for (std::size_t x = 0; x < a.size(); ++x)
    if (lhs_eta(x) != rhs_eta(x))
      return Verdict::fail("eta-naturality", "P~h(eta(" + a.universe().label(x) + ")) != eta(h(" +
                                                 a.universe().label(x) + "))",
                           Witness{{}, {}, {x}});

  const auto lhs_eps = compose(th, epsilon(a));
  const auto rhs_eps = compose(epsilon(b), tth);
  for (std::size_t x = 0; x < lhs_eps.source_size(); ++x)
    if (lhs_eps(x) != rhs_eps(x))
      return Verdict::fail("eps-naturality",
                           "P~h(eps(" + apply_Ptilde(ta, caps).universe().label(x) +
                               ")) != eps(P~P~h(...))",
                           Witness{{}, {}, {x}});
  return Verdict::pass();
}

MonadLawReport check_monad_laws(const MultiAlgebra& m, const Caps& caps, MonadLawOptions opts) {
  MonadLawReport report;
  const auto t1 = apply_Ptilde(m, caps);
  const auto t2 = apply_Ptilde(t1, caps);
  const std::size_t n1 = t1.size();
  const std::size_t n2 = t2.size();

  if (auto v = check_hom(eta(m), m, t1, caps); !v) {
    report.verdict = Verdict::fail("eta-hom", "eta is not a homomorphism: " + v.detail, v.witness);
    return report;
  }
  const auto eps0 = epsilon(m);
  if (auto v = check_hom(eps0, t2, t1, caps); !v) {
    report.verdict = Verdict::fail("eps-hom", "eps is not a homomorphism: " + v.detail, v.witness);
    return report;
  }

  // Unit laws on every point of P~(m).
  const auto eta1 = eta(t1);
  const auto tilde_eta = ptilde_mor(eta(m), m, t1, caps);
  for (std::size_t x = 0; x < n1; ++x) {
    ++report.unit_points;
    if (eps0(eta1(x)) != x) {
      report.verdict = Verdict::fail("left-unit", "eps(eta_{P~}(" + t1.universe().label(x) + ")) != " +
                                                      t1.universe().label(x),
                                     Witness{{}, {}, {x}});
      return report;
    }
    if (eps0(tilde_eta(x)) != x) {
      report.verdict = Verdict::fail("right-unit", "eps(P~eta(" + t1.universe().label(x) + ")) != " +
                                                       t1.universe().label(x),
                                     Witness{{}, {}, {x}});
      return report;
    }
  }

  // Associativity, with a point X of P~^3 given as a non-empty subset of P~^2.
  // eps . P~eps unions the eps-images; eps . eps_{P~} unions X first.
  auto check_point = [&](const Subset& x) -> bool {
    ++report.associativity_points;
    std::uint64_t lhs = 0;
    x.for_each([&](std::size_t y) { lhs |= eps0(y) + 1; });
    Subset inner(n1);
    x.for_each([&](std::size_t y) {
      for (std::size_t i = 0; i < n1; ++i)
        if ((static_cast<std::uint64_t>(y) + 1) & bit(i)) inner.set(i);
    });
    std::uint64_t rhs = 0;
    inner.for_each([&](std::size_t i) { rhs |= i + 1; });
    if (lhs == rhs) return true;
    report.verdict = Verdict::fail("associativity",
                                   "eps.P~eps and eps.eps_{P~} differ at " + format_subset(t2.universe(), x),
                                   Witness{{}, {}, x.elements()});
    return false;
  };

  if (n2 <= caps.max_powerset_universe) {
    const std::uint64_t count = bit(n2) - 1;
    for (std::uint64_t mask = 1; mask <= count; ++mask)
      if (!check_point(Subset::from_mask(n2, mask))) return report;
  } else {
    std::mt19937_64 rng(opts.seed);
    std::bernoulli_distribution coin(0.5);
    std::uniform_int_distribution<std::size_t> pick(0, n2 - 1);
    for (std::size_t k = 0; k < opts.samples; ++k) {
      Subset x(n2);
      if (k % 2 == 0) {
        for (std::size_t i = 0; i < n2; ++i)
          if (coin(rng)) x.set(i);
      } else {
        const std::size_t size = 1 + pick(rng) % 4;
        for (std::size_t i = 0; i < size; ++i) x.set(pick(rng));
      }
      if (x.empty()) x.set(pick(rng));
      if (!check_point(x)) {
        report.verdict.exhaustive = false;
        return report;
      }
    }
    report.verdict.exhaustive = false;
  }
  return report;
}

}  // namespace malg
