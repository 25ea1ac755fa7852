#pragma once

#include <span>
#include <vector>

#include "malg/ordalg.hpp"

namespace malg {

// Instance checkers for the order-theoretic facts the equivalence rests on.
// Each returns the first counterexample in canonical order.

/// For every pair {a,b} whose lower bounds have a sup, that sup is itself a
/// lower bound of {a,b}.
Verdict check_sup_of_lower_bounds(const FinitePoset& p);

/// For every non-empty S and every a, with S^a = {s in S : inf{a,s} exists}:
/// S^a empty implies inf{a, sup S} does not exist; otherwise
/// sup{inf{a,s} : s in S^a} = inf{a, sup S}. Exhaustive over S; throws
/// CapExceeded above caps.max_subset_universe elements.
Verdict check_inf_distributivity(const FinitePoset& p, const Caps& caps = {});

/// For each family {X_i} of non-empty subsets, sup{sup X_i} = sup of the union.
Verdict check_supsup_equals_supunion(const FinitePoset& p,
                                     std::span<const std::vector<Subset>> families);

/// Union of A_c over c in C equals A_{sup C}, for every non-empty C.
Verdict check_union_atoms_is_atoms_sup(const FinitePoset& p, const CablCertificate& cert,
                                       const Caps& caps = {});

/// A_{s(a)} = union of A_{s(c)} over atom tuples c_i in A_{a_i}.
Verdict check_atoms_of_operations(const OrderedAlgebra& a, const Caps& caps = {});

}  // namespace malg
