#pragma once

#include "ge2/abelianization.hpp"

namespace ge2 {

// FA decisions at the order level.  E2(O) has FA exactly for the orders
// isomorphic to I3, O2 or O3; it is never hereditarily FA; the Borel
// subgroup has FA exactly when U(O) is not C2.
bool decide_fa_e2(Order const &o);
bool decide_hfa_e2(Order const &o);
bool decide_fa_borel(Order const &o);

// Search for a finite-order diagonal pair [mu, nu] whose conjugation action
// x -> nu^-1 x mu on the order has no rational eigenvalue.  Mode "D2" ranges
// over all unit pairs, "DE2" over the pairs with mu*nu in the derived
// subgroup of the units.  Pairs are scanned in ascending lexicographic
// order; the first witness is returned.
struct GrkReport {
    std::string mode;
    bool found = false;
    IVec mu, nu;
    std::vector<Int> char_poly; // monic, ascending degree
};
GrkReport grk_criterion(Order const &o, std::string const &mode);

// Characteristic polynomial of an integer matrix (monic, ascending degree).
std::vector<Int> char_poly(IMat const &a);
// Rational-root test for a monic integer polynomial (divisors of the
// constant term are the only candidates).
bool has_rational_root(std::vector<Int> const &poly);

// HFA / FAb / (T) / HFR decision for U(ZG): one computation, four labels.
struct HfaReport {
    bool hfa = false; // equals fab, t and hfr
    bool cut = false;
    std::string forbidden_witness; // empty when none found
    std::string certificate;
};
HfaReport decide_hfa(FiniteGroup const &g);

// Shortcut valid without type-(II) exceptional components (e.g. |G| odd):
// all four labels equal the cut test.  Refuses even orders.
HfaReport decide_odd_order(FiniteGroup const &g);

enum class ExceptionalType { None, TypeI, TypeII };
struct ExceptionalReport {
    ExceptionalType type = ExceptionalType::None;
    bool totally_definite = false;
    bool division_has_finite_unit_order = false;
    bool in_catalog = false; // Q, Q(sqrt -1/-2/-3), (-1,-1), (-1,-3), (-2,-5)
};
ExceptionalReport exceptional_type(AlgebraRef const &a, int n);

struct ComponentPredicates {
    bool has_m2q = false;  // maps onto D8 or S3
    bool has_m2h5 = false; // maps onto G240_90
    bool solvable = false;
};
ComponentPredicates component_predicates(FiniteGroup const &g);

} // namespace ge2
