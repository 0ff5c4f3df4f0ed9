#pragma once

#include "ge2/grouptable.hpp"
#include "ge2/lattice.hpp"

namespace ge2 {

// All x in the order with reduced norm t, as order-coordinate vectors,
// sorted lexicographically.  Exact enumeration of the integer points on the
// ellipsoid of the norm Gram matrix.
std::vector<IVec> short_vectors(Order const &o, Int const &t);

// Gram matrix of the reduced norm in the order basis: N(x) = x^T A x.
std::vector<std::vector<Rat>> norm_gram(Order const &o);

// The (finite) unit group of a definite order, with a full table.
struct UnitGroup {
    Order order;
    std::vector<IVec> elems; // elems[k] in order coordinates; elems[0] = 1
    FiniteGroup group;       // multiplication table over element indices

    int size() const { return group.n; }
    int index_of(IVec const &coords) const;
};

UnitGroup unit_group(Order const &o);

// One of "C<n>", "Q8", "SL(2,3)", "C3:C4", or "other".
std::string identify_group(FiniteGroup const &g);

// U/U' invariants plus the element indices of the derived subgroup U'.
struct UnitAbelianization {
    AbInvariants invariants;
    std::vector<int> derived; // indices into UnitGroup::elems
};

UnitAbelianization unit_abelianization(UnitGroup const &u);

// Largest k such that k units extend to a Z-basis of the order.
int inv_of_order(Order const &o);

// Q-dimension of the span of the given order elements.
int rational_span(Order const &o, std::vector<IVec> const &subset);

// Unital ring isomorphism test, by searching basis images among elements of
// matching norm with all traces of pairwise products preserved.
bool order_isomorphic(Order const &o1, Order const &o2);

} // namespace ge2
