#pragma once

#include "ge2/algebra.hpp"
#include "ge2/intmat.hpp"

#include <optional>

namespace ge2 {

// Finitely generated Z-submodule of an algebra, stored canonically as
// (1/den) * rowspan(m) with m in HNF and gcd(content(m), den) = 1.
struct Lattice {
    AlgebraRef A;
    Int den = 1;
    IMat m; // rank x dim, HNF

    int rank() const { return static_cast<int>(m.size()); }
    Elem basis_elem(int i) const;
    bool operator==(Lattice const &o) const
    {
        return *A == *o.A && den == o.den && m == o.m;
    }
};

Lattice lattice_from_gens(AlgebraRef A, std::vector<Elem> const &gens);
bool lattice_contains(Lattice const &l, Elem const &x);
// coordinates of x with respect to the basis rows of l, if x lies in l
std::optional<IVec> lattice_coords(Lattice const &l, Elem const &x);
bool lattice_subset(Lattice const &sub, Lattice const &big);

// Elementary divisors of big/sub (requires sub <= big).
AbInvariants quotient_invariants(Lattice const &big, Lattice const &sub);

// A unital ring that is a full lattice.  Elements are usually handled in
// "order coordinates": integer vectors w.r.t. the basis rows.
struct Order {
    std::string name;
    AlgebraRef A;
    Lattice L; // rank == A->dim
    // structure constants: b_i * b_j = sum_k sc[i][j][k] * b_k
    std::vector<std::vector<IVec>> sc;
    IVec one; // order coordinates of 1
    std::vector<IVec> conj_mat; // row i = order coordinates of conj(b_i)

    int rank() const { return L.rank(); }
    Elem basis_elem(int i) const { return L.basis_elem(i); }
    Elem from_coords(IVec const &v) const;
    IVec coords(Elem const &x) const; // throws domain_error if x not in order

    IVec mul(IVec const &x, IVec const &y) const;
    IVec add(IVec const &x, IVec const &y) const;
    IVec sub(IVec const &x, IVec const &y) const;
    IVec neg(IVec const &x) const;
    IVec conj(IVec const &x) const;
    Int norm(IVec const &x) const;
    Int trace(IVec const &x) const;
};

// Validates: full rank, contains 1, closed under multiplication, and all
// basis products have integer reduced trace (hence integral norms).
Order order_from_basis(AlgebraRef A, std::vector<Elem> const &basis,
                       std::string name = "custom");

// Z, I1, I2, I3, I7, I11, Zsqrt:<d>, L, O2, O3, O5
Order builtin_order(std::string const &name);

// Smallest two-sided ideal of o containing the given elements (which must lie
// in o), as an HNF sublattice of Z^n in order coordinates.
IMat ideal_closure(Order const &o, std::vector<IVec> gens);

} // namespace ge2
