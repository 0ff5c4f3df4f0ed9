#pragma once

#include "ge2/rat.hpp"

#include <optional>
#include <vector>

namespace ge2 {

// Row-major integer matrix.  Rows are lattice generators/basis vectors.
using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;

// Hermite normal form of the row span: returns an r x n matrix (r = rank)
// with staircase shape, positive pivots and entries above each pivot reduced
// into [0, pivot).  Canonical: two generating sets span the same lattice iff
// their HNFs are identical.
IMat hnf(IMat a);

int imat_rank(IMat a);

// Invariant factors d1 | d2 | ... | dr (all positive) of the row span.
std::vector<Int> snf_invariants(IMat a);

// Does v lie in the row span of the HNF matrix h?
bool hnf_contains(IMat const &h, IVec const &v);

// Integer coefficients c with c * h == v, if any.
std::optional<IVec> hnf_solve(IMat const &h, IVec const &v);

// Canonical coset representative of v modulo rowspan(h); h must be in HNF
// (any rank: reduction happens along the pivot staircase).
IVec hnf_reduce(IMat const &h, IVec v);

// Structure of a finitely generated abelian group Z^n / rowspan(sub).
struct AbInvariants {
    std::vector<Int> torsion; // invariant factors > 1, ascending divisibility
    int free_rank = 0;

    bool finite() const { return free_rank == 0; }
    Int torsion_order() const
    {
        Int o = 1;
        for (auto const &d : torsion)
            o *= d;
        return o;
    }
    bool operator==(AbInvariants const &) const = default;
    std::string str() const;
};

AbInvariants ab_quotient(int n, IMat const &sub);

} // namespace ge2
