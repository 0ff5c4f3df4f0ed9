#pragma once

#include "ge2/units.hpp"

namespace ge2 {

// The additive subgroup M with E2(O)^ab = (O/M, +), with its generators kept
// by family for reporting.
struct MSubgroupReport {
    std::vector<IVec> type1; // a x a^-conj twists: alpha*x*alpha - x
    std::vector<IVec> type2; // closed-walk sums of 3(alpha+1)(beta+1)
    std::vector<IVec> type3; // 2(x + conj x) + 6, N(x) = 2
    std::vector<IVec> type4; // 3(x + conj x), N(x) = 3
    IMat lattice;            // HNF of M in order coordinates
    int loop_states = 0;     // vertices of the commutator walk graph
    int loop_edges = 0;
};

MSubgroupReport m_subgroup(Order const &o);

// Two-sided ideal generated by {u - 1 : u a unit}, in order coordinates.
IMat n_ideal(Order const &o);

AbInvariants e2_abelianization(Order const &o);

// Pieces of 1 -> O/N -> GE2(O)^ab -> U(O)^ab -> 1.
struct Ge2AbReport {
    AbInvariants o_mod_n;
    AbInvariants u_ab;
    Int total_order = 0;
    bool collapsed = false; // N = O, so GE2(O)^ab = U(O)^ab
};

Ge2AbReport ge2_abelianization(Order const &o);

// Rank formula and the equivalent finiteness conditions.
struct RankReport {
    int rank = 0;
    int inv = 0;
    int free_rank = 0; // of E2(O)^ab; always rank - inv
    bool finite = false;           // (a) E2(O)^ab finite
    bool known_order = false;      // (b) isomorphic to Z, I1, I3, L, O2, O3
    bool unit_basis = false;       // (c) Z-basis consisting of units
    bool unit_generated = false;   // (d)=(e) generated by units
};

RankReport rank_and_finiteness(Order const &o);

} // namespace ge2
