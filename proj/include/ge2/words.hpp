#pragma once

#include "ge2/abelianization.hpp"

namespace ge2 {

// Generators of GE2: E(x) = (x 1 // -1 0) and diagonal [mu, nu].
// D(mu) abbreviates [mu, mu^-1].
struct Letter {
    enum class Kind { E, Diag };
    Kind kind = Kind::E;
    bool inverse = false;
    IVec x;      // E parameter, order coordinates
    IVec mu, nu; // Diag entries (units)
};

using Word = std::vector<Letter>;

Letter letter_E(IVec x, bool inverse = false);
Letter letter_diag(IVec mu, IVec nu, bool inverse = false);
Letter letter_D(Order const &o, IVec mu, bool inverse = false);

// 2x2 matrix over the order, entries in order coordinates.
struct Mat2 {
    IVec a, b, c, d;
    bool operator==(Mat2 const &) const = default;
};

Mat2 mat_identity(Order const &o);
Mat2 mat_mul(Order const &o, Mat2 const &l, Mat2 const &r);
Mat2 mat_neg(Order const &o, Mat2 const &m);
bool mat_is_diagonal(Mat2 const &m);
Mat2 eval_E(Order const &o, IVec const &x);
Mat2 eval_word(Order const &o, Word const &w);

// inverse of a norm-1 unit (its conjugate)
IVec unit_inv(Order const &o, IVec const &u);

// Checks R1..R8 (and R3') as exact matrix identities, with random order
// elements plus exhaustive unit parameters.  Throws on any failure.
struct RelationSuiteReport {
    int checks = 0;
};
RelationSuiteReport verify_relation_suite(Order const &o, int samples,
                                          unsigned seed);

// (E(conj a)E(a))^n = E(0)^2 for every a with N(a) = n in {2,3}.
struct AlphaReport {
    int norm2 = 0, norm3 = 0;
};
AlphaReport alpha_relations(Order const &o);

// E(t_1)...E(t_l) * [p, q], with no interior zeros or units and no leading
// E(0)E(0) pair; evaluates to the same matrix as the input word.
struct CanonicalWord {
    std::vector<IVec> ts;
    IVec p, q;
};
CanonicalWord to_canonical(Order const &o, Word const &w);

// (1,2)-entries of the prefix products of E(t_1)...E(t_l).
std::vector<IVec> b_sequence(Order const &o, std::vector<IVec> const &ts);

struct ReductionStep {
    std::string rule;
    std::vector<IVec> before, after;
    Int m = 0; // max norm among the b_i at this step
    int h = 0; // largest index attaining it (1-based)
};
struct ReductionTrace {
    std::vector<ReductionStep> steps;
    std::vector<IVec> final_ts;
    int descents = 0;
};

// Norm-descent reduction of a relation (a word evaluating to a diagonal
// matrix) down to length < 3.  The measure (m, h) strictly decreases
// lexicographically at every descent step.
ReductionTrace reduce_relation(Order const &o, Word const &w);

// a = q*b + r with N(r) < N(b) (left version), r = a - b*q (right version).
std::pair<IVec, IVec> euclid_divide(Order const &o, IVec const &a,
                                    IVec const &b);
std::pair<IVec, IVec> euclid_divide_right(Order const &o, IVec const &a,
                                          IVec const &b);

// Word in E/Diag letters evaluating to m, via Euclidean row reduction.
Word ge2_decompose(Order const &o, Mat2 const &m);

// phi: GE2 -> U(O)/U(O)', E(x) -> 1, [mu,nu] -> mu*nu; the returned vector
// is the lexicographically least representative of the coset.
IVec phi_map(Order const &o, Word const &w);
// psi: E2 -> O/N, E(x) -> x - 1; reduced mod n_ideal.  E-letters only.
IVec psi_map(Order const &o, Word const &w);
// tau: E2 -> O/M, E(x) -> x - 3; reduced mod m_subgroup.  E-letters only.
IVec tau_map(Order const &o, Word const &w);

// Verifies the elementary-matrix commutator identities and the iterated
// commutator expression for x_{i,i+k} in E_n(O), n in {3,4}.  Returns the
// number of identities checked; throws on failure.
int elementary_commutator_check(int n, Order const &o, int samples,
                                unsigned seed);

} // namespace ge2
