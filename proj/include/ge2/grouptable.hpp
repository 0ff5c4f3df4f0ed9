#pragma once

#include "ge2/intmat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ge2 {

// Finite group as a full multiplication table.  Element 0 is the identity.
struct FiniteGroup {
    std::string name;
    int n = 0;
    std::vector<std::vector<int>> tab; // tab[a][b] = a*b
    std::vector<int> invv;
    std::vector<int> gens; // distinguished generators (construction order)

    int id() const { return 0; }
    int op(int a, int b) const { return tab[a][b]; }
    int inv(int a) const { return invv[a]; }
    int conj(int g, int by) const { return op(op(inv(by), g), by); }
    int comm(int a, int b) const { return op(op(inv(a), inv(b)), op(a, b)); }
    int pow(int g, Int e) const;
    int order_of(int g) const;
    bool is_abelian() const;
};

// Constructors / combinators.  All of them fix up inverses and relabel so
// that the identity is element 0.
FiniteGroup group_from_table(std::string name,
                             std::vector<std::vector<int>> tab,
                             bool check_associativity = true);
FiniteGroup cyclic_group(int n);
FiniteGroup group_from_perms(std::string name,
                             std::vector<std::vector<int>> const &perm_gens);
// Pair (a, b) is encoded as a*B.n + b; gens are the embedded generators.
FiniteGroup direct_product(FiniteGroup const &A, FiniteGroup const &B);
// H x C_k with c*(h)*c^-1 = sigma(h); sigma must be an automorphism whose
// order divides k.  Appended generator is (id, 1).
FiniteGroup semidirect_product(FiniteGroup const &H,
                               std::vector<int> const &sigma, int k,
                               std::string name);
// Quotient of A x B identifying the central involutions a and b.
FiniteGroup central_product(FiniteGroup const &A, FiniteGroup const &B, int a,
                            int b, std::string name);

// Extends gen -> image to a homomorphism G -> G if one exists; verified to be
// an automorphism before returning.
std::optional<std::vector<int>>
extend_automorphism(FiniteGroup const &G, std::vector<int> const &gens,
                    std::vector<int> const &images);

std::vector<int> subgroup_closure(FiniteGroup const &G,
                                  std::vector<int> gens);
std::vector<int> normal_closure(FiniteGroup const &G, std::vector<int> seed);
FiniteGroup quotient_group(FiniteGroup const &G, std::vector<int> const &nsub,
                           std::string name = "");

std::vector<std::vector<int>> conjugacy_classes(FiniteGroup const &G);
std::vector<int> center(FiniteGroup const &G);
std::vector<int> derived_subgroup(FiniteGroup const &G);
std::vector<std::vector<int>> normal_subgroups(FiniteGroup const &G);
bool is_solvable(FiniteGroup const &G);
int unique_central_involution(FiniteGroup const &G);

bool is_isomorphic(FiniteGroup const &G, FiniteGroup const &H);
bool maps_onto(FiniteGroup const &G, FiniteGroup const &H);

// Invariant factor decomposition; requires G abelian.
AbInvariants abelian_invariants(FiniteGroup const &G);

// g ~ g^j or g^-1 ~ g^j for every g and every j coprime to ord(g).
bool is_cut(FiniteGroup const &G);

// Builtins: "C<n>", "S3", "D8", "Q8", "SL(2,3)", "SL(2,5)", "C3:C4",
// "Q8xC3", "G16_6", "G16_13", "G32_50", "G96_202", "G240_90", "G384_618".
// The catalog groups validate their defining presentations on construction.
FiniteGroup builtin_group(std::string const &name);

// Names of the ten forbidden quotients in the HFA criterion.
std::vector<std::string> const &forbidden_quotient_names();

} // namespace ge2
