#pragma once

#include "ge2/rat.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ge2 {

// The three kinds of rational division algebras that can carry an order with
// finite unit group: Q itself, an imaginary quadratic field Q(sqrt(-d)) and a
// totally definite rational quaternion algebra (u,v / Q) with u,v < 0.
enum class AlgKind { Rational, ImQuadratic, Quaternion };

struct AlgebraDesc {
    AlgKind kind;
    int dim; // 1, 2 or 4
    Int d;   // ImQuadratic: second basis vector s satisfies s^2 = -d, d > 0
    Int u, v; // Quaternion: i^2 = u, j^2 = v, k = ij = -ji; u,v < 0

    bool operator==(AlgebraDesc const &o) const
    {
        return kind == o.kind && d == o.d && u == o.u && v == o.v;
    }
    std::string str() const;
};

using AlgebraRef = std::shared_ptr<const AlgebraDesc>;

AlgebraRef alg_rational();
AlgebraRef alg_imquadratic(Int d);    // throws domain_error unless d > 0
AlgebraRef alg_quaternion(Int u, Int v); // throws unless u < 0 and v < 0

struct Elem {
    AlgebraRef A;
    std::vector<Rat> c; // coordinates in the basis {1}, {1,s} or {1,i,j,k}

    bool is_zero() const;
    bool operator==(Elem const &o) const;
    std::string str() const;
};

Elem elem(AlgebraRef A, std::vector<Rat> coords);
Elem elem_zero(AlgebraRef A);
Elem elem_one(AlgebraRef A);
Elem elem_int(AlgebraRef A, Int n);

Elem operator+(Elem const &a, Elem const &b);
Elem operator-(Elem const &a, Elem const &b);
Elem operator-(Elem const &a);
Elem operator*(Elem const &a, Elem const &b);
Elem operator*(Rat const &s, Elem const &a);

Elem conj(Elem const &a);      // standard involution; fixes the 1-coordinate
Rat rnorm(Elem const &a);      // reduced norm a * conj(a), a scalar
Rat rtrace(Elem const &a);     // reduced trace a + conj(a)
Elem inv(Elem const &a);       // throws domain_error on zero

void require_same_algebra(Elem const &a, Elem const &b);

} // namespace ge2
