#include "ge2/algebra.hpp"

#include <sstream>

namespace ge2 {

std::string AlgebraDesc::str() const
{
    std::ostringstream os;
    switch (kind) {
    case AlgKind::Rational:
        os << "Q";
        break;
    case AlgKind::ImQuadratic:
        os << "Q(sqrt(-" << d << "))";
        break;
    case AlgKind::Quaternion:
        os << "(" << u << "," << v << " / Q)";
        break;
    }
    return os.str();
}

AlgebraRef alg_rational()
{
    static AlgebraRef a =
        std::make_shared<AlgebraDesc>(AlgebraDesc{AlgKind::Rational, 1, 0, 0, 0});
    return a;
}

AlgebraRef alg_imquadratic(Int d)
{
    if (d <= 0)
        throw domain_error("imaginary quadratic algebra needs d > 0 (got d=" +
                           d.str() + "); indefinite kinds have infinite unit groups");
    return std::make_shared<AlgebraDesc>(
        AlgebraDesc{AlgKind::ImQuadratic, 2, d, 0, 0});
}

AlgebraRef alg_quaternion(Int u, Int v)
{
    if (u >= 0 || v >= 0)
        throw domain_error("quaternion algebra (" + u.str() + "," + v.str() +
                           ") is not totally definite; need u < 0 and v < 0");
    return std::make_shared<AlgebraDesc>(
        AlgebraDesc{AlgKind::Quaternion, 4, 0, u, v});
}

bool Elem::is_zero() const
{
    for (auto const &x : c)
        if (x != 0)
            return false;
    return true;
}

bool Elem::operator==(Elem const &o) const
{
    return *A == *o.A && c == o.c;
}

std::string Elem::str() const
{
    static char const *names[] = {"", "i", "j", "k"};
    std::ostringstream os;
    bool first = true;
    for (size_t t = 0; t < c.size(); ++t) {
        if (c[t] == 0)
            continue;
        char const *unit =
            A->kind == AlgKind::ImQuadratic && t == 1 ? "s" : names[t];
        if (!first)
            os << (c[t] > 0 ? " + " : " - ");
        else if (c[t] < 0)
            os << "-";
        Rat a = abs(c[t]);
        if (a != 1 || t == 0)
            os << rat_str(a);
        if (t > 0 && a != 1)
            os << "*";
        os << unit;
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

Elem elem(AlgebraRef A, std::vector<Rat> coords)
{
    if (static_cast<int>(coords.size()) != A->dim)
        throw domain_error("coordinate count does not match algebra dimension");
    return Elem{std::move(A), std::move(coords)};
}

Elem elem_zero(AlgebraRef A)
{
    std::vector<Rat> c(A->dim, Rat(0));
    return Elem{std::move(A), std::move(c)};
}

Elem elem_one(AlgebraRef A)
{
    auto e = elem_zero(std::move(A));
    e.c[0] = 1;
    return e;
}

Elem elem_int(AlgebraRef A, Int n)
{
    auto e = elem_zero(std::move(A));
    e.c[0] = Rat(n);
    return e;
}

void require_same_algebra(Elem const &a, Elem const &b)
{
    if (!(*a.A == *b.A))
        throw domain_error("elements live in different algebras: " +
                           a.A->str() + " vs " + b.A->str());
}

Elem operator+(Elem const &a, Elem const &b)
{
    require_same_algebra(a, b);
    Elem r = a;
    for (size_t t = 0; t < r.c.size(); ++t)
        r.c[t] += b.c[t];
    return r;
}

Elem operator-(Elem const &a, Elem const &b)
{
    require_same_algebra(a, b);
    Elem r = a;
    for (size_t t = 0; t < r.c.size(); ++t)
        r.c[t] -= b.c[t];
    return r;
}

Elem operator-(Elem const &a)
{
    Elem r = a;
    for (auto &x : r.c)
        x = -x;
    return r;
}

Elem operator*(Rat const &s, Elem const &a)
{
    Elem r = a;
    for (auto &x : r.c)
        x *= s;
    return r;
}

Elem operator*(Elem const &a, Elem const &b)
{
    require_same_algebra(a, b);
    Elem r = elem_zero(a.A);
    switch (a.A->kind) {
    case AlgKind::Rational:
        r.c[0] = a.c[0] * b.c[0];
        break;
    case AlgKind::ImQuadratic: {
        Rat d(a.A->d);
        r.c[0] = a.c[0] * b.c[0] - d * a.c[1] * b.c[1];
        r.c[1] = a.c[0] * b.c[1] + a.c[1] * b.c[0];
        break;
    }
    case AlgKind::Quaternion: {
        Rat u(a.A->u), v(a.A->v);
        auto const &x = a.c;
        auto const &y = b.c;
        r.c[0] = x[0] * y[0] + u * x[1] * y[1] + v * x[2] * y[2] -
                 u * v * x[3] * y[3];
        r.c[1] = x[0] * y[1] + x[1] * y[0] - v * x[2] * y[3] + v * x[3] * y[2];
        r.c[2] = x[0] * y[2] + x[2] * y[0] + u * x[1] * y[3] - u * x[3] * y[1];
        r.c[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1];
        break;
    }
    }
    return r;
}

Elem conj(Elem const &a)
{
    Elem r = a;
    for (size_t t = 1; t < r.c.size(); ++t)
        r.c[t] = -r.c[t];
    return r;
}

Rat rtrace(Elem const &a) { return 2 * a.c[0]; }

Rat rnorm(Elem const &a)
{
    switch (a.A->kind) {
    case AlgKind::Rational:
        return a.c[0] * a.c[0];
    case AlgKind::ImQuadratic:
        return a.c[0] * a.c[0] + Rat(a.A->d) * a.c[1] * a.c[1];
    case AlgKind::Quaternion: {
        Rat u(a.A->u), v(a.A->v);
        return a.c[0] * a.c[0] - u * a.c[1] * a.c[1] - v * a.c[2] * a.c[2] +
               u * v * a.c[3] * a.c[3];
    }
    }
    throw invariant_error("unreachable algebra kind");
}

Elem inv(Elem const &a)
{
    Rat n = rnorm(a);
    if (n == 0)
        throw domain_error("division by zero in " + a.A->str());
    return Rat(1) / n * conj(a);
}

} // namespace ge2
