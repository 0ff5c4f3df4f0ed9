#include "ge2/lattice.hpp"

#include <numeric>

namespace ge2 {

namespace {

Int lcm_int(Int const &a, Int const &b)
{
    return a / gcd(a, b) * b;
}

} // namespace

Elem Lattice::basis_elem(int i) const
{
    std::vector<Rat> c(A->dim);
    for (int j = 0; j < A->dim; ++j)
        c[j] = Rat(m[i][j], den);
    return elem(A, std::move(c));
}

Lattice lattice_from_gens(AlgebraRef A, std::vector<Elem> const &gens)
{
    Int d = 1;
    for (auto const &g : gens) {
        if (!(*g.A == *A))
            throw domain_error("lattice generator from a different algebra");
        for (auto const &x : g.c)
            d = lcm_int(d, den(x));
    }
    IMat rows;
    for (auto const &g : gens) {
        IVec r(A->dim);
        for (int j = 0; j < A->dim; ++j)
            r[j] = num(g.c[j]) * (d / den(g.c[j]));
        rows.push_back(std::move(r));
    }
    rows = hnf(std::move(rows));
    Int content = d;
    for (auto const &r : rows)
        for (auto const &x : r)
            content = gcd(content, x);
    if (!rows.empty() && content > 1) {
        d /= content;
        for (auto &r : rows)
            for (auto &x : r)
                x /= content;
    }
    return Lattice{std::move(A), d, std::move(rows)};
}

std::optional<IVec> lattice_coords(Lattice const &l, Elem const &x)
{
    IVec v(l.A->dim);
    for (int j = 0; j < l.A->dim; ++j) {
        Rat s = x.c[j] * l.den;
        if (den(s) != 1)
            return std::nullopt;
        v[j] = num(s);
    }
    return hnf_solve(l.m, v);
}

bool lattice_contains(Lattice const &l, Elem const &x)
{
    return lattice_coords(l, x).has_value();
}

bool lattice_subset(Lattice const &sub, Lattice const &big)
{
    for (int i = 0; i < sub.rank(); ++i)
        if (!lattice_contains(big, sub.basis_elem(i)))
            return false;
    return true;
}

AbInvariants quotient_invariants(Lattice const &big, Lattice const &sub)
{
    IMat x;
    for (int i = 0; i < sub.rank(); ++i) {
        auto c = lattice_coords(big, sub.basis_elem(i));
        if (!c)
            throw domain_error("quotient_invariants: sublattice not contained "
                               "in the ambient lattice");
        x.push_back(*c);
    }
    return ab_quotient(big.rank(), x);
}

Elem Order::from_coords(IVec const &v) const
{
    std::vector<Rat> c(A->dim, Rat(0));
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < A->dim; ++j)
            c[j] += Rat(v[i] * L.m[i][j], L.den);
    return elem(A, std::move(c));
}

IVec Order::coords(Elem const &x) const
{
    auto c = lattice_coords(L, x);
    if (!c)
        throw domain_error("element " + x.str() + " does not lie in order " +
                           name);
    return *c;
}

IVec Order::mul(IVec const &x, IVec const &y) const
{
    int n = rank();
    IVec r(n, 0);
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0)
            continue;
        for (int j = 0; j < n; ++j) {
            if (y[j] == 0)
                continue;
            Int f = x[i] * y[j];
            for (int k = 0; k < n; ++k)
                r[k] += f * sc[i][j][k];
        }
    }
    return r;
}

IVec Order::add(IVec const &x, IVec const &y) const
{
    IVec r = x;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] += y[i];
    return r;
}

IVec Order::sub(IVec const &x, IVec const &y) const
{
    IVec r = x;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] -= y[i];
    return r;
}

IVec Order::neg(IVec const &x) const
{
    IVec r = x;
    for (auto &t : r)
        t = -t;
    return r;
}

IVec Order::conj(IVec const &x) const
{
    IVec r(rank(), 0);
    for (int i = 0; i < rank(); ++i)
        if (x[i] != 0)
            for (int k = 0; k < rank(); ++k)
                r[k] += x[i] * conj_mat[i][k];
    return r;
}

Int Order::norm(IVec const &x) const
{
    Rat n = rnorm(from_coords(x));
    if (den(n) != 1)
        throw invariant_error("non-integral reduced norm inside order " + name);
    return num(n);
}

Int Order::trace(IVec const &x) const
{
    Rat t = rtrace(from_coords(x));
    if (den(t) != 1)
        throw invariant_error("non-integral reduced trace inside order " + name);
    return num(t);
}

Order order_from_basis(AlgebraRef A, std::vector<Elem> const &basis,
                       std::string name)
{
    Order o;
    o.name = std::move(name);
    o.A = A;
    o.L = lattice_from_gens(A, basis);
    int n = o.L.rank();
    if (n != A->dim)
        throw domain_error("order basis does not have full rank " +
                           std::to_string(A->dim) + " in " + A->str());
    auto in_order = [&](Elem const &x) { return lattice_coords(o.L, x); };
    auto one_c = in_order(elem_one(A));
    if (!one_c)
        throw domain_error("order does not contain 1");
    o.one = *one_c;
    o.sc.assign(n, std::vector<IVec>(n));
    for (int i = 0; i < n; ++i) {
        Elem bi = o.L.basis_elem(i);
        if (den(rtrace(bi)) != 1)
            throw domain_error("order basis element " + bi.str() +
                               " has non-integral reduced trace");
        for (int j = 0; j < n; ++j) {
            Elem p = bi * o.L.basis_elem(j);
            auto c = in_order(p);
            if (!c)
                throw domain_error("lattice is not multiplicatively closed: " +
                                   bi.str() + " * " + o.L.basis_elem(j).str() +
                                   " falls outside");
            o.sc[i][j] = *c;
        }
    }
    o.conj_mat.resize(n);
    for (int i = 0; i < n; ++i) {
        auto c = in_order(ge2::conj(o.L.basis_elem(i)));
        if (!c)
            throw invariant_error("order not closed under conjugation");
        o.conj_mat[i] = *c;
    }
    return o;
}

Order builtin_order(std::string const &name)
{
    auto quad = [&](Int d, bool half, std::string const &nm) {
        auto A = alg_imquadratic(d);
        Elem s = elem(A, {Rat(0), Rat(1)});
        Elem second = half ? Rat(1, 2) * (elem_one(A) + s) : s;
        return order_from_basis(A, {elem_one(A), second}, nm);
    };
    if (name == "Z")
        return order_from_basis(alg_rational(), {elem_one(alg_rational())}, "Z");
    if (name == "I1")
        return quad(1, false, "I1");
    if (name == "I2")
        return quad(2, false, "I2");
    if (name == "I3")
        return quad(3, true, "I3");
    if (name == "I7")
        return quad(7, true, "I7");
    if (name == "I11")
        return quad(11, true, "I11");
    if (name.rfind("Zsqrt:", 0) == 0) {
        Int d;
        try {
            d = Int(name.substr(6));
        } catch (std::exception const &) {
            throw parse_error("bad order spec '" + name + "'");
        }
        if (d <= 0)
            throw domain_error("Zsqrt:<d> needs d > 0; Z[sqrt(d)] with d >= 0 "
                               "has infinite unit group");
        return quad(d, false, name);
    }
    auto quat = [&](Int u, Int v, std::vector<std::vector<Rat>> rows,
                    std::string const &nm) {
        auto A = alg_quaternion(u, v);
        std::vector<Elem> basis;
        for (auto &r : rows)
            basis.push_back(elem(A, std::move(r)));
        return order_from_basis(A, basis, nm);
    };
    Rat h(1, 2), q(1, 4);
    if (name == "L")
        return quat(-1, -1,
                    {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
                    "L");
    if (name == "O2")
        return quat(-1, -1,
                    {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {h, h, h, h}},
                    "O2");
    if (name == "O3")
        return quat(-1, -3,
                    {{1, 0, 0, 0}, {0, 1, 0, 0}, {h, 0, h, 0}, {0, h, 0, h}},
                    "O3");
    if (name == "O5")
        return quat(-2, -5,
                    {{1, 0, 0, 0},
                     {h, h, h, 0},
                     {h, q, 0, -q},
                     {h, 3 * q, 0, q}},
                    "O5");
    throw parse_error("unknown order '" + name + "'");
}

IMat ideal_closure(Order const &o, std::vector<IVec> gens)
{
    int n = o.rank();
    IMat cur = hnf(IMat(gens.begin(), gens.end()));
    while (true) {
        IMat next = cur;
        for (auto const &g : cur) {
            for (int i = 0; i < n; ++i) {
                IVec b(n, 0);
                b[i] = 1;
                next.push_back(o.mul(b, g));
                next.push_back(o.mul(g, b));
            }
        }
        next = hnf(std::move(next));
        if (next == cur)
            return cur;
        cur = std::move(next);
    }
}

} // namespace ge2
