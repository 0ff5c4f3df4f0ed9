#include "ge2/decide.hpp"

#include <algorithm>

namespace ge2 {

bool decide_fa_e2(Order const &o)
{
    for (auto const &nm : {"I3", "O2", "O3"})
        if (order_isomorphic(o, builtin_order(nm)))
            return true;
    return false;
}

bool decide_hfa_e2(Order const &o)
{
    (void)o; // finite-index subgroups with infinite abelianization always exist
    return false;
}

bool decide_fa_borel(Order const &o)
{
    return identify_group(unit_group(o).group) != "C2";
}

std::vector<Int> char_poly(IMat const &a)
{
    int n = static_cast<int>(a.size());
    // Faddeev-LeVerrier: M_1 = A, c_k = -tr(A M_k')/k with
    // M_{k+1} = A (M_k + c_k I)
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = a[i][j];
    std::vector<Int> res(n + 1);
    res[n] = 1;
    Rat ck = 0;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            // m = A * (m + ck * I)
            for (int i = 0; i < n; ++i)
                m[i][i] += ck;
            std::vector<std::vector<Rat>> nm(n, std::vector<Rat>(n));
            for (int i = 0; i < n; ++i)
                for (int l = 0; l < n; ++l)
                    for (int j = 0; j < n; ++j)
                        nm[i][j] += Rat(a[i][l]) * m[l][j];
            m = std::move(nm);
        }
        Rat tr = 0;
        for (int i = 0; i < n; ++i)
            tr += m[i][i];
        ck = -tr / k;
        if (den(ck) != 1)
            throw invariant_error("characteristic polynomial not integral");
        res[n - k] = num(ck);
    }
    return res;
}

namespace {

Int poly_eval(std::vector<Int> const &poly, Int const &x)
{
    Int v = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it)
        v = v * x + *it;
    return v;
}

} // namespace

bool has_rational_root(std::vector<Int> const &poly)
{
    if (poly.empty() || poly.back() != 1)
        throw domain_error("rational-root test needs a monic polynomial");
    Int c0 = poly.front();
    if (c0 == 0)
        return true; // root 0
    Int a = abs(c0);
    for (Int d = 1; d * d <= a; ++d) {
        if (a % d != 0)
            continue;
        Int divisors[2] = {d, Int(a / d)};
        for (Int const &cand : divisors)
            if (poly_eval(poly, cand) == 0 || poly_eval(poly, -cand) == 0)
                return true;
    }
    return false;
}

GrkReport grk_criterion(Order const &o, std::string const &mode)
{
    if (mode != "D2" && mode != "DE2")
        throw parse_error("unknown diagonal group mode '" + mode +
                          "' (expected D2 or DE2)");
    GrkReport rep;
    rep.mode = mode;
    auto units = short_vectors(o, 1);
    auto ug = unit_group(o);
    auto der = unit_abelianization(ug).derived;
    int n = o.rank();
    for (auto const &mu : units) {
        for (auto const &nu : units) {
            if (mode == "DE2") {
                int p = ug.index_of(o.mul(mu, nu));
                if (std::find(der.begin(), der.end(), p) == der.end())
                    continue;
            }
            IMat t(n, IVec(n, 0));
            IVec ni = o.conj(nu); // = nu^-1, units have norm 1
            for (int j = 0; j < n; ++j) {
                IVec ej(n, 0);
                ej[j] = 1;
                t[j] = o.mul(o.mul(ni, ej), mu);
            }
            auto poly = char_poly(t);
            if (!has_rational_root(poly)) {
                rep.found = true;
                rep.mu = mu;
                rep.nu = nu;
                rep.char_poly = poly;
                return rep;
            }
        }
    }
    return rep;
}

HfaReport decide_hfa(FiniteGroup const &g)
{
    if (g.n > 2000)
        throw domain_error("normal-subgroup enumeration is limited to "
                           "groups of order at most 2000");
    HfaReport rep;
    rep.cut = is_cut(g);
    if (!rep.cut) {
        rep.certificate = "not cut";
        return rep;
    }
    for (auto const &nm : forbidden_quotient_names()) {
        auto f = builtin_group(nm);
        if (f.n <= g.n && g.n % f.n == 0 && maps_onto(g, f)) {
            rep.forbidden_witness = nm;
            rep.certificate = "maps onto " + nm;
            return rep;
        }
    }
    rep.hfa = true;
    rep.certificate = "cut with no forbidden quotient";
    return rep;
}

HfaReport decide_odd_order(FiniteGroup const &g)
{
    if (g.n % 2 == 0)
        throw domain_error("the cut shortcut requires odd group order");
    HfaReport rep;
    rep.cut = is_cut(g);
    rep.hfa = rep.cut;
    rep.certificate = rep.cut ? "cut (odd order: all labels agree)"
                              : "not cut (odd order: all labels agree)";
    return rep;
}

ExceptionalReport exceptional_type(AlgebraRef const &a, int n)
{
    ExceptionalReport rep;
    rep.totally_definite = a->kind == AlgKind::Quaternion;
    // Q, imaginary quadratic fields and totally definite quaternion algebras
    // all carry an order with finite unit group
    rep.division_has_finite_unit_order = true;
    bool commutative = a->kind != AlgKind::Quaternion;
    if (n == 1 && !commutative && !rep.totally_definite)
        rep.type = ExceptionalType::TypeI; // unreachable for definite kinds
    else if (n == 2 && rep.division_has_finite_unit_order)
        rep.type = ExceptionalType::TypeII;
    switch (a->kind) {
    case AlgKind::Rational:
        rep.in_catalog = true;
        break;
    case AlgKind::ImQuadratic:
        rep.in_catalog = a->d == 1 || a->d == 2 || a->d == 3;
        break;
    case AlgKind::Quaternion:
        rep.in_catalog = (a->u == -1 && a->v == -1) ||
                         (a->u == -1 && a->v == -3) ||
                         (a->u == -2 && a->v == -5);
        break;
    }
    return rep;
}

ComponentPredicates component_predicates(FiniteGroup const &g)
{
    ComponentPredicates rep;
    rep.solvable = is_solvable(g);
    rep.has_m2q = maps_onto(g, builtin_group("D8")) ||
                  maps_onto(g, builtin_group("S3"));
    rep.has_m2h5 =
        g.n % 240 == 0 && maps_onto(g, builtin_group("G240_90"));
    if (rep.solvable && rep.has_m2h5)
        throw invariant_error("solvable group mapping onto G240_90");
    return rep;
}

} // namespace ge2
