#include "ge2/units.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ge2 {

std::vector<std::vector<Rat>> norm_gram(Order const &o)
{
    int n = o.rank();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // polarization of the norm form: B(x,y) = Tr(x * conj(y)) / 2
            Elem p = o.basis_elem(i) * conj(o.basis_elem(j));
            a[i][j] = rtrace(p) / 2;
        }
    return a;
}

std::vector<IVec> short_vectors(Order const &o, Int const &t)
{
    if (t < 1)
        throw domain_error("short_vectors needs a positive norm target");
    int n = o.rank();
    auto a = norm_gram(o);
    // A = U^T D U with U unit upper triangular, D positive diagonal
    std::vector<Rat> d(n);
    std::vector<std::vector<Rat>> u(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        Rat di = a[i][i];
        for (int k = 0; k < i; ++k)
            di -= d[k] * u[k][i] * u[k][i];
        if (!(di > 0))
            throw invariant_error("norm form is not positive definite");
        d[i] = di;
        u[i][i] = 1;
        for (int j = i + 1; j < n; ++j) {
            Rat s = a[i][j];
            for (int k = 0; k < i; ++k)
                s -= d[k] * u[k][i] * u[k][j];
            u[i][j] = s / di;
        }
    }
    // N(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2; enumerate from the last
    // coordinate down, walking each level outward from the real minimizer
    std::vector<IVec> out;
    IVec x(n, 0);
    std::function<void(int, Rat const &)> rec = [&](int i, Rat const &rem) {
        if (i < 0) {
            if (rem == 0)
                out.push_back(x);
            return;
        }
        Rat c(0);
        for (int j = i + 1; j < n; ++j)
            c += u[i][j] * Rat(x[j]);
        auto fits = [&](Int const &m) {
            Rat s = Rat(m) + c;
            return d[i] * s * s <= rem;
        };
        Int m0 = rat_floor(-c);
        for (Int m = m0; fits(m); --m) {
            x[i] = m;
            Rat s = Rat(m) + c;
            rec(i - 1, rem - d[i] * s * s);
        }
        for (Int m = m0 + 1; fits(m); ++m) {
            x[i] = m;
            Rat s = Rat(m) + c;
            rec(i - 1, rem - d[i] * s * s);
        }
        x[i] = 0;
    };
    rec(n - 1, Rat(t));
    for (auto const &v : out)
        if (o.norm(v) != t)
            throw invariant_error("short vector with wrong norm");
    std::sort(out.begin(), out.end());
    return out;
}

int UnitGroup::index_of(IVec const &coords) const
{
    for (size_t k = 0; k < elems.size(); ++k)
        if (elems[k] == coords)
            return static_cast<int>(k);
    return -1;
}

UnitGroup unit_group(Order const &o)
{
    UnitGroup u;
    u.order = o;
    auto vs = short_vectors(o, 1);
    // identity first, the rest in lexicographic order
    u.elems.push_back(o.one);
    for (auto const &v : vs)
        if (v != o.one)
            u.elems.push_back(v);
    if (u.elems.size() != vs.size())
        throw invariant_error("unit enumeration missed the identity");
    std::map<IVec, int> idx;
    for (size_t k = 0; k < u.elems.size(); ++k)
        idx[u.elems[k]] = static_cast<int>(k);
    int n = static_cast<int>(u.elems.size());
    FiniteGroup g;
    g.name = "U(" + o.name + ")";
    g.n = n;
    g.tab.assign(n, std::vector<int>(n));
    g.invv.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto it = idx.find(o.mul(u.elems[a], u.elems[b]));
            if (it == idx.end())
                throw invariant_error("unit set not closed under product");
            g.tab[a][b] = it->second;
            if (it->second == 0)
                g.invv[a] = b;
        }
    for (int a = 0; a < n; ++a)
        if (g.invv[a] < 0)
            throw invariant_error("unit without inverse");
    // small generating set, preferring high-order elements
    std::vector<int> gens;
    while (subgroup_closure(g, gens).size() != static_cast<size_t>(n)) {
        auto have = subgroup_closure(g, gens);
        std::vector<bool> in(n, false);
        for (int h : have)
            in[h] = true;
        int best = -1, bo = -1;
        for (int e = 0; e < n; ++e)
            if (!in[e] && g.order_of(e) > bo) {
                bo = g.order_of(e);
                best = e;
            }
        gens.push_back(best);
    }
    g.gens = gens;
    u.group = std::move(g);
    return u;
}

std::string identify_group(FiniteGroup const &g)
{
    for (int e = 0; e < g.n; ++e)
        if (g.order_of(e) == g.n)
            return "C" + std::to_string(g.n);
    if (g.n == 8 && is_isomorphic(g, builtin_group("Q8")))
        return "Q8";
    if (g.n == 12 && is_isomorphic(g, builtin_group("C3:C4")))
        return "C3:C4";
    if (g.n == 24 && is_isomorphic(g, builtin_group("SL(2,3)")))
        return "SL(2,3)";
    return "other";
}

UnitAbelianization unit_abelianization(UnitGroup const &u)
{
    UnitAbelianization r;
    r.derived = derived_subgroup(u.group);
    r.invariants = abelian_invariants(quotient_group(u.group, r.derived));
    return r;
}

namespace {

bool all_ones(std::vector<Int> const &d, size_t k)
{
    if (d.size() != k)
        return false;
    for (auto const &x : d)
        if (x != 1)
            return false;
    return true;
}

bool some_subset_extends(std::vector<IVec> const &units, int k)
{
    int n = static_cast<int>(units.size());
    std::vector<int> pick;
    std::function<bool(int)> rec = [&](int start) {
        if (static_cast<int>(pick.size()) == k) {
            IMat m;
            for (int p : pick)
                m.push_back(units[p]);
            return all_ones(snf_invariants(m), k);
        }
        for (int i = start; i < n; ++i) {
            pick.push_back(i);
            if (rec(i + 1))
                return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(0);
}

} // namespace

int inv_of_order(Order const &o)
{
    auto units = short_vectors(o, 1);
    for (int k = o.rank(); k >= 1; --k)
        if (some_subset_extends(units, k))
            return k;
    throw invariant_error("even {1} failed to extend to a basis");
}

namespace {

// trace form values Tr(b_i conj(b_j)) for pruning candidate images
IMat trace_form(Order const &o)
{
    int n = o.rank();
    IMat t(n, IVec(n));
    std::vector<IVec> basis(n);
    for (int i = 0; i < n; ++i) {
        basis[i] = IVec(n, 0);
        basis[i][i] = 1;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[i][j] = o.trace(o.mul(basis[i], o.conj(basis[j])));
    return t;
}

} // namespace

bool order_isomorphic(Order const &o1, Order const &o2)
{
    int n = o1.rank();
    if (n != o2.rank())
        return false;
    auto tf = trace_form(o1);
    // candidate images per basis element: same norm, same trace
    std::vector<std::vector<IVec>> cands(n);
    for (int i = 0; i < n; ++i) {
        IVec bi(n, 0);
        bi[i] = 1;
        Int nm = o1.norm(bi), tr = o1.trace(bi);
        if (nm == 0) {
            cands[i] = {IVec(n, 0)};
            continue;
        }
        for (auto const &v : short_vectors(o2, nm))
            if (o2.trace(v) == tr)
                cands[i].push_back(v);
        if (cands[i].empty())
            return false;
    }
    std::vector<IVec> img(n);
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == n) {
            // bijectivity: the image matrix must be unimodular
            auto d = snf_invariants(img);
            if (static_cast<int>(d.size()) != n)
                return false;
            for (auto const &x : d)
                if (x != 1)
                    return false;
            // unital: phi(1) = 1
            IVec one(n, 0);
            for (int k = 0; k < n; ++k)
                for (int c = 0; c < n; ++c)
                    one[c] += o1.one[k] * img[k][c];
            if (one != o2.one)
                return false;
            // multiplicative on all basis pairs
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    IVec lhs(n, 0); // phi(b_a b_b) via structure constants
                    for (int k = 0; k < n; ++k)
                        for (int c = 0; c < n; ++c)
                            lhs[c] += o1.sc[a][b][k] * img[k][c];
                    if (lhs != o2.mul(img[a], img[b]))
                        return false;
                }
            return true;
        }
        for (auto const &cand : cands[i]) {
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = o2.trace(o2.mul(cand, o2.conj(img[j]))) == tf[i][j];
            if (!ok)
                continue;
            img[i] = cand;
            if (rec(i + 1))
                return true;
        }
        return false;
    };
    return rec(0);
}

int rational_span(Order const &o, std::vector<IVec> const &subset)
{
    for (auto const &v : subset)
        if (static_cast<int>(v.size()) != o.rank())
            throw domain_error("subset element has wrong coordinate length");
    return imat_rank(subset);
}

} // namespace ge2
