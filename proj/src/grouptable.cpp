#include "ge2/grouptable.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ge2 {

int FiniteGroup::pow(int g, Int e) const
{
    int m = order_of(g);
    Int r = e % m;
    if (r < 0)
        r += m;
    int k = static_cast<int>(r);
    int acc = id();
    for (int t = 0; t < k; ++t)
        acc = op(acc, g);
    return acc;
}

int FiniteGroup::order_of(int g) const
{
    int acc = g, m = 1;
    while (acc != id()) {
        acc = op(acc, g);
        ++m;
    }
    return m;
}

bool FiniteGroup::is_abelian() const
{
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (tab[a][b] != tab[b][a])
                return false;
    return true;
}

FiniteGroup group_from_table(std::string name,
                             std::vector<std::vector<int>> tab,
                             bool check_associativity)
{
    FiniteGroup g;
    g.name = std::move(name);
    g.n = static_cast<int>(tab.size());
    for (auto const &row : tab)
        if (static_cast<int>(row.size()) != g.n)
            throw domain_error("group table is not square");
    // locate the identity
    int e = -1;
    for (int a = 0; a < g.n && e < 0; ++a) {
        bool ok = true;
        for (int b = 0; b < g.n && ok; ++b)
            ok = tab[a][b] == b && tab[b][a] == b;
        if (ok)
            e = a;
    }
    if (e < 0)
        throw domain_error("group table has no identity element");
    if (e != 0) { // relabel so the identity is 0
        std::vector<int> relab(g.n);
        std::iota(relab.begin(), relab.end(), 0);
        std::swap(relab[0], relab[e]);
        std::vector<std::vector<int>> t2(g.n, std::vector<int>(g.n));
        for (int a = 0; a < g.n; ++a)
            for (int b = 0; b < g.n; ++b)
                t2[relab[a]][relab[b]] = relab[tab[a][b]];
        tab = std::move(t2);
    }
    g.tab = std::move(tab);
    g.invv.assign(g.n, -1);
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            if (g.tab[a][b] == 0)
                g.invv[a] = b;
    for (int a = 0; a < g.n; ++a)
        if (g.invv[a] < 0)
            throw domain_error("group table has a non-invertible element");
    if (check_associativity)
        for (int a = 0; a < g.n; ++a)
            for (int b = 0; b < g.n; ++b)
                for (int c = 0; c < g.n; ++c)
                    if (g.tab[g.tab[a][b]][c] != g.tab[a][g.tab[b][c]])
                        throw domain_error("group table is not associative");
    return g;
}

namespace {

// Build a table from a faithful representation: closure of the generators
// under an (associative by construction) multiplication.
template <class T, class Mul>
FiniteGroup tableize(std::string name, T idval, std::vector<T> gen_vals,
                     Mul mul)
{
    std::vector<T> elems{idval};
    std::map<T, int> index{{idval, 0}};
    std::vector<int> gen_idx;
    for (auto const &gv : gen_vals) {
        auto [it, fresh] = index.try_emplace(gv, (int)elems.size());
        if (fresh)
            elems.push_back(gv);
        gen_idx.push_back(it->second);
    }
    for (size_t i = 0; i < elems.size(); ++i) {
        for (auto const &gv : gen_vals) {
            T p = mul(elems[i], gv);
            if (index.try_emplace(p, (int)elems.size()).second)
                elems.push_back(p);
        }
    }
    int n = static_cast<int>(elems.size());
    FiniteGroup g;
    g.name = std::move(name);
    g.n = n;
    g.tab.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto it = index.find(mul(elems[a], elems[b]));
            if (it == index.end())
                throw invariant_error("representation closure not closed");
            g.tab[a][b] = it->second;
        }
    g.invv.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.tab[a][b] == 0)
                g.invv[a] = b;
    g.gens = gen_idx;
    return g;
}

using Perm = std::vector<int>;

Perm perm_mul(Perm const &p, Perm const &q)
{
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        r[i] = p[q[i]];
    return r;
}

using M2 = std::array<int, 4>; // 2x2 over F_p, row major

FiniteGroup matrix_group(std::string name, int p, std::vector<M2> gens)
{
    auto mul = [p](M2 const &a, M2 const &b) {
        return M2{(a[0] * b[0] + a[1] * b[2]) % p,
                  (a[0] * b[1] + a[1] * b[3]) % p,
                  (a[2] * b[0] + a[3] * b[2]) % p,
                  (a[2] * b[1] + a[3] * b[3]) % p};
    };
    return tableize(std::move(name), M2{1, 0, 0, 1}, std::move(gens), mul);
}

} // namespace

FiniteGroup cyclic_group(int n)
{
    if (n < 1)
        throw domain_error("cyclic group needs n >= 1");
    FiniteGroup g;
    g.name = "C" + std::to_string(n);
    g.n = n;
    g.tab.assign(n, std::vector<int>(n));
    g.invv.assign(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g.tab[a][b] = (a + b) % n;
    for (int a = 0; a < n; ++a)
        g.invv[a] = (n - a) % n;
    if (n > 1)
        g.gens = {1};
    return g;
}

FiniteGroup group_from_perms(std::string name,
                             std::vector<std::vector<int>> const &perm_gens)
{
    if (perm_gens.empty())
        throw domain_error("need at least one permutation generator");
    size_t deg = perm_gens[0].size();
    for (auto const &p : perm_gens) {
        if (p.size() != deg)
            throw domain_error("permutation generators of mixed degree");
        std::vector<bool> seen(deg, false);
        for (int x : p) {
            if (x < 0 || static_cast<size_t>(x) >= deg || seen[x])
                throw domain_error("generator is not a permutation");
            seen[x] = true;
        }
    }
    Perm idp(deg);
    std::iota(idp.begin(), idp.end(), 0);
    return tableize(std::move(name), idp, perm_gens, perm_mul);
}

FiniteGroup direct_product(FiniteGroup const &A, FiniteGroup const &B)
{
    FiniteGroup g;
    g.name = A.name + " x " + B.name;
    g.n = A.n * B.n;
    g.tab.assign(g.n, std::vector<int>(g.n));
    g.invv.assign(g.n, 0);
    for (int a1 = 0; a1 < A.n; ++a1)
        for (int b1 = 0; b1 < B.n; ++b1) {
            int x = a1 * B.n + b1;
            g.invv[x] = A.inv(a1) * B.n + B.inv(b1);
            for (int a2 = 0; a2 < A.n; ++a2)
                for (int b2 = 0; b2 < B.n; ++b2)
                    g.tab[x][a2 * B.n + b2] =
                        A.op(a1, a2) * B.n + B.op(b1, b2);
        }
    for (int a : A.gens)
        g.gens.push_back(a * B.n);
    for (int b : B.gens)
        g.gens.push_back(b);
    return g;
}

FiniteGroup semidirect_product(FiniteGroup const &H,
                               std::vector<int> const &sigma, int k,
                               std::string name)
{
    // sigma must be an automorphism of H with sigma^k = id
    for (int a = 0; a < H.n; ++a)
        for (int b = 0; b < H.n; ++b)
            if (sigma[H.op(a, b)] != H.op(sigma[a], sigma[b]))
                throw domain_error("semidirect twist is not a homomorphism");
    std::vector<std::vector<int>> pw(k);
    pw[0].resize(H.n);
    std::iota(pw[0].begin(), pw[0].end(), 0);
    for (int e = 1; e < k; ++e) {
        pw[e].resize(H.n);
        for (int x = 0; x < H.n; ++x)
            pw[e][x] = sigma[pw[e - 1][x]];
    }
    for (int x = 0; x < H.n; ++x)
        if (sigma[pw[k - 1][x]] != x)
            throw domain_error("twist order does not divide the cyclic order");
    FiniteGroup g;
    g.name = std::move(name);
    g.n = H.n * k;
    g.tab.assign(g.n, std::vector<int>(g.n));
    g.invv.assign(g.n, 0);
    for (int h1 = 0; h1 < H.n; ++h1)
        for (int e1 = 0; e1 < k; ++e1) {
            int x = h1 * k + e1;
            for (int h2 = 0; h2 < H.n; ++h2)
                for (int e2 = 0; e2 < k; ++e2)
                    g.tab[x][h2 * k + e2] =
                        H.op(h1, pw[e1][h2]) * k + (e1 + e2) % k;
        }
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y)
            if (g.tab[x][y] == 0)
                g.invv[x] = y;
    for (int h : H.gens)
        g.gens.push_back(h * k);
    g.gens.push_back(1); // (id, 1)
    return g;
}

std::vector<int> subgroup_closure(FiniteGroup const &G, std::vector<int> gens)
{
    std::vector<bool> in(G.n, false);
    std::vector<int> list{G.id()};
    in[G.id()] = true;
    for (int g : gens)
        if (!in[g]) {
            in[g] = true;
            list.push_back(g);
        }
    for (size_t i = 0; i < list.size(); ++i)
        for (int g : gens) {
            int p = G.op(list[i], g);
            if (!in[p]) {
                in[p] = true;
                list.push_back(p);
            }
        }
    std::sort(list.begin(), list.end());
    return list;
}

std::vector<int> normal_closure(FiniteGroup const &G, std::vector<int> seed)
{
    // close under conjugation first, then take the generated subgroup
    std::vector<bool> in(G.n, false);
    std::vector<int> conjc;
    for (int s : seed)
        if (!in[s]) {
            in[s] = true;
            conjc.push_back(s);
        }
    for (size_t i = 0; i < conjc.size(); ++i)
        for (int g = 0; g < G.n; ++g) {
            int c = G.conj(conjc[i], g);
            if (!in[c]) {
                in[c] = true;
                conjc.push_back(c);
            }
        }
    return subgroup_closure(G, conjc);
}

FiniteGroup quotient_group(FiniteGroup const &G, std::vector<int> const &nsub,
                           std::string name)
{
    std::vector<bool> in_n(G.n, false);
    for (int x : nsub)
        in_n[x] = true;
    for (int x : nsub)
        for (int g = 0; g < G.n; ++g)
            if (!in_n[G.conj(x, g)])
                throw domain_error("quotient by a non-normal subgroup");
    std::vector<int> rep(G.n, -1); // canonical (minimal) coset representative
    for (int g = 0; g < G.n; ++g) {
        if (rep[g] >= 0)
            continue;
        int mn = g;
        for (int x : nsub)
            mn = std::min(mn, G.op(g, x));
        for (int x : nsub)
            rep[G.op(g, x)] = mn;
    }
    std::vector<int> reps;
    std::vector<int> idx(G.n, -1);
    for (int g = 0; g < G.n; ++g)
        if (rep[g] == g) {
            idx[g] = static_cast<int>(reps.size());
            reps.push_back(g);
        }
    FiniteGroup q;
    q.name = name.empty() ? G.name + "/N" : std::move(name);
    q.n = static_cast<int>(reps.size());
    q.tab.assign(q.n, std::vector<int>(q.n));
    q.invv.assign(q.n, 0);
    for (int a = 0; a < q.n; ++a)
        for (int b = 0; b < q.n; ++b)
            q.tab[a][b] = idx[rep[G.op(reps[a], reps[b])]];
    for (int a = 0; a < q.n; ++a)
        for (int b = 0; b < q.n; ++b)
            if (q.tab[a][b] == 0)
                q.invv[a] = b;
    for (int g : G.gens)
        q.gens.push_back(idx[rep[g]]);
    return q;
}

FiniteGroup central_product(FiniteGroup const &A, FiniteGroup const &B, int a,
                            int b, std::string name)
{
    auto in_center = [](FiniteGroup const &G, int x) {
        for (int g = 0; g < G.n; ++g)
            if (G.op(x, g) != G.op(g, x))
                return false;
        return true;
    };
    if (a == A.id() || b == B.id() || A.op(a, a) != A.id() ||
        B.op(b, b) != B.id() || !in_center(A, a) || !in_center(B, b))
        throw domain_error("central product needs central involutions");
    auto P = direct_product(A, B);
    return quotient_group(P, {P.id(), a * B.n + b}, std::move(name));
}

std::optional<std::vector<int>>
extend_automorphism(FiniteGroup const &G, std::vector<int> const &gens,
                    std::vector<int> const &images)
{
    if (subgroup_closure(G, gens).size() != static_cast<size_t>(G.n))
        return std::nullopt; // gens must generate
    std::vector<int> phi(G.n, -1);
    phi[G.id()] = G.id();
    for (size_t i = 0; i < gens.size(); ++i) {
        if (phi[gens[i]] >= 0 && phi[gens[i]] != images[i])
            return std::nullopt;
        phi[gens[i]] = images[i];
    }
    std::vector<int> list{G.id()};
    std::vector<bool> seen(G.n, false);
    seen[G.id()] = true;
    for (int g : gens)
        if (!seen[g]) {
            seen[g] = true;
            list.push_back(g);
        }
    for (size_t i = 0; i < list.size(); ++i)
        for (size_t t = 0; t < gens.size(); ++t) {
            int y = G.op(list[i], gens[t]);
            int im = G.op(phi[list[i]], images[t]);
            if (!seen[y]) {
                seen[y] = true;
                phi[y] = im;
                list.push_back(y);
            } else if (phi[y] != im)
                return std::nullopt;
        }
    // full homomorphism + bijectivity check
    std::vector<bool> hit(G.n, false);
    for (int x = 0; x < G.n; ++x) {
        if (phi[x] < 0 || hit[phi[x]])
            return std::nullopt;
        hit[phi[x]] = true;
    }
    for (int x = 0; x < G.n; ++x)
        for (int y = 0; y < G.n; ++y)
            if (phi[G.op(x, y)] != G.op(phi[x], phi[y]))
                return std::nullopt;
    return phi;
}

std::vector<std::vector<int>> conjugacy_classes(FiniteGroup const &G)
{
    std::vector<bool> seen(G.n, false);
    std::vector<std::vector<int>> classes;
    for (int g = 0; g < G.n; ++g) {
        if (seen[g])
            continue;
        std::vector<int> cls;
        for (int x = 0; x < G.n; ++x) {
            int c = G.conj(g, x);
            if (!seen[c]) {
                seen[c] = true;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<int> center(FiniteGroup const &G)
{
    std::vector<int> z;
    for (int x = 0; x < G.n; ++x) {
        bool cen = true;
        for (int g = 0; g < G.n && cen; ++g)
            cen = G.op(x, g) == G.op(g, x);
        if (cen)
            z.push_back(x);
    }
    return z;
}

int unique_central_involution(FiniteGroup const &G)
{
    int found = -1;
    for (int x : center(G))
        if (x != G.id() && G.op(x, x) == G.id()) {
            if (found >= 0)
                throw domain_error(G.name +
                                   " has several central involutions");
            found = x;
        }
    if (found < 0)
        throw domain_error(G.name + " has no central involution");
    return found;
}

std::vector<int> derived_subgroup(FiniteGroup const &G)
{
    std::vector<int> comms;
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b)
            comms.push_back(G.comm(a, b));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return subgroup_closure(G, comms);
}

bool is_solvable(FiniteGroup const &G)
{
    std::vector<int> cur(G.n);
    std::iota(cur.begin(), cur.end(), 0);
    while (cur.size() > 1) {
        // derived subgroup of the subgroup `cur`
        std::vector<int> comms;
        for (int a : cur)
            for (int b : cur)
                comms.push_back(G.comm(a, b));
        std::sort(comms.begin(), comms.end());
        comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
        auto next = subgroup_closure(G, comms);
        if (next.size() == cur.size())
            return false;
        cur = std::move(next);
    }
    return true;
}

std::vector<std::vector<int>> normal_subgroups(FiniteGroup const &G)
{
    auto classes = conjugacy_classes(G);
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> todo{{G.id()}};
    seen.insert(todo[0]);
    for (size_t i = 0; i < todo.size(); ++i) {
        auto cur = todo[i]; // copy: todo grows below
        for (auto const &cls : classes) {
            if (std::includes(cur.begin(), cur.end(), cls.begin(), cls.end()))
                continue;
            std::vector<int> seed = cur;
            seed.insert(seed.end(), cls.begin(), cls.end());
            auto nc = normal_closure(G, seed);
            if (seen.insert(nc).second)
                todo.push_back(std::move(nc));
        }
    }
    return {seen.begin(), seen.end()};
}

AbInvariants abelian_invariants(FiniteGroup const &G)
{
    if (!G.is_abelian())
        throw domain_error("abelian_invariants of a non-abelian group");
    std::vector<Int> factors;
    FiniteGroup cur = G;
    while (cur.n > 1) {
        int best = 1, bo = 1;
        for (int g = 1; g < cur.n; ++g) {
            int o = cur.order_of(g);
            if (o > bo) {
                bo = o;
                best = g;
            }
        }
        factors.push_back(bo);
        std::vector<int> sub = subgroup_closure(cur, {best});
        cur = quotient_group(cur, sub);
    }
    // factors are collected largest first; reverse into a divisor chain
    std::reverse(factors.begin(), factors.end());
    AbInvariants inv;
    inv.free_rank = 0;
    for (auto const &f : factors)
        if (f > 1)
            inv.torsion.push_back(f);
    return inv;
}

namespace {

struct IsoInvariants {
    int n, zn, dn, nclasses;
    bool ab;
    std::vector<std::pair<int, int>> order_hist; // (element order, count)
    std::vector<int> class_sizes;

    bool operator==(IsoInvariants const &) const = default;
};

IsoInvariants iso_profile(FiniteGroup const &G)
{
    IsoInvariants p;
    p.n = G.n;
    p.ab = G.is_abelian();
    p.zn = static_cast<int>(center(G).size());
    p.dn = static_cast<int>(derived_subgroup(G).size());
    std::map<int, int> hist;
    for (int g = 0; g < G.n; ++g)
        ++hist[G.order_of(g)];
    p.order_hist.assign(hist.begin(), hist.end());
    auto classes = conjugacy_classes(G);
    p.nclasses = static_cast<int>(classes.size());
    for (auto const &c : classes)
        p.class_sizes.push_back(static_cast<int>(c.size()));
    std::sort(p.class_sizes.begin(), p.class_sizes.end());
    return p;
}

// fingerprint used to narrow candidate generator images
std::vector<std::pair<int, int>> element_profiles(FiniteGroup const &G)
{
    std::vector<std::pair<int, int>> prof(G.n);
    auto classes = conjugacy_classes(G);
    std::vector<int> csize(G.n);
    for (auto const &c : classes)
        for (int g : c)
            csize[g] = static_cast<int>(c.size());
    for (int g = 0; g < G.n; ++g)
        prof[g] = {G.order_of(g), csize[g]};
    return prof;
}

std::vector<int> generating_sequence(FiniteGroup const &G)
{
    std::vector<int> gens;
    auto cur = subgroup_closure(G, {});
    while (static_cast<int>(cur.size()) < G.n) {
        // prefer high-order elements: tends to shorten the sequence
        int best = -1, bo = -1;
        std::vector<bool> in(G.n, false);
        for (int x : cur)
            in[x] = true;
        for (int g = 0; g < G.n; ++g)
            if (!in[g]) {
                int o = G.order_of(g);
                if (o > bo) {
                    bo = o;
                    best = g;
                }
            }
        gens.push_back(best);
        cur = subgroup_closure(G, gens);
    }
    return gens;
}

bool extend_iso(FiniteGroup const &G, FiniteGroup const &H,
                std::vector<int> const &gens, std::vector<int> const &images)
{
    std::vector<int> phi(G.n, -1);
    std::vector<bool> used(H.n, false);
    phi[G.id()] = H.id();
    used[H.id()] = true;
    std::vector<int> list{G.id()};
    for (size_t i = 0; i < gens.size(); ++i) {
        if (phi[gens[i]] == -1) {
            if (used[images[i]])
                return false;
            phi[gens[i]] = images[i];
            used[images[i]] = true;
            list.push_back(gens[i]);
        } else if (phi[gens[i]] != images[i])
            return false;
    }
    for (size_t i = 0; i < list.size(); ++i)
        for (size_t t = 0; t < gens.size(); ++t) {
            int y = G.op(list[i], gens[t]);
            int im = H.op(phi[list[i]], images[t]);
            if (phi[y] == -1) {
                if (used[im])
                    return false;
                phi[y] = im;
                used[im] = true;
                list.push_back(y);
            } else if (phi[y] != im)
                return false;
        }
    if (static_cast<int>(list.size()) != G.n)
        return false; // gens did not generate G (caller guards against this)
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b)
            if (phi[G.op(a, b)] != H.op(phi[a], phi[b]))
                return false;
    return true;
}

bool iso_search(FiniteGroup const &G, FiniteGroup const &H,
                std::vector<int> const &gens,
                std::vector<std::vector<int>> const &cands,
                std::vector<int> &images, size_t depth)
{
    if (depth == gens.size())
        return extend_iso(G, H, gens, images);
    for (int cand : cands[depth]) {
        images[depth] = cand;
        // quick partial consistency: the subgroup generated so far must map
        // consistently; full check happens at the leaf
        bool ok = true;
        if (depth + 1 < gens.size()) {
            std::vector<int> gpart(gens.begin(), gens.begin() + depth + 1);
            std::vector<int> ipart(images.begin(), images.begin() + depth + 1);
            // partial extension on the subgroup generated by the prefix
            std::vector<int> phi(G.n, -1);
            std::vector<bool> used(H.n, false);
            phi[G.id()] = H.id();
            used[H.id()] = true;
            std::vector<int> list{G.id()};
            for (size_t i = 0; i < gpart.size() && ok; ++i) {
                if (phi[gpart[i]] == -1) {
                    if (used[ipart[i]])
                        ok = false;
                    else {
                        phi[gpart[i]] = ipart[i];
                        used[ipart[i]] = true;
                        list.push_back(gpart[i]);
                    }
                } else if (phi[gpart[i]] != ipart[i])
                    ok = false;
            }
            for (size_t i = 0; i < list.size() && ok; ++i)
                for (size_t t = 0; t < gpart.size() && ok; ++t) {
                    int y = G.op(list[i], gpart[t]);
                    int im = H.op(phi[list[i]], ipart[t]);
                    if (phi[y] == -1) {
                        if (used[im])
                            ok = false;
                        else {
                            phi[y] = im;
                            used[im] = true;
                            list.push_back(y);
                        }
                    } else if (phi[y] != im)
                        ok = false;
                }
        }
        if (ok && iso_search(G, H, gens, cands, images, depth + 1))
            return true;
    }
    return false;
}

} // namespace

bool is_isomorphic(FiniteGroup const &G, FiniteGroup const &H)
{
    if (G.n != H.n)
        return false;
    if (G.n == 1)
        return true;
    auto pg = iso_profile(G), ph = iso_profile(H);
    if (!(pg == ph))
        return false;
    if (pg.ab)
        return abelian_invariants(G) == abelian_invariants(H);
    auto gens = generating_sequence(G);
    auto profG = element_profiles(G), profH = element_profiles(H);
    std::vector<std::vector<int>> cands(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        for (int h = 0; h < H.n; ++h)
            if (profH[h] == profG[gens[i]])
                cands[i].push_back(h);
        if (cands[i].empty())
            return false;
    }
    std::vector<int> images(gens.size());
    return iso_search(G, H, gens, cands, images, 0);
}

bool maps_onto(FiniteGroup const &G, FiniteGroup const &H)
{
    if (G.n % H.n != 0)
        return false;
    if (H.n == 1)
        return true;
    for (auto const &nsub : normal_subgroups(G)) {
        if (static_cast<int>(nsub.size()) * H.n != G.n)
            continue;
        if (is_isomorphic(quotient_group(G, nsub), H))
            return true;
    }
    return false;
}

bool is_cut(FiniteGroup const &G)
{
    auto classes = conjugacy_classes(G);
    std::vector<int> cls_of(G.n);
    for (size_t c = 0; c < classes.size(); ++c)
        for (int g : classes[c])
            cls_of[g] = static_cast<int>(c);
    for (auto const &cls : classes) {
        int g = cls[0];
        int m = G.order_of(g);
        for (int j = 2; j < m; ++j) {
            if (std::gcd(j, m) != 1)
                continue;
            int gj = G.pow(g, j);
            if (cls_of[gj] != cls_of[g] && cls_of[gj] != cls_of[G.inv(g)])
                return false;
        }
    }
    return true;
}

namespace {

// word = sequence of nonzero ints, +k meaning generator k-1, -k its inverse
int eval_gword(FiniteGroup const &G, std::vector<int> const &gens,
               std::vector<int> const &word)
{
    int acc = G.id();
    for (int w : word) {
        int g = gens[std::abs(w) - 1];
        acc = G.op(acc, w > 0 ? g : G.inv(g));
    }
    return acc;
}

void require_relations(FiniteGroup const &G, std::vector<int> const &gens,
                       std::vector<std::vector<int>> const &relations,
                       std::string const &what)
{
    for (auto const &r : relations)
        if (eval_gword(G, gens, r) != G.id())
            throw invariant_error(what + ": defining relation fails");
    if (subgroup_closure(G, gens).size() != static_cast<size_t>(G.n))
        throw invariant_error(what + ": generators do not generate");
}

FiniteGroup make_q8()
{
    // faithful 2x2 representation over F_3: i = [[0,-1],[1,0]], j = [[1,1],[1,-1]]
    auto g = matrix_group("Q8", 3, {M2{0, 2, 1, 0}, M2{1, 1, 1, 2}});
    if (g.n != 8)
        throw invariant_error("Q8 construction has wrong order");
    int i = g.gens[0], j = g.gens[1];
    require_relations(g, {i, j},
                      {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}}, "Q8");
    return g;
}

FiniteGroup make_sl23()
{
    auto g = matrix_group("SL(2,3)", 3, {M2{1, 1, 0, 1}, M2{1, 0, 1, 1}});
    if (g.n != 24)
        throw invariant_error("SL(2,3) construction has wrong order");
    return g;
}

FiniteGroup make_sl25()
{
    auto g = matrix_group("SL(2,5)", 5, {M2{1, 1, 0, 1}, M2{1, 0, 1, 1}});
    if (g.n != 120)
        throw invariant_error("SL(2,5) construction has wrong order");
    return g;
}

FiniteGroup make_g16_6()
{
    // modular group of order 16: C8 x| C2 with a^b = a^5
    auto c8 = cyclic_group(8);
    std::vector<int> sigma(8);
    for (int x = 0; x < 8; ++x)
        sigma[x] = 5 * x % 8;
    auto g = semidirect_product(c8, sigma, 2, "G16_6");
    int a = g.gens[0], b = g.gens[1];
    require_relations(g, {a, b},
                      {{1, 1, 1, 1, 1, 1, 1, 1},
                       {2, 2},
                       {-2, 1, 2, -1, -1, -1, -1, -1}},
                      "G16_6");
    return g;
}

FiniteGroup make_g16_13()
{
    auto d8 = builtin_group("D8");
    auto c4 = cyclic_group(4);
    auto g = central_product(d8, c4, unique_central_involution(d8),
                             c4.op(1, 1), "G16_13");
    if (g.n != 16)
        throw invariant_error("G16_13 construction has wrong order");
    // search a presentation triple: a^4 = b^2 = c^2 = 1, a central,
    // b^c = a^2 b
    for (int a = 0; a < g.n; ++a) {
        if (g.order_of(a) != 4)
            continue;
        bool central = true;
        for (int x = 0; x < g.n && central; ++x)
            central = g.op(a, x) == g.op(x, a);
        if (!central)
            continue;
        for (int b = 0; b < g.n; ++b) {
            if (b == g.id() || g.op(b, b) != g.id())
                continue;
            for (int c = 0; c < g.n; ++c) {
                if (c == g.id() || g.op(c, c) != g.id())
                    continue;
                if (g.conj(b, c) != g.op(g.op(a, a), b))
                    continue;
                if (subgroup_closure(g, {a, b, c}).size() ==
                    static_cast<size_t>(g.n)) {
                    g.gens = {a, b, c};
                    return g;
                }
            }
        }
    }
    throw invariant_error("G16_13: presentation generators not found");
}

FiniteGroup make_g32_50()
{
    auto q8 = make_q8();
    auto d8 = builtin_group("D8");
    auto g = central_product(q8, d8, unique_central_involution(q8),
                             unique_central_involution(d8), "G32_50");
    if (g.n != 32)
        throw invariant_error("G32_50 construction has wrong order");
    // presentation: i^4=1, i^2=j^2, i^j=i^-1 (a Q8 pair), a^2=1 commuting
    // with i and j, b^2=1 with i^b=i^-1, j^b=j^-1, a^b=i^2 a
    for (int i = 0; i < g.n; ++i) {
        if (g.order_of(i) != 4)
            continue;
        for (int j = 0; j < g.n; ++j) {
            if (g.order_of(j) != 4 || g.op(i, i) != g.op(j, j) ||
                g.conj(i, j) != g.inv(i))
                continue;
            for (int a = 0; a < g.n; ++a) {
                if (a == g.id() || g.op(a, a) != g.id() ||
                    g.comm(i, a) != g.id() || g.comm(j, a) != g.id())
                    continue;
                for (int b = 0; b < g.n; ++b) {
                    if (b == g.id() || g.op(b, b) != g.id() ||
                        g.conj(i, b) != g.inv(i) ||
                        g.conj(j, b) != g.inv(j) ||
                        g.conj(a, b) != g.op(g.op(i, i), a))
                        continue;
                    if (subgroup_closure(g, {i, j, a, b}).size() ==
                        static_cast<size_t>(g.n)) {
                        g.gens = {i, j, a, b};
                        return g;
                    }
                }
            }
        }
    }
    throw invariant_error("G32_50: presentation generators not found");
}

FiniteGroup make_g96_202()
{
    auto sl = make_sl23();
    auto h = direct_product(sl, cyclic_group(2));
    int z = unique_central_involution(sl); // -1 in SL(2,3)
    // twist: fixes SL(2,3), sends t -> (-1) t
    std::vector<int> sigma(h.n);
    for (int s = 0; s < sl.n; ++s)
        for (int e = 0; e < 2; ++e)
            sigma[s * 2 + e] = (e == 0 ? s : sl.op(z, s)) * 2 + e;
    auto g = semidirect_product(h, sigma, 2, "G96_202");
    if (g.n != 96)
        throw invariant_error("G96_202 construction has wrong order");
    // locate a quaternion pair (i, j) and b of order 3 with i^b=j, j^b=ij
    for (int i = 0; i < sl.n; ++i) {
        if (sl.order_of(i) != 4)
            continue;
        for (int j = 0; j < sl.n; ++j) {
            if (sl.order_of(j) != 4 || sl.op(i, i) != sl.op(j, j) ||
                sl.conj(i, j) != sl.inv(i))
                continue;
            for (int b = 0; b < sl.n; ++b) {
                if (sl.order_of(b) != 3 || sl.conj(i, b) != j ||
                    sl.conj(j, b) != sl.op(i, j))
                    continue;
                // embed: (s) -> s*2*2 (through product then semidirect)
                auto emb = [&](int s) { return (s * 2) * 2; };
                int gi = emb(i), gj = emb(j), gb = emb(b);
                int gt = 1 * 2;        // (id, 1) in sl x C2, exponent 0
                int ga = 1;            // appended generator (id, 1)
                int ii = g.op(gi, gi); // i^2
                for (int x : {gi, gj, gb})
                    if (g.comm(x, gt) != g.id() || g.comm(x, ga) != g.id())
                        throw invariant_error("G96_202: centrality fails");
                if (g.op(ga, ga) != g.id() || g.op(gt, gt) != g.id())
                    throw invariant_error("G96_202: involution fails");
                if (g.conj(gt, ga) != g.op(ii, gt))
                    throw invariant_error("G96_202: twisting relation fails");
                if (subgroup_closure(g, {gi, gj, gb, gt, ga}).size() !=
                    static_cast<size_t>(g.n))
                    throw invariant_error("G96_202: generators fail");
                g.gens = {gi, gj, gb, gt, ga};
                return g;
            }
        }
    }
    throw invariant_error("G96_202: quaternion triple not found in SL(2,3)");
}

FiniteGroup make_g240_90()
{
    auto sl = make_sl25();
    int z = unique_central_involution(sl);
    for (int x = 0; x < sl.n; ++x) {
        if (sl.order_of(x) != 3)
            continue;
        for (int y = 0; y < sl.n; ++y) {
            if (sl.order_of(y) != 5)
                continue;
            int xy = sl.op(x, y);
            if (sl.op(xy, xy) != z)
                continue;
            // presentation images: x -> x^2, y -> (x y^3)^2
            int xi = sl.op(x, x);
            int t = sl.op(x, sl.pow(y, 3));
            int yi = sl.op(t, t);
            auto sigma = extend_automorphism(sl, {x, y}, {xi, yi});
            if (!sigma)
                continue;
            // need an involutory twist
            bool invol = true;
            for (int e = 0; e < sl.n && invol; ++e)
                invol = (*sigma)[(*sigma)[e]] == e;
            if (!invol)
                continue;
            auto g = semidirect_product(sl, *sigma, 2, "G240_90");
            if (g.n != 240)
                throw invariant_error("G240_90 construction has wrong order");
            if (center(g).size() != 2)
                continue; // would be the split direct product instead
            int gx = x * 2, gy = y * 2, gz = z * 2, ga = 1;
            if (g.op(g.op(gx, gy), g.op(gx, gy)) != gz ||
                g.op(ga, ga) != g.id() || g.comm(gz, ga) != g.id() ||
                g.conj(gx, ga) != g.op(gx, gx) ||
                g.conj(gy, ga) != g.op(g.op(gx, g.pow(gy, 3)),
                                       g.op(gx, g.pow(gy, 3))))
                throw invariant_error("G240_90: presentation check fails");
            if (subgroup_closure(g, {gx, gy, ga}).size() !=
                static_cast<size_t>(g.n))
                throw invariant_error("G240_90: generators fail");
            g.gens = {gx, gy, gz, ga};
            return g;
        }
    }
    throw invariant_error("G240_90: no suitable (x, y) pair in SL(2,5)");
}

FiniteGroup make_g384_618()
{
    auto q8 = make_q8();
    auto h = direct_product(q8, q8);
    int qi = q8.gens[0], qj = q8.gens[1];
    int i1 = qi * q8.n, j1 = qj * q8.n, i2 = qi, j2 = qj;
    std::vector<int> gens = {i1, j1, i2, j2};
    std::vector<int> images = {h.inv(j2), h.inv(h.op(i2, j2)), h.inv(j1),
                               h.inv(h.op(i1, j1))};
    auto sigma = extend_automorphism(h, gens, images);
    if (!sigma)
        throw invariant_error("G384_618: twist does not extend");
    auto g = semidirect_product(h, *sigma, 6, "G384_618");
    if (g.n != 384)
        throw invariant_error("G384_618 construction has wrong order");
    auto emb = [&](int x) { return x * 6; };
    int a = 1;
    std::vector<int> G = {emb(i1), emb(j1), emb(i2), emb(j2), a};
    // conjugation relations by a, and a^6 = 1
    if (g.pow(a, 6) != g.id())
        throw invariant_error("G384_618: a^6 != 1");
    // a h a^-1 = sigma(h) on the four quaternion generators
    for (size_t t = 0; t < 4; ++t)
        if (g.conj(G[t], g.inv(a)) != emb((*sigma)[gens[t]]))
            throw invariant_error("G384_618: twisting relation fails");
    if (subgroup_closure(g, G).size() != static_cast<size_t>(g.n))
        throw invariant_error("G384_618: generators fail");
    g.gens = G;
    return g;
}

} // namespace

FiniteGroup builtin_group(std::string const &name)
{
    if (name.size() > 1 && name[0] == 'C') {
        try {
            size_t pos = 0;
            int n = std::stoi(name.substr(1), &pos);
            if (pos + 1 == name.size() && n >= 1)
                return cyclic_group(n);
        } catch (std::exception const &) {
        }
    }
    if (name == "S3")
        return group_from_perms("S3", {{1, 2, 0}, {1, 0, 2}});
    if (name == "D8")
        return group_from_perms("D8", {{1, 2, 3, 0}, {0, 3, 2, 1}});
    if (name == "Q8")
        return make_q8();
    if (name == "SL(2,3)")
        return make_sl23();
    if (name == "SL(2,5)")
        return make_sl25();
    if (name == "C3:C4") {
        auto g = semidirect_product(cyclic_group(3), {0, 2, 1}, 4, "C3:C4");
        if (g.n != 12)
            throw invariant_error("C3:C4 construction has wrong order");
        return g;
    }
    if (name == "Q8xC3") {
        auto g = direct_product(make_q8(), cyclic_group(3));
        g.name = "Q8xC3";
        return g;
    }
    if (name == "G16_6")
        return make_g16_6();
    if (name == "G16_13")
        return make_g16_13();
    if (name == "G32_50")
        return make_g32_50();
    if (name == "G96_202")
        return make_g96_202();
    if (name == "G240_90")
        return make_g240_90();
    if (name == "G384_618")
        return make_g384_618();
    throw parse_error("unknown group '" + name + "'");
}

std::vector<std::string> const &forbidden_quotient_names()
{
    static const std::vector<std::string> names = {
        "D8",     "S3",      "G16_6",   "G16_13",  "Q8xC3",
        "SL(2,3)", "G32_50", "G96_202", "G240_90", "G384_618"};
    return names;
}

} // namespace ge2
