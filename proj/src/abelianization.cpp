#include "ge2/abelianization.hpp"

#include <map>

namespace ge2 {

namespace {

IVec scaled(IVec v, Int const &s)
{
    for (auto &x : v)
        x *= s;
    return v;
}

bool is_zero_vec(IVec const &v)
{
    for (auto const &x : v)
        if (x != 0)
            return false;
    return true;
}

} // namespace

IMat n_ideal(Order const &o)
{
    std::vector<IVec> gens;
    for (auto const &u : short_vectors(o, 1))
        gens.push_back(o.sub(u, o.one));
    return ideal_closure(o, gens);
}

MSubgroupReport m_subgroup(Order const &o)
{
    int n = o.rank();
    MSubgroupReport r;
    auto units = short_vectors(o, 1);

    // (1) alpha x alpha - x; additive in x, so basis elements suffice
    for (auto const &a : units)
        for (int i = 0; i < n; ++i) {
            IVec bi(n, 0);
            bi[i] = 1;
            IVec g = o.sub(o.mul(o.mul(a, bi), a), bi);
            if (!is_zero_vec(g))
                r.type1.push_back(g);
        }

    // (2) sums of 3(alpha+1)(beta+1) over sequences whose commutator product
    // is trivial: closed walks in the Cayley graph of the commutator-closure,
    // edges g -> g*c(alpha,beta) labeled 3(alpha+1)(beta+1).  The closed-walk
    // sums at the identity are generated by q(g) + label - q(h) for any
    // realized potential q.
    auto ug = unit_group(o);
    auto const &G = ug.group;
    struct Edge {
        int value_src;
        IVec label;
    };
    std::vector<std::pair<int, IVec>> steps; // (commutator, edge label)
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b) {
            IVec la = o.add(ug.elems[a], o.one), lb = o.add(ug.elems[b], o.one);
            steps.push_back({G.comm(a, b), scaled(o.mul(la, lb), 3)});
        }
    // BFS over the subgroup generated by the commutators, carrying a realized
    // walk sum from the identity as the potential
    std::map<int, IVec> pot;
    std::vector<int> order_bfs{G.id()};
    pot[G.id()] = IVec(n, 0);
    for (size_t head = 0; head < order_bfs.size(); ++head) {
        int g = order_bfs[head];
        for (auto const &[c, label] : steps) {
            int h = G.op(g, c);
            if (!pot.count(h)) {
                pot[h] = o.add(pot[g], label);
                order_bfs.push_back(h);
            }
        }
    }
    r.loop_states = static_cast<int>(order_bfs.size());
    for (int g : order_bfs)
        for (auto const &[c, label] : steps) {
            int h = G.op(g, c);
            ++r.loop_edges;
            IVec gen = o.sub(o.add(pot[g], label), pot[h]);
            if (!is_zero_vec(gen))
                r.type2.push_back(gen);
        }

    // (3) 2(x + conj x) + 6 for N(x) = 2
    for (auto const &x : short_vectors(o, 2)) {
        IVec g = o.add(scaled(o.add(x, o.conj(x)), 2), scaled(o.one, 6));
        if (!is_zero_vec(g))
            r.type3.push_back(g);
    }
    // (4) 3(x + conj x) for N(x) = 3
    for (auto const &x : short_vectors(o, 3)) {
        IVec g = scaled(o.add(x, o.conj(x)), 3);
        if (!is_zero_vec(g))
            r.type4.push_back(g);
    }

    IMat all;
    for (auto const *fam : {&r.type1, &r.type2, &r.type3, &r.type4})
        for (auto const &g : *fam)
            all.push_back(g);
    r.lattice = hnf(all);
    return r;
}

AbInvariants e2_abelianization(Order const &o)
{
    return ab_quotient(o.rank(), m_subgroup(o).lattice);
}

Ge2AbReport ge2_abelianization(Order const &o)
{
    Ge2AbReport r;
    r.o_mod_n = ab_quotient(o.rank(), n_ideal(o));
    if (r.o_mod_n.free_rank != 0)
        throw invariant_error("O/N must be finite");
    for (auto const &d : r.o_mod_n.torsion)
        if (d != 2)
            throw invariant_error("O/N must be elementary abelian of exponent 2");
    r.u_ab = unit_abelianization(unit_group(o)).invariants;
    r.total_order = r.o_mod_n.torsion_order() * r.u_ab.torsion_order();
    r.collapsed = r.o_mod_n.torsion_order() == 1;
    return r;
}

RankReport rank_and_finiteness(Order const &o)
{
    RankReport r;
    r.rank = o.rank();
    r.inv = inv_of_order(o);
    auto inv = e2_abelianization(o);
    r.free_rank = inv.free_rank;
    if (r.free_rank != r.rank - r.inv)
        throw invariant_error("rank formula violated: free rank " +
                              std::to_string(r.free_rank) + " vs rank - inv " +
                              std::to_string(r.rank - r.inv));
    r.finite = inv.finite();
    r.unit_basis = r.inv == r.rank;
    // the Z-span of the units is a subring (units are closed under products),
    // so ring generation and module generation coincide
    auto span = ab_quotient(o.rank(), short_vectors(o, 1));
    r.unit_generated = span.free_rank == 0 && span.torsion_order() == 1;
    for (auto const &nm : {"Z", "I1", "I3", "L", "O2", "O3"})
        if (order_isomorphic(o, builtin_order(nm))) {
            r.known_order = true;
            break;
        }
    if (r.finite != r.known_order || r.finite != r.unit_basis ||
        r.finite != r.unit_generated)
        throw invariant_error("equivalent finiteness conditions disagree");
    return r;
}

} // namespace ge2
