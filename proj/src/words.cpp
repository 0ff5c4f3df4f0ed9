#include "ge2/words.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace ge2 {

namespace {

bool is_zero(IVec const &v)
{
    for (auto const &x : v)
        if (x != 0)
            return false;
    return true;
}

IVec zero_vec(Order const &o) { return IVec(o.rank(), 0); }

IVec scaled(IVec v, Int const &s)
{
    for (auto &x : v)
        x *= s;
    return v;
}

} // namespace

IVec unit_inv(Order const &o, IVec const &u)
{
    if (o.norm(u) != 1)
        throw domain_error("inverse of a non-unit");
    return o.conj(u);
}

Letter letter_E(IVec x, bool inverse)
{
    Letter l;
    l.kind = Letter::Kind::E;
    l.inverse = inverse;
    l.x = std::move(x);
    return l;
}

Letter letter_diag(IVec mu, IVec nu, bool inverse)
{
    Letter l;
    l.kind = Letter::Kind::Diag;
    l.inverse = inverse;
    l.mu = std::move(mu);
    l.nu = std::move(nu);
    return l;
}

Letter letter_D(Order const &o, IVec mu, bool inverse)
{
    IVec nu = unit_inv(o, mu);
    return letter_diag(std::move(mu), std::move(nu), inverse);
}

Mat2 mat_identity(Order const &o)
{
    return Mat2{o.one, zero_vec(o), zero_vec(o), o.one};
}

Mat2 mat_mul(Order const &o, Mat2 const &l, Mat2 const &r)
{
    return Mat2{o.add(o.mul(l.a, r.a), o.mul(l.b, r.c)),
                o.add(o.mul(l.a, r.b), o.mul(l.b, r.d)),
                o.add(o.mul(l.c, r.a), o.mul(l.d, r.c)),
                o.add(o.mul(l.c, r.b), o.mul(l.d, r.d))};
}

Mat2 mat_neg(Order const &o, Mat2 const &m)
{
    return Mat2{o.neg(m.a), o.neg(m.b), o.neg(m.c), o.neg(m.d)};
}

bool mat_is_diagonal(Mat2 const &m) { return is_zero(m.b) && is_zero(m.c); }

Mat2 eval_E(Order const &o, IVec const &x)
{
    return Mat2{x, o.one, o.neg(o.one), zero_vec(o)};
}

namespace {

Mat2 eval_letter(Order const &o, Letter const &l)
{
    if (l.kind == Letter::Kind::E) {
        if (!l.inverse)
            return eval_E(o, l.x);
        // E(x)^-1 = (0 -1 // 1 x)
        return Mat2{zero_vec(o), o.neg(o.one), o.one, l.x};
    }
    if (!l.inverse)
        return Mat2{l.mu, zero_vec(o), zero_vec(o), l.nu};
    return Mat2{unit_inv(o, l.mu), zero_vec(o), zero_vec(o),
                unit_inv(o, l.nu)};
}

Mat2 eval_ts(Order const &o, std::vector<IVec> const &ts)
{
    Mat2 m = mat_identity(o);
    for (auto const &t : ts)
        m = mat_mul(o, m, eval_E(o, t));
    return m;
}

} // namespace

Mat2 eval_word(Order const &o, Word const &w)
{
    Mat2 m = mat_identity(o);
    for (auto const &l : w)
        m = mat_mul(o, m, eval_letter(o, l));
    return m;
}

namespace {

// One canonicalization pass over the E-parameter list: splice interior
// zeros (R1), splice interior units through (R7)/(R3'), drop a leading
// E(0)E(0) pair (R4).  The trailing diagonal [p, q] absorbs the factors.
bool canonical_pass(Order const &o, std::vector<IVec> &ts, IVec &p, IVec &q)
{
    size_t l = ts.size();
    if (l >= 2 && is_zero(ts[0]) && is_zero(ts[1])) {
        ts.erase(ts.begin(), ts.begin() + 2);
        p = o.neg(p);
        q = o.neg(q);
        return true;
    }
    for (size_t i = 1; i + 1 < l; ++i) {
        if (is_zero(ts[i])) {
            // E(x)E(0)E(y) = -E(x+y)
            ts[i - 1] = o.add(ts[i - 1], ts[i + 1]);
            ts.erase(ts.begin() + i, ts.begin() + i + 2);
            p = o.neg(p);
            q = o.neg(q);
            return true;
        }
        if (o.norm(ts[i]) == 1) {
            // E(x)E(a)E(y) = E(x - a^-1)D(a)E(y - a^-1), then push D(a)
            // right with D(m)E(y) = E(mym)D(m^-1)
            IVec ai = unit_inv(o, ts[i]);
            IVec m = ts[i];
            ts[i - 1] = o.sub(ts[i - 1], ai);
            ts[i + 1] = o.sub(ts[i + 1], ai);
            ts.erase(ts.begin() + i);
            for (size_t j = i; j < ts.size(); ++j) {
                ts[j] = o.mul(o.mul(m, ts[j]), m);
                m = unit_inv(o, m);
            }
            p = o.mul(m, p);
            q = o.mul(unit_inv(o, m), q);
            return true;
        }
    }
    return false;
}

} // namespace

CanonicalWord to_canonical(Order const &o, Word const &w)
{
    CanonicalWord c;
    c.p = o.one;
    c.q = o.one;
    // flatten to E-letters with the diagonal pushed right:
    // [a,b]E(y) = E(a y b^-1)[b,a]
    for (auto const &l : w) {
        if (l.kind == Letter::Kind::E) {
            std::vector<IVec> xs;
            if (!l.inverse)
                xs = {l.x};
            else // E(x)^-1 = E(0)E(-x)E(0)
                xs = {zero_vec(o), o.neg(l.x), zero_vec(o)};
            for (auto const &x : xs) {
                c.ts.push_back(o.mul(o.mul(c.p, x), unit_inv(o, c.q)));
                std::swap(c.p, c.q);
            }
        } else {
            IVec mu = l.mu, nu = l.nu;
            if (l.inverse) {
                mu = unit_inv(o, mu);
                nu = unit_inv(o, nu);
            }
            c.p = o.mul(c.p, mu);
            c.q = o.mul(c.q, nu);
        }
    }
    while (canonical_pass(o, c.ts, c.p, c.q))
        ;
    // the rewrites must preserve the evaluation exactly
    Mat2 diag{c.p, zero_vec(o), zero_vec(o), c.q};
    if (mat_mul(o, eval_ts(o, c.ts), diag) != eval_word(o, w))
        throw invariant_error("canonicalization changed the word value");
    return c;
}

std::vector<IVec> b_sequence(Order const &o, std::vector<IVec> const &ts)
{
    std::vector<IVec> bs;
    if (ts.empty())
        return bs;
    IVec a = ts[0], b = o.one;
    bs.push_back(b);
    for (size_t i = 1; i < ts.size(); ++i) {
        IVec na = o.sub(o.mul(a, ts[i]), b);
        b = a;
        a = na;
        bs.push_back(b);
    }
    return bs;
}

ReductionTrace reduce_relation(Order const &o, Word const &w)
{
    if (!mat_is_diagonal(eval_word(o, w)))
        throw domain_error("not a relation: the word is not diagonal");
    auto c = to_canonical(o, w);
    std::vector<IVec> ts = c.ts;
    ReductionTrace trace;
    std::optional<std::pair<Int, int>> last; // (m, h) at the last descent

    // returns true if a rotation (conjugation by E(0)) was needed; that
    // replaces the relation by a conjugate one, resetting the measure
    auto cleanup = [&](std::vector<IVec> &v) {
        IVec p = o.one, q = o.one;
        bool again = true, rotated = false;
        while (again) {
            again = false;
            while (canonical_pass(o, v, p, q))
                again = true;
            if (v.size() >= 3 && is_zero(v[0]) && !is_zero(v[1])) {
                // conjugate by E(0)^-1: rotate the leading zero to the back
                v.erase(v.begin());
                v.push_back(zero_vec(o));
                again = rotated = true;
            }
        }
        return rotated;
    };

    cleanup(ts);
    for (int guard = 0; ts.size() >= 3; ++guard) {
        if (guard > 100000)
            throw invariant_error("descent failed to terminate");
        auto bs = b_sequence(o, ts);
        Int m = 0;
        int h = 0; // 1-based, largest index attaining the max
        for (size_t i = 0; i < bs.size(); ++i) {
            Int nb = o.norm(bs[i]);
            if (nb >= m) {
                m = nb;
                h = static_cast<int>(i) + 1;
            }
        }
        int l = static_cast<int>(ts.size());
        if (h <= 1 || h >= l)
            throw invariant_error("descent pivot escaped the interior");
        if (last && !(m < last->first ||
                      (m == last->first && h < last->second)))
            throw invariant_error("descent measure failed to decrease");
        last = {m, h};

        IVec t = ts[h - 1];
        Int nt = o.norm(t);
        ReductionStep step;
        step.before = ts;
        step.m = m;
        step.h = h;
        IVec tb = o.conj(t);
        if (nt == 2) {
            // E(t) = -E(0)E(-conj t)E(-t)E(-conj t)E(0)
            step.rule = "norm-2";
            ts[h - 2] = o.sub(ts[h - 2], tb);
            ts[h - 1] = o.neg(t);
            ts[h] = o.sub(ts[h], tb);
        } else if (nt == 3) {
            step.rule = "norm-3";
            ts[h - 2] = o.sub(ts[h - 2], tb);
            ts[h - 1] = o.neg(t);
            ts[h] = o.sub(ts[h], tb);
            ts.insert(ts.begin() + h, {o.neg(tb), o.neg(t)});
        } else {
            throw domain_error("descent obstruction: pivot norm is "
                               "neither 2 nor 3");
        }
        // the substitution itself must strictly decrease (m, h)
        {
            auto nbs = b_sequence(o, ts);
            Int nm = 0;
            int nh = 0;
            for (size_t i = 0; i < nbs.size(); ++i) {
                Int nb = o.norm(nbs[i]);
                if (nb >= nm) {
                    nm = nb;
                    nh = static_cast<int>(i) + 1;
                }
            }
            if (!(nm < m || (nm == m && nh < h)))
                throw invariant_error("descent measure failed to decrease");
        }
        if (cleanup(ts))
            last.reset(); // conjugated relation: the measure starts over
        if (!mat_is_diagonal(eval_ts(o, ts)))
            throw invariant_error("descent step broke the relation");
        step.after = ts;
        trace.steps.push_back(std::move(step));
        ++trace.descents;
    }
    if (!ts.empty())
        throw invariant_error("descent stopped on a short nontrivial word");
    if (!mat_is_diagonal(eval_ts(o, ts)))
        throw invariant_error("descent broke the relation");
    trace.final_ts = ts;
    return trace;
}

namespace {

// rational coordinates of an algebra element w.r.t. the order basis
std::vector<Rat> rational_coords(Order const &o, Elem const &x)
{
    int n = o.rank();
    // solve q * B = x.c where row i of B is basis_elem(i)'s algebra coords
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            m[j][i] = o.basis_elem(i).c[j]; // transpose
        m[i][n] = x.c[i];
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (m[p][c] == 0)
            ++p;
        std::swap(m[p], m[c]);
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0)
                continue;
            Rat f = m[r][c] / m[c][c];
            for (int j = c; j <= n; ++j)
                m[r][j] -= f * m[c][j];
        }
    }
    std::vector<Rat> q(n);
    for (int i = 0; i < n; ++i)
        q[i] = m[i][n] / m[i][i];
    return q;
}

std::pair<IVec, IVec> euclid_divide_impl(Order const &o, IVec const &a,
                                         IVec const &b, bool left)
{
    int n = o.rank();
    if (is_zero(b))
        throw domain_error("division by zero");
    if (is_zero(a))
        return {zero_vec(o), zero_vec(o)};
    Elem ea = o.from_coords(a), eb = o.from_coords(b);
    Elem quot = left ? ea * inv(eb) : inv(eb) * ea;
    auto qr = rational_coords(o, quot);
    IVec q0(n);
    for (int i = 0; i < n; ++i)
        q0[i] = rat_round(qr[i]);
    Int nb = o.norm(b);
    auto remainder = [&](IVec const &q) {
        return o.sub(a, left ? o.mul(q, b) : o.mul(b, q));
    };
    IVec r0 = remainder(q0);
    if (o.norm(r0) < nb)
        return {q0, r0};
    // fallback: search widening boxes around the rounded point
    std::optional<std::pair<IVec, IVec>> best;
    IVec q = q0;
    for (int radius = 1; radius <= 2 && !best; ++radius) {
        std::function<void(int)> rec = [&](int i) {
            if (i == n) {
                IVec r = remainder(q);
                if (o.norm(r) < nb &&
                    (!best || o.norm(r) < o.norm(best->second)))
                    best = {{q, r}};
                return;
            }
            for (int d = -radius; d <= radius; ++d) {
                q[i] = q0[i] + d;
                rec(i + 1);
            }
            q[i] = q0[i];
        };
        rec(0);
    }
    if (!best)
        throw domain_error("not norm-Euclidean here: no quotient with "
                           "smaller remainder");
    return *best;
}

} // namespace

std::pair<IVec, IVec> euclid_divide(Order const &o, IVec const &a,
                                    IVec const &b)
{
    return euclid_divide_impl(o, a, b, true);
}

std::pair<IVec, IVec> euclid_divide_right(Order const &o, IVec const &a,
                                          IVec const &b)
{
    return euclid_divide_impl(o, a, b, false);
}

Word ge2_decompose(Order const &o, Mat2 const &m)
{
    // left-reduce m to the identity, recording the row operations
    std::vector<Word> ops; // applied left, in order
    Mat2 cur = m;
    auto apply = [&](Word frag) {
        cur = mat_mul(o, eval_word(o, frag), cur);
        ops.push_back(std::move(frag));
    };
    int guard = 0;
    while (!is_zero(cur.c)) {
        if (++guard > 1000)
            throw invariant_error("row reduction failed to terminate");
        if (!is_zero(cur.a)) {
            // row1 -= q*row2 with a = q*c + r:  (1 -q // 0 1) = E(q)E(0)^-1
            auto [q, r] = euclid_divide(o, cur.a, cur.c);
            if (!is_zero(q))
                apply({letter_E(q), letter_E(zero_vec(o), true)});
        }
        // swap rows with a sign: E(0)*(a b // c d) = (c d // -a -b)
        apply({letter_E(zero_vec(o))});
    }
    if (o.norm(cur.a) != 1 || o.norm(cur.d) != 1)
        throw domain_error("matrix is not invertible over the order");
    // scale the diagonal away, then clear the top-right entry
    apply({letter_diag(unit_inv(o, cur.a), unit_inv(o, cur.d))});
    if (!is_zero(cur.b))
        apply({letter_E(cur.b), letter_E(zero_vec(o), true)});
    if (!(cur == mat_identity(o)))
        throw invariant_error("row reduction did not reach the identity");
    // m = op_1^-1 op_2^-1 ... op_k^-1
    Word out;
    for (auto const &frag : ops)
        for (auto it = frag.rbegin(); it != frag.rend(); ++it) {
            Letter l = *it;
            l.inverse = !l.inverse;
            out.push_back(std::move(l));
        }
    if (!(eval_word(o, out) == m))
        throw invariant_error("decomposition does not evaluate back");
    return out;
}

RelationSuiteReport verify_relation_suite(Order const &o, int samples,
                                          unsigned seed)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    auto rnd = [&] {
        IVec v(o.rank());
        for (auto &x : v)
            x = coef(rng);
        return v;
    };
    RelationSuiteReport rep;
    auto require = [&](bool ok, char const *what) {
        if (!ok)
            throw invariant_error(std::string("relation failed: ") + what);
        ++rep.checks;
    };
    auto E = [&](IVec const &x) { return eval_E(o, x); };
    auto D = [&](IVec const &mu) {
        return Mat2{mu, zero_vec(o), zero_vec(o), unit_inv(o, mu)};
    };
    auto diag = [&](IVec const &mu, IVec const &nu) {
        return Mat2{mu, zero_vec(o), zero_vec(o), nu};
    };
    IVec zero = zero_vec(o);
    Mat2 e0sq = mat_mul(o, E(zero), E(zero));
    auto units = short_vectors(o, 1);

    // R4: E(0)^2 = D(-1) = -I
    require(e0sq == mat_neg(o, mat_identity(o)), "R4");

    for (int s = 0; s < samples; ++s) {
        IVec x = rnd(), y = rnd(), z = rnd();
        // R1: E(x)E(0)E(y) = E(0)^2 E(x+y)
        require(mat_mul(o, mat_mul(o, E(x), E(zero)), E(y)) ==
                    mat_mul(o, e0sq, E(o.add(x, y))),
                "R1");
        // R5: E(x) * E(0)E(-x)E(0) = I
        require(mat_mul(o, E(x),
                        mat_mul(o, mat_mul(o, E(zero), E(o.neg(x))),
                                E(zero))) == mat_identity(o),
                "R5");
        // R6: E(x)E(y)^-1 E(z) = E(x-y+z)
        Mat2 yinv{zero, o.neg(o.one), o.one, y};
        require(mat_mul(o, mat_mul(o, E(x), yinv), E(z)) ==
                    E(o.add(o.sub(x, y), z)),
                "R6");
    }
    // unit-parameter relations, exhaustively over units
    for (auto const &mu : units) {
        IVec mi = unit_inv(o, mu);
        // R2: E(mu)E(mu^-1)E(mu) = E(0)^2 D(mu)
        require(mat_mul(o, mat_mul(o, E(mu), E(mi)), E(mu)) ==
                    mat_mul(o, e0sq, D(mu)),
                "R2");
        for (int s = 0; s < 3; ++s) {
            IVec x = rnd(), y = rnd();
            // R3': E(x)D(mu) = D(mu^-1)E(mu x mu)
            require(mat_mul(o, E(x), D(mu)) ==
                        mat_mul(o, D(mi), E(o.mul(o.mul(mu, x), mu))),
                    "R3'");
            // R7: E(x)E(mu)E(y) = E(x - mu^-1)D(mu)E(y - mu^-1)
            require(mat_mul(o, mat_mul(o, E(x), E(mu)), E(y)) ==
                        mat_mul(o, mat_mul(o, E(o.sub(x, mi)), D(mu)),
                                E(o.sub(y, mi))),
                    "R7");
        }
        for (auto const &nu : units) {
            IVec x = rnd();
            // R3: E(x)[mu,nu] = [nu,mu]E(nu^-1 x mu)
            require(mat_mul(o, E(x), diag(mu, nu)) ==
                        mat_mul(o, diag(nu, mu),
                                E(o.mul(o.mul(unit_inv(o, nu), x), mu))),
                    "R3");
            // R8: [u^-1 v^-1 u v, 1] = D(u^-1)D(v^-1)D(uv)
            IVec comm = o.mul(o.mul(unit_inv(o, mu), unit_inv(o, nu)),
                              o.mul(mu, nu));
            require(diag(comm, o.one) ==
                        mat_mul(o, mat_mul(o, D(unit_inv(o, mu)),
                                           D(unit_inv(o, nu))),
                                D(o.mul(mu, nu))),
                    "R8");
        }
    }
    return rep;
}

AlphaReport alpha_relations(Order const &o)
{
    AlphaReport rep;
    for (int n = 2; n <= 3; ++n) {
        for (auto const &a : short_vectors(o, n)) {
            Mat2 base = mat_mul(o, eval_E(o, o.conj(a)), eval_E(o, a));
            Mat2 acc = mat_identity(o);
            for (int k = 0; k < n; ++k)
                acc = mat_mul(o, acc, base);
            if (!(acc == mat_neg(o, mat_identity(o))))
                throw invariant_error("alpha relation failed");
            (n == 2 ? rep.norm2 : rep.norm3)++;
        }
    }
    return rep;
}

IVec phi_map(Order const &o, Word const &w)
{
    IVec u = o.one;
    for (auto const &l : w) {
        if (l.kind != Letter::Kind::Diag)
            continue;
        IVec v = o.mul(l.mu, l.nu);
        u = o.mul(u, l.inverse ? unit_inv(o, v) : v);
    }
    // least representative of u modulo the derived subgroup of the units
    auto ug = unit_group(o);
    int idx = ug.index_of(u);
    if (idx < 0)
        throw invariant_error("phi value is not a unit");
    auto derived = derived_subgroup(ug.group);
    IVec best = ug.elems[ug.group.op(idx, derived[0])];
    for (int d : derived)
        best = std::min(best, ug.elems[ug.group.op(idx, d)]);
    return best;
}

namespace {

IVec letterwise_sum(Order const &o, Word const &w, IVec const &shift)
{
    IVec acc = IVec(o.rank(), 0);
    for (auto const &l : w) {
        if (l.kind != Letter::Kind::E)
            throw domain_error("map needs a word in E-letters only");
        IVec v = o.sub(l.x, shift);
        acc = l.inverse ? o.sub(acc, v) : o.add(acc, v);
    }
    return acc;
}

} // namespace

IVec psi_map(Order const &o, Word const &w)
{
    return hnf_reduce(n_ideal(o), letterwise_sum(o, w, o.one));
}

IVec tau_map(Order const &o, Word const &w)
{
    return hnf_reduce(m_subgroup(o).lattice,
                      letterwise_sum(o, w, scaled(o.one, 3)));
}

namespace {

using MatN = std::vector<std::vector<IVec>>;

MatN matn_id(Order const &o, int n)
{
    MatN m(n, std::vector<IVec>(n, IVec(o.rank(), 0)));
    for (int i = 0; i < n; ++i)
        m[i][i] = o.one;
    return m;
}

MatN matn_mul(Order const &o, MatN const &a, MatN const &b)
{
    int n = static_cast<int>(a.size());
    MatN r(n, std::vector<IVec>(n, IVec(o.rank(), 0)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j)
                r[i][j] = o.add(r[i][j], o.mul(a[i][k], b[k][j]));
    return r;
}

MatN e_mat(Order const &o, int n, int i, int j, IVec const &r)
{
    MatN m = matn_id(o, n);
    m[i][j] = r;
    return m;
}

} // namespace

int elementary_commutator_check(int n, Order const &o, int samples,
                                unsigned seed)
{
    if (n != 3 && n != 4)
        throw domain_error("elementary commutator check supports n in {3,4}");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    auto rnd = [&] {
        IVec v(o.rank());
        for (auto &x : v)
            x = coef(rng);
        return v;
    };
    int checks = 0;
    auto comm = [&](MatN const &a, MatN const &ainv, MatN const &b,
                    MatN const &binv) {
        return matn_mul(o, matn_mul(o, ainv, binv), matn_mul(o, a, b));
    };
    auto e_pair = [&](int i, int j, IVec const &r) {
        return std::pair{e_mat(o, n, i, j, r), e_mat(o, n, i, j, o.neg(r))};
    };
    for (int s = 0; s < samples; ++s) {
        IVec r = rnd(), t = rnd();
        // iterate over all admissible index patterns (0-based)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        if (i == j || k == l)
                            continue;
                        std::vector<int> ids = {i, j, k, l};
                        std::sort(ids.begin(), ids.end());
                        if (std::unique(ids.begin(), ids.end()) - ids.begin() <=
                            2)
                            continue;
                        auto [A, Ai] = e_pair(k, l, r);
                        auto [B, Bi] = e_pair(i, j, t);
                        MatN c = comm(A, Ai, B, Bi);
                        MatN expect;
                        if (j != k && i != l)
                            expect = matn_id(o, n);
                        else if (j == k && i != l)
                            expect = e_mat(o, n, i, l, o.neg(o.mul(t, r)));
                        else if (j != k && i == l)
                            expect = e_mat(o, n, k, j, o.mul(r, t));
                        else
                            continue; // excluded by |{i,j,k,l}| > 2
                        if (c != expect)
                            throw invariant_error(
                                "elementary commutator identity failed");
                        ++checks;
                    }
        // x_{i,i+k}(t) as an iterated commutator of superdiagonal matrices
        for (int i = 0; i + 2 <= n - 1; ++i) {
            MatN X = e_mat(o, n, i, i + 1, t);
            MatN Xi = e_mat(o, n, i, i + 1, o.neg(t));
            for (int m = i + 1; m + 1 <= n - 1; ++m) {
                auto [B, Bi] = e_pair(m, m + 1, o.one);
                X = comm(X, Xi, B, Bi);
                if (!(X == e_mat(o, n, i, m + 1, t)))
                    throw invariant_error(
                        "iterated commutator identity failed");
                Xi = e_mat(o, n, i, m + 1, o.neg(t));
                ++checks;
            }
        }
    }
    return checks;
}

} // namespace ge2
