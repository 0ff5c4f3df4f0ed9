#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ge2/words.hpp"

#include <random>

using namespace ge2;

namespace {

Word random_word(Order const &o, std::mt19937 &rng, int len,
                 bool e_only = false)
{
    std::uniform_int_distribution<int> coef(-3, 3), kind(0, 3);
    auto units = short_vectors(o, 1);
    std::uniform_int_distribution<size_t> up(0, units.size() - 1);
    Word w;
    for (int i = 0; i < len; ++i) {
        int k = kind(rng);
        if (k == 0 && !e_only) {
            w.push_back(letter_D(o, units[up(rng)]));
        } else {
            IVec x(o.rank());
            for (auto &c : x)
                c = coef(rng);
            w.push_back(letter_E(x, !e_only && k == 1));
        }
    }
    return w;
}

Word inverse_word(Word w)
{
    std::reverse(w.begin(), w.end());
    for (auto &l : w)
        l.inverse = !l.inverse;
    return w;
}

} // namespace

TEST_CASE("matrix evaluation basics")
{
    auto z = builtin_order("Z");
    Mat2 e0 = eval_E(z, {0});
    CHECK(mat_mul(z, e0, e0) == mat_neg(z, mat_identity(z)));
    CHECK(mat_is_diagonal(mat_identity(z)));
    CHECK_FALSE(mat_is_diagonal(e0));

    // a letter times its formal inverse is the identity
    std::mt19937 rng(7);
    for (auto const &nm : {"Z", "I1", "O2"}) {
        auto o = builtin_order(nm);
        for (int i = 0; i < 20; ++i) {
            Word w = random_word(o, rng, 1);
            Word winv = inverse_word(w);
            w.insert(w.end(), winv.begin(), winv.end());
            CHECK(eval_word(o, w) == mat_identity(o));
        }
    }
}

TEST_CASE("relation suite holds exactly")
{
    for (auto const &nm : {"Z", "I1", "I3", "L", "O2"}) {
        auto o = builtin_order(nm);
        auto rep = verify_relation_suite(o, 8, 12345);
        CHECK(rep.checks > 0);
    }
}

TEST_CASE("alpha relations and their counts")
{
    struct Row {
        const char *order;
        int n2, n3;
    };
    for (auto const &r : std::vector<Row>{{"Z", 0, 0},
                                          {"I1", 4, 0},
                                          {"I2", 2, 4},
                                          {"I3", 0, 6},
                                          {"L", 24, 32},
                                          {"O2", 24, 96}}) {
        auto rep = alpha_relations(builtin_order(r.order));
        CHECK(rep.norm2 == r.n2);
        CHECK(rep.norm3 == r.n3);
    }
}

TEST_CASE("canonical form over Z")
{
    auto z = builtin_order("Z");
    // interior zero: E(1)E(0)E(1) = -E(2)
    auto c = to_canonical(z, {letter_E({1}), letter_E({0}), letter_E({1})});
    CHECK(c.ts == std::vector<IVec>{{2}});
    CHECK(c.p == IVec{-1});
    CHECK(c.q == IVec{-1});

    // interior unit: E(3)E(1)E(3) = E(2)D(1)E(2) = E(2)E(2)
    c = to_canonical(z, {letter_E({3}), letter_E({1}), letter_E({3})});
    CHECK(c.ts == std::vector<IVec>{{2}, {2}});
    CHECK(c.p == IVec{1});
    CHECK(c.q == IVec{1});

    // E(x)^-1 = E(0)E(-x)E(0)
    c = to_canonical(z, {letter_E({5}, true)});
    CHECK(c.ts == std::vector<IVec>{{0}, {-5}, {0}});
}

TEST_CASE("canonical form pushes diagonals right")
{
    auto o = builtin_order("I1");
    IVec i = {0, 1}, y = {1, 2};
    auto c = to_canonical(o, {letter_D(o, i), letter_E(y)});
    // D(i)E(y) = E(i*y*i)D(i^-1) and i*y*i = -y
    CHECK(c.ts == std::vector<IVec>{{-1, -2}});
    CHECK(c.p == IVec{0, -1});
    CHECK(c.q == IVec{0, 1});
}

TEST_CASE("canonical form on random words")
{
    std::mt19937 rng(99);
    for (auto const &nm : {"Z", "I1", "I2", "I3", "L", "O2", "Zsqrt:5"}) {
        auto o = builtin_order(nm);
        for (int k = 0; k < 25; ++k) {
            // to_canonical asserts internally that the value is unchanged
            auto c = to_canonical(o, random_word(o, rng, 6));
            for (size_t j = 1; j + 1 < c.ts.size(); ++j) {
                Int nrm = o.norm(c.ts[j]);
                CHECK(nrm != 0);
                CHECK(nrm != 1);
            }
            CHECK(o.norm(c.p) == 1);
            CHECK(o.norm(c.q) == 1);
        }
    }
}

TEST_CASE("b sequence recursion")
{
    auto z = builtin_order("Z");
    auto bs = b_sequence(z, {{2}, {3}, {5}});
    CHECK(bs == std::vector<IVec>{{1}, {2}, {5}});
    CHECK(b_sequence(z, {}).empty());
}

TEST_CASE("descent over the Gaussian integers")
{
    auto o = builtin_order("I1");
    IVec a = {1, 1}, ab = {1, -1}, zero = {0, 0};
    // (E(1-i)E(1+i))^2 E(0)^2 = I
    Word w = {letter_E(ab),   letter_E(a),    letter_E(ab),
              letter_E(a),    letter_E(zero), letter_E(zero)};
    CHECK(eval_word(o, w) == mat_identity(o));
    auto tr = reduce_relation(o, w);
    CHECK(tr.final_ts.empty());
    CHECK(tr.descents >= 1);
    CHECK(tr.steps.front().rule == "norm-2");
    for (size_t i = 1; i < tr.steps.size(); ++i) {
        auto const &p = tr.steps[i - 1], &s = tr.steps[i];
        CHECK((s.m < p.m || (s.m == p.m && s.h < p.h)));
    }
}

TEST_CASE("short relations need no descent")
{
    auto z = builtin_order("Z");
    Word w(4, letter_E({0})); // E(0)^4 = I
    auto tr = reduce_relation(z, w);
    CHECK(tr.descents == 0);
    CHECK(tr.final_ts.empty());
}

TEST_CASE("random relations reduce to nothing")
{
    std::mt19937 rng(2024);
    for (auto const &nm : {"Z", "I1", "I2", "I3", "I7", "I11", "O2"}) {
        auto o = builtin_order(nm);
        for (int k = 0; k < 15; ++k) {
            Word w = random_word(o, rng, 5);
            Word winv = inverse_word(w);
            w.insert(w.end(), winv.begin(), winv.end());
            auto tr = reduce_relation(o, w);
            CHECK(tr.final_ts.empty());
        }
    }
}

TEST_CASE("non-relations are rejected")
{
    auto z = builtin_order("Z");
    CHECK_THROWS_AS(reduce_relation(z, {letter_E({5})}), domain_error);
}

TEST_CASE("euclidean division")
{
    auto z = builtin_order("Z");
    auto [q, r] = euclid_divide(z, {7}, {2});
    CHECK(z.add(z.mul(q, {2}), r) == IVec{7});
    CHECK(z.norm(r) < z.norm({2}));

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (auto const &nm :
         {"Z", "I1", "I2", "I3", "I7", "I11", "O2", "O3", "O5"}) {
        auto o = builtin_order(nm);
        for (int k = 0; k < 60; ++k) {
            IVec a(o.rank()), b(o.rank());
            for (auto &c : a)
                c = coef(rng);
            do {
                for (auto &c : b)
                    c = coef(rng);
            } while (o.norm(b) == 0);
            auto [ql, rl] = euclid_divide(o, a, b);
            CHECK(o.add(o.mul(ql, b), rl) == a);
            CHECK(o.norm(rl) < o.norm(b));
            auto [qr, rr] = euclid_divide_right(o, a, b);
            CHECK(o.add(o.mul(b, qr), rr) == a);
            CHECK(o.norm(rr) < o.norm(b));
        }
    }
    CHECK_THROWS_AS(euclid_divide(z, {1}, {0}), domain_error);
}

TEST_CASE("matrix decomposition round-trips")
{
    std::mt19937 rng(31337);
    for (auto const &nm :
         {"Z", "I1", "I2", "I3", "I7", "I11", "O2", "O3", "O5"}) {
        auto o = builtin_order(nm);
        for (int k = 0; k < 30; ++k) {
            Mat2 m = eval_word(o, random_word(o, rng, 6));
            Word w = ge2_decompose(o, m);
            CHECK(eval_word(o, w) == m);
        }
    }
    // not invertible over the order
    auto z = builtin_order("Z");
    Mat2 bad{{2}, {0}, {0}, {1}};
    CHECK_THROWS_AS(ge2_decompose(z, bad), domain_error);
}

TEST_CASE("phi map")
{
    auto o = builtin_order("I1");
    IVec i = {0, 1}, one = {1, 0};
    // U(Z[i]) is abelian, so phi just multiplies the diagonal determinants
    CHECK(phi_map(o, {letter_diag(i, one)}) == i);
    CHECK(phi_map(o, {letter_diag(i, one), letter_diag(i, one)}) ==
          o.neg(one));
    CHECK(phi_map(o, {letter_E({2, 3})}) == one);
    CHECK(phi_map(o, {letter_diag(i, one, true)}) == o.neg(i));
    // D(u) = [u, u^-1] has trivial determinant
    CHECK(phi_map(o, {letter_D(o, i)}) == one);

    // with a nonabelian unit group the value is a coset representative;
    // U(O2)^ab = C3, so every determinant cube is in the derived subgroup
    auto h = builtin_order("O2");
    auto triv = phi_map(h, {});
    for (auto const &u : short_vectors(h, 1)) {
        Word cube(3, letter_diag(u, h.one));
        CHECK(phi_map(h, cube) == triv);
        CHECK(phi_map(h, {letter_diag(u, h.one), letter_diag(u, h.one, true)}) ==
              triv);
    }
}

TEST_CASE("psi and tau maps")
{
    auto z = builtin_order("Z");
    CHECK(psi_map(z, {letter_E({3}), letter_E({4})}) == IVec{1});
    CHECK(psi_map(z, {letter_E({3}), letter_E({3}, true)}) == IVec{0});
    CHECK(tau_map(z, {letter_E({0})}) == IVec{9}); // -3 mod 12
    CHECK_THROWS_AS(psi_map(z, {letter_D(z, {1})}), domain_error);
    CHECK_THROWS_AS(tau_map(z, {letter_D(z, {1})}), domain_error);

    auto o = builtin_order("I1");
    CHECK(tau_map(o, {letter_E({0, 0})}) == IVec{1, 0}); // -3 mod 2Z[i]

    // psi kills the alpha relation (E(1-i)E(1+i))^2 E(0)^2
    Word w = {letter_E({1, -1}), letter_E({1, 1}), letter_E({1, -1}),
              letter_E({1, 1}),  letter_E({0, 0}), letter_E({0, 0})};
    CHECK(psi_map(o, w) == IVec{0, 0});

    // additivity modulo the respective lattices
    std::mt19937 rng(17);
    auto i2 = builtin_order("I2");
    auto m = m_subgroup(i2).lattice;
    auto n = n_ideal(i2);
    for (int k = 0; k < 20; ++k) {
        Word w1 = random_word(i2, rng, 4, true);
        Word w2 = random_word(i2, rng, 4, true);
        Word cat = w1;
        cat.insert(cat.end(), w2.begin(), w2.end());
        CHECK(tau_map(i2, cat) ==
              hnf_reduce(m, i2.add(tau_map(i2, w1), tau_map(i2, w2))));
        CHECK(psi_map(i2, cat) ==
              hnf_reduce(n, i2.add(psi_map(i2, w1), psi_map(i2, w2))));
    }
}

TEST_CASE("elementary commutator identities")
{
    for (auto const &nm : {"Z", "I3", "O2"}) {
        auto o = builtin_order(nm);
        CHECK(elementary_commutator_check(3, o, 4, 55) > 0);
        CHECK(elementary_commutator_check(4, o, 2, 55) > 0);
    }
    CHECK_THROWS_AS(elementary_commutator_check(5, builtin_order("Z"), 1, 0),
                    domain_error);
}
