#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ge2/algebra.hpp"

#include <random>

using namespace ge2;

namespace {

Elem rnd_elem(AlgebraRef const &A, std::mt19937 &rng)
{
    std::uniform_int_distribution<int> n(-6, 6), d(1, 3);
    std::vector<Rat> c(A->dim);
    for (auto &x : c)
        x = Rat(n(rng), d(rng));
    return elem(A, std::move(c));
}

} // namespace

TEST_CASE("quaternion basics in (-1,-1)")
{
    auto H = alg_quaternion(-1, -1);
    Elem one = elem_one(H);
    Elem i = elem(H, {0, 1, 0, 0});
    Elem j = elem(H, {0, 0, 1, 0});
    Elem k = elem(H, {0, 0, 0, 1});
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(i * i == -one);
    CHECK(k * k == -one);
    CHECK(j * k == i);
    CHECK(k * j == -i);
    CHECK((one + i) * (one - i) == elem_int(H, 2));
    Elem omega = Rat(1, 2) * (one + i + j + k);
    CHECK(rnorm(omega) == 1);
    CHECK(rtrace(omega) == 1);
    CHECK(rnorm(one + i + j + k) == 4);
}

TEST_CASE("quaternion basics in (-1,-3) and (-2,-5)")
{
    auto H3 = alg_quaternion(-1, -3);
    Elem j = elem(H3, {0, 0, 1, 0});
    Elem w = Rat(1, 2) * (elem_one(H3) + j); // (1+j)/2
    CHECK(rnorm(w) == 1);
    CHECK(rtrace(w) == 1);
    CHECK(w * inv(w) == elem_one(H3));
    CHECK(inv(w) == conj(w)); // norm one

    auto H5 = alg_quaternion(-2, -5);
    Elem w5 = elem(H5, {Rat(1, 2), Rat(1, 4), 0, Rat(-1, 4)}); // (2+i-k)/4
    CHECK(rnorm(w5) == 1);
    CHECK(rtrace(w5) == 1);
    // order 6: w5^2 = w5 - 1, w5^3 = -1
    CHECK(w5 * w5 == w5 - elem_one(H5));
    CHECK(w5 * w5 * w5 == -elem_one(H5));
}

TEST_CASE("imaginary quadratic arithmetic")
{
    auto K = alg_imquadratic(3);
    Elem s = elem(K, {0, 1});
    CHECK(s * s == elem_int(K, -3));
    Elem x = elem_one(K) + s; // 1 + sqrt(-3)
    CHECK(rnorm(x) == 4);
    CHECK(rtrace(x) == 2);
    Elem zeta = Rat(1, 2) * (elem_one(K) + s);
    CHECK(rnorm(zeta) == 1);
    // zeta = (1+sqrt(-3))/2 is a primitive 6th root of unity
    Elem u = zeta, p = u;
    int ord = 1;
    while (!(p == elem_one(K))) {
        p = p * u;
        ++ord;
    }
    CHECK(ord == 6);
}

TEST_CASE("indefinite parameters are refused")
{
    CHECK_THROWS_AS(alg_quaternion(1, -1), domain_error);
    CHECK_THROWS_AS(alg_quaternion(-1, 2), domain_error);
    CHECK_THROWS_AS(alg_imquadratic(0), domain_error);
    CHECK_THROWS_AS(alg_imquadratic(-5), domain_error);
}

TEST_CASE("algebra identities on random elements")
{
    std::mt19937 rng(99);
    std::vector<AlgebraRef> algs = {alg_rational(), alg_imquadratic(1),
                                    alg_imquadratic(6), alg_quaternion(-1, -1),
                                    alg_quaternion(-2, -5),
                                    alg_quaternion(-3, -7)};
    for (auto const &A : algs) {
        for (int t = 0; t < 200; ++t) {
            Elem x = rnd_elem(A, rng), y = rnd_elem(A, rng),
                 z = rnd_elem(A, rng);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(conj(x * y) == conj(y) * conj(x));
            CHECK(rnorm(x * y) == rnorm(x) * rnorm(y));
            CHECK(rnorm(x) >= 0); // definiteness
            CHECK((rnorm(x) == 0) == x.is_zero());
            Elem xc = x * conj(x);
            CHECK(xc == conj(x) * x); // norm is central/scalar
            for (int m = 1; m < A->dim; ++m)
                CHECK(xc.c[m] == 0);
            CHECK(xc.c[0] == rnorm(x));
            CHECK(x + conj(x) == elem(A, [&] {
                      std::vector<Rat> c(A->dim, Rat(0));
                      c[0] = rtrace(x);
                      return c;
                  }()));
            if (!x.is_zero()) {
                CHECK(x * inv(x) == elem_one(A));
                CHECK(inv(x) * x == elem_one(A));
            }
        }
    }
}
