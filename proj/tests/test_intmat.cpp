#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ge2/intmat.hpp"

#include <map>
#include <random>
#include <set>

using namespace ge2;

namespace {

// Brute-force oracle: count cosets of rowspan(sub) in Z^n by closing the
// quotient under the generators.  Only usable when the quotient is finite
// and small; compares against the SNF-based torsion order.
Int coset_count_oracle(int n, IMat const &sub)
{
    IMat h = hnf(sub);
    REQUIRE(static_cast<int>(h.size()) == n); // finite quotient needed
    // reduce a vector to a canonical coset representative by the HNF rows
    auto reduce = [&](IVec v) {
        for (int i = 0; i < n; ++i) {
            int pc = 0;
            while (h[i][pc] == 0)
                ++pc;
            Int q = floor_div(v[pc], h[i][pc]);
            for (int j = 0; j < n; ++j)
                v[j] -= q * h[i][j];
        }
        return v;
    };
    std::set<IVec> seen;
    std::vector<IVec> todo{IVec(n, 0)};
    seen.insert(todo[0]);
    while (!todo.empty()) {
        IVec cur = todo.back();
        todo.pop_back();
        for (int i = 0; i < n; ++i) {
            IVec nxt = cur;
            nxt[i] += 1;
            nxt = reduce(nxt);
            if (seen.insert(nxt).second)
                todo.push_back(nxt);
        }
    }
    return Int(seen.size());
}

} // namespace

TEST_CASE("hnf canonicalizes generating sets")
{
    IMat a = {{2, 0}, {0, 2}, {1, 1}};
    IMat b = {{1, 1}, {1, -1}};
    CHECK(hnf(a) == hnf(b));
    CHECK(hnf(a) == IMat{{1, 1}, {0, 2}});

    // row order / sign / redundancy do not matter
    IMat c = {{0, -2}, {-1, 1}, {3, 1}};
    CHECK(hnf(c) == hnf(b));
}

TEST_CASE("hnf shape and membership")
{
    IMat h = hnf({{4, 6, 2}, {2, 0, 4}});
    CHECK(h.size() == 2);
    CHECK(hnf_contains(h, {2, 0, 4}));
    CHECK(hnf_contains(h, {6, 6, 6}));
    CHECK_FALSE(hnf_contains(h, {1, 0, 0}));
    auto sol = hnf_solve(h, {6, 6, 6});
    REQUIRE(sol.has_value());
    // verify the coefficients reproduce the vector
    IVec acc(3, 0);
    for (size_t i = 0; i < h.size(); ++i)
        for (int j = 0; j < 3; ++j)
            acc[j] += (*sol)[i] * h[i][j];
    CHECK(acc == IVec{6, 6, 6});
}

TEST_CASE("snf invariants, known values")
{
    CHECK(snf_invariants({{2, 0}, {0, 3}}) == std::vector<Int>{1, 6});
    // d1 = gcd of entries = 2, d1*d2 = gcd of 2x2 minors = 4,
    // d1*d2*d3 = |det| = 624
    CHECK(snf_invariants({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}) ==
          std::vector<Int>{2, 2, 156});
}

TEST_CASE("snf torsion order equals determinant and coset count")
{
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dist(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        IMat a(n, IVec(n));
        for (auto &row : a)
            for (auto &x : row)
                x = dist(rng);
        if (imat_rank(a) < n)
            continue;
        auto inv = ab_quotient(n, a);
        REQUIRE(inv.free_rank == 0);
        Int t = inv.torsion_order();
        if (t <= 4000)
            CHECK(t == coset_count_oracle(n, a));
        // divisibility chain
        auto d = snf_invariants(a);
        for (size_t i = 0; i + 1 < d.size(); ++i)
            CHECK(d[i + 1] % d[i] == 0);
    }
}

TEST_CASE("ab_quotient free rank")
{
    auto inv = ab_quotient(3, {{0, 2, 0}});
    CHECK(inv.free_rank == 2);
    CHECK(inv.torsion == std::vector<Int>{2});
    CHECK(inv.str() == "C2 x Z x Z");
    CHECK(ab_quotient(2, {}).str() == "Z x Z");
    CHECK(ab_quotient(1, {{12}}).str() == "C12");
}
