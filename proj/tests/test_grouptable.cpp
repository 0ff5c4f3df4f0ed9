#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ge2/grouptable.hpp"

#include <algorithm>
#include <map>
#include <numeric>

using namespace ge2;

TEST_CASE("basic constructors")
{
    auto c6 = cyclic_group(6);
    CHECK(c6.n == 6);
    CHECK(c6.is_abelian());
    CHECK(c6.order_of(1) == 6);
    CHECK(c6.pow(1, -5) == 1);
    CHECK(abelian_invariants(c6).str() == "C6");

    auto s3 = builtin_group("S3");
    CHECK(s3.n == 6);
    CHECK_FALSE(s3.is_abelian());
    CHECK(conjugacy_classes(s3).size() == 3);
    CHECK(center(s3).size() == 1);
    CHECK(derived_subgroup(s3).size() == 3);
    CHECK(is_solvable(s3));

    // identity relabeling and validation in group_from_table
    auto relab = [](int x) { return x == 0 ? 3 : (x == 3 ? 0 : x); };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            t[relab(a)][relab(b)] = relab(s3.tab[a][b]);
    auto s3b = group_from_table("S3'", t);
    CHECK(is_isomorphic(s3, s3b));

    auto bad = s3.tab;
    bad[1][2] = bad[1][3]; // break the Latin square
    CHECK_THROWS_AS(group_from_table("bad", bad), domain_error);
}

TEST_CASE("products and quotients")
{
    auto q8 = builtin_group("Q8");
    CHECK(q8.n == 8);
    CHECK(center(q8).size() == 2);
    CHECK(derived_subgroup(q8).size() == 2);
    int z = unique_central_involution(q8);
    CHECK(q8.order_of(z) == 2);
    // Q8 / Z(Q8) = C2 x C2
    auto q = quotient_group(q8, {0, z});
    CHECK(q.n == 4);
    CHECK(abelian_invariants(q).str() == "C2 x C2");

    auto d8 = builtin_group("D8");
    CHECK(d8.n == 8);
    CHECK_FALSE(is_isomorphic(q8, d8)); // same order profile coarse, differ
    // D8 has 5 involutions, Q8 only one
    int inv_q8 = 0, inv_d8 = 0;
    for (int g = 1; g < 8; ++g) {
        inv_q8 += q8.op(g, g) == 0;
        inv_d8 += d8.op(g, g) == 0;
    }
    CHECK(inv_q8 == 1);
    CHECK(inv_d8 == 5);

    auto p = direct_product(q8, cyclic_group(3));
    CHECK(p.n == 24);
    CHECK_FALSE(is_isomorphic(p, builtin_group("SL(2,3)")));

    // V4 as a quotient of D8 by its center
    auto v4 = quotient_group(d8, {0, unique_central_involution(d8)});
    CHECK(abelian_invariants(v4).str() == "C2 x C2");
}

TEST_CASE("semidirect and central products")
{
    // C3 x| C4 (inverting action): the dicyclic group of order 12
    auto g = builtin_group("C3:C4");
    CHECK(g.n == 12);
    CHECK_FALSE(g.is_abelian());
    CHECK(center(g).size() == 2);
    // its abelianization is C4
    auto q = quotient_group(g, derived_subgroup(g));
    CHECK(abelian_invariants(q).str() == "C4");

    // trivial twist gives the direct product
    auto c4 = cyclic_group(4);
    auto trivial = semidirect_product(c4, {0, 1, 2, 3}, 2, "C4xC2");
    CHECK(trivial.is_abelian());
    CHECK(abelian_invariants(trivial).str() == "C2 x C4");

    // non-automorphism twists are refused
    CHECK_THROWS_AS(semidirect_product(c4, {0, 2, 1, 3}, 2, "x"),
                    domain_error);

    // central product needs genuine central involutions
    auto d8 = builtin_group("D8");
    CHECK_THROWS_AS(central_product(d8, c4, d8.gens[0], 2, "x"),
                    domain_error);
}

TEST_CASE("extend_automorphism")
{
    auto q8 = builtin_group("Q8");
    int i = q8.gens[0], j = q8.gens[1];
    // i -> j, j -> i extends (an outer automorphism of Q8)
    auto phi = extend_automorphism(q8, {i, j}, {j, i});
    REQUIRE(phi.has_value());
    CHECK((*phi)[q8.op(i, j)] == q8.op(j, i));
    // i -> i, j -> i does not (not injective on the generated subgroup)
    CHECK_FALSE(extend_automorphism(q8, {i, j}, {i, i}).has_value());
    // order-mismatch image
    CHECK_FALSE(
        extend_automorphism(q8, {i, j}, {q8.op(i, i), j}).has_value());
}

TEST_CASE("normal subgroups")
{
    auto s3 = builtin_group("S3");
    CHECK(normal_subgroups(s3).size() == 3); // 1, A3, S3
    auto q8 = builtin_group("Q8");
    CHECK(normal_subgroups(q8).size() == 6); // 1, Z, three C4s, Q8
    auto sl23 = builtin_group("SL(2,3)");
    CHECK(normal_subgroups(sl23).size() == 4); // 1, C2, Q8, SL(2,3)
    CHECK_FALSE(is_solvable(builtin_group("SL(2,5)")));
    CHECK(is_solvable(sl23));
}

TEST_CASE("abelianizations of catalog groups")
{
    auto ab = [](FiniteGroup const &g) {
        return abelian_invariants(quotient_group(g, derived_subgroup(g)))
            .str();
    };
    CHECK(ab(builtin_group("S3")) == "C2");
    CHECK(ab(builtin_group("D8")) == "C2 x C2");
    CHECK(ab(builtin_group("Q8")) == "C2 x C2");
    CHECK(ab(builtin_group("SL(2,3)")) == "C3");
    CHECK(ab(builtin_group("SL(2,5)")) == "0"); // perfect
    CHECK(ab(builtin_group("C3:C4")) == "C4");
}

TEST_CASE("catalog groups have the advertised structure")
{
    struct Row {
        const char *name;
        int order, zn, dn;
        bool solvable;
    };
    // (order, |center|, |derived subgroup|, solvable)
    std::vector<Row> rows = {
        {"D8", 8, 2, 2, true},          {"S3", 6, 1, 3, true},
        {"G16_6", 16, 4, 2, true},      {"G16_13", 16, 4, 2, true},
        {"Q8xC3", 24, 6, 2, true},      {"SL(2,3)", 24, 2, 8, true},
        {"G32_50", 32, 2, 2, true},     {"G96_202", 96, 2, 8, true},
        {"G240_90", 240, 2, 120, false}, {"G384_618", 384, 2, 64, true},
    };
    for (auto const &r : rows) {
        auto g = builtin_group(r.name);
        CHECK(g.n == r.order);
        CHECK(static_cast<int>(center(g).size()) == r.zn);
        CHECK(static_cast<int>(derived_subgroup(g).size()) == r.dn);
        CHECK(is_solvable(g) == r.solvable);
        CHECK(subgroup_closure(g, g.gens).size() ==
              static_cast<size_t>(g.n));
    }
    // the ten forbidden quotients are pairwise non-isomorphic
    auto const &names = forbidden_quotient_names();
    CHECK(names.size() == 10);
    std::vector<FiniteGroup> gs;
    for (auto const &nm : names)
        gs.push_back(builtin_group(nm));
    for (size_t a = 0; a < gs.size(); ++a)
        for (size_t b = a + 1; b < gs.size(); ++b)
            CHECK_FALSE(is_isomorphic(gs[a], gs[b]));
}

TEST_CASE("specific catalog distinctions")
{
    // G240_90 is the non-split-looking extension, not SL(2,5) x C2
    auto g240 = builtin_group("G240_90");
    auto direct = direct_product(builtin_group("SL(2,5)"), cyclic_group(2));
    CHECK_FALSE(is_isomorphic(g240, direct));
    CHECK(maps_onto(g240, builtin_group("C2")));
    CHECK_FALSE(maps_onto(g240, builtin_group("C4")));

    // G96_202 is not SL(2,3) x C2 x C2
    auto direct96 = direct_product(
        direct_product(builtin_group("SL(2,3)"), cyclic_group(2)),
        cyclic_group(2));
    CHECK_FALSE(is_isomorphic(builtin_group("G96_202"), direct96));

    // G16_6 vs G16_13: same order, different exponent
    auto a = builtin_group("G16_6"), b = builtin_group("G16_13");
    int expa = 1, expb = 1;
    for (int g = 0; g < 16; ++g) {
        expa = std::lcm(expa, a.order_of(g));
        expb = std::lcm(expb, b.order_of(g));
    }
    CHECK(expa == 8);
    CHECK(expb == 4);

    // G384_618 really needs the full twist order 6
    auto g384 = builtin_group("G384_618");
    int tw = g384.order_of(1); // appended C6 generator sits at index 1
    CHECK(tw % 6 == 0);
}

TEST_CASE("maps_onto")
{
    auto sl23 = builtin_group("SL(2,3)");
    CHECK(maps_onto(sl23, builtin_group("C3")));
    CHECK_FALSE(maps_onto(sl23, builtin_group("S3")));
    CHECK_FALSE(maps_onto(sl23, builtin_group("Q8")));
    auto d8 = builtin_group("D8");
    CHECK(maps_onto(d8, builtin_group("C2")));
    CHECK(maps_onto(d8, quotient_group(d8, {0, unique_central_involution(d8)})));
    CHECK_FALSE(maps_onto(d8, builtin_group("C8")));
    auto direct96 = direct_product(
        direct_product(sl23, cyclic_group(2)), cyclic_group(2));
    CHECK(maps_onto(direct96, sl23));
    CHECK(maps_onto(builtin_group("Q8xC3"), builtin_group("Q8")));
    CHECK(maps_onto(builtin_group("Q8xC3"), builtin_group("C3")));
}

TEST_CASE("is_isomorphic positives and negatives")
{
    // C3 x| C4 is the dicyclic group Dic3, not D12 = S3 x C2
    auto dic3 = builtin_group("C3:C4");
    auto d12 = direct_product(builtin_group("S3"), cyclic_group(2));
    CHECK_FALSE(is_isomorphic(dic3, d12));
    CHECK_FALSE(is_isomorphic(dic3, direct_product(cyclic_group(3),
                                                   cyclic_group(4))));

    // abelian pairs
    CHECK(is_isomorphic(direct_product(cyclic_group(2), cyclic_group(3)),
                        cyclic_group(6)));
    CHECK_FALSE(is_isomorphic(direct_product(cyclic_group(2), cyclic_group(2)),
                              cyclic_group(4)));

    // D8 via an alternative permutation representation
    auto d8alt = group_from_perms(
        "D8alt", {{1, 2, 3, 0, 5, 6, 7, 4}, {0, 3, 2, 1, 4, 7, 6, 5}});
    CHECK(d8alt.n == 8);
    CHECK(is_isomorphic(builtin_group("D8"), d8alt));

    // SL(2,3) against itself from a different generating pair
    auto sl = builtin_group("SL(2,3)");
    auto sl2 = sl;
    sl2.gens = {sl.op(sl.gens[0], sl.gens[1]), sl.gens[1]};
    CHECK(is_isomorphic(sl, sl2));
}

TEST_CASE("cut groups")
{
    for (int n = 1; n <= 12; ++n) {
        bool expect = n == 1 || n == 2 || n == 3 || n == 4 || n == 6;
        CHECK(is_cut(cyclic_group(n)) == expect);
    }
    CHECK(is_cut(builtin_group("S3")));
    CHECK(is_cut(builtin_group("D8")));
    CHECK(is_cut(builtin_group("Q8")));
    CHECK(is_cut(builtin_group("SL(2,3)")));
    CHECK(is_cut(builtin_group("C3:C4")));
    CHECK(is_cut(builtin_group("Q8xC3")));
    CHECK_FALSE(is_cut(builtin_group("SL(2,5)"))); // order-5 elements
    CHECK_FALSE(is_cut(builtin_group("C5")));
    // quotients of cut groups are cut, so the whole forbidden catalog is cut
    // (the C2 on top of SL(2,5) in G240_90 fuses the order-5 power classes)
    for (auto const &nm : forbidden_quotient_names())
        CHECK(is_cut(builtin_group(nm)));
}

TEST_CASE("unknown names are refused")
{
    CHECK_THROWS_AS(builtin_group("F20"), parse_error);
    CHECK_THROWS_AS(builtin_group("C0"), parse_error);
}
