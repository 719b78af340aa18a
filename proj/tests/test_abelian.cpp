#include "casw/abelian.hpp"
#include "casw/error.hpp"
#include "doctest.h"

using namespace casw;

TEST_CASE("group construction and element arithmetic") {
    AbelianPGroup A = AbelianPGroup::from_orders(2, {2, 4});
    CHECK(A.exponents == std::vector<int>{2, 1});  // sorted non-increasing
    CHECK(A.order() == 8);
    CHECK(A.exponent_log() == 2);
    CHECK_THROWS_AS(AbelianPGroup::from_orders(2, {6}), MalformedError);

    auto x = A.element_at(5);
    CHECK(A.index_of(x) == 5);
    CHECK(A.add(x, A.neg(x)) == std::vector<int>{0, 0});
}

TEST_CASE("dual group") {
    AbelianPGroup Z4 = AbelianPGroup::from_orders(2, {4});
    CHECK(dual_group(Z4, 2) == Z4);
    AbelianPGroup A = AbelianPGroup::from_orders(2, {2, 4});
    CHECK(dual_group(A, 2) == A);
    AbelianPGroup trivial = AbelianPGroup::from_orders(2, {});
    CHECK(dual_group(trivial, 1) == trivial);
    CHECK_THROWS_AS(dual_group(Z4, 1), MalformedError);
}

TEST_CASE("hom group via min-exponent rule") {
    AbelianPGroup Z4 = AbelianPGroup::from_orders(2, {4});
    GroupPresentation pz4{{4}};
    CHECK(hom_group(Z4, pz4) == pz4);

    AbelianPGroup A = AbelianPGroup::from_orders(2, {2, 4});
    GroupPresentation want{{2, 4}};
    CHECK(hom_group(A, pz4) == want);

    CHECK(hom_group(A, GroupPresentation{}) == GroupPresentation{});
    CHECK_THROWS_AS(hom_group(A, GroupPresentation{{3}}), MalformedError);
}

TEST_CASE("hom count cross-check by exhaustive enumeration") {
    // |Hom(Z/2 + Z/4, Z/4)| = 8: a generator of order o maps to elements
    // killed by o.
    AbelianPGroup A = AbelianPGroup::from_orders(2, {2, 4});
    GroupPresentation target{{4}};
    long long count = 0;
    for (int im1 = 0; im1 < 4; ++im1)
        for (int im2 = 0; im2 < 4; ++im2) {
            bool ok1 = (2 * im1) % 4 == 0;  // order of first generator divides 2
            bool ok2 = true;                // second generator has order 4
            if (ok1 && ok2) ++count;
        }
    CHECK(count == hom_group(A, target).order());
}

TEST_CASE("h2_inv formula examples") {
    Field f2 = Field::prime(2);
    Field f4(2, 2, {1, 1, 1});

    AbelianPGroup Z4 = AbelianPGroup::from_orders(2, {4});
    CHECK(h2_inv_formula(Z4, f2) == GroupPresentation{{4}});

    AbelianPGroup trivial = AbelianPGroup::from_orders(2, {});
    CHECK(h2_inv_formula(trivial, f2) == GroupPresentation{});
    CHECK(h2_inv_formula(trivial, f4) == GroupPresentation{});

    AbelianPGroup A = AbelianPGroup::from_orders(2, {2, 4});
    CHECK(h2_inv_formula(A, f4) == GroupPresentation{{2, 4}});

    CHECK_THROWS_AS(h2_inv_formula(Z4, Field::prime(3)), MalformedError);
}

TEST_CASE("h2_inv is independent of the choice n = r1 vs r1+1") {
    Field f2 = Field::prime(2);
    AbelianPGroup Z2 = AbelianPGroup::from_orders(2, {2});
    CHECK(h2_inv_formula(Z2, f2) == h2_inv_formula(Z2, f2, 2));
    AbelianPGroup A = AbelianPGroup::from_orders(2, {2, 4});
    CHECK(h2_inv_formula(A, f2) == h2_inv_formula(A, f2, 3));
}

TEST_CASE("sweedler cohomology tables") {
    Field f2 = Field::prime(2);
    Field f4(2, 2, {1, 1, 1});

    AbelianPGroup Z2 = AbelianPGroup::from_orders(2, {2});
    auto t = sweedler_dims_formula(Z2, f2, 4);
    REQUIRE(t.size() == 4);
    CHECK(t[0] == GroupPresentation{{2}});
    CHECK(t[1] == GroupPresentation{{2}});
    CHECK(t[2] == GroupPresentation{});
    CHECK(t[3] == GroupPresentation{});

    AbelianPGroup Z4 = AbelianPGroup::from_orders(2, {4});
    auto t2 = sweedler_dims_formula(Z4, f4, 3);
    REQUIRE(t2.size() == 3);
    CHECK(t2[0] == GroupPresentation{{4}});
    CHECK(t2[1] == GroupPresentation{{4}});
    CHECK(t2[2] == GroupPresentation{});

    auto t3 = sweedler_dims_formula(AbelianPGroup::from_orders(2, {}), f2, 3);
    for (auto& g : t3) CHECK(g == GroupPresentation{});
}

TEST_CASE("presentation printing") {
    CHECK(GroupPresentation{}.str() == "0");
    CHECK(GroupPresentation{{4}}.str() == "Z/4");
    CHECK(GroupPresentation{{2, 4}}.str() == "Z/2 x Z/4");
}
