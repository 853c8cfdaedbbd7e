#include <doctest.h>

#include "fqha/exponents.hpp"

using namespace fqha;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(1, -2) == Rat(-1, 2));
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
    CHECK(Rat(3, 4) / Rat(3, 2) == Rat(1, 2));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(12, 7).str() == "12/7");
    CHECK(Rat(4).str() == "4");
    CHECK_THROWS_AS(Rat(1, 0), DivisionByZero);
}

TEST_CASE("exponent duals") {
    CHECK(LpExponent::of(2).dual() == LpExponent::of(2));
    CHECK(LpExponent::of(1).dual() == LpExponent::infinity());
    CHECK(LpExponent::infinity().dual() == LpExponent::of(1));
    CHECK(LpExponent::of(4, 3).dual() == LpExponent::of(4));
    CHECK(LpExponent::of(12, 7).dual() == LpExponent::of(12, 5));
}

TEST_CASE("interpolation") {
    auto p_a = LpExponent::of(8, 5);
    auto r_a = LpExponent::of(4);
    auto p_b = LpExponent::of(1);
    auto r_b = LpExponent::infinity();

    auto [p0, r0] = interpolate(p_a, r_a, p_b, r_b, Rat(0));
    CHECK(p0 == p_a);
    CHECK(r0 == r_a);
    auto [p1, r1] = interpolate(p_a, r_a, p_b, r_b, Rat(1));
    CHECK(p1 == p_b);
    CHECK(r1 == r_b);

    auto [pm, rm] = interpolate(p_b, r_b, p_a, r_a, Rat(8, 9));
    CHECK(pm == LpExponent::of(3, 2));
    CHECK(rm == LpExponent::of(9, 2));

    CHECK_THROWS_AS(interpolate(p_a, r_a, p_b, r_b, Rat(-1, 2)), BadTheta);
    CHECK_THROWS_AS(interpolate(p_a, r_a, p_b, r_b, Rat(3, 2)), BadTheta);
}

TEST_CASE("necessary exponent from affine subspaces") {
    CHECK(necessary_r(Rat(2), 3, 1) == Rat(4));
    // the 2d/(d-1) term dominates for large p
    CHECK(necessary_r(Rat(100), 3, 1) == Rat(3));
    CHECK_THROWS_AS(necessary_r(Rat(1, 2), 3, 1), BadExponent);
}

TEST_CASE("exponent catalog") {
    ExponentRecord d3 = exponent_catalog(3, 3, RadiusClass::Square);
    bool achieved = false, conjectured = false;
    for (const auto& e : d3.achieved)
        if (e.p == LpExponent::of(12, 7) && e.r == LpExponent::of(4)) achieved = true;
    for (const auto& e : d3.conjectured)
        if (e.p == LpExponent::of(8, 5) && e.r == LpExponent::of(4)) conjectured = true;
    CHECK(achieved);
    CHECK(conjectured);
    CHECK(d3.achieved_dual.size() == d3.achieved.size());

    ExponentRecord d4 = exponent_catalog(4, 3, RadiusClass::Square);
    bool threshold = false;
    for (const auto& e : d4.conjectured)
        if (e.p == LpExponent::of(2) && e.r == LpExponent::of(3)) threshold = true;
    CHECK(threshold); // (2d+4)/d = 3 for even d = 4

    // Stein-Tomas row is always present
    bool st = false;
    for (const auto& e : d4.achieved)
        if (e.p == LpExponent::of(2) && e.r == LpExponent::of(10, 3)) st = true;
    CHECK(st);

    CHECK_THROWS_AS(exponent_catalog(1, 3, RadiusClass::Square), BadExponent);
    CHECK_THROWS_AS(exponent_catalog(3, 2, RadiusClass::Square), BadExponent);
}
