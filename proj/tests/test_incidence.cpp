#include <doctest.h>

#include <random>

#include "fqha/incidence.hpp"

using namespace fqha;

TEST_CASE("full plane against all lines") {
    auto f = Field::make(3, 1);
    PointSet p(f, 2);
    for (long long i = 0; i < 9; ++i) p.insert(i);
    HyperplaneSet lines = HyperplaneSet::all(f, 2);
    CHECK(lines.size() == 12);
    IncidenceReport r = count_incidences(p, lines);
    CHECK(r.incidences == 36);
    CHECK(r.gap == 0.0);
    CHECK(r.universal_holds);
}

TEST_CASE("single incident point") {
    auto f = Field::make(5, 1);
    PointSet p(f, 2);
    p.insert(point_index(*f, {1, 2}));
    HyperplaneSet planes(f, 2);
    planes.add({{1, 0}, 1}); // x_1 = 1 passes through (1, 2)
    IncidenceReport r = count_incidences(p, planes);
    CHECK(r.incidences == 1);
}

TEST_CASE("projective deduplication of hyperplanes") {
    auto f = Field::make(5, 1);
    HyperplaneSet planes(f, 2);
    planes.add({{1, 2}, 3});
    planes.add({{2, 4}, 1}); // 2 * (1, 2, 3) = (2, 4, 6 = 1)
    CHECK(planes.size() == 1);

    HyperplaneSet multi(f, 2, true);
    multi.add({{1, 2}, 3});
    multi.add({{2, 4}, 1});
    CHECK(multi.size() == 2);

    CHECK_THROWS_AS(planes.add({{0, 0}, 1}), InvalidParams);
}

TEST_CASE("sharpness instances achieve I = |P||Pi|") {
    auto f5 = Field::make(5, 1);
    auto [p5, pi5] = extremal_instance(f5, 3, 1);
    IncidenceReport r5 = count_incidences(p5, pi5);
    CHECK(r5.points == 5);
    CHECK(r5.hyperplanes == 5);
    CHECK(r5.incidences == 25);
    CHECK(r5.gap == doctest::Approx(20.0));
    CHECK(r5.universal_bound == doctest::Approx(25.0));
    CHECK(r5.universal_holds);

    auto f13 = Field::make(13, 1);
    auto [p13, pi13] = extremal_instance(f13, 5, 1);
    IncidenceReport r13 = count_incidences(p13, pi13);
    CHECK(r13.points == 169);
    CHECK(r13.hyperplanes == 169);
    CHECK(r13.incidences == 169LL * 169);

    auto f3 = Field::make(3, 1);
    CHECK_THROWS_AS(extremal_instance(f3, 3, 1), HypothesisViolated);
    CHECK_THROWS_AS(extremal_instance(f5, 3, 0), InvalidParams);
    CHECK_THROWS_AS(extremal_instance(f5, 4, 1), HypothesisViolated);
}

TEST_CASE("universal bound on random configurations") {
    auto f = Field::make(5, 1);
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> pick(0, 124);
    for (int trial = 0; trial < 50; ++trial) {
        PointSet p(f, 3);
        for (int i = 0; i < 40; ++i) p.insert(pick(rng));
        HyperplaneSet planes(f, 3);
        for (int i = 0; i < 30; ++i) {
            long long a = 1 + static_cast<long long>(rng() % 124);
            planes.add({index_point(*f, 3, a), static_cast<int>(rng() % 5)});
        }
        CHECK(count_incidences(p, planes).universal_holds);
    }
}

TEST_CASE("cone lifting preserves incidences exactly") {
    for (long long q : {3LL, 7LL}) {
        auto f = Field::make(q, 1);
        HyperplaneSet planes = HyperplaneSet::all(f, 3);

        PointSet sphere = enumerate_variety(f, 3, SphereSpec{1, {}});
        ConeLift lift = lift_to_cone(sphere, planes, 1, false);
        CHECK(lift.all_on_cone);
        CHECK(lift.incidence_equivalence);
        CHECK(lift.plane_count_with_zero_fiber == q * planes.size());
        CHECK(lift.plane_count_multiset == (q - 1) * planes.size());

        PointSet parab = enumerate_variety(f, 3, ParaboloidSpec{0});
        ConeLift plift = lift_to_cone(parab, planes, 0, true);
        CHECK(plift.all_on_cone);
        CHECK(plift.incidence_equivalence);
    }
}

TEST_CASE("lifting rejects points off the source variety") {
    auto f = Field::make(3, 1);
    PointSet bad(f, 3);
    bad.insert(0); // origin has norm 0 != 1
    HyperplaneSet planes(f, 3);
    planes.add({{1, 0, 0}, 0});
    CHECK_THROWS_AS(lift_to_cone(bad, planes, 1, false), NotOnSphere);
}

TEST_CASE("cone restriction ratio gates") {
    auto f5 = Field::make(5, 1);
    PointSet g5(f5, 4);
    g5.insert(1);
    CHECK_THROWS_AS(cone_l2_ratio(g5), HypothesisViolated); // q = 1 mod 4
    CHECK(cone_l2_ratio(g5, true) > 0.0);

    auto f3 = Field::make(3, 1);
    PointSet g3(f3, 3);
    g3.insert(1);
    CHECK_THROWS_AS(cone_l2_ratio(g3), HypothesisViolated); // n != 0 mod 4

    PointSet g(f3, 4);
    g.insert(1);
    CHECK(cone_l2_ratio(g) > 0.0);
}

TEST_CASE("covered point sets and the t-aware bound") {
    auto f = Field::make(3, 1);
    SphereSpec spec{1, {}};
    PointSet s1 = enumerate_variety(f, 3, spec);

    SquareRadiusCover cover;
    cover.pieces.push_back({spec, s1});

    HyperplaneSet empty(f, 3);
    IncidenceReport r0 = new_incidence_check(cover, empty);
    CHECK(r0.incidences == 0);
    CHECK(r0.gap == 0.0);
    CHECK(r0.t == 1);

    std::mt19937_64 rng(5);
    HyperplaneSet planes(f, 3);
    while (planes.size() < 10) {
        long long a = 1 + static_cast<long long>(rng() % 26);
        planes.add({index_point(*f, 3, a), static_cast<int>(rng() % 3)});
    }
    IncidenceReport r = new_incidence_check(cover, planes);
    CHECK(r.t == 1);
    CHECK(r.new_bound > 0.0);
    CHECK(r.gap <= r.new_bound * 8.0);

    // non-square radius piece is rejected: eta(2) = -1 in F_3
    SquareRadiusCover bad;
    PointSet s2 = enumerate_variety(f, 3, SphereSpec{2, {}});
    bad.pieces.push_back({SphereSpec{2, {}}, s2});
    CHECK_THROWS_AS(new_incidence_check(bad, planes), InvalidCover);
}

TEST_CASE("greedy square-radius covers") {
    auto f = Field::make(7, 1);
    PointSet s1 = enumerate_variety(f, 3, SphereSpec{1, {}});
    PointSet s2 = enumerate_variety(f, 3, SphereSpec{2, {}});
    std::vector<Point> centers = {Point(3, 0)};

    SquareRadiusCover c1 = greedy_square_cover(s1, centers, false);
    CHECK(c1.t() == 1);
    CHECK(c1.covered() == s1);

    PointSet both(f, 3);
    for (long long i : s1.indices()) both.insert(i);
    for (long long i : s2.indices()) both.insert(i);
    SquareRadiusCover c2 = greedy_square_cover(both, centers, false);
    CHECK(c2.t() == 2);
    CHECK(c2.covered() == both);
}
