#include <doctest.h>

#include <random>

#include "fqha/distance.hpp"

using namespace fqha;

TEST_CASE("mu3 on pinned sets") {
    auto f = Field::make(3, 1);
    PointSet zero(f, 2);
    zero.insert(0);
    Mu3Table t = mu3(zero);
    CHECK(t.counts.at(0) == 1);
    CHECK(t.counts.at(1) == 0);
    CHECK(t.counts.at(2) == 0);
    CHECK(t.total == 1);
}

TEST_CASE("mu3 routes agree and conserve mass") {
    for (auto [q, d] : {std::pair<long long, int>{3, 2}, {5, 2}, {3, 3}}) {
        auto f = Field::make(q, 1);
        std::mt19937_64 rng(31 + q + d);
        long long n = 1;
        for (int i = 0; i < d; ++i) n *= q;
        for (int trial = 0; trial < 20; ++trial) {
            PointSet a(f, d);
            for (int i = 0; i < 8; ++i) a.insert(static_cast<long long>(rng() % n));
            Mu3Table naive = mu3(a, Mu3Method::Naive);
            CHECK(mu3(a, Mu3Method::Convolution).counts == naive.counts);
            CHECK(mu3(a, Mu3Method::FourierIdentity).counts == naive.counts);
            long long mass = 0;
            for (auto [t, c] : naive.counts) mass += c;
            CHECK(mass == a.size() * a.size() * a.size());
        }
    }
}

TEST_CASE("distance sets") {
    auto f = Field::make(5, 1);
    PointSet single(f, 2);
    Point x = {1, 2};
    single.insert(point_index(*f, x));
    auto [d2, d3] = distance_sets(single);
    CHECK(d2 == std::set<int>{0});
    Point x3 = point_add(*f, point_add(*f, x, x), x);
    CHECK(d3 == std::set<int>{quad_norm(*f, x3)});

    auto f3 = Field::make(3, 1);
    PointSet full(f3, 2);
    for (long long i = 0; i < 9; ++i) full.insert(i);
    auto [f2, f3set] = distance_sets(full);
    CHECK(f2 == std::set<int>{0, 1, 2});
    CHECK(f3set == std::set<int>{0, 1, 2});
}

TEST_CASE("sphere pair sums match the closed form") {
    auto f = Field::make(3, 1);
    SpherePairIdentity zz = sphere_pair_identity(f, 1, {0}, {0});
    CHECK(zz.lhs_re == doctest::Approx(5.0)); // 1 + 4 + 0
    CHECK(zz.rhs_re == doctest::Approx(5.0));
    CHECK(zz.lhs_im == doctest::Approx(0.0));

    // ||m|| != ||v||: the closed form collapses to -q^{d-1}
    auto f5 = Field::make(5, 1);
    SpherePairIdentity mm = sphere_pair_identity(f5, 2, {1, 0}, {0, 0});
    CHECK(mm.rhs_re == doctest::Approx(-5.0));
    CHECK(mm.relative_error < 1e-6);

    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        Point m = {static_cast<int>(rng() % 5), static_cast<int>(rng() % 5)};
        Point v = {static_cast<int>(rng() % 5), static_cast<int>(rng() % 5)};
        CHECK(sphere_pair_identity(f5, 2, m, v).relative_error < 1e-6);
    }
}

TEST_CASE("large-set inequalities at d = 4") {
    auto f = Field::make(3, 1);
    PointSet full(f, 4);
    for (long long i = 0; i < 81; ++i) full.insert(i);
    Loai0Report r = loai0_check(full);
    CHECK(r.first_holds);
    CHECK(r.second_holds);

    PointSet small(f, 4);
    small.insert(0);
    CHECK_THROWS_AS(loai0_check(small), HypothesisViolated);
    CHECK(loai0_check(small, true).hypothesis_flags.size() > 0);

    std::mt19937_64 rng(53);
    PointSet a(f, 4);
    while (a.size() < 27) a.insert(static_cast<long long>(rng() % 81));
    Loai0Report ra = loai0_check(a);
    CHECK(ra.first_holds);
    CHECK(ra.second_holds);
}

TEST_CASE("sphere transform decay") {
    auto f = Field::make(3, 1);
    SphereDecay dec = sphere_fourier_decay(f, 3, 1);
    CHECK(dec.max_nonzero > 0.0);
    CHECK(dec.ratio <= 3.0);
    CHECK(dec.ratio == doctest::Approx(dec.max_nonzero / 3.0)); // q^{(d-1)/2} = 3
}

TEST_CASE("restriction norms on spheres") {
    auto f = Field::make(3, 1);
    PointSet full(f, 4);
    for (long long i = 0; i < 81; ++i) full.insert(i);
    RestrictionNorms rn = restriction_norms(full, 1);
    CHECK(rn.l2 == doctest::Approx(0.0)); // Ahat = q^d delta_0, 0 not on S_1
    CHECK(rn.l3 == doctest::Approx(0.0));
    CHECK_THROWS_AS(restriction_norms(full, 0), ZeroRadius);

    std::mt19937_64 rng(59);
    PointSet a(f, 4);
    while (a.size() < 40) a.insert(static_cast<long long>(rng() % 81));
    RestrictionNorms half = restriction_norms(a, 1);
    CHECK(half.l3_ratio > 0.0);
    CHECK(half.l2_ratio > 0.0);
}

TEST_CASE("second moments and coverage lower bound") {
    auto f = Field::make(3, 1);
    PointSet full(f, 4);
    for (long long i = 0; i < 81; ++i) full.insert(i);
    CoverageRecord r = second_moment_check(full);
    CHECK(r.delta3_size == 3);
    CHECK(r.cs_lower_bound <= 3.0 + 1e-9);
    CHECK(r.cs_holds);

    PointSet odd_d(f, 3);
    for (long long i = 0; i < 27; ++i) odd_d.insert(i);
    CHECK_THROWS_AS(second_moment_check(odd_d), HypothesisViolated);

    std::mt19937_64 rng(61);
    PointSet a(f, 4);
    while (a.size() < 27) a.insert(static_cast<long long>(rng() % 81));
    CoverageRecord ra = second_moment_check(a);
    CHECK(ra.cs_holds);
    CHECK(ra.second_moment > 0.0);
    CHECK(ra.cs_lower_bound <= static_cast<double>(ra.delta3_size) + 1e-9);
}

TEST_CASE("coverage experiment") {
    auto f = Field::make(3, 1);
    auto rows = coverage_experiment(f, 4, {1, 81}, 10, 777);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].full_coverage_fraction == doctest::Approx(0.0)); // |Delta_3| = 1
    CHECK(rows[0].mean_delta3_over_q == doctest::Approx(1.0 / 3.0));
    CHECK(rows[1].full_coverage_fraction == doctest::Approx(1.0));

    auto again = coverage_experiment(f, 4, {1, 81}, 10, 777);
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].full_coverage_fraction == again[i].full_coverage_fraction);
        CHECK(rows[i].mean_delta3_over_q == again[i].mean_delta3_over_q);
    }
}
