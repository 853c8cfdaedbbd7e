#include <doctest.h>

#include <cmath>
#include <random>

#include "fqha/energy.hpp"

using namespace fqha;

namespace {

// quadruple scan straight from the definition
long long brute_energy(const PointSet& s) {
    const Field& f = *s.field();
    int d = s.dim();
    auto idx = s.indices();
    long long e = 0;
    for (long long a : idx)
        for (long long b : idx)
            for (long long c : idx)
                for (long long dd : idx) {
                    Point sum1 = point_add(f, index_point(f, d, a), index_point(f, d, b));
                    Point sum2 = point_add(f, index_point(f, d, c), index_point(f, d, dd));
                    if (sum1 == sum2) ++e;
                }
    return e;
}

} // namespace

TEST_CASE("additive energy on pinned sets") {
    auto f7 = Field::make(7, 1);
    PointSet single(f7, 1);
    single.insert(3);
    CHECK(additive_energy(single) == 1);

    PointSet pair(f7, 1);
    pair.insert(0);
    pair.insert(1);
    CHECK(additive_energy(pair) == 6);

    auto f3 = Field::make(3, 1);
    PointSet full(f3, 2);
    for (long long i = 0; i < 9; ++i) full.insert(i);
    CHECK(additive_energy(full) == 729); // q^{3d}
}

TEST_CASE("three energy routes agree with a quadruple scan") {
    auto f = Field::make(3, 1);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        PointSet a(f, 2);
        for (int i = 0; i < 5; ++i) a.insert(static_cast<long long>(rng() % 9));
        long long oracle = brute_energy(a);
        CHECK(additive_energy(a, EnergyMethod::Naive) == oracle);
        CHECK(additive_energy(a, EnergyMethod::PairSums) == oracle);
        CHECK(additive_energy(a, EnergyMethod::Fourier) == oracle);
        EnergyReport r = additive_energy_checked(a);
        CHECK(r.methods_agree);
        CHECK(r.energy == oracle);
    }
}

TEST_CASE("right-angle triples") {
    auto f = Field::make(5, 1);
    PointSet single(f, 2);
    single.insert(7);
    CHECK(right_angle_triples(single) == 1);

    PointSet three(f, 2);
    three.insert(point_index(*f, {0, 0}));
    three.insert(point_index(*f, {1, 0}));
    three.insert(point_index(*f, {0, 1}));
    // brute force over the 27 triples
    long long count = 0;
    auto idx = three.indices();
    for (long long a : idx)
        for (long long b : idx)
            for (long long dd : idx) {
                Point pa = index_point(*f, 2, a), pb = index_point(*f, 2, b),
                      pd = index_point(*f, 2, dd);
                if (dot(*f, point_sub(*f, pb, pd), point_sub(*f, pa, pd)) == 0) ++count;
            }
    CHECK(right_angle_triples(three) == count);

    // majorization on a sphere
    auto f3 = Field::make(3, 1);
    PointSet s1 = enumerate_variety(f3, 3, SphereSpec{1, {}});
    CHECK(right_angle_triples(s1) >= additive_energy(s1));
}

TEST_CASE("sphere energy bound") {
    auto f = Field::make(3, 1);
    PointSet s1 = enumerate_variety(f, 3, SphereSpec{1, {}});
    EnergyReport r = energy_bound_ratio(s1, 1);
    CHECK(r.energy == additive_energy(s1));
    CHECK(r.ratio > 0.0);
    CHECK(r.ratio <= 8.0);

    PointSet single(f, 3);
    single.insert(s1.indices()[0]);
    CHECK(energy_bound_ratio(single, 1).energy == 1);

    // gates
    auto f5 = Field::make(5, 1);
    PointSet s5 = enumerate_variety(f5, 3, SphereSpec{1, {}});
    CHECK_THROWS_AS(energy_bound_ratio(s5, 1), HypothesisViolated); // q = 1 mod 4
    CHECK(energy_bound_ratio(s5, 1, true).ratio > 0.0);

    PointSet off(f, 3);
    off.insert(0);
    CHECK_THROWS_AS(energy_bound_ratio(off, 1), NotOnSphere);

    PointSet s2 = enumerate_variety(f, 3, SphereSpec{2, {}});
    CHECK_THROWS_AS(energy_bound_ratio(s2, 2), HypothesisViolated); // eta(2) = -1
}

TEST_CASE("fourth-power norm equals the energy expression") {
    auto f3 = Field::make(3, 1);
    PointSet s1 = enumerate_variety(f3, 3, SphereSpec{1, {}});

    PointSet single(f3, 3);
    single.insert(s1.indices()[0]);
    L4Identity id1 = l4_energy_identity(single, 1);
    double expect = std::pow(27.0, 0.25) / 6.0;
    CHECK(id1.lhs == doctest::Approx(expect));
    CHECK(id1.rhs == doctest::Approx(expect));

    L4Identity idf = l4_energy_identity(s1, 1);
    CHECK(idf.relative_error < 1e-6);

    auto f7 = Field::make(7, 1);
    PointSet s7 = enumerate_variety(f7, 3, SphereSpec{1, {}});
    std::mt19937_64 rng(23);
    PointSet a(f7, 3);
    for (long long i : s7.indices())
        if (rng() % 2) a.insert(i);
    if (a.empty()) a.insert(s7.indices()[0]);
    CHECK(l4_energy_identity(a, 1).relative_error < 1e-6);
}

TEST_CASE("dyadic level sets") {
    auto f = Field::make(7, 1);
    SphereSpec spec{1, {}};
    PointSet s1 = enumerate_variety(f, 3, spec);

    // constant function: one level
    PointSet a(f, 3);
    for (long long i : s1.indices())
        if (a.size() < 4) a.insert(i);
    FunctionTable ind = FunctionTable::indicator_on(a, spec, s1);
    DyadicDecomposition dec = normalize_and_decompose(ind);
    CHECK(dec.levels.size() == 1);
    CHECK(dec.levels[0].second.size() == 4);
    CHECK(dec.level_bounds_hold);

    // two values a factor 2 apart: exactly two adjacent levels
    FunctionTable two(f, 3, spec, s1, Measure::Surface);
    auto idx = s1.indices();
    for (size_t i = 0; i < idx.size(); ++i) two.set(idx[i], i % 2 == 0 ? 1.0 : 0.5);
    DyadicDecomposition dec2 = normalize_and_decompose(two);
    REQUIRE(dec2.levels.size() == 2);
    CHECK(dec2.levels[1].first == dec2.levels[0].first + 1);

    CHECK_THROWS_AS(normalize_and_decompose(FunctionTable(f, 3, spec, s1, Measure::Surface)),
                    ZeroFunction);
    FunctionTable neg(f, 3, spec, s1, Measure::Surface);
    neg.set(idx[0], -1.0);
    CHECK_THROWS_AS(normalize_and_decompose(neg), NegativeValue);
}

TEST_CASE("extension ratios") {
    auto f = Field::make(3, 1);
    SphereSpec spec{1, {}};
    PointSet s1 = enumerate_variety(f, 3, spec);
    FunctionTable one = FunctionTable::indicator_on(s1, spec, s1);

    ExtensionRatioRecord rec = extension_ratio(one, 12.0 / 7.0, 4.0);
    CHECK(rec.denominator == doctest::Approx(1.0));
    CHECK(rec.ratio == doctest::Approx(rec.numerator / rec.denominator));
    CHECK(rec.ratio > 0.0);

    // sweep is deterministic in the seed
    ExtensionRatioRecord s1r = extension_sweep(f, 3, 1, 12.0 / 7.0, 4.0,
                                               SweepStrategy::All, 10, 42);
    ExtensionRatioRecord s2r = extension_sweep(f, 3, 1, 12.0 / 7.0, 4.0,
                                               SweepStrategy::All, 10, 42);
    CHECK(s1r.ratio == s2r.ratio);
    CHECK(s1r.f_descriptor == s2r.f_descriptor);
}
