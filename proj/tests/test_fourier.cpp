#include <doctest.h>

#include <cmath>
#include <random>

#include "fqha/fourier.hpp"

using namespace fqha;

namespace {

long long pow_ll(long long b, int e) {
    long long r = 1;
    while (e--) r *= b;
    return r;
}

// the defining double sum, no separable passes
std::vector<cplx> naive_forward(const FunctionTable& g) {
    const Field& f = *g.field();
    int d = g.dim();
    long long n = g.space_size();
    std::vector<cplx> out(static_cast<size_t>(n));
    for (long long xi = 0; xi < n; ++xi) {
        Point x = index_point(f, d, xi);
        cplx acc = 0;
        for (long long mi = 0; mi < n; ++mi) {
            Point m = index_point(f, d, mi);
            acc += g.at(mi) * f.chi_neg(dot(f, x, m));
        }
        out[static_cast<size_t>(xi)] = acc;
    }
    return out;
}

} // namespace

TEST_CASE("forward transform basics") {
    auto f = Field::make(3, 1);
    const int d = 3;
    long long n = pow_ll(3, d);

    FunctionTable delta(f, d, Measure::Counting);
    delta.set(0, 1.0);
    FunctionTable dhat = fourier_forward(delta);
    for (long long i = 0; i < n; ++i)
        CHECK(std::abs(dhat.at(i) - cplx{1.0, 0.0}) < 1e-12);

    FunctionTable one(f, d, Measure::Counting);
    for (auto& v : one.values()) v = 1.0;
    FunctionTable ohat = fourier_forward(one);
    CHECK(std::abs(ohat.at(0) - cplx{static_cast<double>(n), 0.0}) < 1e-9);
    for (long long i = 1; i < n; ++i) CHECK(std::abs(ohat.at(i)) < 1e-9);

    PointSet s1 = enumerate_variety(f, d, SphereSpec{1, {}});
    FunctionTable shat = fourier_forward(FunctionTable::indicator(s1));
    CHECK(std::abs(shat.at(0) - cplx{6.0, 0.0}) < 1e-9);
}

TEST_CASE("separable passes match the defining double sum") {
    std::mt19937_64 rng(11);
    std::normal_distribution<> gauss;
    for (auto [q, d] : {std::pair<long long, int>{3, 2}, {3, 3}, {5, 2}, {3, 5}}) {
        auto f = Field::make(q, 1);
        FunctionTable g(f, d, Measure::Counting);
        for (auto& v : g.values()) v = cplx{gauss(rng), gauss(rng)};
        FunctionTable fast = fourier_forward(g);
        std::vector<cplx> slow = naive_forward(g);
        for (size_t i = 0; i < slow.size(); ++i)
            CHECK(std::abs(fast.values()[i] - slow[i]) < 1e-9);
    }
}

TEST_CASE("inverse transform and round trips") {
    auto f = Field::make(5, 1);
    const int d = 2;
    long long n = pow_ll(5, d);

    FunctionTable scaled_delta(f, d, Measure::Counting);
    scaled_delta.set(0, static_cast<double>(n));
    FunctionTable c = fourier_inverse(scaled_delta);
    for (long long i = 0; i < n; ++i)
        CHECK(std::abs(c.at(i) - cplx{1.0, 0.0}) < 1e-12);

    FunctionTable one(f, d, Measure::Counting);
    for (auto& v : one.values()) v = 1.0;
    FunctionTable ovee = fourier_inverse(one);
    CHECK(std::abs(ovee.at(0) - cplx{1.0, 0.0}) < 1e-12);
    for (long long i = 1; i < n; ++i) CHECK(std::abs(ovee.at(i)) < 1e-12);

    std::mt19937_64 rng(7);
    std::normal_distribution<> gauss;
    for (int trial = 0; trial < 50; ++trial) {
        FunctionTable g(f, d, Measure::Counting);
        for (auto& v : g.values()) v = cplx{gauss(rng), gauss(rng)};
        FunctionTable back = fourier_inverse(fourier_forward(g));
        for (long long i = 0; i < n; ++i) CHECK(std::abs(back.at(i) - g.at(i)) < 1e-9);
    }
}

TEST_CASE("normalized extension transform") {
    auto f = Field::make(3, 1);
    const int d = 3;
    SphereSpec spec{1, {}};
    PointSet s1 = enumerate_variety(f, d, spec);

    FunctionTable one = FunctionTable::indicator_on(s1, spec, s1);
    FunctionTable ext = extension_inverse(one);
    CHECK(std::abs(ext.at(0) - cplx{1.0, 0.0}) < 1e-12);

    // single point: constant modulus 1/|V|
    FunctionTable d0(f, d, spec, s1, Measure::Surface);
    d0.set(s1.indices()[0], 1.0);
    FunctionTable dext = extension_inverse(d0);
    for (long long i = 0; i < ext.space_size(); ++i)
        CHECK(std::abs(std::abs(dext.at(i)) - 1.0 / 6.0) < 1e-12);

    // (1 dsigma)^vee(m) = (1/|S_1|) Shat(-m)
    FunctionTable shat = fourier_forward(FunctionTable::indicator(s1));
    for (long long mi = 0; mi < ext.space_size(); ++mi) {
        Point m = index_point(*f, d, mi);
        Point neg(d);
        for (int i = 0; i < d; ++i) neg[i] = f->neg(m[i]);
        CHECK(std::abs(ext.at(mi) - shat.at(point_index(*f, neg)) / 6.0) < 1e-12);
    }
}

TEST_CASE("lp norms under the attached measure") {
    auto f = Field::make(3, 1);
    const int d = 3;
    SphereSpec spec{1, {}};
    PointSet s1 = enumerate_variety(f, d, spec);

    FunctionTable one = FunctionTable::indicator_on(s1, spec, s1);
    for (double p : {1.0, 2.0, 4.0, 7.5})
        CHECK(std::abs(lp_norm(one, p) - 1.0) < 1e-12);

    FunctionTable delta(f, d, Measure::Counting);
    delta.set(0, 1.0);
    CHECK(std::abs(lp_norm(delta, 2.0) - 1.0) < 1e-12);

    PointSet a(f, d);
    for (long long i : s1.indices())
        if (a.size() < 3) a.insert(i);
    FunctionTable ind = FunctionTable::indicator_on(a, spec, s1);
    for (double p : {1.0, 2.0, 3.0})
        CHECK(std::abs(lp_norm(ind, p) - std::pow(3.0 / 6.0, 1.0 / p)) < 1e-12);

    CHECK(std::abs(lp_norm(ind, std::numeric_limits<double>::infinity()) - 1.0) < 1e-12);
    CHECK_THROWS_AS(lp_norm(ind, 0.5), BadExponent);
}

TEST_CASE("extension/restriction duality pairing") {
    auto f = Field::make(3, 1);
    const int d = 3;
    long long n = pow_ll(3, d);
    SphereSpec spec{1, {}};
    PointSet s1 = enumerate_variety(f, d, spec);

    std::mt19937_64 rng(3);
    std::normal_distribution<> gauss;
    for (int trial = 0; trial < 20; ++trial) {
        FunctionTable g(f, d, Measure::Counting);
        for (auto& v : g.values()) v = cplx{gauss(rng), gauss(rng)};
        FunctionTable ghat = fourier_forward(g);
        FunctionTable fv = restrict_to_variety(ghat, spec, s1);
        // <f, ghat>_{dsigma} = <(f dsigma)^vee, g>_{dc}
        cplx lhs = 0;
        for (long long i : s1.indices()) lhs += fv.at(i) * std::conj(ghat.at(i)) / 6.0;
        FunctionTable ext = extension_inverse(fv);
        cplx rhs = 0;
        for (long long i = 0; i < n; ++i) rhs += ext.at(i) * std::conj(g.at(i));
        CHECK(std::abs(lhs - rhs) < 1e-9);
    }
}

TEST_CASE("variety tables reject writes off the support") {
    auto f = Field::make(3, 1);
    SphereSpec spec{1, {}};
    PointSet s1 = enumerate_variety(f, 3, spec);
    FunctionTable t(f, 3, spec, s1, Measure::Surface);
    CHECK_THROWS_AS(t.set(0, 1.0), IndexOutOfRange); // origin not on S_1
    CHECK(t.at(0) == cplx{0.0, 0.0});
}
