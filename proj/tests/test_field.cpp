#include <doctest.h>

#include <cmath>

#include "fqha/field.hpp"

using namespace fqha;

TEST_CASE("construction picks canonical modulus and primitive element") {
    auto f3 = Field::make(3, 1);
    CHECK(f3->q() == 3);
    CHECK(f3->primitive() == 2);

    auto f9 = Field::make(3, 2);
    CHECK(f9->q() == 9);
    // x^2 + 1, coefficients c0..c2
    CHECK(f9->modulus() == std::vector<int>{1, 0, 1});
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(Field::make(4, 1), NotOddPrime);
    CHECK_THROWS_AS(Field::make(2, 1), NotOddPrime);
    CHECK_THROWS_AS(Field::make(9, 1), NotOddPrime);
    CHECK_THROWS_AS(Field::make(3, 0), DegreeOutOfRange);
    CHECK_THROWS_AS(Field::make(3, 21), DegreeOutOfRange);
    CHECK_THROWS_AS(Field::make(127, 2, 128), CapExceeded);
}

TEST_CASE("arithmetic basics") {
    auto f5 = Field::make(5, 1);
    CHECK(f5->inv(2) == 3);
    CHECK_THROWS_AS(f5->inv(0), DivisionByZero);

    auto f9 = Field::make(3, 2);
    CHECK(f9->trace(1) == 2); // Tr(x) = x + x^3

    for (auto f : {Field::make(3, 1), Field::make(7, 1), Field::make(3, 2), Field::make(5, 2)}) {
        CHECK(f->pow(f->primitive(), f->q() - 1) == 1);
        // field axioms on every pair
        for (int a = 0; a < f->q(); ++a)
            for (int b = 0; b < f->q(); ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                CHECK(f->sub(f->add(a, b), b) == a);
                if (b != 0) CHECK(f->mul(f->mul(a, b), f->inv(b)) == a);
            }
    }
}

TEST_CASE("additive character is a character") {
    auto f9 = Field::make(3, 2);
    CHECK(std::abs(f9->chi(0) - std::complex<double>{1.0, 0.0}) < 1e-12);
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b)
            CHECK(std::abs(f9->chi(f9->add(a, b)) - f9->chi(a) * f9->chi(b)) < 1e-12);
    // orthogonality: sum chi = 0
    std::complex<double> s = 0;
    for (int a = 0; a < 9; ++a) s += f9->chi(a);
    CHECK(std::abs(s) < 1e-12);
}

TEST_CASE("quadratic character") {
    auto f7 = Field::make(7, 1);
    CHECK(f7->eta(0) == 0);
    CHECK(f7->eta(3) == -1); // squares mod 7 are {1, 2, 4}
    for (int x : {1, 2, 4}) CHECK(f7->eta(x) == 1);
    for (int x : {3, 5, 6}) CHECK(f7->eta(x) == -1);
    // multiplicativity
    for (int a = 1; a < 7; ++a)
        for (int b = 1; b < 7; ++b)
            CHECK(f7->eta(f7->mul(a, b)) == f7->eta(a) * f7->eta(b));
}

TEST_CASE("gauss sums have modulus sqrt(q)") {
    auto f3 = Field::make(3, 1);
    std::complex<double> g3 = f3->gauss_sum();
    CHECK(std::abs(g3.real()) < 1e-12); // purely imaginary for q = 3
    CHECK(std::abs(std::abs(g3) - std::sqrt(3.0)) < 1e-12);

    auto f5 = Field::make(5, 1);
    CHECK(std::abs(std::abs(f5->gauss_sum()) - std::sqrt(5.0)) < 1e-12);
}

TEST_CASE("kloosterman sums are real and Weil-bounded") {
    auto f7 = Field::make(7, 1);
    std::complex<double> k = f7->kloosterman(1, 1);
    CHECK(std::abs(k.imag()) < 1e-12);
    CHECK(std::abs(k) <= 2.0 * std::sqrt(7.0) + 1e-12);
    CHECK_THROWS_AS(f7->kloosterman(0, 0), InvalidParams);
}

TEST_CASE("discrete log inverts powers of the primitive element") {
    auto f = Field::make(3, 2);
    for (int e = 0; e < f->q() - 1; ++e)
        CHECK(f->log(f->pow(f->primitive(), e)) == e);
}
