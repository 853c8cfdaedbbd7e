#include <doctest.h>

#include "fqha/suites.hpp"

using namespace fqha;

TEST_CASE("seed derivation is deterministic and input-sensitive") {
    uint64_t a = derive_seed(1, "energy", 3, 2, 0);
    CHECK(a == derive_seed(1, "energy", 3, 2, 0));
    CHECK(a != derive_seed(2, "energy", 3, 2, 0));
    CHECK(a != derive_seed(1, "energy", 5, 2, 0));
    CHECK(a != derive_seed(1, "energy", 3, 3, 0));
    CHECK(a != derive_seed(1, "energy", 3, 2, 1));
    CHECK(a != derive_seed(1, "cone", 3, 2, 0));
}

TEST_CASE("field matrix generation") {
    FieldMatrixFilter f3;
    f3.residue_mod4 = 3;
    f3.cap = 30;
    f3.primes_only = true;
    std::vector<std::pair<long long, int>> expect = {{3, 1}, {7, 1}, {11, 1}, {19, 1}, {23, 1}};
    CHECK(generate_field_matrix(f3) == expect);

    FieldMatrixFilter f1;
    f1.residue_mod4 = 1;
    f1.cap = 30;
    auto m = generate_field_matrix(f1);
    auto has = [&m](long long p, int k) {
        for (auto [pp, kk] : m)
            if (pp == p && kk == k) return true;
        return false;
    };
    CHECK(has(5, 1));
    CHECK(has(3, 2));  // 9
    CHECK(has(13, 1));
    CHECK(has(5, 2));  // 25
    CHECK(has(29, 1));

    FieldMatrixFilter bad;
    bad.cap = 2;
    CHECK_THROWS_AS(generate_field_matrix(bad), EmptyMatrix);
    FieldMatrixFilter even;
    even.residue_mod4 = 2;
    CHECK_THROWS_AS(generate_field_matrix(even), EmptyMatrix);
}

TEST_CASE("csv emission is deterministic") {
    RunConfig cfg;
    SuiteResult a = run_exponents_suite(cfg);
    SuiteResult b = run_exponents_suite(cfg);
    CHECK(to_csv(a) == to_csv(b));
    CHECK(to_csv(a).rfind("schema_version,suite,q,p,k,d,seed,metric,value,pass\n", 0) == 0);
    CHECK(a.passed());
}

TEST_CASE("unknown suite names are rejected") {
    RunConfig cfg;
    CHECK_THROWS_AS(run_suite("nope", cfg), ConfigError);
}
