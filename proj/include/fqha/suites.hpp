#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fqha/field.hpp"

namespace fqha {

/// One verification check: an identity, an exact bound, or an empirical
/// constant ceiling. `observed` vs `threshold` is the reported evidence.
struct Check {
    std::string id;
    bool pass = false;
    double observed = 0.0;
    double threshold = 0.0;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::vector<std::string> header;                 // CSV header
    std::vector<std::vector<std::string>> rows;      // CSV body, deterministic order
    std::vector<Check> checks;
    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct RunConfig {
    uint64_t seed = 20250826;
    bool exploratory = false;
    long long q_cap = Field::kDefaultQCap;
    long long space_cap = 1LL << 22;
    int coverage_trials = 50;
    std::string out_dir; // empty: no files written
};

/// Deterministic per-trial seed: splitmix64 over (master, suite, q, d, trial).
uint64_t derive_seed(uint64_t master, const std::string& suite, long long q, int d,
                     long long trial);

struct FieldMatrixFilter {
    int residue_mod4 = 0;         // 0 = any, else 1 or 3
    long long cap = 128;          // q <= cap
    bool primes_only = false;     // exclude k > 1
    bool require_odd = true;      // always enforced; q even yields nothing
};

/// Ascending (p, k) with q = p^k odd meeting the filters. Throws EmptyMatrix.
std::vector<std::pair<long long, int>> generate_field_matrix(const FieldMatrixFilter& f);

SuiteResult run_identity_suite(const RunConfig& cfg);
SuiteResult run_classical_suite(const RunConfig& cfg);
SuiteResult run_incidence_suite(const RunConfig& cfg);
SuiteResult run_cone_suite(const RunConfig& cfg);
SuiteResult run_energy_suite(const RunConfig& cfg);
SuiteResult run_extension_suite(const RunConfig& cfg);
SuiteResult run_distance_suite(const RunConfig& cfg);
SuiteResult run_coverage_suite(const RunConfig& cfg);
SuiteResult run_exponents_suite(const RunConfig& cfg);

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const RunConfig& cfg);

/// Runs the named suites (all when empty), optionally writing one CSV per
/// suite plus summary.json under cfg.out_dir.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const RunConfig& cfg);

/// CSV body for a suite result (header row + rows, deterministic).
std::string to_csv(const SuiteResult& r);

} // namespace fqha
