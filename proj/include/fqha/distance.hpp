#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fqha/fourier.hpp"
#include "fqha/lattice.hpp"

namespace fqha {

enum class Mu3Method { Naive, Convolution, FourierIdentity };

struct Mu3Table {
    std::map<int, long long> counts; // t -> mu_3(t), every t in F_q present
    long long total = 0;             // |A|^3
};

/// mu_3(t) = #{(x,y,z) in A^3 : ||x+y+z|| = t}.
Mu3Table mu3(const PointSet& a, Mu3Method method = Mu3Method::Convolution);

/// (Delta_2(A), Delta_3(A)).
std::pair<std::set<int>, std::set<int>> distance_sets(const PointSet& a);

struct SpherePairIdentity {
    double lhs_re = 0.0, lhs_im = 0.0;
    double rhs_re = 0.0, rhs_im = 0.0;
    double relative_error = 0.0;
};

/// sum_t Shat_t(m) conj(Shat_t(v)) against its closed form
/// q^{2d} (delta_0(m) delta_0(v)/q + q^{-(d+1)} (q-1 or -1)).
SpherePairIdentity sphere_pair_identity(FieldPtr f, int dim, const Point& m,
                                        const Point& v);

struct Loai0Report {
    long long mu3_zero = 0;
    bool first_holds = false;   // (|A|^3 - mu3(0))^2 >= |A|^6 / 9
    bool second_holds = false;  // q^{-d} |sum_{S_0} Ahat^3|^2 - mu3(0)^2 <= 4|A|^6/q
    double first_lhs = 0.0, first_rhs = 0.0;
    double second_lhs = 0.0, second_rhs = 0.0;
    std::vector<std::string> hypothesis_flags;
};

/// The two |A| >= 3q^{d/2} inequalities (d even >= 4).
Loai0Report loai0_check(const PointSet& a, bool exploratory = false);

struct SphereDecay {
    double max_nonzero = 0.0; // max_{x != 0} |Shat_t(x)|
    double ratio = 0.0;       // to q^{(d-1)/2}
};

SphereDecay sphere_fourier_decay(FieldPtr f, int dim, int t);

struct RestrictionNorms {
    double l2 = 0.0, l3 = 0.0;            // norms of Ahat on (S_t, dsigma)
    double l2_bound = 0.0, l3_bound = 0.0;
    double l2_ratio = 0.0, l3_ratio = 0.0;
    std::vector<std::string> hypothesis_flags;
};

/// L^2/L^3 restriction norms of Ahat on S_t with their bound ratios.
/// t must be nonzero.
RestrictionNorms restriction_norms(const PointSet& a, int t);

struct CoverageRecord {
    long long set_size = 0;
    long long delta2_size = 0;
    long long delta3_size = 0;
    double cs_lower_bound = 0.0;     // (sum_{t!=0} mu3)^2 / sum_{t!=0} mu3^2
    double second_moment = 0.0;      // sum_{t!=0} mu3(t)^2
    double second_moment_rhs = 0.0;  // per the d = 4 / d >= 6 displays
    double second_moment_ratio = 0.0;
    bool cs_holds = false;           // cs bound <= #{t != 0 : mu3 > 0}, exact
    std::vector<std::string> hypothesis_flags;
};

/// Exact second moment of mu3 over t != 0, its bound ratio, and the
/// Cauchy-Schwarz lower bound for |Delta_3|. Requires |A| >= 3 q^{d/2}, d even.
CoverageRecord second_moment_check(const PointSet& a, bool exploratory = false);

struct CoverageRow {
    long long size = 0;
    int trials = 0;
    double full_coverage_fraction = 0.0;
    double mean_delta3_over_q = 0.0;
};

/// Monte-Carlo |Delta_3| coverage over random subsets of each size.
std::vector<CoverageRow> coverage_experiment(FieldPtr f, int dim,
                                             const std::vector<long long>& sizes,
                                             int trials, uint64_t seed);

} // namespace fqha
