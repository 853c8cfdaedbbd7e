#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fqha/fourier.hpp"
#include "fqha/lattice.hpp"

namespace fqha {

enum class EnergyMethod { Naive, PairSums, Fourier };

struct EnergyReport {
    long long energy = 0;                    // E(A)
    bool methods_agree = true;               // filled by the three-way check
    long long right_angle_triples = -1;      // filled when requested
    double bound_terms[3] = {0, 0, 0};       // |A|^3/q, q^{(d-2)/2}|A|^2, q^{(d-3)/4}|A|^{5/2}
    double ratio = 0.0;                      // E / sum(bound_terms)
    std::vector<std::string> hypothesis_flags;
};

/// Additive energy: #{(a,b,c,d) in A^4 : a+b = c+d}.
long long additive_energy(const PointSet& a, EnergyMethod method = EnergyMethod::PairSums);

/// Runs all three methods and checks exact agreement.
EnergyReport additive_energy_checked(const PointSet& a);

/// #{(a,b,d) in A^3 : (b-d).(a-d) = 0}. Majorizes E(A) when A lies on a sphere.
long long right_angle_triples(const PointSet& a);

/// E(A) against |A|^3/q + q^{(d-2)/2}|A|^2 + q^{(d-3)/4}|A|^{5/2} for A on a
/// square-radius sphere. Requires d = 3 mod 4, q = 3 mod 4, eta(j) = 1 unless
/// exploratory.
EnergyReport energy_bound_ratio(const PointSet& a, int radius, bool exploratory = false);

struct L4Identity {
    double lhs = 0.0;  // || (A dsigma)^vee ||_{L^4(dc)}
    double rhs = 0.0;  // q^{d/4} E(A)^{1/4} / |S_j|
    double relative_error = 0.0;
};

/// Both sides of the L^4 / energy identity for A on Sphere(radius, center).
L4Identity l4_energy_identity(const PointSet& a, int radius,
                              const Point& center = {});

struct DyadicDecomposition {
    std::vector<std::pair<int, PointSet>> levels; // (i, A_i), disjoint
    int cutoff = 0;                               // N
    double exponent_weight = 0.0;                 // 4d/(3d-2)
    double scale = 0.0;                           // applied normalization factor
    double reconstruction_mass = 0.0;             // sum 2^{-w i} |A_i|
    bool level_bounds_hold = false;               // |A_i| <= 2^{w i} for all i
};

/// Normalize f >= 0 on a variety so sum |f|^{4d/(3d-2)} = 1, then split into
/// dyadic level sets with g <= f < 2g. Cutoff N = ceil(C ln q), C = 8.
DyadicDecomposition normalize_and_decompose(const FunctionTable& f, double cutoff_c = 8.0);

struct ExtensionRatioRecord {
    double p = 0.0, r = 0.0;
    std::string f_descriptor;
    double numerator = 0.0;    // ||(f dsigma)^vee||_{L^r(dc)}
    double denominator = 0.0;  // ||f||_{L^p(V, dsigma)}
    double ratio = 0.0;
    uint64_t seed = 0;
};

/// Exact extension ratio for one test function on its variety.
ExtensionRatioRecord extension_ratio(const FunctionTable& f, double p, double r);

enum class SweepStrategy {
    RandomIndicators,   // random subsets at dyadic densities
    SubspaceIndicator,  // indicator of a found affine subspace in the sphere
    FullIndicator,      // f = 1 on V
    RandomComplex,      // random complex values
    All,
};

/// Sweep test functions on Sphere(radius, 0) in F_q^d; returns the maximizing
/// record. trials applies to the randomized strategies.
ExtensionRatioRecord extension_sweep(FieldPtr f, int dim, int radius, double p,
                                     double r, SweepStrategy strategy, int trials,
                                     uint64_t seed);

} // namespace fqha
