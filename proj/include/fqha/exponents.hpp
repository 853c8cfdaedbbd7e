#pragma once

#include <string>
#include <vector>

#include "fqha/errors.hpp"

namespace fqha {

/// Exact rational, normalized with positive denominator.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n, long long d = 1);

    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;
    bool operator==(const Rat& o) const = default;
    auto operator<=>(const Rat& o) const {
        return static_cast<__int128>(num) * o.den <=> static_cast<__int128>(o.num) * den;
    }
    double value() const { return static_cast<double>(num) / den; }
    std::string str() const;
};

/// Lebesgue exponent in [1, infinity].
struct LpExponent {
    bool is_inf = false;
    Rat r{1, 1};

    static LpExponent infinity() { return {true, {}}; }
    static LpExponent of(long long n, long long d = 1) { return {false, Rat(n, d)}; }
    Rat reciprocal() const { return is_inf ? Rat(0) : Rat(r.den, r.num); }
    /// Holder dual: 1/p + 1/p' = 1.
    LpExponent dual() const;
    bool operator==(const LpExponent&) const = default;
    std::string str() const { return is_inf ? "inf" : r.str(); }
};

/// Riesz-Thorin interpolation of the pairs (p0, r0), (p1, r1) at theta:
/// 1/p = (1-theta)/p0 + theta/p1, 1/r = (1-theta)/r0 + theta/r1.
std::pair<LpExponent, LpExponent> interpolate(LpExponent p0, LpExponent r0,
                                              LpExponent p1, LpExponent r1,
                                              const Rat& theta);

/// Subspace necessary condition: r >= max(2d/(d-1), p(d-k)/((p-1)(d-1-k)))
/// for a variety of size ~ q^{d-1} containing an affine subspace of size q^k.
Rat necessary_r(const Rat& p, int d, int k);

enum class RadiusClass { Zero, Square, NonSquare, Primitive };

struct ExponentEntry {
    LpExponent p, r;
    std::string source;
};

struct ExponentRecord {
    int d = 0;
    int q_class = 0; // q mod 4
    RadiusClass radius_class = RadiusClass::Square;
    std::vector<ExponentEntry> achieved;
    std::vector<ExponentEntry> conjectured;
    /// Dual pairs (p', r') of every achieved/conjectured entry, same order.
    std::vector<ExponentEntry> achieved_dual;
    std::vector<ExponentEntry> conjectured_dual;
};

/// Catalog of known and conjectured (p, r) pairs keyed by (d, q mod 4, radius class).
ExponentRecord exponent_catalog(int d, int q_class, RadiusClass radius_class);

} // namespace fqha
