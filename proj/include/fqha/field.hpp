#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "fqha/errors.hpp"

namespace fqha {

/// Arithmetic in F_q, q = p^k odd, at desk scale (q <= cap, default 128).
///
/// Elements are integers in [0, q): the mixed-radix encoding (base p,
/// constant coefficient least significant) of the representative
/// polynomial modulo the chosen irreducible polynomial. Index 0 is the
/// additive identity, index 1 the multiplicative identity.
///
/// The modulus is the smallest irreducible monic polynomial in
/// lexicographic coefficient order; the primitive element is the smallest
/// index generating F_q^*. Both choices make element indexing stable
/// across runs. Instances are immutable after construction.
class Field {
public:
    static constexpr long long kDefaultQCap = 128;

    /// Builds F_{p^k}. Throws NotOddPrime / DegreeOutOfRange / CapExceeded.
    static std::shared_ptr<const Field> make(long long p, int k,
                                             long long q_cap = kDefaultQCap);

    long long p() const { return p_; }
    int k() const { return k_; }
    long long q() const { return q_; }
    /// Modulus coefficients c0..ck (monic, ck = 1).
    const std::vector<int>& modulus() const { return modulus_; }
    int primitive() const { return primitive_; }

    int add(int a, int b) const { return add_digits(a, b); }
    int sub(int a, int b) const { return add_digits(a, neg(b)); }
    int neg(int a) const;
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int inv(int a) const;
    int pow(int a, long long e) const;

    /// Tr(a) = a + a^p + ... + a^{p^{k-1}}, as an integer in [0, p).
    int trace(int a) const { return trace_[a]; }

    /// Canonical additive character chi(x) = exp(2*pi*i*Tr(x)/p).
    std::complex<double> chi(int x) const { return chi_of_trace_[trace_[x]]; }
    /// chi(-x), the forward-transform kernel factor.
    std::complex<double> chi_neg(int x) const { return chi(neg(x)); }

    /// Quadratic character: 0 at 0, +1 on nonzero squares, -1 otherwise.
    int eta(int x) const { return eta_[x]; }

    /// Gauss sum: sum over t != 0 of eta(t) chi(t).
    std::complex<double> gauss_sum() const;
    /// Kloosterman sum: sum over t != 0 of chi(a t + b t^{-1}).
    /// Throws InvalidParams when (a, b) == (0, 0).
    std::complex<double> kloosterman(int a, int b) const;

    /// Discrete log base the primitive element; a must be nonzero.
    int log(int a) const;

    bool valid(int a) const { return 0 <= a && a < q_; }

private:
    Field() = default;

    int add_digits(int a, int b) const;

    long long p_ = 0;
    int k_ = 0;
    long long q_ = 0;
    std::vector<int> modulus_;
    int primitive_ = 0;

    std::vector<uint16_t> mul_;
    std::vector<uint16_t> inv_;
    std::vector<uint8_t> trace_;
    std::vector<int8_t> eta_;
    std::vector<int32_t> log_;
    std::vector<std::complex<double>> chi_of_trace_;
};

using FieldPtr = std::shared_ptr<const Field>;

} // namespace fqha
