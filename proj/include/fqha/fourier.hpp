#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "fqha/lattice.hpp"

namespace fqha {

using cplx = std::complex<double>;

enum class Measure {
    Counting,   // dc: weight 1, total mass q^d
    Normalized, // dn: weight q^{-d}, total mass 1
    Surface,    // d-sigma: weight 1/|V| per variety point, total mass 1
};

/// Complex-valued function on F_q^d or on a variety, with attached measure.
/// Full-space tables are dense; variety tables store (index, value) pairs
/// sorted by index.
class FunctionTable {
public:
    /// Full-space table, all zeros.
    FunctionTable(FieldPtr f, int dim, Measure m);
    /// Variety-supported table, all zeros on the variety.
    FunctionTable(FieldPtr f, int dim, VarietySpec spec, const PointSet& variety,
                  Measure m);

    const FieldPtr& field() const { return f_; }
    int dim() const { return dim_; }
    Measure measure() const { return measure_; }
    bool full_space() const { return !support_spec_.has_value(); }
    const std::optional<VarietySpec>& support_spec() const { return support_spec_; }
    /// Sorted support indices (variety tables only).
    const std::vector<long long>& support() const { return support_; }
    long long support_size() const {
        return full_space() ? space_size() : static_cast<long long>(support_.size());
    }
    long long space_size() const { return n_; }

    std::vector<cplx>& values() { return values_; }
    const std::vector<cplx>& values() const { return values_; }

    /// Value at a point index; zero off the support.
    cplx at(long long idx) const;
    /// Set value at a point index; throws off the support.
    void set(long long idx, cplx v);

    /// Indicator of a point set (full-space, counting measure by default).
    static FunctionTable indicator(const PointSet& a, Measure m = Measure::Counting);
    /// Indicator of A as a function on variety V with surface measure.
    static FunctionTable indicator_on(const PointSet& a, const VarietySpec& spec,
                                      const PointSet& variety);

private:
    FieldPtr f_;
    int dim_ = 0;
    long long n_ = 0;
    Measure measure_ = Measure::Counting;
    std::optional<VarietySpec> support_spec_;
    std::vector<long long> support_; // empty for full-space tables
    std::vector<cplx> values_;
};

/// ghat(x) = sum_m g(m) chi(-x.m), axis-separable passes. Output on the
/// dual space with normalized measure.
FunctionTable fourier_forward(const FunctionTable& g);

/// fvee(m) = q^{-d} sum_x f(x) chi(m.x). Output with counting measure.
FunctionTable fourier_inverse(const FunctionTable& f);

/// (f dsigma)^vee(m) = (1/|V|) sum_{x in V} f(x) chi(m.x); f variety-supported.
/// Output on the full space with counting measure.
FunctionTable extension_inverse(const FunctionTable& f);

/// L^p norm with the table's attached measure; p = infinity() gives the sup.
double lp_norm(const FunctionTable& f, double p);

/// Restriction of a full-space table to a variety, with surface measure.
FunctionTable restrict_to_variety(const FunctionTable& f, const VarietySpec& spec,
                                  const PointSet& variety);

} // namespace fqha
