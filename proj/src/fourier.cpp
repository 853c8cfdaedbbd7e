#include "fqha/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fqha {

namespace {

long long pow_ll(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// One-dimensional kernel K[x*q + m] = chi(sign * x * m).
std::vector<cplx> kernel(const Field& f, int sign) {
    const int q = static_cast<int>(f.q());
    std::vector<cplx> k(static_cast<size_t>(q) * q);
    for (int x = 0; x < q; ++x)
        for (int m = 0; m < q; ++m) {
            int prod = f.mul(x, m);
            k[static_cast<size_t>(x) * q + m] = f.chi(sign < 0 ? f.neg(prod) : prod);
        }
    return k;
}

// Apply the 1-d transform along every axis in turn.
std::vector<cplx> separable_transform(const Field& f, int dim,
                                      std::vector<cplx> data, int sign) {
    const int q = static_cast<int>(f.q());
    const long long n = pow_ll(q, dim);
    const std::vector<cplx> k = kernel(f, sign);
    std::vector<cplx> fiber_in(q), fiber_out(q);
    long long stride = 1;
    for (int axis = 0; axis < dim; ++axis) {
        const long long block = stride * q;
        for (long long base = 0; base < n; base += block) {
            for (long long off = 0; off < stride; ++off) {
                for (int m = 0; m < q; ++m) fiber_in[m] = data[base + off + m * stride];
                for (int x = 0; x < q; ++x) {
                    cplx acc = 0.0;
                    const cplx* row = &k[static_cast<size_t>(x) * q];
                    for (int m = 0; m < q; ++m) acc += row[m] * fiber_in[m];
                    fiber_out[x] = acc;
                }
                for (int x = 0; x < q; ++x) data[base + off + x * stride] = fiber_out[x];
            }
        }
        stride *= q;
    }
    return data;
}

} // namespace

FunctionTable::FunctionTable(FieldPtr f, int dim, Measure m)
    : f_(std::move(f)), dim_(dim), measure_(m) {
    n_ = pow_ll(f_->q(), dim);
    values_.assign(static_cast<size_t>(n_), cplx{});
}

FunctionTable::FunctionTable(FieldPtr f, int dim, VarietySpec spec,
                             const PointSet& variety, Measure m)
    : f_(std::move(f)), dim_(dim), measure_(m), support_spec_(std::move(spec)) {
    n_ = pow_ll(f_->q(), dim);
    support_ = variety.indices();
    values_.assign(support_.size(), cplx{});
}

cplx FunctionTable::at(long long idx) const {
    if (full_space()) {
        if (idx < 0 || idx >= n_) throw IndexOutOfRange("table index out of range");
        return values_[static_cast<size_t>(idx)];
    }
    auto it = std::lower_bound(support_.begin(), support_.end(), idx);
    if (it == support_.end() || *it != idx) return cplx{};
    return values_[static_cast<size_t>(it - support_.begin())];
}

void FunctionTable::set(long long idx, cplx v) {
    if (full_space()) {
        if (idx < 0 || idx >= n_) throw IndexOutOfRange("table index out of range");
        values_[static_cast<size_t>(idx)] = v;
        return;
    }
    auto it = std::lower_bound(support_.begin(), support_.end(), idx);
    if (it == support_.end() || *it != idx)
        throw IndexOutOfRange("index not on the support variety");
    values_[static_cast<size_t>(it - support_.begin())] = v;
}

FunctionTable FunctionTable::indicator(const PointSet& a, Measure m) {
    FunctionTable t(a.field(), a.dim(), m);
    for (long long idx : a.indices()) t.values_[static_cast<size_t>(idx)] = 1.0;
    return t;
}

FunctionTable FunctionTable::indicator_on(const PointSet& a, const VarietySpec& spec,
                                          const PointSet& variety) {
    FunctionTable t(a.field(), a.dim(), spec, variety, Measure::Surface);
    for (size_t i = 0; i < t.support_.size(); ++i)
        if (a.contains(t.support_[i])) t.values_[i] = 1.0;
    return t;
}

FunctionTable fourier_forward(const FunctionTable& g) {
    if (!g.full_space()) throw InvalidParams("forward transform requires full-space support");
    FunctionTable out(g.field(), g.dim(), Measure::Normalized);
    out.values() = separable_transform(*g.field(), g.dim(), g.values(), -1);
    return out;
}

FunctionTable fourier_inverse(const FunctionTable& f) {
    if (!f.full_space()) throw InvalidParams("inverse transform requires full-space support");
    FunctionTable out(f.field(), f.dim(), Measure::Counting);
    out.values() = separable_transform(*f.field(), f.dim(), f.values(), +1);
    const double scale = 1.0 / static_cast<double>(f.space_size());
    for (auto& v : out.values()) v *= scale;
    return out;
}

FunctionTable extension_inverse(const FunctionTable& f) {
    if (f.full_space()) throw InvalidParams("extension_inverse requires a variety-supported table");
    const auto& sup = f.support();
    if (sup.empty()) throw EmptyVariety();

    // Embed f on the full space, run the separable inverse kernel, rescale by
    // q^d/|V| (the inverse already divides by q^d).
    FunctionTable dense(f.field(), f.dim(), Measure::Counting);
    for (size_t i = 0; i < sup.size(); ++i)
        dense.values()[static_cast<size_t>(sup[i])] = f.values()[i];
    FunctionTable out = fourier_inverse(dense);
    const double scale = static_cast<double>(f.space_size()) / static_cast<double>(sup.size());
    for (auto& v : out.values()) v *= scale;
    return out;
}

double lp_norm(const FunctionTable& f, double p) {
    if (!(p >= 1.0)) throw BadExponent("lp_norm requires p >= 1");
    double weight;
    switch (f.measure()) {
        case Measure::Counting: weight = 1.0; break;
        case Measure::Normalized: weight = 1.0 / static_cast<double>(f.space_size()); break;
        case Measure::Surface:
            if (f.support_size() == 0) throw EmptyVariety();
            weight = 1.0 / static_cast<double>(f.support_size());
            break;
        default: weight = 1.0;
    }
    if (std::isinf(p)) {
        double m = 0.0;
        for (const auto& v : f.values()) m = std::max(m, std::abs(v));
        return m;
    }
    double s = 0.0;
    for (const auto& v : f.values()) s += weight * std::pow(std::abs(v), p);
    return std::pow(s, 1.0 / p);
}

FunctionTable restrict_to_variety(const FunctionTable& f, const VarietySpec& spec,
                                  const PointSet& variety) {
    if (!f.full_space()) throw InvalidParams("restrict_to_variety expects a full-space table");
    FunctionTable out(f.field(), f.dim(), spec, variety, Measure::Surface);
    const auto& sup = out.support();
    for (size_t i = 0; i < sup.size(); ++i)
        out.values()[i] = f.values()[static_cast<size_t>(sup[i])];
    return out;
}

} // namespace fqha
