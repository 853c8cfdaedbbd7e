#include "fqha/distance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace fqha {

namespace {

long long pow_ll(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

long long round_to_integer(double x, const char* what) {
    double r = std::round(x);
    if (std::abs(x - r) > 0.1)
        throw Error(std::string(what) + ": value " + std::to_string(x) +
                    " is not close to an integer");
    return static_cast<long long>(r);
}

// ||w|| per point index, computed once per call site.
std::vector<int> norm_by_index(const Field& f, int dim) {
    long long n = pow_ll(f.q(), dim);
    std::vector<int> norms(static_cast<size_t>(n));
    Point x(dim, 0);
    for (long long idx = 0; idx < n; ++idx) {
        norms[static_cast<size_t>(idx)] = quad_norm(f, x);
        for (int i = 0; i < dim; ++i) {
            if (++x[i] < f.q()) break;
            x[i] = 0;
        }
    }
    return norms;
}

} // namespace

Mu3Table mu3(const PointSet& a, Mu3Method method) {
    if (a.empty()) throw EmptySet();
    const Field& f = *a.field();
    const int d = a.dim();
    Mu3Table out;
    for (int t = 0; t < f.q(); ++t) out.counts[t] = 0;
    out.total = a.size() * a.size() * a.size();

    switch (method) {
        case Mu3Method::Naive: {
            std::vector<Point> pts;
            for (long long idx : a.indices()) pts.push_back(index_point(f, d, idx));
            for (const auto& x : pts)
                for (const auto& y : pts)
                    for (const auto& z : pts)
                        ++out.counts[quad_norm(f, point_add(f, point_add(f, x, y), z))];
            return out;
        }
        case Mu3Method::Convolution: {
            // A*A*A = inverse(Ahat^3), then bin by ||w||.
            FunctionTable ahat = fourier_forward(FunctionTable::indicator(a));
            FunctionTable cubed(a.field(), d, Measure::Normalized);
            for (size_t i = 0; i < ahat.values().size(); ++i) {
                cplx v = ahat.values()[i];
                cubed.values()[i] = v * v * v;
            }
            FunctionTable triple = fourier_inverse(cubed);
            auto norms = norm_by_index(f, d);
            std::vector<double> acc(f.q(), 0.0);
            for (size_t i = 0; i < triple.values().size(); ++i)
                acc[norms[i]] += triple.values()[i].real();
            for (int t = 0; t < f.q(); ++t)
                out.counts[t] = round_to_integer(acc[t], "mu3 convolution");
            return out;
        }
        case Mu3Method::FourierIdentity: {
            // mu3(t) = q^{-d} sum_m Shat_t(m) conj(Ahat(m))^3
            FunctionTable ahat = fourier_forward(FunctionTable::indicator(a));
            auto norms = norm_by_index(f, d);
            // Shat_t(m) = sum_{||x||=t} chi(-m.x); accumulate per t in one pass
            // over (t, m) using precomputed sphere transforms.
            long long n = pow_ll(f.q(), d);
            for (int t = 0; t < f.q(); ++t) {
                PointSet sphere(a.field(), d);
                for (long long idx = 0; idx < n; ++idx)
                    if (norms[static_cast<size_t>(idx)] == t) sphere.insert(idx);
                FunctionTable shat = fourier_forward(FunctionTable::indicator(sphere));
                cplx acc = 0.0;
                for (long long m = 0; m < n; ++m) {
                    cplx ac = std::conj(ahat.values()[static_cast<size_t>(m)]);
                    acc += shat.values()[static_cast<size_t>(m)] * ac * ac * ac;
                }
                acc /= static_cast<double>(n);
                out.counts[t] = round_to_integer(acc.real(), "mu3 fourier identity");
            }
            return out;
        }
    }
    throw InvalidParams("unknown mu3 method");
}

std::pair<std::set<int>, std::set<int>> distance_sets(const PointSet& a) {
    if (a.empty()) throw EmptySet();
    const Field& f = *a.field();
    const int d = a.dim();
    std::vector<Point> pts;
    for (long long idx : a.indices()) pts.push_back(index_point(f, d, idx));

    std::set<int> d2;
    for (const auto& x : pts)
        for (const auto& y : pts) d2.insert(quad_norm(f, point_sub(f, x, y)));

    std::set<int> d3;
    Mu3Table table = mu3(a, a.space_size() <= (1 << 18) ? Mu3Method::Convolution
                                                        : Mu3Method::Naive);
    for (const auto& [t, c] : table.counts)
        if (c > 0) d3.insert(t);
    return {std::move(d2), std::move(d3)};
}

SpherePairIdentity sphere_pair_identity(FieldPtr f, int dim, const Point& m,
                                        const Point& v) {
    const long long q = f->q();
    long long n = pow_ll(q, dim);

    cplx lhs = 0.0;
    for (int t = 0; t < q; ++t) {
        PointSet sphere = enumerate_variety(f, dim, SphereSpec{t, {}});
        cplx sm = 0.0, sv = 0.0;
        for (long long idx : sphere.indices()) {
            Point x = index_point(*f, dim, idx);
            sm += f->chi(f->neg(dot(*f, m, x)));
            sv += f->chi(f->neg(dot(*f, v, x)));
        }
        lhs += sm * std::conj(sv);
    }

    bool m0 = std::all_of(m.begin(), m.end(), [](int c) { return c == 0; });
    bool v0 = std::all_of(v.begin(), v.end(), [](int c) { return c == 0; });
    double inner = quad_norm(*f, m) == quad_norm(*f, v) ? static_cast<double>(q - 1) : -1.0;
    double rhs = static_cast<double>(n) * static_cast<double>(n) *
                 ((m0 && v0 ? 1.0 / q : 0.0) +
                  inner / std::pow(static_cast<double>(q), dim + 1));

    SpherePairIdentity out;
    out.lhs_re = lhs.real();
    out.lhs_im = lhs.imag();
    out.rhs_re = rhs;
    out.rhs_im = 0.0;
    double scale = std::max({std::abs(out.lhs_re), std::abs(rhs), 1.0});
    out.relative_error = std::hypot(out.lhs_re - rhs, out.lhs_im) / scale;
    return out;
}

Loai0Report loai0_check(const PointSet& a, bool exploratory) {
    const Field& f = *a.field();
    const int d = a.dim();
    const long long q = f.q();
    Loai0Report r;
    if (d % 2 != 0 || d < 4) {
        if (!exploratory) throw HypothesisViolated("loai0_check requires even d >= 4");
        r.hypothesis_flags.push_back("d not even >= 4");
    }
    double threshold = 3.0 * std::pow(static_cast<double>(q), d / 2.0);
    if (static_cast<double>(a.size()) < threshold) {
        if (!exploratory)
            throw HypothesisViolated("loai0_check requires |A| >= 3 q^{d/2}");
        r.hypothesis_flags.push_back("|A| below 3 q^{d/2}");
    }

    Mu3Table table = mu3(a, Mu3Method::Convolution);
    r.mu3_zero = table.counts.at(0);
    double n3 = static_cast<double>(a.size()) * a.size() * a.size();
    r.first_lhs = (n3 - r.mu3_zero) * (n3 - r.mu3_zero);
    r.first_rhs = n3 * n3 / 9.0;
    r.first_holds = r.first_lhs >= r.first_rhs * (1 - 1e-12);

    PointSet s0 = enumerate_variety(a.field(), d, SphereSpec{0, {}});
    FunctionTable ahat = fourier_forward(FunctionTable::indicator(a));
    cplx cube_sum = 0.0;
    for (long long idx : s0.indices()) {
        cplx v = ahat.values()[static_cast<size_t>(idx)];
        cube_sum += v * v * v;
    }
    double qd = static_cast<double>(pow_ll(q, d));
    r.second_lhs = std::norm(cube_sum) / qd - static_cast<double>(r.mu3_zero) * r.mu3_zero;
    r.second_rhs = 4.0 * n3 * n3 / q;
    r.second_holds = r.second_lhs <= r.second_rhs * (1 + 1e-9);
    return r;
}

SphereDecay sphere_fourier_decay(FieldPtr f, int dim, int t) {
    PointSet sphere = enumerate_variety(f, dim, SphereSpec{t, {}});
    SphereDecay out;
    if (sphere.empty()) return out;
    FunctionTable shat = fourier_forward(FunctionTable::indicator(sphere));
    for (size_t i = 1; i < shat.values().size(); ++i)
        out.max_nonzero = std::max(out.max_nonzero, std::abs(shat.values()[i]));
    out.ratio = out.max_nonzero / std::pow(static_cast<double>(f->q()), (dim - 1) / 2.0);
    return out;
}

RestrictionNorms restriction_norms(const PointSet& a, int t) {
    if (t == 0) throw ZeroRadius();
    const Field& f = *a.field();
    const int d = a.dim();
    const double q = static_cast<double>(f.q());
    RestrictionNorms out;

    SphereSpec spec{t, {}};
    PointSet sphere = enumerate_variety(a.field(), d, spec);
    if (sphere.empty()) throw EmptyVariety();
    FunctionTable ahat = fourier_forward(FunctionTable::indicator(a));
    FunctionTable on_sphere = restrict_to_variety(ahat, spec, sphere);
    out.l2 = lp_norm(on_sphere, 2.0);
    out.l3 = lp_norm(on_sphere, 3.0);

    double n = static_cast<double>(a.size());
    out.l2_bound = n / std::pow(q, (d - 1) / 4.0);
    out.l2_ratio = out.l2 / out.l2_bound;
    if (n < std::pow(q, (d - 1) / 2.0))
        out.hypothesis_flags.push_back("|A| below q^{(d-1)/2}: L2 ratio exploratory");

    if (d == 4) {
        out.l3_bound = std::pow(n, 7.0 / 9.0);
    } else if (d >= 6 && d % 2 == 0) {
        out.l3_bound = std::pow(q, -(d * d - 7.0 * d + 6.0) / (12.0 * (d - 2.0))) *
                       std::pow(n, 1.0 - d / (6.0 * d - 12.0));
    } else {
        out.l3_bound = std::pow(n, 7.0 / 9.0);
        out.hypothesis_flags.push_back("d not even: L3 bound exploratory (d = 4 form)");
    }
    out.l3_ratio = out.l3 / out.l3_bound;
    return out;
}

CoverageRecord second_moment_check(const PointSet& a, bool exploratory) {
    const Field& f = *a.field();
    const int d = a.dim();
    const long long q = f.q();
    CoverageRecord r;
    r.set_size = a.size();
    if (d % 2 != 0) {
        if (!exploratory) throw HypothesisViolated("second_moment_check requires even d");
        r.hypothesis_flags.push_back("d odd");
    }
    if (static_cast<double>(a.size()) < 3.0 * std::pow(static_cast<double>(q), d / 2.0)) {
        if (!exploratory)
            throw HypothesisViolated("second_moment_check requires |A| >= 3 q^{d/2}");
        r.hypothesis_flags.push_back("|A| below 3 q^{d/2}");
    }

    Mu3Table table = mu3(a, Mu3Method::Convolution);
    auto [d2, d3] = distance_sets(a);
    r.delta2_size = static_cast<long long>(d2.size());
    r.delta3_size = static_cast<long long>(d3.size());

    unsigned __int128 sum = 0, sum_sq = 0;
    long long support = 0;
    for (const auto& [t, c] : table.counts) {
        if (t == 0) continue;
        sum += static_cast<unsigned __int128>(c);
        sum_sq += static_cast<unsigned __int128>(c) * static_cast<unsigned __int128>(c);
        if (c > 0) ++support;
    }
    r.second_moment = static_cast<double>(sum_sq);
    if (sum_sq > 0) {
        r.cs_lower_bound = static_cast<double>(sum) * static_cast<double>(sum) /
                           static_cast<double>(sum_sq);
        // exact integer Cauchy-Schwarz: sum^2 <= support * sum_sq
        r.cs_holds = sum * sum <= static_cast<unsigned __int128>(support) * sum_sq;
    } else {
        r.cs_lower_bound = 0.0;
        r.cs_holds = true;
    }

    double n = static_cast<double>(a.size());
    double dq = static_cast<double>(q);
    double n6 = std::pow(n, 6.0);
    if (d == 4) {
        r.second_moment_rhs = n6 / dq + std::pow(dq, 3.0) * std::pow(n, 13.0 / 3.0);
    } else {
        r.second_moment_rhs =
            n6 / dq + std::pow(dq, (3.0 * d * d - 5.0 * d + 2.0) / (4.0 * d - 8.0)) *
                          std::pow(n, 5.0 - d / (2.0 * d - 4.0));
    }
    r.second_moment_ratio = r.second_moment / r.second_moment_rhs;
    return r;
}

std::vector<CoverageRow> coverage_experiment(FieldPtr f, int dim,
                                             const std::vector<long long>& sizes,
                                             int trials, uint64_t seed) {
    long long n = pow_ll(f->q(), dim);
    std::vector<CoverageRow> rows;
    for (long long size : sizes) {
        if (size < 1 || size > n) throw InvalidParams("coverage size out of range");
        CoverageRow row;
        row.size = size;
        row.trials = trials;
        long long full = 0;
        double mean = 0.0;
        for (int t = 0; t < trials; ++t) {
            std::seed_seq sq{seed, static_cast<uint64_t>(size), static_cast<uint64_t>(t)};
            std::mt19937_64 rng(sq);
            // partial Fisher-Yates over [0, n)
            std::vector<long long> pool(static_cast<size_t>(n));
            std::iota(pool.begin(), pool.end(), 0LL);
            PointSet a(f, dim);
            for (long long i = 0; i < size; ++i) {
                std::uniform_int_distribution<long long> pick(i, n - 1);
                std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(pick(rng))]);
                a.insert(pool[static_cast<size_t>(i)]);
            }
            auto [d2, d3] = distance_sets(a);
            if (static_cast<long long>(d3.size()) == f->q()) ++full;
            mean += static_cast<double>(d3.size()) / static_cast<double>(f->q());
        }
        row.full_coverage_fraction = static_cast<double>(full) / trials;
        row.mean_delta3_over_q = mean / trials;
        rows.push_back(row);
    }
    return rows;
}

} // namespace fqha
