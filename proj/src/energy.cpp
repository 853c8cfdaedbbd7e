#include "fqha/energy.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

namespace fqha {

namespace {

long long pow_ll(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

std::vector<Point> members(const PointSet& a) {
    std::vector<Point> out;
    out.reserve(static_cast<size_t>(a.size()));
    for (long long idx : a.indices()) out.push_back(index_point(*a.field(), a.dim(), idx));
    return out;
}

long long round_to_integer(double x, const char* what) {
    double r = std::round(x);
    if (std::abs(x - r) > 0.1)
        throw Error(std::string(what) + ": value " + std::to_string(x) +
                    " is not close to an integer");
    return static_cast<long long>(r);
}

} // namespace

long long additive_energy(const PointSet& a, EnergyMethod method) {
    if (a.empty()) throw EmptySet();
    const Field& f = *a.field();
    const int d = a.dim();

    switch (method) {
        case EnergyMethod::Naive: {
            auto pts = members(a);
            long long e = 0;
            for (const auto& x : pts)
                for (const auto& y : pts)
                    for (const auto& z : pts) {
                        Point w = point_sub(f, point_add(f, x, y), z);
                        if (a.contains(point_index(f, w))) ++e;
                    }
            return e;
        }
        case EnergyMethod::PairSums: {
            std::unordered_map<long long, long long> sums;
            auto idxs = a.indices();
            for (long long i : idxs) {
                Point x = index_point(f, d, i);
                for (long long j : idxs) {
                    Point s = point_add(f, x, index_point(f, d, j));
                    ++sums[point_index(f, s)];
                }
            }
            long long e = 0;
            for (const auto& [s, r] : sums) e += r * r;
            return e;
        }
        case EnergyMethod::Fourier: {
            FunctionTable ahat = fourier_forward(FunctionTable::indicator(a));
            double s = 0.0;
            for (const auto& v : ahat.values()) {
                double m2 = std::norm(v);
                s += m2 * m2;
            }
            s /= static_cast<double>(pow_ll(f.q(), d));
            return round_to_integer(s, "fourier energy");
        }
    }
    throw InvalidParams("unknown energy method");
}

EnergyReport additive_energy_checked(const PointSet& a) {
    EnergyReport r;
    long long naive = additive_energy(a, EnergyMethod::Naive);
    long long pair = additive_energy(a, EnergyMethod::PairSums);
    long long four = additive_energy(a, EnergyMethod::Fourier);
    r.energy = pair;
    r.methods_agree = naive == pair && pair == four;
    return r;
}

long long right_angle_triples(const PointSet& a) {
    const Field& f = *a.field();
    auto pts = members(a);
    long long count = 0;
    for (const auto& dd : pts)
        for (const auto& x : pts) {
            Point xd = point_sub(f, x, dd);
            for (const auto& y : pts)
                if (dot(f, point_sub(f, y, dd), xd) == 0) ++count;
        }
    return count;
}

EnergyReport energy_bound_ratio(const PointSet& a, int radius, bool exploratory) {
    const Field& f = *a.field();
    const int d = a.dim();
    const long long q = f.q();
    EnergyReport r;
    if (d % 4 != 3) {
        if (!exploratory) throw HypothesisViolated("energy bound requires d = 3 mod 4");
        r.hypothesis_flags.push_back("d != 3 mod 4");
    }
    if (q % 4 != 3) {
        if (!exploratory) throw HypothesisViolated("energy bound requires q = 3 mod 4");
        r.hypothesis_flags.push_back("q != 3 mod 4");
    }
    if (f.eta(radius) != 1) {
        if (!exploratory) throw HypothesisViolated("energy bound requires square radius");
        r.hypothesis_flags.push_back("radius not a nonzero square");
    }
    PointSet sphere = enumerate_variety(a.field(), d, SphereSpec{radius, {}});
    for (long long idx : a.indices())
        if (!sphere.contains(idx)) throw NotOnSphere("A must lie on the sphere");

    r.energy = additive_energy(a, EnergyMethod::PairSums);
    double n = static_cast<double>(a.size());
    double dq = static_cast<double>(q);
    r.bound_terms[0] = n * n * n / dq;
    r.bound_terms[1] = std::pow(dq, (d - 2) / 2.0) * n * n;
    r.bound_terms[2] = std::pow(dq, (d - 3) / 4.0) * std::pow(n, 2.5);
    r.ratio = static_cast<double>(r.energy) /
              (r.bound_terms[0] + r.bound_terms[1] + r.bound_terms[2]);
    return r;
}

L4Identity l4_energy_identity(const PointSet& a, int radius, const Point& center) {
    const Field& f = *a.field();
    const int d = a.dim();
    SphereSpec spec{radius, center};
    PointSet sphere = enumerate_variety(a.field(), d, spec);
    for (long long idx : a.indices())
        if (!sphere.contains(idx)) throw NotOnSphere("A must lie on the sphere");
    if (a.empty()) throw EmptySet();

    FunctionTable table = FunctionTable::indicator_on(a, spec, sphere);
    L4Identity out;
    out.lhs = lp_norm(extension_inverse(table), 4.0);
    long long e = additive_energy(a, EnergyMethod::PairSums);
    out.rhs = std::pow(static_cast<double>(pow_ll(f.q(), d)), 0.25) *
              std::pow(static_cast<double>(e), 0.25) / static_cast<double>(sphere.size());
    out.relative_error = std::abs(out.lhs - out.rhs) / std::max(out.lhs, out.rhs);
    return out;
}

DyadicDecomposition normalize_and_decompose(const FunctionTable& f, double cutoff_c) {
    if (f.full_space()) throw InvalidParams("decomposition expects a variety-supported table");
    const int d = f.dim();
    const double w = 4.0 * d / (3.0 * d - 2.0);

    double mass = 0.0;
    for (const auto& v : f.values()) {
        if (v.imag() != 0.0 || v.real() < 0.0) throw NegativeValue();
        mass += std::pow(v.real(), w);
    }
    if (mass == 0.0) throw ZeroFunction();
    const double scale = std::pow(mass, -1.0 / w);

    DyadicDecomposition out;
    out.exponent_weight = w;
    out.scale = scale;
    out.cutoff = static_cast<int>(std::ceil(cutoff_c * std::log(static_cast<double>(f.field()->q()))));

    // i(x) with 2^{-i} <= scaled f(x) < 2^{-i+1}, so g <= f < 2g.
    std::map<int, PointSet> levels;
    const auto& sup = f.support();
    for (size_t idx = 0; idx < sup.size(); ++idx) {
        double v = f.values()[idx].real() * scale;
        if (v <= 0.0) continue;
        int i = static_cast<int>(std::ceil(std::log2(1.0 / v)));
        if (i < 0) i = 0; // guard: v can round a hair above 1
        if (i > out.cutoff) continue;
        auto it = levels.find(i);
        if (it == levels.end())
            it = levels.emplace(i, PointSet(f.field(), d)).first;
        it->second.insert(sup[idx]);
    }
    out.level_bounds_hold = true;
    for (auto& [i, set] : levels) {
        if (static_cast<double>(set.size()) > std::pow(2.0, w * i) * (1 + 1e-9))
            out.level_bounds_hold = false;
        out.reconstruction_mass += static_cast<double>(set.size()) * std::pow(2.0, -w * i);
        out.levels.emplace_back(i, std::move(set));
    }
    return out;
}

ExtensionRatioRecord extension_ratio(const FunctionTable& f, double p, double r) {
    if (!(p >= 1.0) || !(r >= 1.0)) throw BadExponent("exponents must be >= 1");
    ExtensionRatioRecord rec;
    rec.p = p;
    rec.r = r;
    rec.numerator = lp_norm(extension_inverse(f), r);
    rec.denominator = lp_norm(f, p);
    rec.ratio = rec.denominator > 0 ? rec.numerator / rec.denominator : 0.0;
    return rec;
}

namespace {

ExtensionRatioRecord ratio_of_indicator(const PointSet& a, const SphereSpec& spec,
                                        const PointSet& sphere, double p, double r,
                                        const std::string& desc) {
    FunctionTable t = FunctionTable::indicator_on(a, spec, sphere);
    ExtensionRatioRecord rec = extension_ratio(t, p, r);
    rec.f_descriptor = desc;
    return rec;
}

} // namespace

ExtensionRatioRecord extension_sweep(FieldPtr f, int dim, int radius, double p,
                                     double r, SweepStrategy strategy, int trials,
                                     uint64_t seed) {
    SphereSpec spec{radius, {}};
    PointSet sphere = enumerate_variety(f, dim, spec);
    if (sphere.empty()) throw EmptyVariety();
    auto sphere_idx = sphere.indices();

    ExtensionRatioRecord best;
    auto consider = [&](ExtensionRatioRecord rec) {
        if (rec.ratio > best.ratio) best = std::move(rec);
    };

    const bool all = strategy == SweepStrategy::All;
    if (all || strategy == SweepStrategy::FullIndicator)
        consider(ratio_of_indicator(sphere, spec, sphere, p, r, "full"));

    if (all || strategy == SweepStrategy::SubspaceIndicator) {
        SphereSubspace h = subspace_in_sphere(f, dim, radius, seed);
        if (!h.offset.empty()) {
            PointSet span = enumerate_variety(
                f, dim, AffineSubspaceSpec{h.basis.vectors, h.offset});
            consider(ratio_of_indicator(span, spec, sphere, p, r,
                                        "subspace dim " + std::to_string(h.found_dim)));
        }
    }

    if (all || strategy == SweepStrategy::RandomIndicators) {
        std::mt19937_64 rng(seed ^ 0xa0761d6478bd642fULL);
        for (int t = 0; t < trials; ++t) {
            // dyadic density 2^{-(t mod D)}
            int level = t % 6 + 1;
            double density = std::pow(2.0, -level);
            PointSet a(f, dim);
            for (long long idx : sphere_idx)
                if (std::uniform_real_distribution<>(0, 1)(rng) < density) a.insert(idx);
            if (a.empty()) continue;
            ExtensionRatioRecord rec =
                ratio_of_indicator(a, spec, sphere, p, r,
                                   "random density 2^-" + std::to_string(level));
            rec.seed = seed;
            consider(std::move(rec));
        }
    }

    if (all || strategy == SweepStrategy::RandomComplex) {
        std::mt19937_64 rng(seed ^ 0xe7037ed1a0b428dbULL);
        std::normal_distribution<> gauss(0.0, 1.0);
        for (int t = 0; t < trials; ++t) {
            FunctionTable table(f, dim, spec, sphere, Measure::Surface);
            for (auto& v : table.values()) v = cplx{gauss(rng), gauss(rng)};
            ExtensionRatioRecord rec = extension_ratio(table, p, r);
            rec.f_descriptor = "random complex";
            rec.seed = seed;
            consider(std::move(rec));
        }
    }
    return best;
}

} // namespace fqha
