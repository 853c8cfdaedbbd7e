#include "fqha/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

#include <json.hpp>

#include "fqha/distance.hpp"
#include "fqha/energy.hpp"
#include "fqha/exponents.hpp"
#include "fqha/fourier.hpp"
#include "fqha/incidence.hpp"
#include "fqha/lattice.hpp"
#include "fqha/serialize.hpp"

namespace fqha {

namespace {

long long pow_ll(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

constexpr const char* kSchemaVersion = "1";

struct SuiteBuilder {
    SuiteResult result;
    long long q = 0, p = 0;
    int k = 0, d = 0;
    uint64_t seed = 0;

    explicit SuiteBuilder(std::string name) {
        result.name = std::move(name);
        result.header = {"schema_version", "suite",  "q",     "p",    "k", "d",
                         "seed",           "metric", "value", "pass"};
    }
    void provenance(const Field& f, int dim, uint64_t s) {
        q = f.q();
        p = f.p();
        k = f.k();
        d = dim;
        seed = s;
    }
    void row(const std::string& metric, double value, bool pass = true) {
        result.rows.push_back({kSchemaVersion, result.name, std::to_string(q),
                               std::to_string(p), std::to_string(k), std::to_string(d),
                               std::to_string(seed), metric, fmt(value),
                               pass ? "1" : "0"});
    }
    void check(const std::string& id, bool pass, double observed, double threshold,
               std::string detail = {}) {
        result.checks.push_back({id, pass, observed, threshold, std::move(detail)});
        row(id, observed, pass);
    }
};

PointSet random_subset_of_space(FieldPtr f, int dim, long long size,
                                std::mt19937_64& rng) {
    long long n = pow_ll(f->q(), dim);
    std::vector<long long> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 0LL);
    PointSet a(f, dim);
    for (long long i = 0; i < size && i < n; ++i) {
        std::uniform_int_distribution<long long> pick(i, n - 1);
        std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(pick(rng))]);
        a.insert(pool[static_cast<size_t>(i)]);
    }
    return a;
}

PointSet random_subset_of(const PointSet& base, double density, std::mt19937_64& rng) {
    PointSet a(base.field(), base.dim());
    std::uniform_real_distribution<> coin(0.0, 1.0);
    for (long long idx : base.indices())
        if (coin(rng) < density) a.insert(idx);
    if (a.empty() && base.size() > 0) a.insert(base.indices()[0]);
    return a;
}

FunctionTable random_table(FieldPtr f, int dim, std::mt19937_64& rng) {
    FunctionTable t(f, dim, Measure::Counting);
    std::normal_distribution<> gauss(0.0, 1.0);
    for (auto& v : t.values()) v = cplx{gauss(rng), gauss(rng)};
    return t;
}

int smallest_square_radius(const Field& f) {
    for (int j = 1; j < f.q(); ++j)
        if (f.eta(j) == 1) return j;
    throw Error("no nonzero square in F_q");
}

HyperplaneSet random_planes(FieldPtr f, int dim, long long count, std::mt19937_64& rng) {
    HyperplaneSet planes(f, dim);
    long long n = pow_ll(f->q(), dim);
    std::uniform_int_distribution<long long> pick_a(1, n - 1);
    std::uniform_int_distribution<int> pick_c(0, static_cast<int>(f->q()) - 1);
    int guard = 0;
    while (planes.size() < count && guard++ < 64 * count)
        planes.add({index_point(*f, dim, pick_a(rng)), pick_c(rng)});
    return planes;
}

} // namespace

uint64_t derive_seed(uint64_t master, const std::string& suite, long long q, int d,
                     long long trial) {
    uint64_t h = master;
    for (char c : suite) h = splitmix64(h ^ static_cast<uint64_t>(c));
    h = splitmix64(h ^ static_cast<uint64_t>(q));
    h = splitmix64(h ^ static_cast<uint64_t>(d));
    h = splitmix64(h ^ static_cast<uint64_t>(trial));
    return h;
}

std::vector<std::pair<long long, int>> generate_field_matrix(const FieldMatrixFilter& f) {
    if (f.residue_mod4 != 0 && f.residue_mod4 != 1 && f.residue_mod4 != 3)
        throw EmptyMatrix(); // q = p^k odd can only be 1 or 3 mod 4
    std::vector<std::pair<long long, int>> out;
    std::vector<std::tuple<long long, long long, int>> found; // (q, p, k)
    for (long long p = 3; p <= f.cap; p += 2) {
        bool prime = true;
        for (long long d = 3; d * d <= p; d += 2)
            if (p % d == 0) { prime = false; break; }
        if (!prime) continue;
        long long q = p;
        int k = 1;
        while (q <= f.cap) {
            if ((f.residue_mod4 == 0 || q % 4 == f.residue_mod4) &&
                (!f.primes_only || k == 1))
                found.emplace_back(q, p, k);
            if (q > f.cap / p) break;
            q *= p;
            ++k;
        }
    }
    std::sort(found.begin(), found.end());
    for (const auto& [q, p, k] : found) out.emplace_back(p, k);
    if (out.empty()) throw EmptyMatrix();
    return out;
}

// ---------------------------------------------------------------------------
// identity: Fourier inversion, Plancherel, normalized extension mass, and the
// L^4/energy identity.
SuiteResult run_identity_suite(const RunConfig& cfg) {
    SuiteBuilder b("identity");
    const std::vector<std::pair<long long, int>> matrix = {
        {3, 2}, {3, 3}, {5, 2}, {5, 3}, {7, 3}, {3, 4}};
    for (const auto& [q, d] : matrix) {
        FieldPtr f = Field::make(q, 1, cfg.q_cap);
        const long long n = pow_ll(q, d);
        uint64_t seed = derive_seed(cfg.seed, "identity", q, d, 0);
        std::mt19937_64 rng(seed);
        b.provenance(*f, d, seed);

        double max_roundtrip = 0.0, max_plancherel = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            FunctionTable g = random_table(f, d, rng);
            FunctionTable ghat = fourier_forward(g);
            FunctionTable back = fourier_inverse(ghat);
            double sum_g = 0.0, sum_ghat = 0.0;
            for (long long i = 0; i < n; ++i) {
                max_roundtrip = std::max(
                    max_roundtrip, std::abs(back.values()[static_cast<size_t>(i)] -
                                            g.values()[static_cast<size_t>(i)]));
                sum_g += std::norm(g.values()[static_cast<size_t>(i)]);
                sum_ghat += std::norm(ghat.values()[static_cast<size_t>(i)]);
            }
            max_plancherel =
                std::max(max_plancherel,
                         std::abs(sum_ghat - static_cast<double>(n) * sum_g) /
                             (static_cast<double>(n) * sum_g));
        }
        std::string tag = "q" + std::to_string(q) + "_d" + std::to_string(d);
        b.check("inversion_roundtrip_" + tag, max_roundtrip <= 1e-9, max_roundtrip, 1e-9);
        b.check("plancherel_" + tag, max_plancherel <= 1e-6, max_plancherel, 1e-6);

        // (1 dsigma)^vee (0) = 1 on a sphere
        int j = smallest_square_radius(*f);
        SphereSpec spec{j, {}};
        PointSet sphere = enumerate_variety(f, d, spec, cfg.space_cap);
        FunctionTable one = FunctionTable::indicator_on(sphere, spec, sphere);
        double mass0 = std::abs(extension_inverse(one).values()[0] - cplx{1.0, 0.0});
        b.check("extension_mass_" + tag, mass0 <= 1e-9, mass0, 1e-9);

        double max_l4 = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            PointSet a = random_subset_of(sphere, 0.5, rng);
            L4Identity id = l4_energy_identity(a, j);
            max_l4 = std::max(max_l4, id.relative_error);
        }
        b.check("l4_energy_identity_" + tag, max_l4 <= 1e-6, max_l4, 1e-6);
    }
    return b.result;
}

// ---------------------------------------------------------------------------
// classical: Gauss magnitudes, Weil's Kloosterman bound, sphere decay.
SuiteResult run_classical_suite(const RunConfig& cfg) {
    SuiteBuilder b("classical");

    const std::vector<std::pair<long long, int>> gauss_fields = {
        {3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {3, 3}};
    for (const auto& [p, k] : gauss_fields) {
        FieldPtr f = Field::make(p, k, cfg.q_cap);
        b.provenance(*f, 0, cfg.seed);
        double g2 = std::norm(f->gauss_sum());
        double err = std::abs(g2 - static_cast<double>(f->q())) / static_cast<double>(f->q());
        b.check("gauss_magnitude_q" + std::to_string(f->q()), err <= 1e-9, err, 1e-9);
    }

    FieldMatrixFilter filt;
    filt.cap = 31;
    double worst_excess = -1.0;
    for (const auto& [p, k] : generate_field_matrix(filt)) {
        FieldPtr f = Field::make(p, k, cfg.q_cap);
        double bound = 2.0 * std::sqrt(static_cast<double>(f->q()));
        for (int a = 0; a < f->q(); ++a)
            for (int bb = 0; bb < f->q(); ++bb) {
                if (a == 0 && bb == 0) continue;
                double m = std::abs(f->kloosterman(a, bb));
                worst_excess = std::max(worst_excess, m - bound);
            }
    }
    b.provenance(*Field::make(3, 1), 0, cfg.seed);
    b.check("kloosterman_weil_excess", worst_excess <= 1e-9, worst_excess, 1e-9,
            "max |K(a,b)| - 2 sqrt(q) over q <= 31");

    double max_ratio = 0.0;
    for (long long q : {3LL, 5LL, 7LL, 11LL}) {
        FieldPtr f = Field::make(q, 1, cfg.q_cap);
        for (int d = 2; d <= 4; ++d) {
            if (pow_ll(q, d) > cfg.space_cap) continue;
            b.provenance(*f, d, cfg.seed);
            for (int t = 1; t < q; ++t) {
                SphereDecay dec = sphere_fourier_decay(f, d, t);
                b.row("sphere_decay_t" + std::to_string(t), dec.ratio);
                max_ratio = std::max(max_ratio, dec.ratio);
            }
        }
    }
    b.check("sphere_decay_ceiling", max_ratio <= 3.0, max_ratio, 3.0,
            "max over q in {3,5,7,11}, d in {2,3,4}, t != 0");
    return b.result;
}

// ---------------------------------------------------------------------------
// incidence: universal bound (exact), extremal equality, covered-set bound.
SuiteResult run_incidence_suite(const RunConfig& cfg) {
    SuiteBuilder b("incidence");

    const std::vector<std::pair<long long, int>> matrix = {{3, 3}, {5, 3}, {7, 2}, {5, 4}};
    for (const auto& [q, d] : matrix) {
        FieldPtr f = Field::make(q, 1, cfg.q_cap);
        bool all_hold = true;
        for (int trial = 0; trial < 200; ++trial) {
            uint64_t seed = derive_seed(cfg.seed, "incidence", q, d, trial);
            std::mt19937_64 rng(seed);
            long long n = pow_ll(q, d);
            std::uniform_int_distribution<long long> size_pick(1, std::min(n, 200LL));
            PointSet pts = random_subset_of_space(f, d, size_pick(rng), rng);
            HyperplaneSet planes = random_planes(f, d, 1 + static_cast<long long>(rng() % 32), rng);
            IncidenceReport r = count_incidences(pts, planes);
            all_hold = all_hold && r.universal_holds;
        }
        b.provenance(*f, d, derive_seed(cfg.seed, "incidence", q, d, 0));
        b.check("universal_bound_q" + std::to_string(q) + "_d" + std::to_string(d),
                all_hold, all_hold ? 1.0 : 0.0, 1.0, "200 random (P, Pi) pairs, exact");
    }

    for (const auto& [q, d] : std::vector<std::pair<long long, int>>{{5, 3}, {13, 3}, {13, 5}}) {
        FieldPtr f = Field::make(q, 1, cfg.q_cap);
        uint64_t seed = derive_seed(cfg.seed, "incidence_extremal", q, d, 0);
        auto [pts, planes] = extremal_instance(f, d, 1, seed);
        IncidenceReport r = count_incidences(pts, planes);
        b.provenance(*f, d, seed);
        long long expect = pow_ll(q, (d - 1) / 2);
        bool pass = r.incidences == r.points * r.hyperplanes && r.points == expect &&
                    r.hyperplanes == expect;
        b.check("extremal_equality_q" + std::to_string(q) + "_d" + std::to_string(d), pass,
                static_cast<double>(r.incidences),
                static_cast<double>(r.points * r.hyperplanes), "I = |P||Pi| sharpness witness");
    }
    {
        // hypothesis gate: q = 3, d = 3 has no isotropic line in F_3^2
        FieldPtr f3 = Field::make(3, 1, cfg.q_cap);
        bool threw = false;
        try {
            extremal_instance(f3, 3, 1);
        } catch (const HypothesisViolated&) {
            threw = true;
        }
        b.provenance(*f3, 3, cfg.seed);
        b.check("extremal_gate_q3_d3", threw, threw ? 1.0 : 0.0, 1.0,
                "HypothesisViolated expected");
    }

    // covered-point-set bound, t in {1, 2}
    double max_ratio = 0.0;
    for (long long q : {3LL, 7LL, 11LL}) {
        FieldPtr f = Field::make(q, 1, cfg.q_cap);
        const int d = 3;
        int j1 = smallest_square_radius(*f);
        int j2 = 0;
        for (int j = j1 + 1; j < q; ++j)
            if (f->eta(j) == 1) { j2 = j; break; }
        PointSet s1 = enumerate_variety(f, d, SphereSpec{j1, {}}, cfg.space_cap);
        for (int trial = 0; trial < 20; ++trial) {
            uint64_t seed = derive_seed(cfg.seed, "incidence_cover", q, d, trial);
            std::mt19937_64 rng(seed);
            HyperplaneSet planes = random_planes(f, d, 20, rng);

            SquareRadiusCover cover;
            cover.pieces.push_back({SphereSpec{j1, {}}, random_subset_of(s1, 0.6, rng)});
            if (j2 != 0 && trial % 2 == 1) {
                PointSet s2 = enumerate_variety(f, d, SphereSpec{j2, {}}, cfg.space_cap);
                cover.pieces.push_back({SphereSpec{j2, {}}, random_subset_of(s2, 0.6, rng)});
            }
            IncidenceReport r = new_incidence_check(cover, planes);
            max_ratio = std::max(max_ratio, r.new_ratio);
            b.provenance(*f, d, seed);
            b.row("covered_bound_ratio_t" + std::to_string(r.t), r.new_ratio);
        }
    }
    b.check("covered_bound_ceiling", max_ratio <= 8.0, max_ratio, 8.0,
            "q in {3,7,11}, d = 3, t in {1,2}");

    // greedy cover sanity: one sphere -> t = 1, two concentric spheres -> t = 2
    {
        FieldPtr f = Field::make(7, 1, cfg.q_cap);
        const int d = 3;
        int j1 = smallest_square_radius(*f);
        int j2 = 0;
        for (int j = j1 + 1; j < f->q(); ++j)
            if (f->eta(j) == 1) { j2 = j; break; }
        PointSet s1 = enumerate_variety(f, d, SphereSpec{j1, {}}, cfg.space_cap);
        PointSet s2 = enumerate_variety(f, d, SphereSpec{j2, {}}, cfg.space_cap);
        std::vector<Point> centers = {Point(d, 0)};
        SquareRadiusCover c1 = greedy_square_cover(s1, centers, false);
        PointSet both(f, d);
        for (long long i : s1.indices()) both.insert(i);
        for (long long i : s2.indices()) both.insert(i);
        SquareRadiusCover c2 = greedy_square_cover(both, centers, false);
        b.provenance(*f, d, cfg.seed);
        b.check("greedy_cover_single_sphere", c1.t() == 1, static_cast<double>(c1.t()), 1.0);
        b.check("greedy_cover_two_spheres", c2.t() == 2, static_cast<double>(c2.t()), 2.0);
    }
    return b.result;
}

// ---------------------------------------------------------------------------
// cone: lifting correctness and the L^2 cone restriction constant.
SuiteResult run_cone_suite(const RunConfig& cfg) {
    SuiteBuilder b("cone");

    for (long long q : {3LL, 7LL}) {
        FieldPtr f = Field::make(q, 1, cfg.q_cap);
        const int d = 3;
        HyperplaneSet planes = HyperplaneSet::all(f, d);
        std::string tag = "q" + std::to_string(q);

        const int u = 1;
        PointSet sphere = enumerate_variety(f, d, SphereSpec{f->mul(u, u), {}}, cfg.space_cap);
        ConeLift lift = lift_to_cone(sphere, planes, u, false);
        b.provenance(*f, d, cfg.seed);
        b.check("lift_sphere_membership_" + tag, lift.all_on_cone,
                lift.all_on_cone ? 1.0 : 0.0, 1.0);
        b.check("lift_sphere_equivalence_" + tag, lift.incidence_equivalence,
                lift.incidence_equivalence ? 1.0 : 0.0, 1.0);
        b.row("lift_plane_count_with_zero_fiber", static_cast<double>(lift.plane_count_with_zero_fiber));
        b.row("lift_plane_count_multiset", static_cast<double>(lift.plane_count_multiset));

        PointSet parab = enumerate_variety(f, d, ParaboloidSpec{0}, cfg.space_cap);
        ConeLift plift = lift_to_cone(parab, planes, 0, true);
        b.check("lift_paraboloid_membership_" + tag, plift.all_on_cone,
                plift.all_on_cone ? 1.0 : 0.0, 1.0);
        b.check("lift_paraboloid_equivalence_" + tag, plift.incidence_equivalence,
                plift.incidence_equivalence ? 1.0 : 0.0, 1.0);
    }

    double max_ratio = 0.0;
    const int n = 4;
    for (long long q : {3LL, 7LL, 11LL}) {
        FieldPtr f = Field::make(q, 1, cfg.q_cap);
        long long space = pow_ll(q, n);
        std::vector<long long> size_classes = {1, q, q * q, q * q * q, space / 2};
        for (size_t cls = 0; cls < size_classes.size(); ++cls) {
            double class_max = 0.0;
            for (int trial = 0; trial < 50; ++trial) {
                uint64_t seed = derive_seed(cfg.seed, "cone", q, n,
                                            static_cast<long long>(cls) * 1000 + trial);
                std::mt19937_64 rng(seed);
                PointSet g = random_subset_of_space(f, n, size_classes[cls], rng);
                class_max = std::max(class_max, cone_l2_ratio(g));
            }
            b.provenance(*f, n, derive_seed(cfg.seed, "cone", q, n, static_cast<long long>(cls)));
            b.row("cone_l2_ratio_size" + std::to_string(size_classes[cls]), class_max);
            max_ratio = std::max(max_ratio, class_max);
        }
    }
    b.check("cone_l2_ceiling", max_ratio <= 4.0, max_ratio, 4.0,
            "n = 4, q in {3,7,11}, 50 random G per size class");
    return b.result;
}

// ---------------------------------------------------------------------------
// energy: three-route agreement, trivial bounds, right-angle majorization,
// the sphere energy bound, dyadic decomposition sanity.
SuiteResult run_energy_suite(const RunConfig& cfg) {
    SuiteBuilder b("energy");

    for (const auto& [q, d] : std::vector<std::pair<long long, int>>{{3, 2}, {5, 2}, {3, 3}}) {
        FieldPtr f = Field::make(q, 1, cfg.q_cap);
        bool agree = true, trivial = true;
        for (int trial = 0; trial < 100; ++trial) {
            uint64_t seed = derive_seed(cfg.seed, "energy", q, d, trial);
            std::mt19937_64 rng(seed);
            long long n = pow_ll(q, d);
            std::uniform_int_distribution<long long> pick(1, std::min(n, 25LL));
            PointSet a = random_subset_of_space(f, d, pick(rng), rng);
            EnergyReport r = additive_energy_checked(a);
            agree = agree && r.methods_agree;
            long long sz = a.size();
            trivial = trivial && r.energy >= sz * sz && r.energy <= sz * sz * sz;
        }
        b.provenance(*f, d, derive_seed(cfg.seed, "energy", q, d, 0));
        std::string tag = "q" + std::to_string(q) + "_d" + std::to_string(d);
        b.check("energy_three_methods_" + tag, agree, agree ? 1.0 : 0.0, 1.0);
        b.check("energy_trivial_bounds_" + tag, trivial, trivial ? 1.0 : 0.0, 1.0);
    }

    double max_ratio = 0.0;
    bool majorized = true;
    for (long long q : {3LL, 7LL, 11LL}) {
        FieldPtr f = Field::make(q, 1, cfg.q_cap);
        const int d = 3;
        int j = smallest_square_radius(*f);
        PointSet sphere = enumerate_variety(f, d, SphereSpec{j, {}}, cfg.space_cap);
        for (int trial = 0; trial < 20; ++trial) {
            uint64_t seed = derive_seed(cfg.seed, "energy_sphere", q, d, trial);
            std::mt19937_64 rng(seed);
            double density = trial % 2 == 0 ? 0.5 : 0.25;
            PointSet a = random_subset_of(sphere, density, rng);
            EnergyReport r = energy_bound_ratio(a, j);
            max_ratio = std::max(max_ratio, r.ratio);
            long long triples = right_angle_triples(a);
            majorized = majorized && r.energy <= triples;
            b.provenance(*f, d, seed);
            b.row("energy_bound_ratio", r.ratio);
        }
    }
    b.check("energy_bound_ceiling", max_ratio <= 8.0, max_ratio, 8.0,
            "q in {3,7,11}, d = 3, square radius");
    b.check("right_angle_majorization", majorized, majorized ? 1.0 : 0.0, 1.0,
            "E(A) <= right-angle triple count for A on a sphere");

    // dyadic decomposition invariants on random nonnegative f
    {
        FieldPtr f = Field::make(7, 1, cfg.q_cap);
        const int d = 3;
        int j = smallest_square_radius(*f);
        SphereSpec spec{j, {}};
        PointSet sphere = enumerate_variety(f, d, spec, cfg.space_cap);
        uint64_t seed = derive_seed(cfg.seed, "energy_dyadic", 7, d, 0);
        std::mt19937_64 rng(seed);
        bool sandwich = true, disjoint = true, bounds = true, window = true;
        for (int trial = 0; trial < 20; ++trial) {
            FunctionTable t(f, d, spec, sphere, Measure::Surface);
            std::uniform_real_distribution<> unif(0.0, 1.0);
            for (auto& v : t.values()) v = unif(rng);
            DyadicDecomposition dec = normalize_and_decompose(t);
            bounds = bounds && dec.level_bounds_hold;
            double w = dec.exponent_weight;
            window = window && dec.reconstruction_mass <= 1.0 + 1e-9 &&
                     dec.reconstruction_mass >= std::pow(2.0, -w) - 1e-9;
            PointSet seen(f, d);
            for (const auto& [i, set] : dec.levels) {
                for (long long idx : set.indices()) {
                    if (seen.contains(idx)) disjoint = false;
                    seen.insert(idx);
                    double fv = t.at(idx).real() * dec.scale;
                    double g = std::pow(2.0, -i);
                    if (!(g <= fv * (1 + 1e-12) && fv < 2 * g * (1 + 1e-12)))
                        sandwich = false;
                }
            }
        }
        b.provenance(*f, d, seed);
        b.check("dyadic_sandwich", sandwich, sandwich ? 1.0 : 0.0, 1.0, "g <= f < 2g");
        b.check("dyadic_disjoint", disjoint, disjoint ? 1.0 : 0.0, 1.0);
        b.check("dyadic_level_bounds", bounds, bounds ? 1.0 : 0.0, 1.0,
                "|A_i| <= 2^{4d i/(3d-2)}");
        b.check("dyadic_mass_window", window, window ? 1.0 : 0.0, 1.0);
    }
    return b.result;
}

// ---------------------------------------------------------------------------
// extension: the L^{4d/(3d-2)} -> L^4 sweep at d = 3 across q = 3 mod 4.
SuiteResult run_extension_suite(const RunConfig& cfg) {
    SuiteBuilder b("extension");
    const int d = 3;
    const double p = 4.0 * d / (3.0 * d - 2.0); // 12/7
    const double r = 4.0;

    std::vector<double> max_per_q;
    for (long long q : {3LL, 7LL, 11LL, 19LL}) {
        FieldPtr f = Field::make(q, 1, cfg.q_cap);
        int j = smallest_square_radius(*f);
        uint64_t seed = derive_seed(cfg.seed, "extension", q, d, 0);
        ExtensionRatioRecord rec =
            extension_sweep(f, d, j, p, r, SweepStrategy::All, 30, seed);
        b.provenance(*f, d, seed);
        b.row("extension_ratio_max " + rec.f_descriptor, rec.ratio);
        max_per_q.push_back(rec.ratio);
    }
    double overall = *std::max_element(max_per_q.begin(), max_per_q.end());
    b.check("extension_ratio_ceiling", overall <= 16.0, overall, 16.0,
            "(p, r) = (12/7, 4), q in {3,7,11,19}");
    bool no_growth = max_per_q.back() <= 2.0 * max_per_q.front();
    b.check("extension_no_growth_trend", no_growth, max_per_q.back(),
            2.0 * max_per_q.front(), "max at q = 19 <= 2 x max at q = 3");
    return b.result;
}

// ---------------------------------------------------------------------------
// distance: mu3 mass + method agreement, the sphere-pair identity, the
// |A| >= 3 q^{d/2} lemmas, second moments, restriction norms.
SuiteResult run_distance_suite(const RunConfig& cfg) {
    SuiteBuilder b("distance");

    for (const auto& [q, d] : std::vector<std::pair<long long, int>>{{3, 2}, {5, 2}, {3, 3}}) {
        FieldPtr f = Field::make(q, 1, cfg.q_cap);
        bool mass_ok = true, agree = true, support_ok = true;
        for (int trial = 0; trial < 100; ++trial) {
            uint64_t seed = derive_seed(cfg.seed, "distance", q, d, trial);
            std::mt19937_64 rng(seed);
            long long n = pow_ll(q, d);
            std::uniform_int_distribution<long long> pick(1, std::min(n, 20LL));
            PointSet a = random_subset_of_space(f, d, pick(rng), rng);
            Mu3Table naive = mu3(a, Mu3Method::Naive);
            Mu3Table conv = mu3(a, Mu3Method::Convolution);
            Mu3Table ident = mu3(a, Mu3Method::FourierIdentity);
            agree = agree && naive.counts == conv.counts && conv.counts == ident.counts;
            long long total = 0;
            for (const auto& [t, c] : naive.counts) total += c;
            mass_ok = mass_ok && total == a.size() * a.size() * a.size();
            auto [d2, d3] = distance_sets(a);
            for (const auto& [t, c] : naive.counts)
                support_ok = support_ok && ((c > 0) == (d3.count(t) > 0));
        }
        std::string tag = "q" + std::to_string(q) + "_d" + std::to_string(d);
        b.provenance(*f, d, derive_seed(cfg.seed, "distance", q, d, 0));
        b.check("mu3_mass_" + tag, mass_ok, mass_ok ? 1.0 : 0.0, 1.0);
        b.check("mu3_three_methods_" + tag, agree, agree ? 1.0 : 0.0, 1.0);
        b.check("delta3_is_mu3_support_" + tag, support_ok, support_ok ? 1.0 : 0.0, 1.0);
    }

    // sphere-pair sum identity: full grids, then random pairs at (3, 4)
    for (const auto& [q, d] : std::vector<std::pair<long long, int>>{{3, 1}, {3, 2}, {5, 2}}) {
        FieldPtr f = Field::make(q, 1, cfg.q_cap);
        long long n = pow_ll(q, d);
        double max_err = 0.0;
        for (long long mi = 0; mi < n; ++mi)
            for (long long vi = 0; vi < n; ++vi) {
                SpherePairIdentity id = sphere_pair_identity(
                    f, d, index_point(*f, d, mi), index_point(*f, d, vi));
                max_err = std::max(max_err, id.relative_error);
            }
        b.provenance(*f, d, cfg.seed);
        b.check("sphere_pair_identity_q" + std::to_string(q) + "_d" + std::to_string(d),
                max_err <= 1e-6, max_err, 1e-6, "full (m, v) grid");
    }
    {
        FieldPtr f = Field::make(3, 1, cfg.q_cap);
        const int d = 4;
        long long n = pow_ll(3, d);
        uint64_t seed = derive_seed(cfg.seed, "distance_pairs", 3, d, 0);
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long long> pick(0, n - 1);
        double max_err = 0.0;
        for (int trial = 0; trial < 200; ++trial) {
            SpherePairIdentity id = sphere_pair_identity(
                f, d, index_point(*f, d, pick(rng)), index_point(*f, d, pick(rng)));
            max_err = std::max(max_err, id.relative_error);
        }
        b.provenance(*f, d, seed);
        b.check("sphere_pair_identity_q3_d4", max_err <= 1e-6, max_err, 1e-6,
                "200 random pairs");
    }

    // sphere-indicator Plancherel: sum |Shat_t|^2 = q^d |S_t|
    {
        FieldPtr f = Field::make(5, 1, cfg.q_cap);
        const int d = 2;
        double max_err = 0.0;
        for (int t = 0; t < f->q(); ++t) {
            PointSet sphere = enumerate_variety(f, d, SphereSpec{t, {}}, cfg.space_cap);
            if (sphere.empty()) continue;
            FunctionTable shat = fourier_forward(FunctionTable::indicator(sphere));
            double sum = 0.0;
            for (const auto& v : shat.values()) sum += std::norm(v);
            double expect = static_cast<double>(pow_ll(5, d)) * sphere.size();
            max_err = std::max(max_err, std::abs(sum - expect) / expect);
        }
        b.provenance(*f, d, cfg.seed);
        b.check("sphere_plancherel", max_err <= 1e-6, max_err, 1e-6);
    }

    // large-set inequalities and the second moment at (3, 4)
    {
        FieldPtr f = Field::make(3, 1, cfg.q_cap);
        const int d = 4;
        long long n = pow_ll(3, d);
        bool first = true, second = true, cs = true;
        double max_sm_ratio = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            uint64_t seed = derive_seed(cfg.seed, "distance_loai0", 3, d, trial);
            std::mt19937_64 rng(seed);
            long long size = trial == 0 ? n : 27 + static_cast<long long>(rng() % (n - 27));
            PointSet a = trial == 0 ? random_subset_of_space(f, d, n, rng)
                                    : random_subset_of_space(f, d, size, rng);
            Loai0Report r = loai0_check(a);
            first = first && r.first_holds;
            second = second && r.second_holds;
            CoverageRecord rec = second_moment_check(a);
            cs = cs && rec.cs_holds &&
                 rec.cs_lower_bound <= static_cast<double>(rec.delta3_size) + 1.0 + 1e-9;
            max_sm_ratio = std::max(max_sm_ratio, rec.second_moment_ratio);
            b.provenance(*f, d, seed);
            b.row("second_moment_ratio", rec.second_moment_ratio);
        }
        b.check("loai0_first", first, first ? 1.0 : 0.0, 1.0,
                "(|A|^3 - mu3(0))^2 >= |A|^6/9, |A| >= 3 q^{d/2}");
        b.check("loai0_second", second, second ? 1.0 : 0.0, 1.0,
                "S_0 cube-sum inequality with slack 4|A|^6/q");
        b.check("cs_lower_bound", cs, cs ? 1.0 : 0.0, 1.0,
                "Cauchy-Schwarz bound <= |Delta_3| (exact)");
        b.row("second_moment_ratio_max", max_sm_ratio);
    }

    // restriction norms at d = 4 (rows; empirical context, no pinned ceiling)
    {
        FieldPtr f = Field::make(3, 1, cfg.q_cap);
        const int d = 4;
        uint64_t seed = derive_seed(cfg.seed, "distance_restriction", 3, d, 0);
        std::mt19937_64 rng(seed);
        PointSet a = random_subset_of_space(f, d, pow_ll(3, d) / 2, rng);
        RestrictionNorms rn = restriction_norms(a, 1);
        b.provenance(*f, d, seed);
        b.row("restriction_l2_ratio", rn.l2_ratio);
        b.row("restriction_l3_ratio", rn.l3_ratio);
    }
    return b.result;
}

// ---------------------------------------------------------------------------
// coverage: Monte-Carlo |Delta_3| trend at q = 3, d = 4.
SuiteResult run_coverage_suite(const RunConfig& cfg) {
    SuiteBuilder b("coverage");
    FieldPtr f = Field::make(3, 1, cfg.q_cap);
    const int d = 4;
    const std::vector<long long> sizes = {9, 14, 27, 54, 81};
    uint64_t seed = derive_seed(cfg.seed, "coverage", 3, d, 0);
    auto rows = coverage_experiment(f, d, sizes, cfg.coverage_trials, seed);
    b.provenance(*f, d, seed);
    double frac_at_threshold = 0.0;
    bool monotone = true;
    double prev = 0.0;
    const double noise_step = 1.0 / cfg.coverage_trials;
    for (const auto& row : rows) {
        b.row("coverage_fraction_size" + std::to_string(row.size),
              row.full_coverage_fraction);
        b.row("mean_delta3_over_q_size" + std::to_string(row.size),
              row.mean_delta3_over_q);
        if (row.size == 14) frac_at_threshold = row.full_coverage_fraction;
        if (row.full_coverage_fraction < prev - noise_step - 1e-12) monotone = false;
        prev = row.full_coverage_fraction;
    }
    b.check("coverage_at_threshold", frac_at_threshold >= 0.9, frac_at_threshold, 0.9,
            "full-coverage fraction at |A| = ceil(q^{12/5}) = 14");
    b.check("coverage_monotone", monotone, monotone ? 1.0 : 0.0, 1.0,
            "nondecreasing in size within one trial-noise step");
    return b.result;
}

// ---------------------------------------------------------------------------
// exponents: interpolation identities and the catalog.
SuiteResult run_exponents_suite(const RunConfig& cfg) {
    SuiteBuilder b("exponents");
    b.seed = cfg.seed;

    auto e = [](long long n, long long d = 1) { return LpExponent::of(n, d); };

    // endpoints
    auto [p0, r0] = interpolate(e(8, 5), e(4), e(1), LpExponent::infinity(), Rat(0));
    auto [p1, r1] = interpolate(e(8, 5), e(4), e(1), LpExponent::infinity(), Rat(1));
    bool endpoints = p0 == e(8, 5) && r0 == e(4) && p1 == e(1) && r1.is_inf;
    b.check("interpolation_endpoints", endpoints, endpoints ? 1.0 : 0.0, 1.0);

    // the worked interpolation: (1, inf) and (8/5, 4) at theta = 8/9 -> (3/2, 9/2)
    auto [pw, rw] = interpolate(e(1), LpExponent::infinity(), e(8, 5), e(4), Rat(8, 9));
    bool worked = pw == e(3, 2) && rw == e(9, 2);
    b.check("interpolation_worked_example", worked, worked ? 1.0 : 0.0, 1.0,
            "(3/2, 9/2) from (1, inf) and (8/5, 4) at theta = 8/9");

    // d = 3 catalog: achieved 12/7, conjectured 8/5, exact rationals
    ExponentRecord rec = exponent_catalog(3, 3, RadiusClass::Square);
    bool has_achieved = false, has_conj = false;
    for (const auto& entry : rec.achieved)
        if (entry.p == e(12, 7) && entry.r == e(4)) has_achieved = true;
    for (const auto& entry : rec.conjectured)
        if (entry.p == e(8, 5) && entry.r == e(4)) has_conj = true;
    b.check("catalog_d3_achieved_12_7", has_achieved, has_achieved ? 1.0 : 0.0, 1.0);
    b.check("catalog_d3_conjectured_8_5", has_conj, has_conj ? 1.0 : 0.0, 1.0);

    // conjectured p <= achieved p for all d <= 20 of the forms 4k +/- 1
    bool ordered = true;
    for (int d = 3; d <= 20; ++d) {
        if (d % 4 != 1 && d % 4 != 3) continue;
        Rat achieved(4LL * d, 3LL * d - 2);
        Rat conjectured(4LL * d + 4, 3LL * d + 1);
        if (!(conjectured <= achieved)) ordered = false;
    }
    b.check("conjectured_below_achieved", ordered, ordered ? 1.0 : 0.0, 1.0);

    // necessary_r monotone nonincreasing in p on a grid
    bool monotone = true;
    for (int k = 0; k <= 1; ++k)
        for (int d = 3; d <= 6; ++d) {
            Rat prev(0);
            bool have_prev = false;
            for (long long num = 11; num <= 40; ++num) {
                Rat p(num, 10);
                Rat r = necessary_r(p, d, k);
                if (have_prev && r > prev) monotone = false;
                prev = r;
                have_prev = true;
            }
        }
    b.check("necessary_r_monotone", monotone, monotone ? 1.0 : 0.0, 1.0);

    for (const auto& entry : rec.achieved) {
        b.result.rows.push_back({kSchemaVersion, "exponents", "0", "0", "0",
                                 std::to_string(rec.d), std::to_string(cfg.seed),
                                 "achieved " + entry.source,
                                 entry.p.str() + "->" + entry.r.str(), "1"});
    }
    return b.result;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "identity", "classical", "incidence", "cone",      "energy",
        "extension", "distance",  "coverage",  "exponents"};
    return names;
}

SuiteResult run_suite(const std::string& name, const RunConfig& cfg) {
    if (name == "identity") return run_identity_suite(cfg);
    if (name == "classical") return run_classical_suite(cfg);
    if (name == "incidence") return run_incidence_suite(cfg);
    if (name == "cone") return run_cone_suite(cfg);
    if (name == "energy") return run_energy_suite(cfg);
    if (name == "extension") return run_extension_suite(cfg);
    if (name == "distance") return run_distance_suite(cfg);
    if (name == "coverage") return run_coverage_suite(cfg);
    if (name == "exponents") return run_exponents_suite(cfg);
    throw ConfigError("unknown suite: " + name);
}

std::string to_csv(const SuiteResult& r) {
    std::string out;
    for (size_t i = 0; i < r.header.size(); ++i) {
        if (i) out += ',';
        out += r.header[i];
    }
    out += '\n';
    auto rows = r.rows;
    std::sort(rows.begin(), rows.end());
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const RunConfig& cfg) {
    const std::vector<std::string>& selected = names.empty() ? suite_names() : names;
    std::vector<SuiteResult> results;
    for (const auto& name : selected) results.push_back(run_suite(name, cfg));

    if (!cfg.out_dir.empty()) {
        std::filesystem::create_directories(cfg.out_dir);
        json summary;
        summary["seed"] = cfg.seed;
        summary["exploratory"] = cfg.exploratory;
        summary["suites"] = json::array();
        for (const auto& r : results) {
            std::ofstream csv(std::filesystem::path(cfg.out_dir) / (r.name + ".csv"));
            csv << to_csv(r);
            json checks = json::array();
            for (const auto& c : r.checks)
                checks.push_back({{"id", c.id},
                                  {"pass", c.pass},
                                  {"observed", c.observed},
                                  {"threshold", c.threshold},
                                  {"detail", c.detail}});
            summary["suites"].push_back(
                {{"name", r.name}, {"passed", r.passed()}, {"checks", checks}});
        }
        std::ofstream out(std::filesystem::path(cfg.out_dir) / "summary.json");
        out << summary.dump(2) << '\n';
    }
    return results;
}

} // namespace fqha
