#include "fqha/incidence.hpp"

#include <algorithm>
#include <cmath>

namespace fqha {

namespace {

long long pow_ll(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// Projective key: scale (a, c) so its first nonzero entry is 1, then encode.
long long normalize_key(const Field& f, const Hyperplane& h) {
    std::vector<int> v = h.normal;
    v.push_back(h.c);
    int first = 0;
    for (int x : v)
        if (x != 0) { first = x; break; }
    if (first == 0) throw InvalidParams("hyperplane normal must be nonzero");
    int s = f.inv(first);
    long long key = 0;
    for (int x : v) key = key * f.q() + f.mul(s, x);
    return key;
}

} // namespace

HyperplaneSet::HyperplaneSet(FieldPtr f, int dim, bool allow_duplicates)
    : f_(std::move(f)), dim_(dim), allow_duplicates_(allow_duplicates) {}

void HyperplaneSet::add(const Hyperplane& h) {
    if (static_cast<int>(h.normal.size()) != dim_)
        throw DimensionMismatch("hyperplane dimension mismatch");
    bool all_zero = true;
    for (int c : h.normal) all_zero = all_zero && c == 0;
    if (all_zero) throw InvalidParams("hyperplane normal must be nonzero");
    long long key = normalize_key(*f_, h);
    if (!allow_duplicates_) {
        auto it = std::lower_bound(seen_.begin(), seen_.end(), key);
        if (it != seen_.end() && *it == key) return;
        seen_.insert(it, key);
    }
    planes_.push_back(h);
}

HyperplaneSet HyperplaneSet::all(FieldPtr f, int dim) {
    HyperplaneSet out(f, dim);
    long long n = pow_ll(f->q(), dim);
    for (long long idx = 1; idx < n; ++idx) {
        Point a = index_point(*f, dim, idx);
        for (int c = 0; c < f->q(); ++c) out.add({a, c});
    }
    return out;
}

IncidenceReport count_incidences(const PointSet& points, const HyperplaneSet& planes) {
    if (points.dim() != planes.dim())
        throw DimensionMismatch("point/hyperplane dimension mismatch");
    const Field& f = *points.field();
    const int d = points.dim();
    const long long q = f.q();

    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(points.size()));
    for (long long idx : points.indices()) pts.push_back(index_point(f, d, idx));

    long long inc = 0;
    for (const auto& h : planes.planes())
        for (const auto& p : pts)
            if (dot(f, h.normal, p) == h.c) ++inc;

    IncidenceReport r;
    r.incidences = inc;
    r.points = points.size();
    r.hyperplanes = planes.size();
    r.main_term = static_cast<double>(r.points) * static_cast<double>(r.hyperplanes) / q;
    r.gap = std::abs(static_cast<double>(inc) - r.main_term);
    r.universal_bound = std::pow(static_cast<double>(q), (d - 1) / 2.0) *
                        std::sqrt(static_cast<double>(r.points) * r.hyperplanes);
    // Exact form: (qI - |P||Pi|)^2 <= q^{d+1} |P||Pi|
    __int128 lhs = static_cast<__int128>(q) * inc -
                   static_cast<__int128>(r.points) * r.hyperplanes;
    lhs = lhs < 0 ? -lhs : lhs;
    __int128 rhs = static_cast<__int128>(pow_ll(q, d + 1)) *
                   (static_cast<__int128>(r.points) * r.hyperplanes);
    r.universal_holds = lhs * lhs <= rhs;
    r.universal_ratio = r.universal_bound > 0 ? r.gap / r.universal_bound : 0.0;
    return r;
}

std::pair<PointSet, HyperplaneSet> extremal_instance(FieldPtr f, int dim, int lambda,
                                                     uint64_t seed) {
    const long long q = f->q();
    if (lambda == 0) throw InvalidParams("lambda must be nonzero");
    if (dim % 2 == 0)
        throw HypothesisViolated("extremal instance requires odd d");
    // A maximal totally isotropic subspace of dimension (d-1)/2 exists in
    // F_q^{d-1} iff the form is hyperbolic: d = 1 mod 4, or q = 1 mod 4.
    if (dim % 4 != 1 && q % 4 != 1)
        throw HypothesisViolated(
            "requires d = 1 mod 4 or q = 1 mod 4 (failed: d = 3 mod 4 with q = 3 mod 4)");

    const int m = (dim - 1) / 2;
    auto basis = isotropic_subspace(f, dim - 1, m, seed);
    if (!basis)
        throw HypothesisViolated("isotropic subspace of the advertised dimension not found");

    // A = span(basis) in F_q^{d-1}
    PointSet span = enumerate_variety(
        f, dim - 1, AffineSubspaceSpec{basis->vectors, Point(dim - 1, 0)});

    PointSet pts(f, dim);
    HyperplaneSet planes(f, dim);
    int lambda_sq = f->mul(lambda, lambda);
    for (long long idx : span.indices()) {
        Point a = index_point(*f, dim - 1, idx);
        Point p = a;
        p.push_back(lambda);
        pts.insert(point_index(*f, p));
        Point normal = a;
        normal.push_back(lambda);
        planes.add({normal, lambda_sq});
    }
    return {std::move(pts), std::move(planes)};
}

ConeLift lift_to_cone(const PointSet& points, const HyperplaneSet& planes, int u,
                      bool parabolic) {
    const Field& f = *points.field();
    const int d = points.dim();
    const long long q = f.q();
    if (!parabolic && u == 0) throw ZeroRadius();

    const int radius = parabolic ? 0 : f.mul(u, u);
    std::vector<Point> pts;
    for (long long idx : points.indices()) {
        Point p = index_point(f, d, idx);
        if (parabolic) {
            int rhs = 0;
            for (int i = 0; i + 1 < d; ++i) rhs = f.add(rhs, f.mul(p[i], p[i]));
            if (f.add(p[d - 1], 0) != rhs)
                throw NotOnSphere("point not on the paraboloid");
        } else {
            if (quad_norm(f, p) != radius)
                throw NotOnSphere("point not on the sphere of radius u^2");
        }
        pts.push_back(std::move(p));
    }

    ConeLift out{PointSet(points.field(), d + 1), {}, 0, 0, 0, true, true};
    long long inserted_pairs = 0;
    for (const auto& p : pts) {
        for (int lambda = 0; lambda < q; ++lambda) {
            Point lp = point_scale(f, lambda, p);
            lp.push_back(parabolic ? lambda : f.mul(lambda, u));
            long long idx = point_index(f, lp);
            if (out.lifted_points.contains(idx)) ++out.fiber_overlap;
            out.lifted_points.insert(idx);
            ++inserted_pairs;
            // membership in the target variety
            if (parabolic) {
                // lifted points live on x_{d+1} x_d = x_1^2+...+x_{d-1}^2
                int lhs = f.mul(lp[d], lp[d - 1]);
                int rhs = 0;
                for (int i = 0; i + 1 < d; ++i) rhs = f.add(rhs, f.mul(lp[i], lp[i]));
                if (lhs != rhs) out.all_on_cone = false;
            } else {
                int lhs = f.mul(lp[d], lp[d]);
                int rhs = 0;
                for (int i = 0; i < d; ++i) rhs = f.add(rhs, f.mul(lp[i], lp[i]));
                if (lhs != rhs) out.all_on_cone = false;
            }
        }
    }
    (void)inserted_pairs;

    const int u_inv = parabolic ? 1 : f.inv(u);
    for (const auto& h : planes.planes()) {
        for (int s = 1; s < q; ++s) {
            Point v = h.normal;
            v.push_back(parabolic ? f.neg(h.c) : f.neg(f.mul(u_inv, h.c)));
            out.lifted_planes.push_back(point_scale(f, s, v));
        }
    }
    out.plane_count_with_zero_fiber = q * planes.size();
    out.plane_count_multiset = (q - 1) * planes.size();

    // a.p = c  <=>  (p, u).(a, -c/u) = 0 (sphere case; analogous when parabolic)
    for (const auto& h : planes.planes()) {
        Point v = h.normal;
        v.push_back(parabolic ? f.neg(h.c) : f.neg(f.mul(u_inv, h.c)));
        for (const auto& p : pts) {
            bool incident = dot(f, h.normal, p) == h.c;
            Point pu = p;
            pu.push_back(parabolic ? 1 : u);
            bool orthogonal = dot(f, pu, v) == 0;
            if (incident != orthogonal) out.incidence_equivalence = false;
        }
    }
    return out;
}

double cone_l2_ratio(const PointSet& g, bool exploratory) {
    const Field& f = *g.field();
    const int n = g.dim();
    const long long q = f.q();
    if (!exploratory) {
        if (n % 4 != 0) throw HypothesisViolated("cone_l2_ratio requires n = 0 mod 4");
        if (q % 4 != 3) throw HypothesisViolated("cone_l2_ratio requires q = 3 mod 4");
    }
    if (g.empty()) throw EmptySet();

    PointSet cone = enumerate_variety(g.field(), n, ConeSpec{});
    FunctionTable ghat = fourier_forward(FunctionTable::indicator(g));
    double sum = 0.0;
    for (long long idx : cone.indices()) sum += std::norm(ghat.values()[static_cast<size_t>(idx)]);
    double numerator = std::sqrt(sum / static_cast<double>(cone.size()));
    double gsz = static_cast<double>(g.size());
    double denom = std::sqrt(gsz) + gsz / std::pow(static_cast<double>(q), n / 4.0);
    return numerator / denom;
}

PointSet SquareRadiusCover::covered() const {
    if (pieces.empty()) throw InvalidCover("cover has no pieces");
    PointSet out(pieces[0].points.field(), pieces[0].points.dim());
    for (const auto& piece : pieces)
        for (long long idx : piece.points.indices()) out.insert(idx);
    return out;
}

IncidenceReport new_incidence_check(const SquareRadiusCover& cover,
                                    const HyperplaneSet& planes, bool exploratory) {
    if (cover.pieces.empty()) throw InvalidCover("cover has no pieces");
    const Field& f = *cover.pieces[0].points.field();
    const int d = cover.pieces[0].points.dim();
    const long long q = f.q();
    if (!exploratory) {
        if (d % 4 != 3) throw HypothesisViolated("new_incidence_check requires d = 3 mod 4");
        if (q % 4 != 3) throw HypothesisViolated("new_incidence_check requires q = 3 mod 4");
    }

    // Pieces must be disjoint, each on its declared variety (square-radius
    // sphere or paraboloid translate).
    PointSet seen(cover.pieces[0].points.field(), d);
    for (const auto& piece : cover.pieces) {
        const auto* sph = std::get_if<SphereSpec>(&piece.variety);
        const auto* par = std::get_if<ParaboloidSpec>(&piece.variety);
        if (!sph && !par) throw InvalidCover("cover piece must be a sphere or paraboloid translate");
        if (sph && f.eta(sph->radius) != 1)
            throw InvalidCover("cover sphere radius must be a nonzero square");
        PointSet variety = enumerate_variety(cover.pieces[0].points.field(), d, piece.variety);
        for (long long idx : piece.points.indices()) {
            if (!variety.contains(idx)) throw InvalidCover("cover piece point off its variety");
            if (seen.contains(idx)) throw InvalidCover("cover pieces overlap");
            seen.insert(idx);
        }
    }

    IncidenceReport r = count_incidences(cover.covered(), planes);
    r.t = cover.t();
    double st = std::sqrt(static_cast<double>(r.t));
    double np = static_cast<double>(r.points);
    double npl = static_cast<double>(r.hyperplanes);
    r.new_bound = st * std::pow(static_cast<double>(q), (d - 2) / 2.0) * std::sqrt(np * npl) +
                  st * std::pow(static_cast<double>(q), (d - 3) / 4.0) * std::sqrt(np) * npl;
    r.new_ratio = (r.new_bound > 0 && r.gap > 0) ? r.gap / r.new_bound : 0.0;
    return r;
}

SquareRadiusCover greedy_square_cover(const PointSet& points,
                                      const std::vector<Point>& candidate_centers,
                                      bool allow_paraboloids) {
    if (candidate_centers.empty()) throw InvalidParams("candidate center list is empty");
    const Field& f = *points.field();
    const int d = points.dim();

    std::vector<Point> pts;
    for (long long idx : points.indices()) pts.push_back(index_point(f, d, idx));

    PointSet remaining = points;
    SquareRadiusCover cover;
    while (!remaining.empty()) {
        // Best sphere piece: candidate center + square radius class.
        long long best_gain = 0;
        VarietySpec best_spec = SphereSpec{};
        PointSet best_piece(points.field(), d);

        for (const auto& c : candidate_centers) {
            // bucket remaining points by ||p - c||, keep square radii
            std::map<int, std::vector<long long>> buckets;
            for (long long idx : remaining.indices()) {
                Point p = index_point(f, d, idx);
                int r = quad_norm(f, point_sub(f, p, c));
                if (f.eta(r) == 1) buckets[r].push_back(idx);
            }
            for (const auto& [r, members] : buckets) {
                if (static_cast<long long>(members.size()) > best_gain) {
                    best_gain = static_cast<long long>(members.size());
                    best_spec = SphereSpec{r, c};
                    PointSet piece(points.field(), d);
                    for (long long idx : members) piece.insert(idx);
                    best_piece = std::move(piece);
                }
            }
        }
        if (allow_paraboloids) {
            // bucket by the paraboloid translate containing each point
            std::map<int, std::vector<long long>> buckets;
            for (long long idx : remaining.indices()) {
                Point p = index_point(f, d, idx);
                int rhs = 0;
                for (int i = 0; i + 1 < d; ++i) rhs = f.add(rhs, f.mul(p[i], p[i]));
                int beta = f.sub(rhs, p[d - 1]);
                buckets[beta].push_back(idx);
            }
            for (const auto& [beta, members] : buckets) {
                if (static_cast<long long>(members.size()) > best_gain) {
                    best_gain = static_cast<long long>(members.size());
                    best_spec = ParaboloidSpec{beta};
                    PointSet piece(points.field(), d);
                    for (long long idx : members) piece.insert(idx);
                    best_piece = std::move(piece);
                }
            }
        }
        if (best_gain == 0)
            throw Uncoverable("a point lies on no square-radius sphere about any candidate"
                              " and paraboloid pieces are disabled");
        for (long long idx : best_piece.indices()) remaining.erase(idx);
        cover.pieces.push_back({best_spec, std::move(best_piece)});
    }
    return cover;
}

} // namespace fqha
