#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fqha/fourier.hpp"
#include "fqha/lattice.hpp"

namespace fqha {

struct Hyperplane {
    Point normal; // a != 0
    int c = 0;    // a . x = c
};

/// Hyperplanes a.x = c, deduplicated as projective pairs (a, c) ~ (sa, sc)
/// unless allow_duplicates is set at construction.
class HyperplaneSet {
public:
    HyperplaneSet(FieldPtr f, int dim, bool allow_duplicates = false);

    void add(const Hyperplane& h);
    const std::vector<Hyperplane>& planes() const { return planes_; }
    long long size() const { return static_cast<long long>(planes_.size()); }
    const FieldPtr& field() const { return f_; }
    int dim() const { return dim_; }

    /// All q^d - something distinct hyperplanes of F_q^d (projectively deduped).
    static HyperplaneSet all(FieldPtr f, int dim);

private:
    FieldPtr f_;
    int dim_ = 0;
    bool allow_duplicates_ = false;
    std::vector<Hyperplane> planes_;
    std::vector<long long> seen_; // normalized keys, sorted
};

struct IncidenceReport {
    long long incidences = 0;       // I
    long long points = 0;           // |P|
    long long hyperplanes = 0;      // |Pi|
    double main_term = 0.0;         // |P||Pi|/q
    double gap = 0.0;               // |I - main_term|
    double universal_bound = 0.0;   // q^{(d-1)/2} sqrt(|P||Pi|)
    bool universal_holds = false;   // (qI - |P||Pi|)^2 <= q^{d+1}|P||Pi|, exact
    // Covered-point-set bound: gap <= t^{1/2} q^{(d-2)/2}|P|^{1/2}|Pi|^{1/2}
    //                               + t^{1/2} q^{(d-3)/4}|P|^{1/2}|Pi|
    long long t = 0;
    double new_bound = 0.0;
    double new_ratio = 0.0;
    double universal_ratio = 0.0;
    std::vector<std::string> hypothesis_flags;
};

/// Exact incidence count with all bound fields filled in.
IncidenceReport count_incidences(const PointSet& points, const HyperplaneSet& planes);

/// Sharpness instance for the universal bound: P = A x {lambda} for a
/// maximal totally isotropic A in F_q^{d-1}, Pi the matching hyperplanes.
/// I = |P||Pi| exactly. Requires d odd and (d = 1 mod 4 or q = 1 mod 4).
std::pair<PointSet, HyperplaneSet> extremal_instance(FieldPtr f, int dim, int lambda,
                                                     uint64_t seed = 0);

struct ConeLift {
    PointSet lifted_points;             // P' in F_q^{d+1}
    std::vector<Point> lifted_planes;   // Pi' as vectors, multiset over s != 0
    long long plane_count_with_zero_fiber = 0; // q |Pi|: one lift per scalar, zero included
    long long plane_count_multiset = 0;        // (q-1) |Pi|: the literal multiset over s != 0
    long long fiber_overlap = 0;        // lifted pairs that collide (origin fiber)
    bool all_on_cone = false;
    bool incidence_equivalence = false; // a.p = c  <=>  (p,u).(a,-c/u) = 0, all pairs
};

/// Lift P on Sphere(u^2, 0) (or on the paraboloid when parabolic = true)
/// into the cone C_{d+1} together with the plane normals.
ConeLift lift_to_cone(const PointSet& points, const HyperplaneSet& planes, int u,
                      bool parabolic = false);

/// || Ghat ||_{L^2(C_n, dsigma)} / (|G|^{1/2} + |G| / q^{n/4}).
/// Requires n = 0 mod 4 and q = 3 mod 4 unless exploratory.
double cone_l2_ratio(const PointSet& g, bool exploratory = false);

struct SquareRadiusCover {
    struct Piece {
        VarietySpec variety; // Sphere with eta(j)=1 or ParaboloidSpec
        PointSet points;
    };
    std::vector<Piece> pieces;
    long long t() const { return static_cast<long long>(pieces.size()); }
    /// Union of pieces.
    PointSet covered() const;
};

/// Incidence report for the union of the cover against Pi, with the t-aware
/// bound. Requires d = 3 mod 4 and q = 3 mod 4 unless exploratory.
IncidenceReport new_incidence_check(const SquareRadiusCover& cover,
                                    const HyperplaneSet& planes,
                                    bool exploratory = false);

/// Greedy cover of P by square-radius spheres centered at the candidates
/// (plus paraboloid translates when allowed). t is a heuristic upper bound.
SquareRadiusCover greedy_square_cover(const PointSet& points,
                                      const std::vector<Point>& candidate_centers,
                                      bool allow_paraboloids = true);

} // namespace fqha
