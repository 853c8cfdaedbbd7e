#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "fqha/field.hpp"

namespace fqha {

/// A point of F_q^d: element indices per coordinate.
using Point = std::vector<int>;

/// Hard cap on q^d for dense enumeration (overridable per call site).
constexpr long long kDefaultSpaceCap = 1LL << 22;

/// Dense bit-indexed subset of F_q^d under the canonical point<->index
/// bijection (index = sum coord_j * q^j, coordinate 0 least significant).
class PointSet {
public:
    PointSet(FieldPtr f, int dim);

    const FieldPtr& field() const { return f_; }
    int dim() const { return dim_; }
    long long space_size() const { return n_; }
    long long size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(long long idx) const {
        return (bits_[static_cast<size_t>(idx >> 6)] >> (idx & 63)) & 1;
    }
    void insert(long long idx);
    void erase(long long idx);

    /// Sorted indices of the members.
    std::vector<long long> indices() const;

    bool operator==(const PointSet& o) const = default;

private:
    FieldPtr f_;
    int dim_ = 0;
    long long n_ = 0;
    long long count_ = 0;
    std::vector<uint64_t> bits_;
};

struct SphereSpec {
    int radius = 0;     // the value j; "radius" is a field element, not a length
    Point center;       // empty means the origin
};
struct ParaboloidSpec {
    int beta = 0;       // x_d + beta = x_1^2 + ... + x_{d-1}^2
};
struct ConeSpec {};     // m_d^2 = m_1^2 + ... + m_{d-1}^2
struct HyperplaneSpec {
    Point normal;       // a != 0
    int c = 0;          // a . x = c
};
struct AffineSubspaceSpec {
    std::vector<Point> basis;
    Point offset;
};

using VarietySpec =
    std::variant<SphereSpec, ParaboloidSpec, ConeSpec, HyperplaneSpec, AffineSubspaceSpec>;

struct SubspaceBasis {
    std::vector<Point> vectors;
    int ambient_dim = 0;
};

long long point_index(const Field& f, const Point& x);
Point index_point(const Field& f, int dim, long long idx);

/// ||x|| = sum x_i^2.
int quad_norm(const Field& f, const Point& x);
int dot(const Field& f, const Point& x, const Point& y);
Point point_add(const Field& f, const Point& x, const Point& y);
Point point_sub(const Field& f, const Point& x, const Point& y);
Point point_scale(const Field& f, int s, const Point& x);

/// Exact membership scan over all q^d points.
PointSet enumerate_variety(FieldPtr f, int dim, const VarietySpec& spec,
                           long long space_cap = kDefaultSpaceCap);

/// |S_j| for every j, spheres centered at the origin.
std::map<int, long long> variety_sizes(FieldPtr f, int dim,
                                       long long space_cap = kDefaultSpaceCap);

/// m linearly independent vectors with v_i . v_j = 0 for all i, j
/// (including i = j), or nullopt. Constructive when -1 is a square,
/// randomized greedy + exhaustive fallback otherwise.
std::optional<SubspaceBasis> isotropic_subspace(FieldPtr f, int n, int m,
                                                uint64_t seed = 0);

struct SphereSubspace {
    Point offset;
    SubspaceBasis basis;     // directions; affine span offset + <basis> lies in S_j
    int found_dim = 0;
    int claimed_dim = 0;     // from the cited maximal-subspace size, by parity of d
    bool matches_claim = false;
};

/// Largest affine subspace inside S_j found by search (exhaustive under the
/// space cap, greedy beyond it).
SphereSubspace subspace_in_sphere(FieldPtr f, int dim, int j,
                                  uint64_t seed = 0,
                                  long long space_cap = kDefaultSpaceCap);

/// Rank of a set of vectors over F_q (Gaussian elimination).
int rank_of(const Field& f, std::vector<Point> vectors);

} // namespace fqha
