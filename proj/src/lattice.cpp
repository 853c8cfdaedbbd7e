#include "fqha/lattice.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>

namespace fqha {

namespace {

long long pow_ll(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

} // namespace

PointSet::PointSet(FieldPtr f, int dim) : f_(std::move(f)), dim_(dim) {
    n_ = pow_ll(f_->q(), dim);
    bits_.assign(static_cast<size_t>((n_ + 63) / 64), 0);
}

void PointSet::insert(long long idx) {
    if (idx < 0 || idx >= n_) throw IndexOutOfRange("point index out of range");
    uint64_t& w = bits_[static_cast<size_t>(idx >> 6)];
    uint64_t m = 1ULL << (idx & 63);
    if (!(w & m)) { w |= m; ++count_; }
}

void PointSet::erase(long long idx) {
    if (idx < 0 || idx >= n_) throw IndexOutOfRange("point index out of range");
    uint64_t& w = bits_[static_cast<size_t>(idx >> 6)];
    uint64_t m = 1ULL << (idx & 63);
    if (w & m) { w &= ~m; --count_; }
}

std::vector<long long> PointSet::indices() const {
    std::vector<long long> out;
    out.reserve(static_cast<size_t>(count_));
    for (size_t w = 0; w < bits_.size(); ++w) {
        uint64_t v = bits_[w];
        while (v) {
            int b = std::countr_zero(v);
            out.push_back(static_cast<long long>(w) * 64 + b);
            v &= v - 1;
        }
    }
    return out;
}

long long point_index(const Field& f, const Point& x) {
    long long idx = 0, base = 1;
    for (int c : x) {
        if (!f.valid(c)) throw IndexOutOfRange("coordinate out of range");
        idx += c * base;
        base *= f.q();
    }
    return idx;
}

Point index_point(const Field& f, int dim, long long idx) {
    if (idx < 0 || idx >= pow_ll(f.q(), dim)) throw IndexOutOfRange("point index out of range");
    Point x(dim);
    for (int i = 0; i < dim; ++i) {
        x[i] = static_cast<int>(idx % f.q());
        idx /= f.q();
    }
    return x;
}

int quad_norm(const Field& f, const Point& x) {
    int s = 0;
    for (int c : x) s = f.add(s, f.mul(c, c));
    return s;
}

int dot(const Field& f, const Point& x, const Point& y) {
    if (x.size() != y.size()) throw DimensionMismatch("dot: dimension mismatch");
    int s = 0;
    for (size_t i = 0; i < x.size(); ++i) s = f.add(s, f.mul(x[i], y[i]));
    return s;
}

Point point_add(const Field& f, const Point& x, const Point& y) {
    if (x.size() != y.size()) throw DimensionMismatch("point_add: dimension mismatch");
    Point r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = f.add(x[i], y[i]);
    return r;
}

Point point_sub(const Field& f, const Point& x, const Point& y) {
    if (x.size() != y.size()) throw DimensionMismatch("point_sub: dimension mismatch");
    Point r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = f.sub(x[i], y[i]);
    return r;
}

Point point_scale(const Field& f, int s, const Point& x) {
    Point r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = f.mul(s, x[i]);
    return r;
}

namespace {

bool in_variety(const Field& f, const Point& x, const VarietySpec& spec) {
    const int d = static_cast<int>(x.size());
    return std::visit(
        [&](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SphereSpec>) {
                int n;
                if (s.center.empty()) {
                    n = quad_norm(f, x);
                } else {
                    if (static_cast<int>(s.center.size()) != d)
                        throw DimensionMismatch("sphere center dimension mismatch");
                    n = quad_norm(f, point_sub(f, x, s.center));
                }
                return n == s.radius;
            } else if constexpr (std::is_same_v<T, ParaboloidSpec>) {
                int lhs = f.add(x[d - 1], s.beta);
                int rhs = 0;
                for (int i = 0; i + 1 < d; ++i) rhs = f.add(rhs, f.mul(x[i], x[i]));
                return lhs == rhs;
            } else if constexpr (std::is_same_v<T, ConeSpec>) {
                int lhs = f.mul(x[d - 1], x[d - 1]);
                int rhs = 0;
                for (int i = 0; i + 1 < d; ++i) rhs = f.add(rhs, f.mul(x[i], x[i]));
                return lhs == rhs;
            } else if constexpr (std::is_same_v<T, HyperplaneSpec>) {
                if (static_cast<int>(s.normal.size()) != d)
                    throw DimensionMismatch("hyperplane normal dimension mismatch");
                return dot(f, s.normal, x) == s.c;
            } else {
                static_assert(std::is_same_v<T, AffineSubspaceSpec>);
                // handled by span enumeration in enumerate_variety
                return false;
            }
        },
        spec);
}

void validate_spec(const Field& f, int dim, const VarietySpec& spec) {
    if (const auto* h = std::get_if<HyperplaneSpec>(&spec)) {
        bool all_zero = true;
        for (int c : h->normal) all_zero = all_zero && c == 0;
        if (all_zero) throw InvalidParams("hyperplane normal must be nonzero");
        if (static_cast<int>(h->normal.size()) != dim)
            throw DimensionMismatch("hyperplane normal dimension mismatch");
    }
    if (const auto* a = std::get_if<AffineSubspaceSpec>(&spec)) {
        if (static_cast<int>(a->offset.size()) != dim)
            throw DimensionMismatch("subspace offset dimension mismatch");
        for (const auto& v : a->basis)
            if (static_cast<int>(v.size()) != dim)
                throw DimensionMismatch("subspace basis dimension mismatch");
        std::vector<Point> b = a->basis;
        if (rank_of(f, b) != static_cast<int>(a->basis.size()))
            throw InvalidParams("subspace basis is linearly dependent");
    }
    if (const auto* s = std::get_if<SphereSpec>(&spec)) {
        if (!s->center.empty() && static_cast<int>(s->center.size()) != dim)
            throw DimensionMismatch("sphere center dimension mismatch");
    }
}

} // namespace

PointSet enumerate_variety(FieldPtr f, int dim, const VarietySpec& spec,
                           long long space_cap) {
    long long n = pow_ll(f->q(), dim);
    if (n > space_cap) throw CapExceeded("q^d exceeds space cap");
    validate_spec(*f, dim, spec);
    PointSet out(f, dim);

    if (const auto* a = std::get_if<AffineSubspaceSpec>(&spec)) {
        // Enumerate the span directly: q^m points.
        int m = static_cast<int>(a->basis.size());
        long long count = pow_ll(f->q(), m);
        for (long long t = 0; t < count; ++t) {
            Point x = a->offset;
            long long tt = t;
            for (int i = 0; i < m; ++i) {
                int lambda = static_cast<int>(tt % f->q());
                tt /= f->q();
                x = point_add(*f, x, point_scale(*f, lambda, a->basis[i]));
            }
            out.insert(point_index(*f, x));
        }
        return out;
    }

    Point x(dim, 0);
    for (long long idx = 0; idx < n; ++idx) {
        if (in_variety(*f, x, spec)) out.insert(idx);
        // odometer increment
        for (int i = 0; i < dim; ++i) {
            if (++x[i] < f->q()) break;
            x[i] = 0;
        }
    }
    return out;
}

std::map<int, long long> variety_sizes(FieldPtr f, int dim, long long space_cap) {
    long long n = pow_ll(f->q(), dim);
    if (n > space_cap) throw CapExceeded("q^d exceeds space cap");
    std::map<int, long long> sizes;
    for (int j = 0; j < f->q(); ++j) sizes[j] = 0;
    Point x(dim, 0);
    for (long long idx = 0; idx < n; ++idx) {
        ++sizes[quad_norm(*f, x)];
        for (int i = 0; i < dim; ++i) {
            if (++x[i] < f->q()) break;
            x[i] = 0;
        }
    }
    return sizes;
}

int rank_of(const Field& f, std::vector<Point> vectors) {
    int rank = 0;
    if (vectors.empty()) return 0;
    int dim = static_cast<int>(vectors[0].size());
    for (int col = 0; col < dim && rank < static_cast<int>(vectors.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(vectors.size()); ++r)
            if (vectors[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(vectors[rank], vectors[pivot]);
        int inv = f.inv(vectors[rank][col]);
        for (int r = 0; r < static_cast<int>(vectors.size()); ++r) {
            if (r == rank || vectors[r][col] == 0) continue;
            int c = f.mul(vectors[r][col], inv);
            for (int j = 0; j < dim; ++j)
                vectors[r][j] = f.sub(vectors[r][j], f.mul(c, vectors[rank][j]));
        }
        ++rank;
    }
    return rank;
}

namespace {

bool totally_isotropic_with(const Field& f, const std::vector<Point>& basis,
                            const Point& v) {
    if (quad_norm(f, v) != 0) return false;
    for (const auto& b : basis)
        if (dot(f, b, v) != 0) return false;
    return true;
}

bool independent_with(const Field& f, std::vector<Point> basis, const Point& v) {
    int r = rank_of(f, basis);
    basis.push_back(v);
    return rank_of(f, basis) == r + 1;
}

std::optional<SubspaceBasis> isotropic_exhaustive(const FieldPtr& f, int n, int m,
                                                  std::vector<Point> basis) {
    if (static_cast<int>(basis.size()) == m)
        return SubspaceBasis{std::move(basis), n};
    long long total = pow_ll(f->q(), n);
    for (long long idx = 1; idx < total; ++idx) {
        Point v = index_point(*f, n, idx);
        if (!totally_isotropic_with(*f, basis, v)) continue;
        if (!independent_with(*f, basis, v)) continue;
        basis.push_back(v);
        if (auto r = isotropic_exhaustive(f, n, m, basis)) return r;
        basis.pop_back();
    }
    return std::nullopt;
}

} // namespace

std::optional<SubspaceBasis> isotropic_subspace(FieldPtr f, int n, int m,
                                                uint64_t seed) {
    if (m > n) throw InvalidParams("target dimension exceeds ambient dimension");
    if (m == 0) return SubspaceBasis{{}, n};

    // Constructive route: with i^2 = -1, the vectors e_{2t} + i e_{2t+1} are
    // pairwise and self orthogonal.
    if (f->eta(f->sub(0, 1)) == 1 && m <= n / 2) {
        int i_elem = 0;
        int minus1 = f->sub(0, 1);
        for (int x = 1; x < f->q(); ++x)
            if (f->mul(x, x) == minus1) { i_elem = x; break; }
        SubspaceBasis b;
        b.ambient_dim = n;
        for (int t = 0; t < m; ++t) {
            Point v(n, 0);
            v[2 * t] = 1;
            v[2 * t + 1] = i_elem;
            b.vectors.push_back(std::move(v));
        }
        return b;
    }

    // Randomized greedy with restarts.
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    long long total = pow_ll(f->q(), n);
    std::uniform_int_distribution<long long> pick(1, total - 1);
    constexpr int kRestarts = 10000;
    for (int attempt = 0; attempt < kRestarts; ++attempt) {
        std::vector<Point> basis;
        for (int tries = 0; tries < 64 && static_cast<int>(basis.size()) < m; ++tries) {
            Point v = index_point(*f, n, pick(rng));
            if (totally_isotropic_with(*f, basis, v) && independent_with(*f, basis, v))
                basis.push_back(std::move(v));
        }
        if (static_cast<int>(basis.size()) == m)
            return SubspaceBasis{std::move(basis), n};
    }

    if (total <= (1LL << 18))
        return isotropic_exhaustive(f, n, m, {});
    return std::nullopt;
}

SphereSubspace subspace_in_sphere(FieldPtr f, int dim, int j, uint64_t seed,
                                  long long space_cap) {
    long long n = pow_ll(f->q(), dim);
    bool exhaustive = n <= (1LL << 18);

    PointSet sphere = enumerate_variety(f, dim, SphereSpec{j, {}},
                                        std::min(n, space_cap));
    SphereSubspace best;
    best.claimed_dim = (dim % 2 == 1) ? (dim - 1) / 2 : (dim - 2) / 2;
    if (sphere.empty()) return best;

    auto offsets = sphere.indices();
    std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4fULL);
    if (!exhaustive && static_cast<long long>(offsets.size()) > 128) {
        std::shuffle(offsets.begin(), offsets.end(), rng);
        offsets.resize(128);
    }

    // Directions v with ||v|| = 0 and v.x0 = 0 keep offset + span on the sphere.
    for (long long off_idx : offsets) {
        Point x0 = index_point(*f, dim, off_idx);
        std::vector<Point> basis;
        // depth-first extension, exhaustive at desk scale
        std::function<void(std::vector<Point>&)> extend = [&](std::vector<Point>& b) {
            if (static_cast<int>(b.size()) > best.found_dim) {
                best.found_dim = static_cast<int>(b.size());
                best.offset = x0;
                best.basis = SubspaceBasis{b, dim};
            }
            if (static_cast<int>(b.size()) >= best.claimed_dim) return;
            for (long long idx = 1; idx < n; ++idx) {
                Point v = index_point(*f, dim, idx);
                if (dot(*f, v, x0) != 0) continue;
                if (!totally_isotropic_with(*f, b, v)) continue;
                if (!independent_with(*f, b, v)) continue;
                b.push_back(v);
                extend(b);
                b.pop_back();
                if (best.found_dim >= best.claimed_dim) return;
            }
        };
        extend(basis);
        if (best.found_dim == 0 && best.offset.empty()) best.offset = x0;
        if (best.found_dim >= best.claimed_dim) break;
    }
    if (best.offset.empty()) best.offset = index_point(*f, dim, offsets[0]);
    best.matches_claim = best.found_dim == best.claimed_dim;
    return best;
}

} // namespace fqha
