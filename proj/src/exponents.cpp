#include "fqha/exponents.hpp"

#include <numeric>

namespace fqha {

Rat::Rat(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw DivisionByZero("zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
}

Rat Rat::operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
Rat Rat::operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
Rat Rat::operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
Rat Rat::operator/(const Rat& o) const {
    if (o.num == 0) throw BadExponent("division by zero rational");
    return Rat(num * o.den, den * o.num);
}

std::string Rat::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

LpExponent LpExponent::dual() const {
    if (is_inf) return of(1);
    if (r == Rat(1)) return infinity();
    return {false, r / (r - Rat(1))};
}

std::pair<LpExponent, LpExponent> interpolate(LpExponent p0, LpExponent r0,
                                              LpExponent p1, LpExponent r1,
                                              const Rat& theta) {
    if (theta < Rat(0) || theta > Rat(1)) throw BadTheta("theta must lie in [0, 1]");
    for (const auto& e : {p0, r0, p1, r1})
        if (!e.is_inf && e.r < Rat(1)) throw BadExponent("exponents must be >= 1");

    auto mix = [&](const LpExponent& a, const LpExponent& b) -> LpExponent {
        Rat inv = (Rat(1) - theta) * a.reciprocal() + theta * b.reciprocal();
        if (inv.num == 0) return LpExponent::infinity();
        return {false, Rat(inv.den, inv.num)};
    };
    return {mix(p0, p1), mix(r0, r1)};
}

Rat necessary_r(const Rat& p, int d, int k) {
    if (p <= Rat(1)) throw BadExponent("necessary_r requires p > 1");
    if (d - 1 - k <= 0) throw BadExponent("necessary_r requires k < d - 1");
    Rat first(2LL * d, d - 1);
    Rat second = p * Rat(d - k) / ((p - Rat(1)) * Rat(d - 1 - k));
    return first > second ? first : second;
}

ExponentRecord exponent_catalog(int d, int q_class, RadiusClass radius_class) {
    if (d < 2) throw BadExponent("catalog requires d >= 2");
    if (q_class != 1 && q_class != 3) throw BadExponent("q_class must be 1 or 3");
    ExponentRecord rec;
    rec.d = d;
    rec.q_class = q_class;
    rec.radius_class = radius_class;

    const bool d_odd = d % 2 == 1;
    const LpExponent four = LpExponent::of(4);
    const LpExponent p_main = LpExponent::of(4LL * d, 3LL * d - 2); // 4d/(3d-2)
    const LpExponent p_conj = LpExponent::of(4LL * d + 4, 3LL * d + 1); // (4d+4)/(3d+1)

    // Stein-Tomas range for L^2 -> L^r, all dimensions.
    rec.achieved.push_back({LpExponent::of(2),
                            LpExponent::of(2LL * d + 2, d - 1),
                            "L2 Stein-Tomas threshold r = (2d+2)/(d-1)"});

    // L^p -> L^4 results keyed by class.
    if (radius_class == RadiusClass::Primitive) {
        if (d % 4 == 1)
            rec.achieved.push_back({p_main, four, "primitive radius, d = 4k+1"});
        if (d % 4 == 3 && q_class == 1)
            rec.achieved.push_back({p_main, four, "primitive radius, d = 4k-1, q = 1 mod 4"});
    }
    if (radius_class == RadiusClass::Square && d % 4 == 3 && q_class == 3)
        rec.achieved.push_back({p_main, four, "square radius, d = 4k-1, q = 3 mod 4"});

    // Sharp L^p -> L^4 conjecture classes.
    bool conj_class =
        (radius_class == RadiusClass::NonSquare && d % 4 == 1) ||
        (radius_class == RadiusClass::NonSquare && d % 4 == 3 && q_class == 1) ||
        (radius_class == RadiusClass::Square && d % 4 == 3 && q_class == 3);
    if (conj_class)
        rec.conjectured.push_back({p_conj, four, "sharp L^p -> L^4 conjecture"});

    // L^2 -> L^r conjecture threshold.
    if (d_odd)
        rec.conjectured.push_back({LpExponent::of(2),
                                   LpExponent::of(2LL * d + 2, d - 1),
                                   "L2 threshold, odd d (matches Stein-Tomas)"});
    else
        rec.conjectured.push_back({LpExponent::of(2),
                                   LpExponent::of(2LL * d + 4, d),
                                   "L2 threshold, even d"});

    auto dualize = [](const std::vector<ExponentEntry>& in) {
        std::vector<ExponentEntry> out;
        for (const auto& e : in)
            out.push_back({e.r.dual(), e.p.dual(), e.source + " (dual)"});
        return out;
    };
    rec.achieved_dual = dualize(rec.achieved);
    rec.conjectured_dual = dualize(rec.conjectured);
    return rec;
}

} // namespace fqha
