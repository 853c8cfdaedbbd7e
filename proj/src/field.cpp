#include "fqha/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fqha {

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over F_p as coefficient vectors, c[0] constant term.
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a mod b, b monic-normalized internally.
Poly poly_mod(Poly a, const Poly& b, long long p) {
    trim(a);
    int db = static_cast<int>(b.size()) - 1;
    // make b monic
    long long lead = b[db];
    long long lead_inv = 1;
    for (long long i = 1; i < p; ++i)
        if (i * lead % p == 1) { lead_inv = i; break; }
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int da = static_cast<int>(a.size()) - 1;
        long long c = a[da] * lead_inv % p;
        for (int i = 0; i <= db; ++i) {
            long long v = a[da - db + i] - c * b[i] % p;
            a[da - db + i] = static_cast<int>(((v % p) + p) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<int>((r[i + j] + 1LL * a[i] * b[j]) % p);
    return r;
}

// Irreducibility over F_p by trial division against every monic polynomial
// of degree 1..k/2. Fine at desk scale (p^k <= 128).
bool is_irreducible(const Poly& m, long long p, int k) {
    for (int deg = 1; deg <= k / 2; ++deg) {
        long long count = 1;
        for (int i = 0; i < deg; ++i) count *= p;
        for (long long t = 0; t < count; ++t) {
            Poly div(deg + 1, 0);
            long long tt = t;
            for (int i = 0; i < deg; ++i) { div[i] = static_cast<int>(tt % p); tt /= p; }
            div[deg] = 1;
            if (poly_mod(m, div, p).empty()) return false;
        }
    }
    return true;
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> fs;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

} // namespace

int Field::add_digits(int a, int b) const {
    if (k_ == 1) return static_cast<int>((a + b) % p_);
    int r = 0, base = 1;
    for (int i = 0; i < k_; ++i) {
        int da = static_cast<int>((a / base) % p_);
        int db = static_cast<int>((b / base) % p_);
        r += static_cast<int>((da + db) % p_) * base;
        base = static_cast<int>(base * p_);
    }
    return r;
}

int Field::neg(int a) const {
    if (k_ == 1) return static_cast<int>((p_ - a) % p_);
    int r = 0, base = 1;
    for (int i = 0; i < k_; ++i) {
        int da = static_cast<int>((a / base) % p_);
        r += static_cast<int>((p_ - da) % p_) * base;
        base = static_cast<int>(base * p_);
    }
    return r;
}

int Field::inv(int a) const {
    if (a == 0) throw DivisionByZero();
    return inv_[a];
}

int Field::pow(int a, long long e) const {
    if (a == 0) {
        if (e < 0) throw DivisionByZero();
        return e == 0 ? 1 : 0;
    }
    long long m = q_ - 1;
    long long ee = ((e % m) + m) % m;
    int r = 1, base = a;
    while (ee > 0) {
        if (ee & 1) r = mul(r, base);
        base = mul(base, base);
        ee >>= 1;
    }
    return r;
}

int Field::log(int a) const {
    if (a == 0) throw DivisionByZero();
    return log_[a];
}

std::complex<double> Field::gauss_sum() const {
    std::complex<double> s = 0.0;
    for (int t = 1; t < q_; ++t) s += static_cast<double>(eta_[t]) * chi(t);
    return s;
}

std::complex<double> Field::kloosterman(int a, int b) const {
    if (a == 0 && b == 0) throw InvalidParams("kloosterman requires (a,b) != (0,0)");
    std::complex<double> s = 0.0;
    for (int t = 1; t < q_; ++t) s += chi(add(mul(a, t), mul(b, inv_[t])));
    return s;
}

FieldPtr Field::make(long long p, int k, long long q_cap) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) throw NotOddPrime(p);
    if (k < 1 || k > 20) throw DegreeOutOfRange(k);
    long long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > q_cap) throw CapExceeded("q = p^k exceeds cap " + std::to_string(q_cap));
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->k_ = k;
    f->q_ = q;

    // Smallest irreducible monic modulus in lexicographic coefficient order
    // (low-degree coefficients vary fastest).
    if (k == 1) {
        f->modulus_ = {0, 1}; // x, placeholder: arithmetic is plain mod p
    } else {
        long long pk = q;
        for (long long t = 0; t < pk; ++t) {
            Poly m(k + 1, 0);
            long long tt = t;
            for (int i = 0; i < k; ++i) { m[i] = static_cast<int>(tt % p); tt /= p; }
            m[k] = 1;
            if (is_irreducible(m, p, k)) { f->modulus_.assign(m.begin(), m.end()); break; }
        }
    }

    // Multiplication table via polynomial arithmetic mod the modulus.
    auto to_poly = [&](int a) {
        Poly c(k, 0);
        for (int i = 0; i < k; ++i) { c[i] = static_cast<int>(a % p); a = static_cast<int>(a / p); }
        return c;
    };
    auto from_poly = [&](const Poly& c) {
        long long r = 0, base = 1;
        for (size_t i = 0; i < c.size(); ++i) { r += c[i] * base; base *= p; }
        return static_cast<int>(r);
    };
    f->mul_.assign(static_cast<size_t>(q) * q, 0);
    for (int a = 0; a < q; ++a) {
        Poly pa = to_poly(a);
        for (int b = a; b < q; ++b) {
            Poly pr = poly_mul(pa, to_poly(b), p);
            if (k > 1) pr = poly_mod(pr, Poly(f->modulus_.begin(), f->modulus_.end()), p);
            else if (!pr.empty()) pr = {static_cast<int>(pr[0] % p)};
            int r = from_poly(pr);
            f->mul_[static_cast<size_t>(a) * q + b] = static_cast<uint16_t>(r);
            f->mul_[static_cast<size_t>(b) * q + a] = static_cast<uint16_t>(r);
        }
    }

    f->inv_.assign(q, 0);
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (f->mul(a, b) == 1) { f->inv_[a] = static_cast<uint16_t>(b); break; }

    // Frobenius-orbit trace; lands in the prime subfield (index < p).
    f->trace_.assign(q, 0);
    for (int a = 0; a < q; ++a) {
        int s = 0, x = a;
        for (int i = 0; i < k; ++i) {
            s = f->add(s, x);
            x = f->pow(x, p);
        }
        f->trace_[a] = static_cast<uint8_t>(s);
    }

    f->chi_of_trace_.resize(p);
    for (int t = 0; t < p; ++t) {
        double ang = 2.0 * std::numbers::pi * t / static_cast<double>(p);
        f->chi_of_trace_[t] = {std::cos(ang), std::sin(ang)};
    }

    // Smallest generator of F_q^*.
    auto factors = prime_factors(q - 1);
    f->primitive_ = 0;
    for (int g = 2; g < q; ++g) {
        bool ok = true;
        for (long long r : factors)
            if (f->pow(g, (q - 1) / r) == 1) { ok = false; break; }
        if (ok) { f->primitive_ = g; break; }
    }

    f->log_.assign(q, -1);
    {
        int x = 1;
        for (long long i = 0; i < q - 1; ++i) {
            f->log_[x] = static_cast<int32_t>(i);
            x = f->mul(x, f->primitive_);
        }
    }

    f->eta_.assign(q, 0);
    for (int a = 1; a < q; ++a) f->eta_[a] = (f->log_[a] % 2 == 0) ? 1 : -1;

    return f;
}

} // namespace fqha
