#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "hsc/errors.hpp"

namespace hsc {

// Unevaluated sum hi + lo of two doubles, |lo| <= 1/2 ulp(hi).
// Roughly 31 significant decimal digits under round-to-nearest-even.
struct DDouble {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DDouble() = default;
    constexpr DDouble(double h) : hi(h), lo(0.0) {}
    constexpr DDouble(double h, double l) : hi(h), lo(l) {}

    static DDouble from_int(std::int64_t n);

    double to_double() const { return hi; }
    bool is_zero() const { return hi == 0.0 && lo == 0.0; }
    bool is_negative() const { return hi < 0.0 || (hi == 0.0 && lo < 0.0); }

    // Error-free transforms.
    static DDouble two_sum(double a, double b) {
        double s = a + b;
        double ap = s - b;
        double bp = s - ap;
        return DDouble(s, (a - ap) + (b - bp));
    }
    static DDouble quick_two_sum(double a, double b) {
        // requires |a| >= |b| or a == 0
        double s = a + b;
        return DDouble(s, b - (s - a));
    }
    static DDouble two_prod(double a, double b) {
        double p = a * b;
        return DDouble(p, std::fma(a, b, -p));
    }
};

inline DDouble operator-(DDouble x) { return DDouble(-x.hi, -x.lo); }

// Accurate double-word addition (Joldes et al. alg. 6), error 3 u^2.
inline DDouble operator+(DDouble x, DDouble y) {
    DDouble s = DDouble::two_sum(x.hi, y.hi);
    DDouble t = DDouble::two_sum(x.lo, y.lo);
    double c = s.lo + t.hi;
    DDouble v = DDouble::quick_two_sum(s.hi, c);
    double w = t.lo + v.lo;
    return DDouble::quick_two_sum(v.hi, w);
}

inline DDouble operator-(DDouble x, DDouble y) { return x + (-y); }

inline DDouble operator*(DDouble x, DDouble y) {
    DDouble c = DDouble::two_prod(x.hi, y.hi);
    double t = std::fma(x.hi, y.lo, x.lo * y.lo);
    double cl = std::fma(x.lo, y.hi, t) + c.lo;
    return DDouble::quick_two_sum(c.hi, cl);
}

// Long division with two Newton corrections, error ~ u^2.
inline DDouble operator/(DDouble x, DDouble y) {
    if (y.hi == 0.0 && y.lo == 0.0) throw DomainError("DDouble division by zero");
    double q1 = x.hi / y.hi;
    DDouble r = x - DDouble(q1) * y;
    double q2 = r.hi / y.hi;
    r = r - DDouble(q2) * y;
    double q3 = r.hi / y.hi;
    DDouble q = DDouble::quick_two_sum(q1, q2);
    return q + DDouble(q3);
}

inline DDouble operator+(DDouble x, double y) { return x + DDouble(y); }
inline DDouble operator+(double x, DDouble y) { return DDouble(x) + y; }
inline DDouble operator-(DDouble x, double y) { return x - DDouble(y); }
inline DDouble operator-(double x, DDouble y) { return DDouble(x) - y; }
inline DDouble operator*(DDouble x, double y) { return x * DDouble(y); }
inline DDouble operator*(double x, DDouble y) { return DDouble(x) * y; }
inline DDouble operator/(DDouble x, double y) { return x / DDouble(y); }
inline DDouble operator/(double x, DDouble y) { return DDouble(x) / y; }

inline DDouble& operator+=(DDouble& x, DDouble y) { return x = x + y; }
inline DDouble& operator-=(DDouble& x, DDouble y) { return x = x - y; }
inline DDouble& operator*=(DDouble& x, DDouble y) { return x = x * y; }
inline DDouble& operator/=(DDouble& x, DDouble y) { return x = x / y; }

inline bool operator==(DDouble x, DDouble y) { return x.hi == y.hi && x.lo == y.lo; }
inline bool operator!=(DDouble x, DDouble y) { return !(x == y); }
inline bool operator<(DDouble x, DDouble y) { return x.hi < y.hi || (x.hi == y.hi && x.lo < y.lo); }
inline bool operator>(DDouble x, DDouble y) { return y < x; }
inline bool operator<=(DDouble x, DDouble y) { return !(y < x); }
inline bool operator>=(DDouble x, DDouble y) { return !(x < y); }

inline DDouble abs(DDouble x) { return x.is_negative() ? -x : x; }

inline DDouble ldexp(DDouble x, int e) {
    return DDouble(std::ldexp(x.hi, e), std::ldexp(x.lo, e));
}

inline DDouble DDouble::from_int(std::int64_t n) {
    double h = static_cast<double>(n);
    double l = static_cast<double>(n - static_cast<std::int64_t>(h));
    return quick_two_sum(h, l);
}

// Elementary functions (dd_math.cpp).
DDouble dd_sqrt(DDouble x);
DDouble dd_exp(DDouble x);
DDouble dd_ln(DDouble x);
DDouble dd_pow_int(DDouble x, std::int64_t n);

// fn(pi*x) with argument reduction on x itself.
DDouble dd_sinpi(DDouble x);
DDouble dd_cospi(DDouble x);
DDouble dd_cotpi(DDouble x);
DDouble dd_cscpi(DDouble x);

// Asserts the FPU is in round-to-nearest; call once at startup.
void require_round_to_nearest();

}  // namespace hsc
