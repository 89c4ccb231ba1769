#include <cfenv>
#include <cmath>
#include <vector>

#include "hsc/constants.hpp"
#include "hsc/ddouble.hpp"
#include "hsc/rational.hpp"

namespace hsc {

void require_round_to_nearest() {
    if (std::fegetround() != FE_TONEAREST)
        throw std::runtime_error("FPU must be in round-to-nearest mode");
    volatile double one = 1.0;
    volatile double eps = 0x1p-53;
    if (one + eps != 1.0 || one + 2 * eps == 1.0)
        throw std::runtime_error("double rounding behaviour is not IEEE round-to-nearest");
}

DDouble dd_sqrt(DDouble x) {
    if (x.is_zero()) return DDouble(0);
    if (x.is_negative()) throw DomainError("sqrt of negative value");
    double s0 = std::sqrt(x.hi);
    // one Newton step in double-double: s = s0 + (x - s0^2) / (2 s0)
    DDouble r = x - DDouble::two_prod(s0, s0);
    return DDouble(s0) + r / (2.0 * s0);
}

DDouble dd_pow_int(DDouble x, std::int64_t n) {
    if (n == 0) return DDouble(1);
    bool inv = n < 0;
    std::uint64_t e = inv ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    if (x.is_zero()) {
        if (inv) throw DomainError("0 raised to a negative power");
        return DDouble(0);
    }
    DDouble acc(1), base = x;
    while (e) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return inv ? DDouble(1) / acc : acc;
}

DDouble dd_exp(DDouble x) {
    if (x.is_zero()) return DDouble(1);
    if (x.hi > 690.0 || x.hi < -690.0) throw DomainError("exp argument out of supported range");
    const DDouble& ln2 = constants::log2();
    double m = std::nearbyint((x / ln2).hi);
    DDouble r = x - DDouble(m) * ln2;
    r = ldexp(r, -9);  // |r| <= ln2/1024
    // exp(r) by Taylor; |r| < 7e-4 so 12 terms reach ~1e-39 relative
    DDouble p(1), term(1);
    for (int i = 1; i <= 12; ++i) {
        term = term * r / static_cast<double>(i);
        p += term;
    }
    for (int i = 0; i < 9; ++i) p *= p;
    return ldexp(p, static_cast<int>(m));
}

DDouble dd_ln(DDouble x) {
    if (x.is_zero() || x.is_negative()) throw DomainError("log of non-positive value");
    DDouble y(std::log(x.hi));
    for (int i = 0; i < 2; ++i) y += x * dd_exp(-y) - 1.0;
    return y;
}

namespace {

// Taylor coefficients 1/(2k+1)! and 1/(2k)! as DDouble, from exact factorials.
const std::vector<DDouble>& sin_coeffs() {
    static const std::vector<DDouble> c = [] {
        std::vector<DDouble> v;
        BigInt f(1);
        for (int k = 0; k <= 16; ++k) {
            if (k > 0) f *= BigInt(2 * k) * BigInt(2 * k + 1);
            v.push_back(dd_from_rational(BigRational(BigInt(1), f)));
        }
        return v;
    }();
    return c;
}

const std::vector<DDouble>& cos_coeffs() {
    static const std::vector<DDouble> c = [] {
        std::vector<DDouble> v;
        BigInt f(1);
        for (int k = 0; k <= 16; ++k) {
            if (k > 0) f *= BigInt(2 * k - 1) * BigInt(2 * k);
            v.push_back(dd_from_rational(BigRational(BigInt(1), f)));
        }
        return v;
    }();
    return c;
}

DDouble sin_taylor(DDouble r) {  // sin(pi * r), |r| <= 1/4
    if (r.is_zero()) return DDouble(0);
    DDouble z = r * constants::pi();
    DDouble w = -(z * z);
    const auto& c = sin_coeffs();
    DDouble acc = c[16];
    for (int k = 15; k >= 0; --k) acc = acc * w + c[k];
    return z * acc;
}

DDouble cos_taylor(DDouble r) {  // cos(pi * r), |r| <= 1/4
    if (r.is_zero()) return DDouble(1);
    DDouble z = r * constants::pi();
    DDouble w = -(z * z);
    const auto& c = cos_coeffs();
    DDouble acc = c[16];
    for (int k = 15; k >= 0; --k) acc = acc * w + c[k];
    return acc;
}

// Reduce x to r in [-1/4, 1/4] and quadrant q with pi*x = pi*r + q*pi/2.
// The reduction subtracts an integer from 2x, which is error-free.
int reduce_half_turns(DDouble x, DDouble& r) {
    if (std::abs(x.hi) >= 0x1p51) throw DomainError("trig_pi argument too large for exact reduction");
    DDouble t2 = ldexp(x, 1);
    double m = std::nearbyint(t2.hi);
    DDouble r2 = t2 - DDouble(m);
    if (r2.hi > 0.5) { r2 -= 1.0; m += 1.0; }
    if (r2.hi < -0.5) { r2 += 1.0; m -= 1.0; }
    r = ldexp(r2, -1);
    auto qi = static_cast<std::int64_t>(std::fmod(m, 4.0));
    return static_cast<int>((qi % 4 + 4) % 4);
}

}  // namespace

DDouble dd_sinpi(DDouble x) {
    DDouble r;
    switch (reduce_half_turns(x, r)) {
        case 0: return sin_taylor(r);
        case 1: return cos_taylor(r);
        case 2: return -sin_taylor(r);
        default: return -cos_taylor(r);
    }
}

DDouble dd_cospi(DDouble x) {
    DDouble r;
    switch (reduce_half_turns(x, r)) {
        case 0: return cos_taylor(r);
        case 1: return -sin_taylor(r);
        case 2: return -cos_taylor(r);
        default: return sin_taylor(r);
    }
}

DDouble dd_cotpi(DDouble x) {
    DDouble s = dd_sinpi(x);
    if (s.is_zero()) throw DomainError("cot(pi x) pole at integer x");
    DDouble c = dd_cospi(x);
    if (c.is_zero()) return DDouble(0);
    return c / s;
}

DDouble dd_cscpi(DDouble x) {
    DDouble s = dd_sinpi(x);
    if (s.is_zero()) throw DomainError("csc(pi x) pole at integer x");
    return DDouble(1) / s;
}

}  // namespace hsc
