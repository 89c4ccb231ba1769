#include "hsc/specfun.hpp"

#include <array>
#include <cmath>

#include "hsc/constants.hpp"
#include "hsc/rational.hpp"

namespace hsc {

namespace {

constexpr double kShiftThreshold = 25.0;

// B_2 .. B_30 as exact rationals.
const std::array<BigRational, 15>& bernoulli() {
    static const std::array<BigRational, 15> b = {
        BigRational(1, 6),
        BigRational(-1, 30),
        BigRational(1, 42),
        BigRational(-1, 30),
        BigRational(5, 66),
        BigRational(-691, 2730),
        BigRational(7, 6),
        BigRational(-3617, 510),
        BigRational(43867, 798),
        BigRational(-174611, 330),
        BigRational(854513, 138),
        BigRational(-236364091, 2730),
        BigRational(8553103, 6),
        BigRational(-23749461029LL, 870),
        BigRational(8615841276005LL, 14322),
    };
    return b;
}

struct AsymCoeffs {
    std::array<DDouble, 15> lgamma_c;   // B_2n / (2n (2n-1))
    std::array<DDouble, 15> digamma_c;  // B_2n / (2n)
    std::array<DDouble, 15> trigamma_c; // B_2n
};

const AsymCoeffs& coeffs() {
    static const AsymCoeffs c = [] {
        AsymCoeffs out;
        const auto& b = bernoulli();
        for (int n = 1; n <= 15; ++n) {
            out.lgamma_c[n - 1] = dd_from_rational(b[n - 1] / BigRational(2 * n * (2 * n - 1)));
            out.digamma_c[n - 1] = dd_from_rational(b[n - 1] / BigRational(2 * n));
            out.trigamma_c[n - 1] = dd_from_rational(b[n - 1]);
        }
        return out;
    }();
    return c;
}

bool is_nonpositive_integer(DDouble x) {
    return x.hi <= 0.0 && x.lo == 0.0 && x.hi == std::floor(x.hi);
}

// log Gamma by Stirling for y >= 25.
DDouble lgamma_asymptotic(DDouble y) {
    DDouble lny = dd_ln(y);
    DDouble acc = (y - DDouble(0.5)) * lny - y;
    acc += ldexp(constants::log2() + constants::ln_pi(), -1);  // (1/2) ln(2 pi)
    DDouble y2 = y * y;
    DDouble p = DDouble(1) / y;
    const auto& c = coeffs().lgamma_c;
    for (int n = 0; n < 15; ++n) {
        acc += c[n] * p;
        p /= y2;
    }
    return acc;
}

DDouble digamma_asymptotic(DDouble y) {
    DDouble acc = dd_ln(y) - DDouble(0.5) / y;
    DDouble y2 = y * y;
    DDouble p = DDouble(1) / y2;
    const auto& c = coeffs().digamma_c;
    for (int n = 0; n < 15; ++n) {
        acc -= c[n] * p;
        p /= y2;
    }
    return acc;
}

DDouble trigamma_asymptotic(DDouble y) {
    DDouble y2 = y * y;
    DDouble acc = DDouble(1) / y + DDouble(0.5) / y2;
    DDouble p = DDouble(1) / (y2 * y);
    const auto& c = coeffs().trigamma_c;
    for (int n = 0; n < 15; ++n) {
        acc += c[n] * p;
        p /= y2;
    }
    return acc;
}

}  // namespace

DDouble log_gamma(DDouble x) {
    if (x.is_zero() || x.is_negative())
        throw DomainError("log_gamma requires a positive argument");
    DDouble shift(0);
    DDouble y = x;
    while (y.hi < kShiftThreshold) {
        shift += dd_ln(y);
        y += 1.0;
    }
    return lgamma_asymptotic(y) - shift;
}

DDouble gamma(DDouble x) {
    if (is_nonpositive_integer(x)) throw DomainError("gamma pole at non-positive integer");
    if (!x.is_negative()) {
        if (x.hi > 171.7) throw DomainError("gamma overflows double range");
        return dd_exp(log_gamma(x));
    }
    // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
    DDouble ox = DDouble(1) - x;
    if (ox.hi > 171.7) throw DomainError("gamma overflows double range");
    return constants::pi() / (dd_sinpi(x) * gamma(ox));
}

DDouble digamma(DDouble x) {
    if (is_nonpositive_integer(x)) throw DomainError("digamma pole at non-positive integer");
    if (x.is_negative()) {
        // psi(x) = psi(1-x) - pi cot(pi x)
        return digamma(DDouble(1) - x) - constants::pi() * dd_cotpi(x);
    }
    DDouble acc(0);
    DDouble y = x;
    while (y.hi < kShiftThreshold) {
        acc += DDouble(1) / y;
        y += 1.0;
    }
    return digamma_asymptotic(y) - acc;
}

DDouble trigamma(DDouble x) {
    if (is_nonpositive_integer(x)) throw DomainError("trigamma pole at non-positive integer");
    if (x.is_negative()) {
        DDouble cs = dd_cscpi(x);
        return -trigamma(DDouble(1) - x) + constants::pi() * constants::pi() * cs * cs;
    }
    DDouble acc(0);
    DDouble y = x;
    while (y.hi < kShiftThreshold) {
        acc += DDouble(1) / (y * y);
        y += 1.0;
    }
    return trigamma_asymptotic(y) + acc;
}

DDouble digamma_rational(std::int64_t p, std::int64_t q) {
    if (p <= 0 || p >= q) throw DomainError("digamma_rational requires 0 < p < q");
    // Gauss digamma theorem:
    // psi(p/q) = -gamma - ln(2q) - (pi/2) cot(pi p/q)
    //            + 2 sum_{n=1}^{floor((q-1)/2)} cos(2 pi n p / q) ln sin(pi n / q)
    DDouble acc = -constants::euler_gamma();
    acc -= dd_ln(DDouble::from_int(2 * q));
    acc -= ldexp(constants::pi() * dd_cotpi(dd_from_rational(BigRational(p, q))), -1);
    for (std::int64_t n = 1; n <= (q - 1) / 2; ++n) {
        DDouble c = dd_cospi(dd_from_rational(BigRational(2 * n * p, q)));
        DDouble s = dd_sinpi(dd_from_rational(BigRational(n, q)));
        acc += ldexp(c * dd_ln(s), 1);
    }
    return acc;
}

}  // namespace hsc
