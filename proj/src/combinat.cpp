#include "hsc/combinat.hpp"

namespace hsc {

DDouble poch(DDouble x, std::int64_t m) {
    if (m < 0) throw DomainError("poch order must be non-negative");
    DDouble acc(1);
    for (std::int64_t i = 0; i < m; ++i) acc *= x + DDouble::from_int(i);
    return acc;
}

BigRational poch(const BigRational& x, std::int64_t m) {
    if (m < 0) throw DomainError("poch order must be non-negative");
    BigRational acc(1);
    for (std::int64_t i = 0; i < m; ++i) acc *= x + BigRational(i);
    return acc;
}

BigInt binom_exact(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) throw DomainError("binom_exact requires 0 <= k <= n");
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigRational harmonic(std::int64_t n) {
    BigRational acc(0);
    for (std::int64_t j = 1; j <= n; ++j) acc += BigRational(1, j);
    return acc;
}

DDouble harmonic_dd(std::int64_t n) {
    DDouble acc(0);
    for (std::int64_t j = 1; j <= n; ++j) acc += DDouble(1) / DDouble::from_int(j);
    return acc;
}

BigRational harmonic_gen(const BigRational& x, std::int64_t n) {
    BigRational acc(0);
    for (std::int64_t j = 1; j <= n; ++j) {
        BigRational t = x + BigRational(j);
        if (t.is_zero()) throw DomainError("harmonic_gen pole: x + j == 0");
        acc += BigRational(1) / t;
    }
    return acc;
}

DDouble harmonic_gen(DDouble x, std::int64_t n) {
    DDouble acc(0);
    for (std::int64_t j = 1; j <= n; ++j) {
        DDouble t = x + DDouble::from_int(j);
        if (t.is_zero()) throw DomainError("harmonic_gen pole: x + j == 0");
        acc += DDouble(1) / t;
    }
    return acc;
}

BigRational harmonic_relation_residual(std::int64_t k, HarmonicFamily family) {
    switch (family) {
        case HarmonicFamily::Third:
            return harmonic_gen(BigRational(-1, 3), k) + harmonic_gen(BigRational(-2, 3), k)
                 - (BigRational(3) * harmonic(3 * k) - harmonic(k));
        case HarmonicFamily::Quarter:
            return harmonic_gen(BigRational(-1, 4), k) + harmonic_gen(BigRational(-3, 4), k)
                 - (BigRational(4) * harmonic(4 * k) - BigRational(2) * harmonic(2 * k));
        case HarmonicFamily::Sixth:
        default:
            return harmonic_gen(BigRational(-1, 6), k) + harmonic_gen(BigRational(-5, 6), k)
                 - (BigRational(6) * harmonic(6 * k) - BigRational(3) * harmonic(3 * k)
                    - BigRational(2) * harmonic(2 * k) + harmonic(k));
    }
}

}  // namespace hsc
