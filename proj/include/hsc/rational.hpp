#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "hsc/ddouble.hpp"

namespace hsc {

using BigInt = mpz_class;

// Exact rational, always canonical: lowest terms, positive denominator.
// The exact-arithmetic oracle substrate; never used on the verification path
// except where a contract says "exact".
class BigRational {
public:
    BigRational() : v_(0) {}
    BigRational(std::int64_t n) : v_(static_cast<long>(n)) {}
    BigRational(std::int64_t num, std::int64_t den);
    explicit BigRational(const BigInt& z) : v_(z) {}
    BigRational(const BigInt& num, const BigInt& den);

    const mpq_class& raw() const { return v_; }
    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    friend BigRational operator+(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.v_ + b.v_)); }
    friend BigRational operator-(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.v_ - b.v_)); }
    friend BigRational operator*(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.v_ * b.v_)); }
    friend BigRational operator/(const BigRational& a, const BigRational& b) {
        if (b.is_zero()) throw DomainError("rational division by zero");
        return BigRational(mpq_class(a.v_ / b.v_));
    }
    friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.v_)); }
    BigRational& operator+=(const BigRational& b) { v_ += b.v_; return *this; }
    BigRational& operator-=(const BigRational& b) { v_ -= b.v_; return *this; }
    BigRational& operator*=(const BigRational& b) { v_ *= b.v_; return *this; }
    BigRational& operator/=(const BigRational& b) { *this = *this / b; return *this; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.v_ >= b.v_; }

    BigRational pow_int(std::int64_t n) const;

    std::string to_string() const { return v_.get_str(); }

private:
    explicit BigRational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
    mpq_class v_;

    friend BigRational rational_from_dd(DDouble x);
};

// Conversions (rational.cpp).
DDouble dd_from_rational(const BigRational& r);
DDouble dd_from_bigint(const BigInt& z);
BigRational rational_from_dd(DDouble x);  // exact: hi and lo are dyadic

// Decimal rendering with `digits` significant digits (1..31), correctly
// rounded via exact rational scaling. digits > 31 -> PrecisionError.
std::string dd_to_decimal(DDouble x, int digits);

// "p/q", "-3", "2.718", "1e-4" -> exact rational (decimal strings exactly).
BigRational rational_from_string(const std::string& text);

// Parse a decimal/rational string to the nearest DDouble.
DDouble dd_from_string(const std::string& text);

}  // namespace hsc
