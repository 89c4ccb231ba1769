#include "hsc/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace hsc {

BigRational::BigRational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    v_.canonicalize();
}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

BigRational BigRational::pow_int(std::int64_t n) const {
    if (n == 0) return BigRational(1);
    bool inv = n < 0;
    if (inv && is_zero()) throw DomainError("0 raised to a negative power");
    std::uint64_t e = inv ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(pd.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return inv ? BigRational(pd, pn) : BigRational(pn, pd);
}

DDouble dd_from_rational(const BigRational& r) {
    // mpq_get_d truncates; three rounds capture ~159 bits, then renormalize.
    mpq_class q = r.raw();
    double h = q.get_d();
    mpq_class q1 = q - h;
    double l = q1.get_d();
    mpq_class q2 = q1 - l;
    double c = q2.get_d();
    DDouble s = DDouble::two_sum(h, l);
    return s + DDouble(c);
}

DDouble dd_from_bigint(const BigInt& z) {
    return dd_from_rational(BigRational(z));
}

BigRational rational_from_dd(DDouble x) {
    mpq_class q(x.hi);
    q += mpq_class(x.lo);
    return BigRational(std::move(q));
}

std::string dd_to_decimal(DDouble x, int digits) {
    if (digits < 1 || digits > 31)
        throw PrecisionError("dd_to_decimal supports 1..31 significant digits");
    if (x.is_zero()) return "0";
    bool neg = x.is_negative();
    mpq_class v = rational_from_dd(abs(x)).raw();

    // decimal exponent e with 10^e <= v < 10^(e+1)
    int e = static_cast<int>(std::floor(std::log10(std::abs(x.hi))));
    auto pow10 = [](int n) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(n < 0 ? -n : n));
        return n < 0 ? mpq_class(1, p) : mpq_class(p);
    };
    while (v < pow10(e)) --e;
    while (v >= pow10(e + 1)) ++e;

    // integer N with digits digits: round-half-away of v * 10^(digits-1-e)
    mpq_class scaled = v * pow10(digits - 1 - e);
    mpz_class n2 = scaled.get_num() * 2 + scaled.get_den();  // floor(x+1/2) of 2x+1 over 2d
    mpz_class N;
    mpz_fdiv_q(N.get_mpz_t(), n2.get_mpz_t(), mpz_class(scaled.get_den() * 2).get_mpz_t());
    std::string digs = N.get_str();
    if (static_cast<int>(digs.size()) > digits) {  // rounding carried into a new digit
        digs.pop_back();
        ++e;
    }

    std::string out;
    if (e >= digits - 1 && e <= 27) {
        out = digs + std::string(static_cast<size_t>(e - digits + 1), '0');
    } else if (e >= 0 && e < digits - 1) {
        out = digs.substr(0, static_cast<size_t>(e + 1)) + "." + digs.substr(static_cast<size_t>(e + 1));
    } else if (e < 0 && e >= -6) {
        out = "0." + std::string(static_cast<size_t>(-e - 1), '0') + digs;
    } else {
        out = digs.substr(0, 1);
        if (digs.size() > 1) out += "." + digs.substr(1);
        out += "e" + std::to_string(e);
    }
    return neg ? "-" + out : out;
}

BigRational rational_from_string(const std::string& text) {
    std::string s = text;
    // strip spaces
    std::string t;
    for (char ch : s) if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw DomainError("empty numeric string");

    auto slash = t.find('/');
    if (slash != std::string::npos) {
        mpz_class num, den;
        if (num.set_str(t.substr(0, slash), 10) != 0 || den.set_str(t.substr(slash + 1), 10) != 0)
            throw DomainError("bad rational: " + text);
        return BigRational(num, den);
    }

    // decimal with optional exponent
    bool neg = false;
    size_t i = 0;
    if (t[i] == '+' || t[i] == '-') { neg = t[i] == '-'; ++i; }
    std::string intpart, fracpart;
    long expo = 0;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) intpart += t[i++];
    if (i < t.size() && t[i] == '.') {
        ++i;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) fracpart += t[i++];
    }
    if (i < t.size() && (t[i] == 'e' || t[i] == 'E')) {
        ++i;
        size_t pos = 0;
        expo = std::stol(t.substr(i), &pos);
        i += pos;
    }
    if (i != t.size() || (intpart.empty() && fracpart.empty()))
        throw DomainError("bad number: " + text);
    mpz_class mant((intpart.empty() ? "0" : intpart) + fracpart, 10);
    if (neg) mant = -mant;
    long shift = expo - static_cast<long>(fracpart.size());
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    return shift >= 0 ? BigRational(BigInt(mant * p)) : BigRational(mant, p);
}

DDouble dd_from_string(const std::string& text) {
    return dd_from_rational(rational_from_string(text));
}

}  // namespace hsc
