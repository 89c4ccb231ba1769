#pragma once

#include <cstdint>

#include "hsc/rational.hpp"

namespace hsc {

// Shifted factorial (x)_m = x (x+1) ... (x+m-1), (x)_0 = 1.
DDouble poch(DDouble x, std::int64_t m);
BigRational poch(const BigRational& x, std::int64_t m);

// Exact binomial coefficient; k > n or negative arguments are domain errors.
BigInt binom_exact(std::int64_t n, std::int64_t k);

// Classical harmonic numbers H_n, exact and double-double kinds.
BigRational harmonic(std::int64_t n);
DDouble harmonic_dd(std::int64_t n);

// Generalized H_n(x) = sum_{j=1}^{n} 1/(x+j); pole when x+j == 0.
BigRational harmonic_gen(const BigRational& x, std::int64_t n);
DDouble harmonic_gen(DDouble x, std::int64_t n);

enum class HarmonicFamily { Third, Quarter, Sixth };

// LHS - RHS of the family's harmonic relation, in exact rationals:
//   third:   H_k(-1/3) + H_k(-2/3) - (3 H_3k - H_k)
//   quarter: H_k(-1/4) + H_k(-3/4) - (4 H_4k - 2 H_2k)
//   sixth:   H_k(-1/6) + H_k(-5/6) - (6 H_6k - 3 H_3k - 2 H_2k + H_k)
// Must be exactly zero for every k.
BigRational harmonic_relation_residual(std::int64_t k, HarmonicFamily family);

}  // namespace hsc
