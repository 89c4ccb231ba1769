#pragma once

#include <cstdint>

#include "hsc/ddouble.hpp"

namespace hsc {

// Gamma family over DDouble. Stirling asymptotics with exact Bernoulli
// coefficients through B_30 after shifting the argument above 25; negative
// arguments go through the reflection formulas, never through recursion.

DDouble log_gamma(DDouble x);                      // x > 0
DDouble gamma(DDouble x);                          // poles at 0, -1, -2, ...
DDouble digamma(DDouble x);                        // poles at 0, -1, -2, ...
DDouble trigamma(DDouble x);                       // psi', needed by dual lifts
DDouble digamma_rational(std::int64_t p, std::int64_t q);  // 0 < p < q, closed form

}  // namespace hsc
