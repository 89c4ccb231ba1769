#pragma once

#include "hsc/ddouble.hpp"

namespace hsc::constants {

// 40-digit literals split into DDouble at first use; each one is validated
// against an independent series oracle in the test suite.
const DDouble& pi();
const DDouble& log2();
const DDouble& euler_gamma();
const DDouble& sqrt_pi();
const DDouble& ln_pi();  // derived: dd_ln(pi), cached

}  // namespace hsc::constants
