#include "hsc/constants.hpp"

#include "hsc/rational.hpp"

namespace hsc::constants {

namespace {
DDouble parse40(const char* s) { return dd_from_string(s); }
}  // namespace

const DDouble& pi() {
    static const DDouble v = parse40("3.141592653589793238462643383279502884197");
    return v;
}

const DDouble& log2() {
    static const DDouble v = parse40("0.6931471805599453094172321214581765680755");
    return v;
}

const DDouble& euler_gamma() {
    static const DDouble v = parse40("0.5772156649015328606065120900824024310422");
    return v;
}

const DDouble& sqrt_pi() {
    static const DDouble v = parse40("1.772453850905516027298167483341145182798");
    return v;
}

const DDouble& ln_pi() {
    static const DDouble v = dd_ln(pi());
    return v;
}

}  // namespace hsc::constants
