#include "mompoly/scalar.hpp"

#include <cstdio>

namespace mompoly {

std::string Scalar::str() const {
    if (is_exact()) {
        const Rational& r = rational();
        Integer num = boost::multiprecision::numerator(r);
        Integer den = boost::multiprecision::denominator(r);
        if (den == 1) return num.str();
        return num.str() + "/" + den.str();
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", std::get<double>(value_));
    return buf;
}

} // namespace mompoly
