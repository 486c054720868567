#ifndef EPDA_RATIONAL_HPP
#define EPDA_RATIONAL_HPP

#include <boost/rational.hpp>
#include <string>

namespace epda {

/// Exact rational arithmetic for memory ratios, delivery times and DoF bounds.
/// All quantities at desk scale fit comfortably in 64 bits after reduction.
using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace epda

#endif
