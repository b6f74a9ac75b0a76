#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ncsf {

// Exact scalars. All coefficient arithmetic in the repository goes through
// these; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace ncsf
