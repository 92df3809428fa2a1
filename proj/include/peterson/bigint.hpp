#pragma once

// Exact integer and rational arithmetic used throughout the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace peterson {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// "n" for integers, "n/d" otherwise; always lowest terms with positive denominator.
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

inline std::string to_string(const BigInt& n) { return n.str(); }

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

}  // namespace peterson
