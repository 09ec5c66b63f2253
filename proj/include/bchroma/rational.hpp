#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bchroma {

/// Exact rational with arbitrary-precision numerator and denominator.
/// Always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

inline BigInt numerator_of(const Rational &r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational &r) { return boost::multiprecision::denominator(r); }

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational &r) {
    auto den = denominator_of(r);
    if (den == 1) return numerator_of(r).str();
    return numerator_of(r).str() + "/" + den.str();
}

}  // namespace bchroma
