#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>

namespace bookram {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact conversion: every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite value");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(x, &exp);          // x = mant * 2^exp, |mant| in [0.5, 1)
    auto scaled = static_cast<long long>(std::ldexp(mant, 53));  // integral, |.| < 2^53
    exp -= 53;
    Rational r(scaled);
    if (exp >= 0) {
        r *= Rational(BigInt(1) << exp);
    } else {
        r /= Rational(BigInt(1) << -exp);
    }
    return r;
}

inline Rational make_rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

// Smallest integer >= r.
inline long long rational_ceil(const Rational& r) {
    BigInt num = numerator(r), den = denominator(r);
    BigInt q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q.convert_to<long long>();
}

}  // namespace bookram
