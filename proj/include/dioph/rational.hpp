#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <string>
#include <string_view>

#include "dioph/errors.hpp"

namespace dioph {

// Arbitrary-precision integers and rationals. cpp_rational keeps the value
// canonical (coprime parts, positive denominator) after every operation,
// which makes equality a structural check.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 50 decimal digits; wide enough that a final rounding to double is clean.
using BigFloat = boost::multiprecision::cpp_bin_float_50;

inline BigFloat to_bigfloat(const Rational& q) {
    return BigFloat(numerator(q)) / BigFloat(denominator(q));
}

/// Nearest double, via a high-precision intermediate so huge numerators or
/// denominators do not overflow on the way down.
inline double to_double(const Rational& q) {
    return to_bigfloat(q).convert_to<double>();
}

/// Exact rational value of a finite double.
inline Rational rational_from_double(double x) {
    // Doubles are dyadic rationals: mantissa * 2^exp.
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
    // 53 mantissa bits make m * 2^53 integral.
    BigInt mant(static_cast<long long>(std::ldexp(m, 53)));
    exp -= 53;
    Rational r(mant);
    if (exp >= 0) {
        r *= Rational(BigInt(1) << exp);
    } else {
        r /= Rational(BigInt(1) << (-exp));
    }
    return r;
}

inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

/// Parses "p" or "p/q" (optional sign, arbitrary size). Throws ParseError.
inline Rational parse_rational(std::string_view text) {
    auto bad = [&] { throw ParseError("bad rational: '" + std::string(text) + "'"); };
    auto parse_int = [&](std::string_view s) {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);  // cpp_int rejects a leading '+'
        if (s.empty()) bad();
        return BigInt(std::string(s));
    };
    if (text.empty()) bad();
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(parse_int(text));
        BigInt num = parse_int(text.substr(0, slash));
        BigInt den = parse_int(text.substr(slash + 1));
        if (den == 0) bad();
        if (den < 0) {  // keep the denominator positive; boost rejects it otherwise
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rational(0);  // unreachable
}

}  // namespace dioph
