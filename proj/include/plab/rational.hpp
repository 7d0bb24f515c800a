#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <string>

#include "plab/config.hpp"

namespace plab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(long long n) {
    BigInt f = 1;
    for (long long k = 2; k <= n; ++k) f *= k;
    return f;
}

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt b = 1;
    for (long long i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;  // exact: b is a binomial at every step
    }
    return b;
}

// Canonical text form "p/q", q > 0, gcd(p, q) = 1. Used everywhere rationals
// cross a serialization boundary; floats never do.
inline std::string rational_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw validation_error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw validation_error("rational with zero denominator: " + s);
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw validation_error("malformed rational '" + s + "': expected p/q");
    }
}

// Safe conversion for reporting; scales the two parts so neither overflows a
// double before the quotient is formed.
inline double to_double(const Rational& r) {
    if (r == 0) return 0.0;
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    bool neg = num < 0;
    if (neg) num = -num;
    long nb = static_cast<long>(msb(num));
    long db = static_cast<long>(msb(den));
    long sn = nb > 512 ? nb - 512 : 0;
    long sd = db > 512 ? db - 512 : 0;
    double v = (num >> sn).convert_to<double>() / (den >> sd).convert_to<double>();
    v = std::ldexp(v, static_cast<int>(sn - sd));
    return neg ? -v : v;
}

inline double to_double(const BigInt& x) {
    if (x == 0) return 0.0;
    BigInt a = x < 0 ? BigInt(-x) : x;
    long bits = static_cast<long>(msb(a));
    long s = bits > 512 ? bits - 512 : 0;
    double v = std::ldexp((a >> s).convert_to<double>(), static_cast<int>(s));
    return x < 0 ? -v : v;
}

}  // namespace plab
