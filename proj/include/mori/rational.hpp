#pragma once

// Exact arithmetic primitives shared by every module. All quantities in this
// library are rational numbers; nothing is ever computed in floating point
// outside of explicitly labelled "approx" conveniences.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mori {

using BigInt = boost::multiprecision::cpp_int;

// Canonical form (lowest terms, positive denominator) is maintained by the
// backend on every operation.
using Rat = boost::multiprecision::cpp_rational;

// C(a, b) with the convention C(a, b) = 0 whenever b < 0 or a < b.
inline BigInt binomial(long long a, long long b) {
    if (b < 0 || a < b) return 0;
    b = std::min(b, a - b);
    BigInt result = 1;
    for (long long i = 1; i <= b; ++i) {
        result *= (a - b + i);
        result /= i;
    }
    return result;
}

inline BigInt ipow(const BigInt& base, unsigned long long exp) {
    BigInt result = 1;
    BigInt acc = base;
    while (exp) {
        if (exp & 1) result *= acc;
        acc *= acc;
        exp >>= 1;
    }
    return result;
}

inline Rat rat_pow(const Rat& base, unsigned long long exp) {
    return Rat(ipow(numerator(base), exp), ipow(denominator(base), exp));
}

// The two-argument Rat constructor requires a positive denominator; this
// normalizes the sign and rejects zero.
inline Rat make_rat(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

// "p/q" with the "/q" elided when q = 1.
inline std::string rat_to_string(const Rat& value) {
    std::string num = numerator(value).str();
    if (denominator(value) == 1) return num;
    return num + "/" + denominator(value).str();
}

inline Rat rat_from_string(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(text));
        return make_rat(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

inline double rat_to_double(const Rat& value) {
    return static_cast<double>(value);
}

} // namespace mori
