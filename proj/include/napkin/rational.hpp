#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace napkin {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// High-precision float for asymptotics; everything else stays exact.
using Float100 = boost::multiprecision::cpp_bin_float_100;

inline Rational pow_rational(const Rational& base, unsigned exp) {
    Rational r = 1;
    Rational b = base;
    unsigned e = exp;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

// Parses "a/b" or "a". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational '" + s + "': " + e.what());
    }
}

inline std::string format_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) {
    return static_cast<double>(Float100(r));
}

} // namespace napkin
