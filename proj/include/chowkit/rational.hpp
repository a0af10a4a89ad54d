#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "chowkit/errors.hpp"

namespace chowkit {

// Exact arithmetic only. cpp_rational keeps values reduced with a positive
// denominator, which is exactly the canonical form we serialize.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) {
    return boost::multiprecision::numerator(q);
}

inline Integer denominator(const Rational& q) {
    return boost::multiprecision::denominator(q);
}

inline int sign(const Rational& q) { return q.sign(); }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// "num/den" with integer shorthand: "5" parses as 5/1 and is emitted as "5".
inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw BadParams("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw BadParams("zero denominator in '" + s + "'");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    } catch (const std::exception&) {
        throw BadParams("cannot parse rational '" + s + "'");
    }
}

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

} // namespace chowkit
