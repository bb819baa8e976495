// Exact rational scalars for the whole coefficient tower.

#ifndef MNK_RATIONAL_HPP
#define MNK_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mnk {

using BigInt = boost::multiprecision::cpp_int;

// Always stored normalized: gcd(num, den) = 1, den > 0. cpp_rational
// maintains exactly this invariant eagerly on every operation.
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& a) { return a.is_zero(); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

inline Rational inv(const Rational& a) {
    if (a.is_zero()) throw std::domain_error("division by zero rational");
    return Rational(1) / a;
}

// Exact division in the field Q.
inline Rational exact_div(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational");
    return a / b;
}

inline std::string to_string(const Rational& a) {
    std::ostringstream os;
    os << a;
    return os.str();
}

// variable-name overload so generic renderers can pass one uniformly
inline std::string to_string(const Rational& a, const std::string&) { return to_string(a); }

// Parse "p/q" or "p". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

// Decimal expansion with `digits` digits after the point, truncated
// toward zero. Used for reporting algebraic numbers; never a float.
inline std::string decimal_string(const Rational& a, int digits) {
    BigInt num = boost::multiprecision::numerator(a);
    BigInt den = boost::multiprecision::denominator(a);
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt ip = num / den;
    BigInt rem = num % den;
    std::ostringstream os;
    if (neg) os << '-';
    os << ip;
    if (digits > 0) {
        os << '.';
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            os << (rem / den);
            rem %= den;
        }
    }
    return os.str();
}

}  // namespace mnk

#endif
