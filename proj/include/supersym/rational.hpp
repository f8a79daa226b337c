#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace supersym {

// Exact rational scalar. Unbounded integer parts; always stored reduced
// with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Renders as "p" or "p/q" with q > 0.
inline std::string to_string(const Rational& r)
{
    if (is_integer(r))
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational factorial(int n)
{
    Integer f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return Rational(f);
}

} // namespace supersym
