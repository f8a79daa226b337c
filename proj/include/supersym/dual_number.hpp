#pragma once

#include "supersym/rational.hpp"

#include <string>

namespace supersym {

// Element a + b*eps of the super dual numbers k[eps], eps odd, eps^2 = 0.
struct DualNumber {
    Rational even;
    Rational odd;

    DualNumber() = default;
    DualNumber(Rational e, Rational o) : even(std::move(e)), odd(std::move(o)) {}

    static DualNumber one() { return {1, 0}; }
    static DualNumber eps() { return {0, 1}; }

    bool is_zero() const { return even.is_zero() && odd.is_zero(); }

    bool operator==(const DualNumber&) const = default;

    DualNumber& operator+=(const DualNumber& o)
    {
        even += o.even;
        odd += o.odd;
        return *this;
    }

    friend DualNumber operator+(DualNumber a, const DualNumber& b) { return a += b; }

    friend DualNumber operator*(const DualNumber& a, const DualNumber& b)
    {
        return {a.even * b.even, a.even * b.odd + a.odd * b.even};
    }

    friend DualNumber operator*(const Rational& c, const DualNumber& a)
    {
        return {c * a.even, c * a.odd};
    }
};

inline std::string to_string(const DualNumber& d)
{
    if (d.is_zero())
        return "0";
    std::string s;
    if (!d.even.is_zero())
        s = to_string(d.even);
    if (!d.odd.is_zero()) {
        if (!s.empty())
            s += d.odd > 0 ? " + " : " - ";
        else if (d.odd < 0)
            s += "-";
        Rational a = abs(d.odd);
        if (a != 1)
            s += to_string(a) + "*";
        s += "eps";
    }
    return s;
}

} // namespace supersym
