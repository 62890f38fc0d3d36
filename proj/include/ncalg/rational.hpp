#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ncalg {

// Exact rationals over GMP. Always canonical: gcd(|num|, den) = 1, den >= 1.
using Rational = mpq_class;

inline Rational rat_parse(const std::string& text) {
    mpq_class r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

// mpq_class(num, den) does not reduce; this does.
inline Rational rat_make(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat_pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    Rational b = base;
    if (exp < 0) {
        if (b == 0) throw std::domain_error("division by zero in rational power");
        b = Rational(1) / b;
        exp = -exp;
    }
    Rational acc(1);
    while (exp > 0) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

}  // namespace ncalg
