#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncalg/rational.hpp"

namespace ncalg {

// Coefficient domains: plain rationals, or polynomials / Laurent polynomials /
// rational functions in one central parameter over the rationals.
enum class ScalarMode { rational, polynomial, laurent, ratfunc };

std::string mode_name(ScalarMode m);

class Scalar {
public:
    Scalar() : Scalar(Rational(0)) {}
    explicit Scalar(Rational r);
    Scalar(long n) : Scalar(Rational(n)) {}

    static Scalar zero(ScalarMode mode, const std::string& param);
    static Scalar one(ScalarMode mode, const std::string& param);
    // c * p^exp
    static Scalar param_power(ScalarMode mode, const std::string& param, long exp,
                              const Rational& c = Rational(1));
    // coefficients for p^{low}, p^{low+1}, ...
    static Scalar from_coeffs(ScalarMode mode, const std::string& param, long low,
                              std::vector<Rational> coeffs);

    ScalarMode mode() const { return mode_; }
    const std::string& parameter() const { return param_; }

    bool is_zero() const { return num_.empty(); }
    bool is_one() const;
    bool is_unit() const;
    bool is_rational() const;       // constant as an element of its mode
    Rational rational_value() const;  // requires is_rational()

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    Scalar inv() const;  // throws on zero or non-unit
    Scalar pow(long k) const;

    // Substitute the parameter by v; result is in rational mode.
    Scalar specialize(const Rational& v) const;

    bool divisible_by_param_minus(const Rational& lambda) const;
    Scalar divided_by_param_minus(const Rational& lambda) const;

    // Highest parameter exponent (numerator degree minus denominator degree);
    // 0 for rationals and for zero.
    long net_param_degree() const;

    // Exponent -> coefficient decomposition. Denominator-free modes only.
    std::map<long, Rational> parts() const;

    // Widening (rational -> polynomial -> laurent -> ratfunc) always succeeds;
    // narrowing succeeds only when the value lies in the target ring.
    Scalar convert(ScalarMode target, const std::string& param) const;

    // True when the value is a single monomial c * p^e with denominator 1.
    bool single_monomial(Rational& coeff_out, long& exp_out) const;

    std::string str() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

private:
    // Value = p^{low} * num(p) / den(p), num trimmed at both ends,
    // den with nonzero constant term and monic; den = {1} outside ratfunc.
    ScalarMode mode_ = ScalarMode::rational;
    std::string param_;
    long low_ = 0;
    std::vector<Rational> num_;
    std::vector<Rational> den_{Rational(1)};

    void normalize();
    static void combine_modes(const Scalar& a, const Scalar& b, ScalarMode& mode,
                              std::string& param);
    Scalar promoted(ScalarMode mode, const std::string& param) const;
};

}  // namespace ncalg
