#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncalg/freealg.hpp"
#include "ncalg/rewrite.hpp"
#include "ncalg/scalar.hpp"

namespace ncalg {

// One-variable commutative base ring F[y] or F[y^{+-1}], with scalars that may
// carry the central parameter.
struct BaseRing {
    std::string var = "y";
    bool laurent = false;
    ScalarMode mode = ScalarMode::rational;
    std::string param;

    Scalar scalar_zero() const { return Scalar::zero(mode, param); }
    Scalar scalar_one() const { return Scalar::one(mode, param); }
    bool operator==(const BaseRing& o) const {
        return var == o.var && laurent == o.laurent && mode == o.mode && param == o.param;
    }
};

// Element of the base ring: finite sum of Scalar * y^i.
class BaseElem {
public:
    BaseElem() = default;
    static BaseElem zero() { return BaseElem(); }
    static BaseElem constant(Scalar c);
    static BaseElem var_power(long e, Scalar c = Scalar(1));

    bool is_zero() const { return c_.empty(); }
    const std::map<long, Scalar>& coeffs() const { return c_; }
    void add(long e, const Scalar& c);

    BaseElem operator-() const;
    BaseElem& operator+=(const BaseElem& o);
    BaseElem& operator-=(const BaseElem& o);
    friend BaseElem operator+(BaseElem a, const BaseElem& b) { return a += b; }
    friend BaseElem operator-(BaseElem a, const BaseElem& b) { return a -= b; }
    friend BaseElem operator*(const BaseElem& a, const BaseElem& b);
    BaseElem scaled(const Scalar& c) const;
    BaseElem pow(long k) const;  // k < 0 only for invertible monomials

    bool operator==(const BaseElem& o) const { return c_ == o.c_; }
    bool operator!=(const BaseElem& o) const { return !(*this == o); }

    std::string str(const BaseRing& ring) const;

private:
    std::map<long, Scalar> c_;
};

// Automorphism of the base ring, given by the image of y together with a
// declared inverse image; both directions are verified at construction.
class BaseMap {
public:
    BaseMap(BaseRing ring, BaseElem image, BaseElem inverse_image);
    static BaseMap identity(BaseRing ring);

    const BaseRing& ring() const { return ring_; }
    const BaseElem& image() const { return img_; }
    const BaseElem& inverse_image() const { return inv_img_; }

    BaseElem apply(const BaseElem& r) const;
    BaseElem apply_inverse(const BaseElem& r) const;
    BaseElem apply_power(const BaseElem& r, long n) const;  // alpha^n, n in Z

    BaseMap inverse() const;
    BaseMap compose(const BaseMap& inner) const;  // this after inner

private:
    BaseRing ring_;
    BaseElem img_, inv_img_;

    static BaseElem substitute(const BaseRing& ring, const BaseElem& r, const BaseElem& img);
    void check_shape(const BaseElem& im) const;
};

bool is_reversible(const BaseMap& alpha, const BaseMap& gamma);

// Element of S = R[x^{+-1}; alpha]: finite sum of r_i x^i.
class SkewElem {
public:
    SkewElem() = default;
    static SkewElem from_base(BaseElem r);
    static SkewElem x_power(long i, BaseElem r);

    bool is_zero() const { return c_.empty(); }
    const std::map<long, BaseElem>& coeffs() const { return c_; }
    void add(long i, const BaseElem& r);

    SkewElem operator-() const;
    SkewElem& operator+=(const SkewElem& o);
    SkewElem& operator-=(const SkewElem& o);
    friend SkewElem operator+(SkewElem a, const SkewElem& b) { return a += b; }
    friend SkewElem operator-(SkewElem a, const SkewElem& b) { return a -= b; }
    SkewElem scaled(const Scalar& c) const;

    bool operator==(const SkewElem& o) const { return c_ == o.c_; }
    bool operator!=(const SkewElem& o) const { return !(*this == o); }

    std::string str(const BaseRing& ring, const std::string& xname = "x") const;

private:
    std::map<long, BaseElem> c_;
};

// Skew Laurent ring with a reversing automorphism theta: theta|_R = gamma,
// theta(x) = x^{-1}. Construction verifies gamma^2 = id and reversibility.
class ReversingContext {
public:
    ReversingContext(BaseRing ring, BaseMap alpha, BaseMap gamma);

    const BaseRing& ring() const { return ring_; }
    const BaseMap& alpha() const { return alpha_; }
    const BaseMap& gamma() const { return gamma_; }

    SkewElem mul(const SkewElem& a, const SkewElem& b) const;
    SkewElem pow(const SkewElem& a, long k) const;  // k >= 0
    SkewElem theta(const SkewElem& s) const;
    bool is_invariant(const SkewElem& s) const;

    // s_n(r) = r x^n + gamma(r) x^{-n}
    SkewElem s_element(long n, const BaseElem& r) const;

    SkewElem eval(const NCPoly& p, const std::vector<SkewElem>& assignment) const;

private:
    BaseRing ring_;
    BaseMap alpha_, gamma_;
};

struct SIdentityReport {
    bool product_rule = false;    // s0(r) s1(r') - s1(r') s0(alpha^{-1}(r)) = s1((gamma(r) - alpha^2 gamma(r)) r')
    bool unit_rule = false;       // the same with r' = 1
    bool shifted_rule = false;    // s1(r) s1(1) - s1(1) s1(alpha^{-1}(r)) = s0(r - alpha^{-2}(r))
    bool recursion = false;       // s_{i+1}(r) = s_i(r) s_1(1) - s_{i-1}(r), i = 1..4
    bool all() const { return product_rule && unit_rule && shifted_rule && recursion; }
};

SIdentityReport verify_s_identities(const ReversingContext& ctx, const BaseElem& r,
                                    const BaseElem& rprime);

struct HomReport {
    bool assignments_invariant = false;
    std::vector<SkewElem> relation_residuals;  // one per defining relation
    std::vector<SkewElem> probe_values;        // one per kernel probe
    bool relations_hold = false;
    bool probes_vanish = false;
    bool ok() const { return assignments_invariant && relations_hold; }
};

// Evaluate the defining relations of the presented algebra in S under the
// assignment, and evaluate each kernel probe.
HomReport verify_presentation_hom(const ReductionSystem& sys, const ReversingContext& ctx,
                                  const std::vector<SkewElem>& assignment,
                                  const std::vector<NCPoly>& kernel_probes);

struct ConjugacyReport {
    bool precondition = false;  // beta gamma-reversible and beta^2 = alpha^{-1}
    bool conjugate_on_base = false;
    bool conjugate_on_x = false;
    bool ok() const { return precondition && conjugate_on_base && conjugate_on_x; }
};

// With theta' the reversing automorphism determined by alpha gamma, checks
// beta theta' beta^{-1} = theta (beta extended by beta(x) = x).
ConjugacyReport check_conjugacy(const ReversingContext& ctx, const BaseMap& beta);

}  // namespace ncalg
