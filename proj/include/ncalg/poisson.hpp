#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ncalg/rational.hpp"

namespace ncalg {

// Commutative polynomial in x1, x2, x3 over the rationals.
class CommPoly3 {
public:
    using Key = std::array<int, 3>;

    CommPoly3() = default;
    static CommPoly3 constant(Rational c);
    static CommPoly3 monomial(Key e, Rational c = Rational(1));
    static CommPoly3 var(int i);  // 0-based

    bool is_zero() const { return c_.empty(); }
    const std::map<Key, Rational>& terms() const { return c_; }
    void add(const Key& e, const Rational& c);

    CommPoly3 operator-() const;
    CommPoly3& operator+=(const CommPoly3& o);
    CommPoly3& operator-=(const CommPoly3& o);
    friend CommPoly3 operator+(CommPoly3 a, const CommPoly3& b) { return a += b; }
    friend CommPoly3 operator-(CommPoly3 a, const CommPoly3& b) { return a -= b; }
    friend CommPoly3 operator*(const CommPoly3& a, const CommPoly3& b);
    CommPoly3 scaled(const Rational& c) const;

    CommPoly3 partial(int i) const;
    Rational eval(const std::array<Rational, 3>& p) const;

    bool operator==(const CommPoly3& o) const { return c_ == o.c_; }
    bool operator!=(const CommPoly3& o) const { return !(*this == o); }

    std::string str(const std::array<std::string, 3>& names = {"x1", "x2", "x3"}) const;

private:
    std::map<Key, Rational> c_;
};

CommPoly3 parse_poly3(const std::string& text);  // defined in parse.cpp

// (Laurent) polynomial in two variables; negative exponents only where the
// corresponding flag permits.
class LaurentPoly2 {
public:
    using Key = std::array<int, 2>;

    LaurentPoly2() = default;
    explicit LaurentPoly2(std::array<bool, 2> laurent_flags) : flags_(laurent_flags) {}
    static LaurentPoly2 monomial(std::array<bool, 2> flags, Key e, Rational c = Rational(1));

    const std::array<bool, 2>& flags() const { return flags_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<Key, Rational>& terms() const { return c_; }
    void add(const Key& e, const Rational& c);

    LaurentPoly2 operator-() const;
    LaurentPoly2& operator+=(const LaurentPoly2& o);
    LaurentPoly2& operator-=(const LaurentPoly2& o);
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
    LaurentPoly2 scaled(const Rational& c) const;
    LaurentPoly2 pow(long k) const;  // k < 0 only for unit monomials

    LaurentPoly2 partial(int i) const;

    bool operator==(const LaurentPoly2& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentPoly2& o) const { return !(*this == o); }

    std::string str(const std::array<std::string, 2>& names = {"x", "y"}) const;

private:
    std::array<bool, 2> flags_{false, false};
    std::map<Key, Rational> c_;

    void check(const Key& e) const;
};

// Exact bracket {g,h}_f = det of the Jacobian of (f, g, h).
struct ExactBracket {
    CommPoly3 potential;

    CommPoly3 bracket(const CommPoly3& g, const CommPoly3& h) const;
    // coefficients of d/dx1, d/dx2, d/dx3 in {g, -}_f
    std::array<CommPoly3, 3> hamiltonian(const CommPoly3& g) const;
    // true iff all three generator brackets vanish at p; requires f(p) = 0
    bool is_poisson_point(const std::array<Rational, 3>& p) const;
};

// Two-variable bracket determined by the value of {x, y}.
struct PlaneBracket {
    LaurentPoly2 structure;

    LaurentPoly2 bracket(const LaurentPoly2& g, const LaurentPoly2& h) const;
};

// Substitution by signed unit monomials pi(x), pi(y); validated involutive.
struct MonomialMap {
    LaurentPoly2 image_x;
    LaurentPoly2 image_y;

    LaurentPoly2 apply(const LaurentPoly2& g) const;
    bool is_involution() const;
};

bool is_poisson_automorphism(const PlaneBracket& p, const MonomialMap& pi);

enum class SurfaceCase { locenv, qtorus };

struct SurfaceModel {
    PlaneBracket plane;                  // bracket on B
    MonomialMap pi;                      // the reversing Poisson automorphism
    std::array<LaurentPoly2, 3> inv;     // invariant generators a1, a2, a3
    CommPoly3 potential;                 // surface potential f
};

SurfaceModel surface_model(SurfaceCase c);

struct SurfaceReport {
    bool invariants_fixed = false;
    bool surface_relation = false;
    bool brackets_match = false;
    bool ok() const { return invariants_fixed && surface_relation && brackets_match; }
};

// Checks (1) pi fixes each a_i, (2) f(a1,a2,a3) = 0 in B, (3) the plane
// brackets of the a_i realize the exact-bracket table of f.
SurfaceReport verify_surface_model(SurfaceCase c);

LaurentPoly2 substitute3(const CommPoly3& f, const std::array<LaurentPoly2, 3>& a);

struct WeylReport {
    bool sq_x_vs_xy = false;   // {x^2, xy} = 2 x^2
    bool sq_x_vs_sq_y = false; // {x^2, y^2} = 4 xy
    bool xy_vs_sq_y = false;   // {xy, y^2} = 2 y^2
    bool ok() const { return sq_x_vs_xy && sq_x_vs_sq_y && xy_vs_sq_y; }
};

// Pairwise brackets of x^2, xy, y^2 under {x,y} = 1 land in the ideal they
// generate, witnessed by the explicit expressions above.
WeylReport weyl_invariant_ideal_check();

}  // namespace ncalg
