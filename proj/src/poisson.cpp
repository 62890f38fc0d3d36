#include "ncalg/poisson.hpp"

#include <sstream>
#include <stdexcept>

namespace ncalg {

namespace {

std::string exp_str(const std::string& name, int e) {
    std::ostringstream os;
    os << name;
    if (e != 1) os << "^" << e;
    return os.str();
}

template <typename Key>
std::string comm_terms_str(const std::map<Key, Rational>& terms,
                           const std::vector<std::string>& names) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const Key& e = it->first;
        Rational c = it->second;
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        std::ostringstream body;
        bool have = false;
        bool any_var = false;
        for (size_t i = 0; i < names.size(); ++i) any_var = any_var || e[i] != 0;
        if (mag != 1 || !any_var) {
            body << rat_str(mag);
            have = true;
        }
        for (size_t i = 0; i < names.size(); ++i) {
            if (e[i] == 0) continue;
            if (have) body << "*";
            body << exp_str(names[i], e[i]);
            have = true;
        }
        os << body.str();
        first = false;
    }
    return os.str();
}

}  // namespace

CommPoly3 CommPoly3::constant(Rational c) { return monomial({0, 0, 0}, std::move(c)); }

CommPoly3 CommPoly3::monomial(Key e, Rational c) {
    CommPoly3 p;
    if (c != 0) p.c_.emplace(e, std::move(c));
    return p;
}

CommPoly3 CommPoly3::var(int i) {
    Key e{0, 0, 0};
    e.at(i) = 1;
    return monomial(e);
}

void CommPoly3::add(const Key& e, const Rational& c) {
    if (c == 0) return;
    auto it = c_.find(e);
    if (it == c_.end()) {
        c_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

CommPoly3 CommPoly3::operator-() const {
    CommPoly3 r;
    for (const auto& [e, c] : c_) r.c_.emplace(e, -c);
    return r;
}

CommPoly3& CommPoly3::operator+=(const CommPoly3& o) {
    for (const auto& [e, c] : o.c_) add(e, c);
    return *this;
}

CommPoly3& CommPoly3::operator-=(const CommPoly3& o) {
    for (const auto& [e, c] : o.c_) add(e, -c);
    return *this;
}

CommPoly3 operator*(const CommPoly3& a, const CommPoly3& b) {
    CommPoly3 r;
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_)
            r.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
}

CommPoly3 CommPoly3::scaled(const Rational& c) const {
    CommPoly3 r;
    for (const auto& [e, cc] : c_) r.add(e, cc * c);
    return r;
}

CommPoly3 CommPoly3::partial(int i) const {
    CommPoly3 r;
    for (const auto& [e, c] : c_) {
        if (e.at(i) == 0) continue;
        Key e2 = e;
        e2[i] -= 1;
        r.add(e2, c * Rational(e[i]));
    }
    return r;
}

Rational CommPoly3::eval(const std::array<Rational, 3>& p) const {
    Rational acc(0);
    for (const auto& [e, c] : c_) {
        Rational t = c;
        for (int i = 0; i < 3; ++i) t *= rat_pow(p[i], e[i]);
        acc += t;
    }
    return acc;
}

std::string CommPoly3::str(const std::array<std::string, 3>& names) const {
    return comm_terms_str(c_, {names[0], names[1], names[2]});
}

LaurentPoly2 LaurentPoly2::monomial(std::array<bool, 2> flags, Key e, Rational c) {
    LaurentPoly2 p(flags);
    p.add(e, c);
    return p;
}

void LaurentPoly2::check(const Key& e) const {
    for (int i = 0; i < 2; ++i)
        if (e[i] < 0 && !flags_[i])
            throw std::domain_error("negative exponent on a non-Laurent variable");
}

void LaurentPoly2::add(const Key& e, const Rational& c) {
    if (c == 0) return;
    check(e);
    auto it = c_.find(e);
    if (it == c_.end()) {
        c_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

LaurentPoly2 LaurentPoly2::operator-() const {
    LaurentPoly2 r(flags_);
    for (const auto& [e, c] : c_) r.c_.emplace(e, -c);
    return r;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
    for (const auto& [e, c] : o.c_) add(e, c);
    return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
    for (const auto& [e, c] : o.c_) add(e, -c);
    return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 r(std::array<bool, 2>{a.flags_[0] || b.flags_[0], a.flags_[1] || b.flags_[1]});
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) r.add({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
    return r;
}

LaurentPoly2 LaurentPoly2::scaled(const Rational& c) const {
    LaurentPoly2 r(flags_);
    for (const auto& [e, cc] : c_) r.add(e, cc * c);
    return r;
}

LaurentPoly2 LaurentPoly2::pow(long k) const {
    if (k < 0) {
        if (c_.size() != 1) throw std::domain_error("negative power of a non-monomial");
        const auto& [e, c] = *c_.begin();
        LaurentPoly2 inv = monomial(flags_, {-e[0], -e[1]}, Rational(1) / c);
        return inv.pow(-k);
    }
    LaurentPoly2 acc = monomial(flags_, {0, 0}, Rational(1));
    for (long i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

LaurentPoly2 LaurentPoly2::partial(int i) const {
    LaurentPoly2 r(flags_);
    for (const auto& [e, c] : c_) {
        if (e.at(i) == 0) continue;
        Key e2 = e;
        e2[i] -= 1;
        r.add(e2, c * Rational(e[i]));
    }
    return r;
}

std::string LaurentPoly2::str(const std::array<std::string, 2>& names) const {
    return comm_terms_str(c_, {names[0], names[1]});
}

CommPoly3 ExactBracket::bracket(const CommPoly3& g, const CommPoly3& h) const {
    std::array<CommPoly3, 3> f, gg, hh;
    for (int i = 0; i < 3; ++i) {
        f[i] = potential.partial(i);
        gg[i] = g.partial(i);
        hh[i] = h.partial(i);
    }
    // det of rows (grad f, grad g, grad h)
    CommPoly3 det;
    det += f[0] * (gg[1] * hh[2] - gg[2] * hh[1]);
    det -= f[1] * (gg[0] * hh[2] - gg[2] * hh[0]);
    det += f[2] * (gg[0] * hh[1] - gg[1] * hh[0]);
    return det;
}

std::array<CommPoly3, 3> ExactBracket::hamiltonian(const CommPoly3& g) const {
    std::array<CommPoly3, 3> f, gg;
    for (int i = 0; i < 3; ++i) {
        f[i] = potential.partial(i);
        gg[i] = g.partial(i);
    }
    return {f[1] * gg[2] - f[2] * gg[1], f[2] * gg[0] - f[0] * gg[2],
            f[0] * gg[1] - f[1] * gg[0]};
}

bool ExactBracket::is_poisson_point(const std::array<Rational, 3>& p) const {
    if (potential.eval(p) != 0)
        throw std::domain_error("point is not on the surface");
    for (int i = 0; i < 3; ++i)
        if (potential.partial(i).eval(p) != 0) return false;
    return true;
}

LaurentPoly2 PlaneBracket::bracket(const LaurentPoly2& g, const LaurentPoly2& h) const {
    return structure * (g.partial(0) * h.partial(1) - g.partial(1) * h.partial(0));
}

LaurentPoly2 MonomialMap::apply(const LaurentPoly2& g) const {
    LaurentPoly2 out(g.flags());
    bool any = false;
    for (const auto& [e, c] : g.terms()) {
        LaurentPoly2 t = image_x.pow(e[0]) * image_y.pow(e[1]);
        out += t.scaled(c);
        any = true;
    }
    if (!any) return LaurentPoly2(g.flags());
    return out;
}

bool MonomialMap::is_involution() const {
    if (image_x.terms().size() != 1 || image_y.terms().size() != 1) return false;
    LaurentPoly2 x = LaurentPoly2::monomial(image_x.flags(), {1, 0});
    LaurentPoly2 y = LaurentPoly2::monomial(image_y.flags(), {0, 1});
    return apply(image_x) == x && apply(image_y) == y;
}

bool is_poisson_automorphism(const PlaneBracket& p, const MonomialMap& pi) {
    if (!pi.is_involution())
        throw std::invalid_argument("substitution is not an involutive monomial map");
    LaurentPoly2 lhs = p.bracket(pi.image_x, pi.image_y);
    LaurentPoly2 rhs = pi.apply(p.structure);
    return lhs == rhs;
}

SurfaceModel surface_model(SurfaceCase c) {
    SurfaceModel m;
    if (c == SurfaceCase::locenv) {
        std::array<bool, 2> flags{true, false};  // x invertible, y not
        m.plane.structure = LaurentPoly2::monomial(flags, {1, 0});  // {x,y} = x
        m.pi.image_x = LaurentPoly2::monomial(flags, {-1, 0});
        m.pi.image_y = LaurentPoly2::monomial(flags, {0, 1}, Rational(-1));
        // a1 = y^2, a2 = y x - y x^{-1}, a3 = x + x^{-1}
        LaurentPoly2 a1 = LaurentPoly2::monomial(flags, {0, 2});
        LaurentPoly2 a2 = LaurentPoly2::monomial(flags, {1, 1});
        a2 += LaurentPoly2::monomial(flags, {-1, 1}, Rational(-1));
        LaurentPoly2 a3 = LaurentPoly2::monomial(flags, {1, 0});
        a3 += LaurentPoly2::monomial(flags, {-1, 0});
        m.inv = {a1, a2, a3};
        // f = x1 (4 - x3^2) + x2^2
        CommPoly3 f = CommPoly3::monomial({1, 0, 0}, Rational(4));
        f -= CommPoly3::monomial({1, 0, 2});
        f += CommPoly3::monomial({0, 2, 0});
        m.potential = f;
    } else {
        std::array<bool, 2> flags{true, true};
        m.plane.structure = LaurentPoly2::monomial(flags, {1, 1});  // {x,y} = xy
        m.pi.image_x = LaurentPoly2::monomial(flags, {-1, 0});
        m.pi.image_y = LaurentPoly2::monomial(flags, {0, -1});
        // a1 = y + y^{-1}, a2 = x + x^{-1}, a3 = xy + x^{-1} y^{-1}
        LaurentPoly2 a1 = LaurentPoly2::monomial(flags, {0, 1});
        a1 += LaurentPoly2::monomial(flags, {0, -1});
        LaurentPoly2 a2 = LaurentPoly2::monomial(flags, {1, 0});
        a2 += LaurentPoly2::monomial(flags, {-1, 0});
        LaurentPoly2 a3 = LaurentPoly2::monomial(flags, {1, 1});
        a3 += LaurentPoly2::monomial(flags, {-1, -1});
        m.inv = {a1, a2, a3};
        // f = x1 x2 x3 - x1^2 - x2^2 - x3^2 + 4
        CommPoly3 f = CommPoly3::monomial({1, 1, 1});
        f -= CommPoly3::monomial({2, 0, 0});
        f -= CommPoly3::monomial({0, 2, 0});
        f -= CommPoly3::monomial({0, 0, 2});
        f += CommPoly3::constant(Rational(4));
        m.potential = f;
    }
    return m;
}

LaurentPoly2 substitute3(const CommPoly3& f, const std::array<LaurentPoly2, 3>& a) {
    LaurentPoly2 out(a[0].flags());
    for (const auto& [e, c] : f.terms()) {
        LaurentPoly2 t = a[0].pow(e[0]) * a[1].pow(e[1]) * a[2].pow(e[2]);
        out += t.scaled(c);
    }
    return out;
}

SurfaceReport verify_surface_model(SurfaceCase c) {
    SurfaceModel m = surface_model(c);
    SurfaceReport rep;
    rep.invariants_fixed = true;
    for (const auto& a : m.inv)
        if (m.pi.apply(a) != a) rep.invariants_fixed = false;
    rep.surface_relation = substitute3(m.potential, m.inv).is_zero();
    ExactBracket exact{m.potential};
    rep.brackets_match = true;
    const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {1, 2}, {2, 0}}};
    for (const auto& [i, j] : pairs) {
        LaurentPoly2 lhs = m.plane.bracket(m.inv[i], m.inv[j]);
        CommPoly3 target = exact.bracket(CommPoly3::var(i), CommPoly3::var(j));
        if (lhs != substitute3(target, m.inv)) rep.brackets_match = false;
    }
    return rep;
}

WeylReport weyl_invariant_ideal_check() {
    std::array<bool, 2> flags{false, false};
    PlaneBracket b{LaurentPoly2::monomial(flags, {0, 0})};  // {x,y} = 1
    LaurentPoly2 x2 = LaurentPoly2::monomial(flags, {2, 0});
    LaurentPoly2 xy = LaurentPoly2::monomial(flags, {1, 1});
    LaurentPoly2 y2 = LaurentPoly2::monomial(flags, {0, 2});
    WeylReport rep;
    rep.sq_x_vs_xy = (b.bracket(x2, xy) == x2.scaled(Rational(2)));
    rep.sq_x_vs_sq_y = (b.bracket(x2, y2) == xy.scaled(Rational(4)));
    rep.xy_vs_sq_y = (b.bracket(xy, y2) == y2.scaled(Rational(2)));
    return rep;
}

}  // namespace ncalg
