#include "ncalg/skew.hpp"

#include <sstream>
#include <stdexcept>

namespace ncalg {

BaseElem BaseElem::constant(Scalar c) {
    BaseElem r;
    if (!c.is_zero()) r.c_.emplace(0, std::move(c));
    return r;
}

BaseElem BaseElem::var_power(long e, Scalar c) {
    BaseElem r;
    if (!c.is_zero()) r.c_.emplace(e, std::move(c));
    return r;
}

void BaseElem::add(long e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = c_.find(e);
    if (it == c_.end()) {
        c_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

BaseElem BaseElem::operator-() const {
    BaseElem r;
    for (const auto& [e, c] : c_) r.c_.emplace(e, -c);
    return r;
}

BaseElem& BaseElem::operator+=(const BaseElem& o) {
    for (const auto& [e, c] : o.c_) add(e, c);
    return *this;
}

BaseElem& BaseElem::operator-=(const BaseElem& o) {
    for (const auto& [e, c] : o.c_) add(e, -c);
    return *this;
}

BaseElem operator*(const BaseElem& a, const BaseElem& b) {
    BaseElem r;
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) r.add(ea + eb, ca * cb);
    return r;
}

BaseElem BaseElem::scaled(const Scalar& c) const {
    BaseElem r;
    for (const auto& [e, cc] : c_) r.add(e, cc * c);
    return r;
}

BaseElem BaseElem::pow(long k) const {
    if (k < 0) {
        if (c_.size() != 1 || !c_.begin()->second.is_unit())
            throw std::domain_error("negative power of a non-invertible base element");
        BaseElem inv = var_power(-c_.begin()->first, c_.begin()->second.inv());
        return inv.pow(-k);
    }
    BaseElem acc = constant(Scalar(1));
    for (long i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

std::string BaseElem::str(const BaseRing& ring) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mono_c;
        long mono_e = 0;
        bool simple = c.single_monomial(mono_c, mono_e);
        std::string body;
        bool neg = false;
        if (simple) {
            neg = mono_c < 0;
            Rational mag = neg ? Rational(-mono_c) : mono_c;
            std::ostringstream piece;
            bool have = false;
            if (mag != 1 || (mono_e == 0 && e == 0)) {
                piece << rat_str(mag);
                have = true;
            }
            if (mono_e != 0) {
                if (have) piece << "*";
                piece << c.parameter();
                if (mono_e != 1) piece << "^" << mono_e;
                have = true;
            }
            if (e != 0) {
                if (have) piece << "*";
                piece << ring.var;
                if (e != 1) piece << "^" << e;
            }
            body = piece.str();
        } else {
            std::ostringstream piece;
            piece << "(" << c.str() << ")";
            if (e != 0) {
                piece << "*" << ring.var;
                if (e != 1) piece << "^" << e;
            }
            body = piece.str();
        }
        if (first)
            os << (neg ? "-" : "") << body;
        else
            os << (neg ? " - " : " + ") << body;
        first = false;
    }
    return os.str();
}

BaseMap::BaseMap(BaseRing ring, BaseElem image, BaseElem inverse_image)
    : ring_(std::move(ring)), img_(std::move(image)), inv_img_(std::move(inverse_image)) {
    check_shape(img_);
    check_shape(inv_img_);
    BaseElem y = BaseElem::var_power(1);
    if (substitute(ring_, img_, inv_img_) != y || substitute(ring_, inv_img_, img_) != y)
        throw std::invalid_argument("declared inverse does not invert the base map");
}

BaseMap BaseMap::identity(BaseRing ring) {
    BaseElem y = BaseElem::var_power(1);
    return BaseMap(std::move(ring), y, y);
}

void BaseMap::check_shape(const BaseElem& im) const {
    if (ring_.laurent) {
        // unit times y or y^{-1}
        if (im.coeffs().size() != 1)
            throw std::invalid_argument("Laurent base map image must be a unit monomial");
        const auto& [e, c] = *im.coeffs().begin();
        if ((e != 1 && e != -1) || !c.is_unit())
            throw std::invalid_argument("Laurent base map image must be a unit times y^{+-1}");
    } else {
        // degree one with a unit leading coefficient, no negative powers
        long top = -1;
        for (const auto& [e, c] : im.coeffs()) {
            (void)c;
            if (e < 0)
                throw std::invalid_argument("negative power of y in a polynomial base map");
            top = std::max(top, e);
        }
        if (top != 1 || !im.coeffs().at(1).is_unit())
            throw std::invalid_argument("polynomial base map image must be degree one with a unit leading coefficient");
    }
}

BaseElem BaseMap::substitute(const BaseRing& ring, const BaseElem& r, const BaseElem& img) {
    (void)ring;
    BaseElem out;
    for (const auto& [e, c] : r.coeffs()) out += img.pow(e).scaled(c);
    return out;
}

BaseElem BaseMap::apply(const BaseElem& r) const { return substitute(ring_, r, img_); }

BaseElem BaseMap::apply_inverse(const BaseElem& r) const { return substitute(ring_, r, inv_img_); }

BaseElem BaseMap::apply_power(const BaseElem& r, long n) const {
    BaseElem out = r;
    for (long i = 0; i < (n >= 0 ? n : -n); ++i) out = (n >= 0) ? apply(out) : apply_inverse(out);
    return out;
}

BaseMap BaseMap::inverse() const { return BaseMap(ring_, inv_img_, img_); }

BaseMap BaseMap::compose(const BaseMap& inner) const {
    // (this o inner)(y); inverse is inner^{-1} o this^{-1}
    BaseElem im = apply(inner.image());
    BaseElem inv = inner.apply_inverse(inv_img_);
    return BaseMap(ring_, im, inv);
}

bool is_reversible(const BaseMap& alpha, const BaseMap& gamma) {
    if (!(alpha.ring() == gamma.ring())) return false;
    BaseElem y = BaseElem::var_power(1);
    if (gamma.apply(gamma.apply(y)) != y) return false;
    BaseElem lhs = gamma.apply(alpha.apply(gamma.apply(y)));
    return lhs == alpha.apply_inverse(y);
}

SkewElem SkewElem::from_base(BaseElem r) { return x_power(0, std::move(r)); }

SkewElem SkewElem::x_power(long i, BaseElem r) {
    SkewElem s;
    if (!r.is_zero()) s.c_.emplace(i, std::move(r));
    return s;
}

void SkewElem::add(long i, const BaseElem& r) {
    if (r.is_zero()) return;
    auto it = c_.find(i);
    if (it == c_.end()) {
        c_.emplace(i, r);
    } else {
        it->second += r;
        if (it->second.is_zero()) c_.erase(it);
    }
}

SkewElem SkewElem::operator-() const {
    SkewElem r;
    for (const auto& [i, ri] : c_) r.c_.emplace(i, -ri);
    return r;
}

SkewElem& SkewElem::operator+=(const SkewElem& o) {
    for (const auto& [i, ri] : o.c_) add(i, ri);
    return *this;
}

SkewElem& SkewElem::operator-=(const SkewElem& o) {
    for (const auto& [i, ri] : o.c_) add(i, -ri);
    return *this;
}

SkewElem SkewElem::scaled(const Scalar& c) const {
    SkewElem r;
    for (const auto& [i, ri] : c_) r.add(i, ri.scaled(c));
    return r;
}

std::string SkewElem::str(const BaseRing& ring, const std::string& xname) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [i, r] = *it;
        if (!first) os << " + ";
        bool wrap = r.coeffs().size() > 1;
        os << (wrap ? "(" : "") << r.str(ring) << (wrap ? ")" : "");
        if (i != 0) {
            os << "*" << xname;
            if (i != 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

ReversingContext::ReversingContext(BaseRing ring, BaseMap alpha, BaseMap gamma)
    : ring_(std::move(ring)), alpha_(std::move(alpha)), gamma_(std::move(gamma)) {
    if (!(alpha_.ring() == ring_) || !(gamma_.ring() == ring_))
        throw std::invalid_argument("maps defined over a different base ring");
    BaseElem y = BaseElem::var_power(1);
    if (gamma_.apply(gamma_.apply(y)) != y)
        throw std::invalid_argument("gamma is not an involution");
    if (!is_reversible(alpha_, gamma_))
        throw std::invalid_argument("alpha is not gamma-reversible");
}

SkewElem ReversingContext::mul(const SkewElem& a, const SkewElem& b) const {
    SkewElem out;
    for (const auto& [i, ri] : a.coeffs())
        for (const auto& [j, sj] : b.coeffs()) out.add(i + j, ri * alpha_.apply_power(sj, i));
    return out;
}

SkewElem ReversingContext::pow(const SkewElem& a, long k) const {
    if (k < 0) throw std::domain_error("negative skew power not supported");
    SkewElem acc = SkewElem::from_base(BaseElem::constant(ring_.scalar_one()));
    for (long i = 0; i < k; ++i) acc = mul(acc, a);
    return acc;
}

SkewElem ReversingContext::theta(const SkewElem& s) const {
    SkewElem out;
    for (const auto& [i, ri] : s.coeffs()) out.add(-i, gamma_.apply(ri));
    return out;
}

bool ReversingContext::is_invariant(const SkewElem& s) const { return theta(s) == s; }

SkewElem ReversingContext::s_element(long n, const BaseElem& r) const {
    if (n < 0) throw std::invalid_argument("s_n needs n >= 0");
    SkewElem out;
    out.add(n, r);
    out.add(-n, gamma_.apply(r));
    return out;
}

SkewElem ReversingContext::eval(const NCPoly& p, const std::vector<SkewElem>& assignment) const {
    SkewElem acc;
    for (const auto& [w, c] : p.terms()) {
        SkewElem term = SkewElem::from_base(BaseElem::constant(ring_.scalar_one())).scaled(c);
        for (char ch : w) term = mul(term, assignment.at(static_cast<unsigned char>(ch)));
        acc += term;
    }
    return acc;
}

SIdentityReport verify_s_identities(const ReversingContext& ctx, const BaseElem& r,
                                    const BaseElem& rprime) {
    SIdentityReport rep;
    const BaseMap& alpha = ctx.alpha();
    const BaseMap& gamma = ctx.gamma();
    BaseElem one = BaseElem::constant(ctx.ring().scalar_one());

    auto s0 = [&](const BaseElem& u) { return ctx.s_element(0, u); };
    auto s1 = [&](const BaseElem& u) { return ctx.s_element(1, u); };

    BaseElem twist = gamma.apply(r) - alpha.apply_power(gamma.apply(r), 2);

    SkewElem lhs1 = ctx.mul(s0(r), s1(rprime)) - ctx.mul(s1(rprime), s0(alpha.apply_inverse(r)));
    rep.product_rule = (lhs1 == s1(twist * rprime));

    SkewElem lhs2 = ctx.mul(s0(r), s1(one)) - ctx.mul(s1(one), s0(alpha.apply_inverse(r)));
    rep.unit_rule = (lhs2 == s1(twist));

    SkewElem lhs3 = ctx.mul(s1(r), s1(one)) - ctx.mul(s1(one), s1(alpha.apply_inverse(r)));
    rep.shifted_rule = (lhs3 == s0(r - alpha.apply_power(r, -2)));

    rep.recursion = true;
    for (long i = 1; i <= 4; ++i) {
        SkewElem lhs = ctx.s_element(i + 1, r);
        SkewElem rhs = ctx.mul(ctx.s_element(i, r), s1(one)) - ctx.s_element(i - 1, r);
        if (lhs != rhs) rep.recursion = false;
    }
    return rep;
}

HomReport verify_presentation_hom(const ReductionSystem& sys, const ReversingContext& ctx,
                                  const std::vector<SkewElem>& assignment,
                                  const std::vector<NCPoly>& kernel_probes) {
    if (assignment.size() != sys.alphabet().size())
        throw std::invalid_argument("assignment size does not match the alphabet");
    HomReport rep;
    rep.assignments_invariant = true;
    for (const SkewElem& s : assignment)
        if (!ctx.is_invariant(s)) rep.assignments_invariant = false;
    if (!rep.assignments_invariant)
        throw std::invalid_argument("assignment is not theta-invariant");
    rep.relations_hold = true;
    for (size_t i = 0; i < sys.relations().size(); ++i) {
        SkewElem value = ctx.eval(sys.relation_poly(i), assignment);
        if (!value.is_zero()) rep.relations_hold = false;
        rep.relation_residuals.push_back(std::move(value));
    }
    rep.probes_vanish = true;
    for (const NCPoly& probe : kernel_probes) {
        SkewElem value = ctx.eval(probe, assignment);
        if (!value.is_zero()) rep.probes_vanish = false;
        rep.probe_values.push_back(std::move(value));
    }
    return rep;
}

ConjugacyReport check_conjugacy(const ReversingContext& ctx, const BaseMap& beta) {
    ConjugacyReport rep;
    BaseElem y = BaseElem::var_power(1);
    bool beta_rev = is_reversible(beta, ctx.gamma());
    bool beta_sq = (beta.apply(beta.apply(y)) == ctx.alpha().apply_inverse(y));
    rep.precondition = beta_rev && beta_sq;
    if (!rep.precondition) return rep;

    // theta' restricts to alpha gamma on the base ring and sends x to x^{-1}.
    BaseMap alphagamma = ctx.alpha().compose(ctx.gamma());
    auto theta_prime = [&](const SkewElem& s) {
        SkewElem out;
        for (const auto& [i, ri] : s.coeffs()) out.add(-i, alphagamma.apply(ri));
        return out;
    };
    auto beta_ext = [&](const SkewElem& s, bool inverse) {
        SkewElem out;
        for (const auto& [i, ri] : s.coeffs())
            out.add(i, inverse ? beta.apply_inverse(ri) : beta.apply(ri));
        return out;
    };

    SkewElem ys = SkewElem::from_base(y);
    SkewElem xs = SkewElem::x_power(1, BaseElem::constant(ctx.ring().scalar_one()));
    auto conj = [&](const SkewElem& s) { return beta_ext(theta_prime(beta_ext(s, true)), false); };
    rep.conjugate_on_base = (conj(ys) == ctx.theta(ys));
    rep.conjugate_on_x = (conj(xs) == ctx.theta(xs));
    return rep;
}

}  // namespace ncalg
