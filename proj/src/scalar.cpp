#include "ncalg/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ncalg {

namespace {

using Poly = std::vector<Rational>;

void trim_back(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim_back(r);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim_back(r);
    return r;
}

Poly poly_scale(Poly a, const Rational& c) {
    for (auto& x : a) x *= c;
    trim_back(a);
    return a;
}

// q, r with a = q*b + r
void poly_divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
    q.clear();
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    if (a.size() < b.size()) {
        r = std::move(a);
        return;
    }
    q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational lead = b.back();
    for (size_t i = a.size(); i-- >= b.size();) {
        Rational c = a[i] / lead;
        if (c != 0) {
            q[i - b.size() + 1] = c;
            for (size_t j = 0; j < b.size(); ++j) a[i - b.size() + 1 + j] -= c * b[j];
        }
        if (i == 0) break;
    }
    trim_back(a);
    r = std::move(a);
    trim_back(q);
}

Poly poly_gcd(Poly a, Poly b) {
    trim_back(a);
    trim_back(b);
    while (!b.empty()) {
        Poly q, r;
        poly_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) a = poly_scale(a, Rational(1) / a.back());
    return a;
}

Rational poly_eval(const Poly& p, const Rational& v) {
    Rational acc(0);
    for (size_t i = p.size(); i-- > 0;) {
        acc = acc * v + p[i];
        if (i == 0) break;
    }
    return acc;
}

// synthetic division by (p - lambda); remainder-zero reported through ok
Poly poly_div_linear(const Poly& p, const Rational& lambda, bool& ok) {
    if (p.empty()) {
        ok = true;
        return {};
    }
    Poly q(p.size() - 1, Rational(0));
    Rational acc(0);
    for (size_t i = p.size(); i-- > 0;) {
        if (i == p.size() - 1)
            acc = p[i];
        else
            acc = p[i] + acc * lambda;
        if (i > 0)
            q[i - 1] = acc;
        else
            ok = (acc == 0);
    }
    trim_back(q);
    return q;
}

std::string monomial_str(const Rational& c, const std::string& param, long e, bool lead_term) {
    std::ostringstream os;
    Rational a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (lead_term) {
        if (neg) os << "-";
    } else {
        os << (neg ? " - " : " + ");
    }
    if (e == 0) {
        os << rat_str(a);
    } else {
        if (a != 1) os << rat_str(a) << "*";
        os << param;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::string sum_str(long low, const Poly& num, const std::string& param) {
    if (num.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = num.size(); i-- > 0;) {
        if (num[i] == 0) continue;
        os << monomial_str(num[i], param, low + static_cast<long>(i), first);
        first = false;
    }
    return os.str();
}

}  // namespace

std::string mode_name(ScalarMode m) {
    switch (m) {
        case ScalarMode::rational: return "rational";
        case ScalarMode::polynomial: return "polynomial";
        case ScalarMode::laurent: return "laurent";
        case ScalarMode::ratfunc: return "ratfunc";
    }
    return "?";
}

Scalar::Scalar(Rational r) {
    mode_ = ScalarMode::rational;
    if (r != 0) num_.push_back(std::move(r));
}

Scalar Scalar::zero(ScalarMode mode, const std::string& param) {
    Scalar s;
    s.mode_ = mode;
    s.param_ = (mode == ScalarMode::rational) ? std::string() : param;
    return s;
}

Scalar Scalar::one(ScalarMode mode, const std::string& param) {
    Scalar s = zero(mode, param);
    s.num_.push_back(Rational(1));
    return s;
}

Scalar Scalar::param_power(ScalarMode mode, const std::string& param, long exp, const Rational& c) {
    if (mode == ScalarMode::rational)
        throw std::invalid_argument("parameter power needs a parametric mode");
    if (mode == ScalarMode::polynomial && exp < 0)
        throw std::domain_error("negative parameter power in polynomial mode");
    Scalar s = zero(mode, param);
    if (c != 0) {
        s.low_ = exp;
        s.num_.push_back(c);
    }
    return s;
}

Scalar Scalar::from_coeffs(ScalarMode mode, const std::string& param, long low,
                           std::vector<Rational> coeffs) {
    Scalar s = zero(mode, param);
    s.low_ = low;
    s.num_ = std::move(coeffs);
    s.normalize();
    return s;
}

void Scalar::normalize() {
    size_t lead_zeros = 0;
    while (lead_zeros < num_.size() && num_[lead_zeros] == 0) ++lead_zeros;
    if (lead_zeros) {
        num_.erase(num_.begin(), num_.begin() + static_cast<long>(lead_zeros));
        low_ += static_cast<long>(lead_zeros);
    }
    trim_back(num_);
    if (num_.empty()) {
        low_ = 0;
        den_ = {Rational(1)};
        return;
    }
    if (mode_ == ScalarMode::ratfunc) {
        size_t k = 0;
        while (k < den_.size() && den_[k] == 0) ++k;
        if (k) {
            den_.erase(den_.begin(), den_.begin() + static_cast<long>(k));
            low_ -= static_cast<long>(k);
        }
        Poly g = poly_gcd(num_, den_);
        if (g.size() > 1) {
            Poly q, r;
            poly_divmod(num_, g, q, r);
            num_ = q;
            poly_divmod(den_, g, q, r);
            den_ = q;
        }
        const Rational lead = den_.back();
        if (lead != 1) {
            den_ = poly_scale(den_, Rational(1) / lead);
            num_ = poly_scale(num_, Rational(1) / lead);
        }
    } else {
        den_ = {Rational(1)};
    }
    if (mode_ == ScalarMode::rational && (low_ != 0 || num_.size() > 1))
        throw std::logic_error("parameter leaked into a rational scalar");
    if (mode_ == ScalarMode::polynomial && low_ < 0)
        throw std::domain_error("negative parameter power in polynomial mode");
}

bool Scalar::is_one() const {
    return num_.size() == 1 && low_ == 0 && num_[0] == 1 && den_.size() == 1;
}

bool Scalar::is_unit() const {
    if (is_zero()) return false;
    switch (mode_) {
        case ScalarMode::rational: return true;
        case ScalarMode::polynomial: return low_ == 0 && num_.size() == 1;
        case ScalarMode::laurent: return num_.size() == 1;
        case ScalarMode::ratfunc: return true;
    }
    return false;
}

bool Scalar::is_rational() const {
    return is_zero() || (low_ == 0 && num_.size() == 1 && den_.size() == 1);
}

Rational Scalar::rational_value() const {
    if (is_zero()) return Rational(0);
    if (!is_rational()) throw std::domain_error("scalar is not a constant: " + str());
    return num_[0];
}

void Scalar::combine_modes(const Scalar& a, const Scalar& b, ScalarMode& mode,
                           std::string& param) {
    if (a.mode_ == ScalarMode::rational) {
        mode = b.mode_;
        param = b.param_;
        return;
    }
    if (b.mode_ == ScalarMode::rational) {
        mode = a.mode_;
        param = a.param_;
        return;
    }
    if (a.mode_ != b.mode_ || a.param_ != b.param_)
        throw std::invalid_argument("scalar mode mismatch: " + mode_name(a.mode_) + "(" +
                                    a.param_ + ") vs " + mode_name(b.mode_) + "(" + b.param_ +
                                    ")");
    mode = a.mode_;
    param = a.param_;
}

Scalar Scalar::promoted(ScalarMode mode, const std::string& param) const {
    Scalar r = *this;
    r.mode_ = mode;
    r.param_ = (mode == ScalarMode::rational) ? std::string() : param;
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    ScalarMode mode;
    std::string param;
    combine_modes(*this, o, mode, param);
    Scalar a = promoted(mode, param), b = o.promoted(mode, param);
    Scalar r = Scalar::zero(mode, param);
    if (mode == ScalarMode::ratfunc && (a.den_ != b.den_)) {
        // p^la na/da + p^lb nb/db over the common denominator da*db
        long lc = std::min(a.low_, b.low_);
        Poly na = a.num_, nb = b.num_;
        na.insert(na.begin(), static_cast<size_t>(a.low_ - lc), Rational(0));
        nb.insert(nb.begin(), static_cast<size_t>(b.low_ - lc), Rational(0));
        r.low_ = lc;
        r.num_ = poly_add(poly_mul(na, b.den_), poly_mul(nb, a.den_));
        r.den_ = poly_mul(a.den_, b.den_);
    } else {
        long lc = std::min(a.low_, b.low_);
        Poly na = a.num_, nb = b.num_;
        na.insert(na.begin(), static_cast<size_t>(a.low_ - lc), Rational(0));
        nb.insert(nb.begin(), static_cast<size_t>(b.low_ - lc), Rational(0));
        r.low_ = lc;
        r.num_ = poly_add(na, nb);
        r.den_ = a.den_;
    }
    r.normalize();
    *this = std::move(r);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    ScalarMode mode;
    std::string param;
    combine_modes(*this, o, mode, param);
    Scalar a = promoted(mode, param), b = o.promoted(mode, param);
    Scalar r = Scalar::zero(mode, param);
    r.low_ = a.low_ + b.low_;
    r.num_ = poly_mul(a.num_, b.num_);
    r.den_ = poly_mul(a.den_, b.den_);
    r.normalize();
    *this = std::move(r);
    return *this;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    switch (mode_) {
        case ScalarMode::rational:
            return Scalar(Rational(1) / num_[0]);
        case ScalarMode::polynomial:
            if (!is_unit())
                throw std::domain_error("non-unit in " + param_ + "-polynomial ring: " + str());
            return param_power(mode_, param_, 0, Rational(1) / num_[0]);
        case ScalarMode::laurent:
            if (!is_unit())
                throw std::domain_error("non-unit in Laurent ring: " + str());
            return param_power(mode_, param_, -low_, Rational(1) / num_[0]);
        case ScalarMode::ratfunc: {
            Scalar r = zero(mode_, param_);
            r.low_ = -low_;
            r.num_ = den_;
            r.den_ = num_;
            r.normalize();
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::pow(long k) const {
    if (k < 0) return inv().pow(-k);
    Scalar acc = is_zero() || mode_ == ScalarMode::rational ? Scalar(Rational(1))
                                                            : one(mode_, param_);
    Scalar base = *this;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

Scalar Scalar::specialize(const Rational& v) const {
    if (mode_ == ScalarMode::rational) return *this;
    if (is_zero()) return Scalar(Rational(0));
    if (low_ < 0 && v == 0)
        throw std::domain_error("pole: parameter " + param_ + " specialized to 0 in " + str());
    Rational dv = poly_eval(den_, v);
    if (dv == 0)
        throw std::domain_error("pole: denominator vanishes at " + rat_str(v) + " in " + str());
    Rational nv = poly_eval(num_, v) * rat_pow(v, low_);
    return Scalar(nv / dv);
}

bool Scalar::divisible_by_param_minus(const Rational& lambda) const {
    if (is_zero()) return true;
    if (mode_ == ScalarMode::rational) return false;
    if (mode_ == ScalarMode::ratfunc) return true;
    if (lambda == 0) {
        if (mode_ == ScalarMode::laurent) return true;
        return low_ >= 1;
    }
    return poly_eval(num_, lambda) == 0;
}

Scalar Scalar::divided_by_param_minus(const Rational& lambda) const {
    if (is_zero()) return *this;
    if (mode_ == ScalarMode::rational)
        throw std::domain_error("no central parameter in rational mode");
    Scalar r = *this;
    if (lambda == 0) {
        if (mode_ == ScalarMode::polynomial && low_ < 1)
            throw std::domain_error("not divisible by " + param_ + ": " + str());
        r.low_ -= 1;
        r.normalize();
        return r;
    }
    if (mode_ == ScalarMode::ratfunc) {
        Scalar lin = zero(mode_, param_);
        lin.low_ = 0;
        lin.num_ = {-lambda, Rational(1)};
        lin.normalize();
        return *this * lin.inv();
    }
    bool ok = false;
    Poly q = poly_div_linear(num_, lambda, ok);
    if (!ok)
        throw std::domain_error("not divisible by (" + param_ + " - " + rat_str(lambda) +
                                "): " + str());
    r.num_ = std::move(q);
    r.normalize();
    return r;
}

long Scalar::net_param_degree() const {
    if (is_zero() || mode_ == ScalarMode::rational) return 0;
    return low_ + static_cast<long>(num_.size()) - 1 - (static_cast<long>(den_.size()) - 1);
}

std::map<long, Rational> Scalar::parts() const {
    if (den_.size() != 1)
        throw std::domain_error("parameter-part decomposition requires a denominator-free value");
    std::map<long, Rational> out;
    for (size_t i = 0; i < num_.size(); ++i)
        if (num_[i] != 0) out[low_ + static_cast<long>(i)] = num_[i];
    return out;
}

Scalar Scalar::convert(ScalarMode target, const std::string& param) const {
    if (target == mode_ && (mode_ == ScalarMode::rational || param == param_)) return *this;
    if (mode_ != ScalarMode::rational && !param_.empty() && param != param_)
        throw std::invalid_argument("parameter rename from " + param_ + " to " + param);
    if (is_zero()) return zero(target, param);
    switch (target) {
        case ScalarMode::rational: {
            if (!is_rational())
                throw std::domain_error("value is not rational: " + str());
            return Scalar(num_[0]);
        }
        case ScalarMode::polynomial: {
            if (den_.size() != 1 || low_ < 0)
                throw std::domain_error("value is not polynomial in " + param + ": " + str());
            Scalar r = *this;
            r.mode_ = target;
            r.param_ = param;
            return r;
        }
        case ScalarMode::laurent: {
            if (den_.size() != 1)
                throw std::domain_error("value is not Laurent in " + param + ": " + str());
            Scalar r = *this;
            r.mode_ = target;
            r.param_ = param;
            return r;
        }
        case ScalarMode::ratfunc: {
            Scalar r = *this;
            r.mode_ = target;
            r.param_ = param;
            r.normalize();
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

bool Scalar::single_monomial(Rational& coeff_out, long& exp_out) const {
    if (num_.size() == 1 && den_.size() == 1) {
        coeff_out = num_[0];
        exp_out = low_;
        return true;
    }
    return false;
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    if (den_.size() == 1) return sum_str(low_, num_, param_);
    std::string n = sum_str(low_, num_, param_);
    std::string d = sum_str(0, den_, param_);
    std::ostringstream os;
    bool simple_num = true;
    size_t terms = 0;
    for (const auto& c : num_)
        if (c != 0) ++terms;
    simple_num = (terms == 1 && num_.back() > 0);
    if (simple_num)
        os << n;
    else
        os << "(" << n << ")";
    os << "/(" << d << ")";
    return os.str();
}

bool Scalar::operator==(const Scalar& o) const {
    if (mode_ == o.mode_ && param_ == o.param_)
        return low_ == o.low_ && num_ == o.num_ && den_ == o.den_;
    // Allow comparing a plain rational against its image in a parametric mode.
    ScalarMode mode;
    std::string param;
    combine_modes(*this, o, mode, param);
    Scalar a = promoted(mode, param), b = o.promoted(mode, param);
    return a.low_ == b.low_ && a.num_ == b.num_ && a.den_ == b.den_;
}

}  // namespace ncalg
