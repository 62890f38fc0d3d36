#include "ncalg/freealg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ncalg {

int Alphabet::index_of(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

Alphabet make_alphabet(std::initializer_list<std::string> names) {
    Alphabet a;
    for (const auto& n : names) {
        if (n.empty()) throw std::invalid_argument("empty generator name");
        if (a.index_of(n) >= 0) throw std::invalid_argument("duplicate generator: " + n);
        a.names.push_back(n);
    }
    return a;
}

Word make_word(std::initializer_list<int> letters) {
    Word w;
    for (int i : letters) w.push_back(static_cast<char>(i));
    return w;
}

std::string word_str(const Word& w, const Alphabet& a) {
    if (w.empty()) return "1";
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!first) os << "*";
        os << a.names.at(static_cast<unsigned char>(w[i]));
        if (j - i > 1) os << "^" << (j - i);
        i = j;
        first = false;
    }
    return os.str();
}

long DegreeFunction::word_degree(const Word& w) const {
    long d = 0;
    for (char ch : w) d += degrees.at(static_cast<unsigned char>(ch));
    return d;
}

long DegreeFunction::zero_letter_count(const Word& w) const {
    long e = 0;
    for (char ch : w)
        if (degrees.at(static_cast<unsigned char>(ch)) == 0) ++e;
    return e;
}

long DegreeFunction::term_degree(const Word& w, const Scalar& c) const {
    long pd = std::max(0L, c.net_param_degree());
    return word_degree(w) + param_degree * pd;
}

DegreeFunction unit_degrees(size_t n) {
    DegreeFunction d;
    d.degrees.assign(n, 1);
    return d;
}

int MonomialOrder::compare(const Word& a, const Word& b) const {
    long da = degree.word_degree(a), db = degree.word_degree(b);
    if (da != db) return da < db ? -1 : 1;
    if (kind != OrderKind::dlex) {
        long ea = degree.zero_letter_count(a), eb = degree.zero_letter_count(b);
        if (ea != eb) {
            int more_is_larger = (kind == OrderKind::augdlex) ? 1 : -1;
            return (ea < eb ? -1 : 1) * more_is_larger;
        }
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;  // lower index ranks higher
    }
    return 0;
}

NCPoly NCPoly::scalar(Scalar c) { return word(Word(), std::move(c)); }

NCPoly NCPoly::word(Word w, Scalar c) {
    NCPoly p;
    if (!c.is_zero()) p.terms_.emplace(std::move(w), std::move(c));
    return p;
}

Scalar NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
    return r;
}

NCPoly NCPoly::scaled(const Scalar& c) const {
    NCPoly r;
    for (const auto& [w, cw] : terms_) r.add_term(w, cw * c);
    return r;
}

NCPoly NCPoly::pow(long k) const {
    if (k < 0) {
        if (terms_.size() == 1 && terms_.begin()->first.empty())
            return NCPoly::scalar(terms_.begin()->second.pow(k));
        throw std::domain_error("negative power of a non-scalar polynomial");
    }
    NCPoly acc = NCPoly::scalar(Scalar(1));
    for (long i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

NCPoly commutator(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

NCPoly cyclic_derivative(const NCPoly& p, int gen) {
    NCPoly r;
    const char g = static_cast<char>(gen);
    for (const auto& [w, c] : p.terms()) {
        for (size_t i = 0; i < w.size(); ++i) {
            if (w[i] != g) continue;
            r.add_term(w.substr(i + 1) + w.substr(0, i), c);
        }
    }
    return r;
}

Scalar eval_at_scalars(const NCPoly& p, const std::vector<Scalar>& values) {
    Scalar acc(0);
    for (const auto& [w, c] : p.terms()) {
        Scalar t = c;
        for (char ch : w) t *= values.at(static_cast<unsigned char>(ch));
        acc += t;
    }
    return acc;
}

std::string poly_str(const NCPoly& p, const Alphabet& a, const MonomialOrder* order) {
    if (p.is_zero()) return "0";
    MonomialOrder fallback{OrderKind::dlex, unit_degrees(a.size())};
    const MonomialOrder& ord = order ? *order : fallback;
    std::vector<const std::pair<const Word, Scalar>*> items;
    for (const auto& t : p.terms()) items.push_back(&t);
    std::sort(items.begin(), items.end(),
              [&](auto* x, auto* y) { return ord.compare(x->first, y->first) > 0; });

    std::ostringstream os;
    bool first = true;
    for (auto* t : items) {
        const Word& w = t->first;
        const Scalar& c = t->second;
        Rational mono_c;
        long mono_e = 0;
        bool simple = c.single_monomial(mono_c, mono_e);
        if (simple) {
            bool neg = mono_c < 0;
            Rational mag = neg ? Rational(-mono_c) : mono_c;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            std::ostringstream piece;
            bool have_coeff = false;
            if (mag != 1 || (mono_e == 0 && w.empty())) {
                piece << rat_str(mag);
                have_coeff = true;
            }
            if (mono_e != 0) {
                if (have_coeff) piece << "*";
                piece << c.parameter();
                if (mono_e != 1) piece << "^" << mono_e;
                have_coeff = true;
            }
            if (!w.empty()) {
                if (have_coeff) piece << "*";
                piece << word_str(w, a);
            } else if (!have_coeff) {
                piece << "1";
            }
            os << piece.str();
        } else {
            if (!first) os << " + ";
            os << "(" << c.str() << ")";
            if (!w.empty()) os << "*" << word_str(w, a);
        }
        first = false;
    }
    return os.str();
}

}  // namespace ncalg
