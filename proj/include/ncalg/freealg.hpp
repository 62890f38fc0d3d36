#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "ncalg/scalar.hpp"

namespace ncalg {

// Generator alphabet. Index order is lexicographic precedence: the generator
// declared first compares highest.
struct Alphabet {
    std::vector<std::string> names;

    size_t size() const { return names.size(); }
    int index_of(const std::string& name) const;
    bool operator==(const Alphabet& o) const { return names == o.names; }
};

Alphabet make_alphabet(std::initializer_list<std::string> names);

// A word is a sequence of generator indices; the empty word is the identity.
using Word = std::string;

Word make_word(std::initializer_list<int> letters);
std::string word_str(const Word& w, const Alphabet& a);

struct DegreeFunction {
    std::vector<long> degrees;  // one entry per generator
    long param_degree = 0;

    long word_degree(const Word& w) const;
    long zero_letter_count(const Word& w) const;  // the complementary count e
    // degree of the term c*w: word degree plus param_degree * max(0, net
    // parameter degree of c)
    long term_degree(const Word& w, const Scalar& c) const;
};

DegreeFunction unit_degrees(size_t n);

enum class OrderKind {
    dlex,         // degree, then length, then precedence-lexicographic
    augdlex,      // degree, then zero-letter count (more = larger), then length-lex
    augdlex_low,  // degree, then zero-letter count (more = smaller), then length-lex
};

struct MonomialOrder {
    OrderKind kind = OrderKind::dlex;
    DegreeFunction degree;

    int compare(const Word& a, const Word& b) const;  // -1, 0, 1
    bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }
    bool greater(const Word& a, const Word& b) const { return compare(a, b) > 0; }
};

// Finite Scalar-linear combination of words; no zero coefficients stored.
class NCPoly {
public:
    NCPoly() = default;
    static NCPoly scalar(Scalar c);
    static NCPoly word(Word w, Scalar c);
    static NCPoly word(Word w) { return word(std::move(w), Scalar(1)); }
    static NCPoly gen(int i) { return word(Word(1, static_cast<char>(i))); }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Word, Scalar>& terms() const { return terms_; }
    Scalar coeff(const Word& w) const;

    void add_term(const Word& w, const Scalar& c);

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    NCPoly scaled(const Scalar& c) const;
    NCPoly pow(long k) const;  // k >= 0, or scalar-valued for k < 0

    bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const NCPoly& o) const { return !(*this == o); }

private:
    std::map<Word, Scalar> terms_;
};

NCPoly commutator(const NCPoly& a, const NCPoly& b);

// For every occurrence w = u g v of the generator, contribute coeff(w) * (v u).
NCPoly cyclic_derivative(const NCPoly& p, int gen);

// Substitute scalars for the generators (index-addressed).
Scalar eval_at_scalars(const NCPoly& p, const std::vector<Scalar>& values);

// Canonical text form, terms descending under the given order (or a unit-degree
// dlex fallback).
std::string poly_str(const NCPoly& p, const Alphabet& a, const MonomialOrder* order = nullptr);

}  // namespace ncalg
