#include "ncalg/rewrite.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ncalg {

namespace {

bool contains_factor(const Word& w, const Word& factor) {
    return w.find(factor) != Word::npos;
}

bool ends_with(const Word& w, const Word& suffix) {
    return w.size() >= suffix.size() &&
           w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct Site {
    Word word;
    size_t pos;
    size_t rel;
};

std::vector<Site> collect_sites(const ReductionSystem& sys, const NCPoly& p) {
    std::vector<Site> sites;
    for (const auto& [w, c] : p.terms()) {
        (void)c;
        for (size_t r = 0; r < sys.relations().size(); ++r) {
            const Word& lead = sys.relations()[r].lead;
            size_t pos = w.find(lead);
            while (pos != Word::npos) {
                sites.push_back({w, pos, r});
                pos = w.find(lead, pos + 1);
            }
        }
    }
    return sites;
}

NCPoly apply_site(const ReductionSystem& sys, const NCPoly& p, const Site& s) {
    const Relation& rel = sys.relations()[s.rel];
    Scalar cw = p.coeff(s.word);
    NCPoly prefix = NCPoly::word(s.word.substr(0, s.pos));
    NCPoly suffix = NCPoly::word(s.word.substr(s.pos + rel.lead.size()));
    NCPoly delta = prefix * (rel.replacement - NCPoly::word(rel.lead)) * suffix;
    return p + delta.scaled(cw);
}

NCPoly poly_convert(const NCPoly& p, ScalarMode mode, const std::string& param) {
    NCPoly r;
    for (const auto& [w, c] : p.terms()) r.add_term(w, c.convert(mode, param));
    return r;
}

}  // namespace

ReductionSystem::ReductionSystem(Alphabet alphabet, ScalarMode mode, std::string param,
                                 std::vector<Relation> relations, Orientation orientation,
                                 std::optional<MonomialOrder> order, long step_cap)
    : alphabet_(std::move(alphabet)),
      mode_(mode),
      param_(std::move(param)),
      relations_(std::move(relations)),
      orientation_(orientation),
      step_cap_(step_cap) {
    if (order) {
        order_ = *order;
        has_declared_order_ = true;
    } else {
        order_ = MonomialOrder{OrderKind::dlex, unit_degrees(alphabet_.size())};
    }
    validate();
}

void ReductionSystem::validate() const {
    if (orientation_ == Orientation::by_order && !has_declared_order_)
        throw std::invalid_argument("order-oriented system without a declared order");
    for (size_t i = 0; i < relations_.size(); ++i) {
        const Word& lead = relations_[i].lead;
        if (lead.empty()) throw std::invalid_argument("empty leading word");
        for (char ch : lead)
            if (static_cast<size_t>(static_cast<unsigned char>(ch)) >= alphabet_.size())
                throw std::invalid_argument("leading word uses an unknown generator");
        for (size_t j = 0; j < relations_.size(); ++j) {
            if (i == j) continue;
            if (contains_factor(relations_[j].lead, lead))
                throw std::invalid_argument(
                    "leading word " + word_str(lead, alphabet_) + " is a factor of " +
                    word_str(relations_[j].lead, alphabet_));
        }
        if (orientation_ == Orientation::by_order) {
            for (const auto& [w, c] : relations_[i].replacement.terms()) {
                (void)c;
                if (order_.compare(w, lead) >= 0)
                    throw std::invalid_argument("replacement term " + word_str(w, alphabet_) +
                                                " is not below leading word " +
                                                word_str(lead, alphabet_));
            }
        }
    }
}

NCPoly ReductionSystem::relation_poly(size_t i) const {
    return NCPoly::word(relations_.at(i).lead) - relations_.at(i).replacement;
}

ReduceResult reduce_once(const ReductionSystem& sys, const NCPoly& p, StrategyChoice strategy) {
    std::vector<Site> sites = collect_sites(sys, p);
    if (sites.empty()) return {p, false};
    size_t pick = 0;
    switch (strategy.kind) {
        case Strategy::leftmost_largest: {
            for (size_t i = 1; i < sites.size(); ++i) {
                int cmp = sys.order().compare(sites[i].word, sites[pick].word);
                if (cmp > 0 || (cmp == 0 && sites[i].pos < sites[pick].pos))
                    pick = i;
            }
            break;
        }
        case Strategy::leftmost_leftward: {
            // Sites come out grouped by ascending term storage order already;
            // the first one is the leftmost site of the first reducible term.
            pick = 0;
            break;
        }
        case Strategy::random_site: {
            std::mt19937_64 rng(strategy.seed);
            pick = static_cast<size_t>(rng() % sites.size());
            break;
        }
    }
    return {apply_site(sys, p, sites[pick]), true};
}

namespace {

NCPoly normal_form_counted(const ReductionSystem& sys, const NCPoly& p, StrategyChoice strategy,
                           long& steps_out) {
    NCPoly cur = p;
    long steps = 0;
    StrategyChoice step_choice = strategy;
    while (true) {
        ReduceResult r = reduce_once(sys, cur, step_choice);
        if (!r.progressed) {
            steps_out = steps;
            return cur;
        }
        cur = std::move(r.poly);
        ++steps;
        step_choice.seed = strategy.seed + static_cast<std::uint64_t>(steps);
        if (steps > sys.step_cap())
            throw std::runtime_error("step cap exceeded; the orientation may not terminate");
    }
}

}  // namespace

NCPoly normal_form(const ReductionSystem& sys, const NCPoly& p, StrategyChoice strategy) {
    long steps = 0;
    return normal_form_counted(sys, p, strategy, steps);
}

std::vector<Ambiguity> ambiguities(const ReductionSystem& sys) {
    std::vector<Ambiguity> out;
    const auto& rels = sys.relations();
    for (size_t i = 0; i < rels.size(); ++i) {
        for (size_t j = 0; j < rels.size(); ++j) {
            const Word& wi = rels[i].lead;
            const Word& wj = rels[j].lead;
            size_t maxk = std::min(wi.size(), wj.size()) - 1;
            for (size_t k = 1; k <= maxk; ++k) {
                if (wi.compare(wi.size() - k, k, wj, 0, k) == 0) {
                    Ambiguity amb;
                    amb.kind = Ambiguity::Kind::overlap;
                    amb.site = wi + wj.substr(k);
                    amb.rel_left = i;
                    amb.rel_right = j;
                    amb.offset = wi.size() - k;
                    out.push_back(std::move(amb));
                }
            }
            if (i != j && wj.size() < wi.size()) {
                size_t pos = wi.find(wj);
                while (pos != Word::npos) {
                    out.push_back({Ambiguity::Kind::inclusion, wi, i, j, pos});
                    pos = wi.find(wj, pos + 1);
                }
            }
        }
    }
    return out;
}

ResolutionReport check_confluence(const ReductionSystem& sys) {
    ResolutionReport report;
    report.confluent = true;
    for (const Ambiguity& amb : ambiguities(sys)) {
        const Relation& left = sys.relations()[amb.rel_left];
        const Relation& right = sys.relations()[amb.rel_right];
        NCPoly from_left, from_right;
        if (amb.kind == Ambiguity::Kind::overlap) {
            from_left = left.replacement * NCPoly::word(amb.site.substr(left.lead.size()));
            from_right = NCPoly::word(amb.site.substr(0, amb.offset)) * right.replacement;
        } else {
            from_left = left.replacement;
            from_right = NCPoly::word(amb.site.substr(0, amb.offset)) * right.replacement *
                         NCPoly::word(amb.site.substr(amb.offset + right.lead.size()));
        }
        AmbiguityResult res;
        res.ambiguity = amb;
        long left_steps = 0, right_steps = 0;
        res.left_nf = normal_form_counted(sys, from_left, {}, left_steps);
        res.right_nf = normal_form_counted(sys, from_right, {}, right_steps);
        res.steps = left_steps + right_steps;
        res.difference = res.left_nf - res.right_nf;
        res.resolved = res.difference.is_zero();
        if (!res.resolved) report.confluent = false;
        report.items.push_back(std::move(res));
    }
    return report;
}

std::vector<Word> irreducible_words(const ReductionSystem& sys, const DegreeFunction& d,
                                    long bound) {
    for (long deg : d.degrees)
        if (deg <= 0)
            throw std::invalid_argument("irreducible-word enumeration needs positive degrees");
    std::vector<Word> out;
    std::queue<Word> frontier;
    if (bound >= 0) {
        out.emplace_back();
        frontier.emplace();
    }
    const size_t n = sys.alphabet().size();
    while (!frontier.empty()) {
        Word w = frontier.front();
        frontier.pop();
        for (size_t g = 0; g < n; ++g) {
            Word w2 = w + static_cast<char>(g);
            if (d.word_degree(w2) > bound) continue;
            bool reducible = false;
            for (const auto& rel : sys.relations()) {
                if (ends_with(w2, rel.lead)) {
                    reducible = true;
                    break;
                }
            }
            if (reducible) continue;
            out.push_back(w2);
            frontier.push(std::move(w2));
        }
    }
    MonomialOrder ord{OrderKind::dlex, d};
    std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) {
        return ord.compare(a, b) > 0;
    });
    return out;
}

CentralityReport is_central(const ReductionSystem& sys, const NCPoly& c) {
    CentralityReport report;
    for (size_t g = 0; g < sys.alphabet().size(); ++g) {
        NCPoly x = NCPoly::gen(static_cast<int>(g));
        NCPoly nf = normal_form(sys, c * x - x * c);
        if (!nf.is_zero()) {
            report.central = false;
            report.witness_generator = static_cast<int>(g);
            report.witness = std::move(nf);
            return report;
        }
    }
    report.central = true;
    return report;
}

ReductionSystem adjoin_central_quotient(const ReductionSystem& sys, const NCPoly& c,
                                        const Word& leading_choice) {
    CentralityReport cr = is_central(sys, c);
    if (!cr.central)
        throw std::domain_error("element is not central; offending generator " +
                                sys.alphabet().names.at(cr.witness_generator));
    Scalar lead_coeff = c.coeff(leading_choice);
    if (lead_coeff.is_zero())
        throw std::invalid_argument("chosen leading word " +
                                    word_str(leading_choice, sys.alphabet()) +
                                    " does not occur in the element");
    if (!lead_coeff.is_unit())
        throw std::invalid_argument("coefficient of the chosen leading word is not a unit: " +
                                    lead_coeff.str());
    NCPoly replacement = NCPoly::word(leading_choice) - c.scaled(lead_coeff.inv());
    std::vector<Relation> rels = sys.relations();
    rels.push_back({leading_choice, std::move(replacement)});
    return ReductionSystem(sys.alphabet(), sys.mode(), sys.parameter(), std::move(rels),
                           Orientation::explicit_orientation, sys.order(), sys.step_cap());
}

NCPoly induced_poisson_bracket(const ReductionSystem& sys, const NCPoly& u, const NCPoly& v,
                               const Rational& at) {
    if (sys.mode() == ScalarMode::rational)
        throw std::domain_error("induced bracket needs a central parameter");
    // The quotient at the semiclassical point must be commutative: every
    // generator commutator must be divisible by (parameter - at).
    for (size_t i = 0; i < sys.alphabet().size(); ++i) {
        for (size_t j = i + 1; j < sys.alphabet().size(); ++j) {
            NCPoly nf = normal_form(
                sys, commutator(NCPoly::gen(static_cast<int>(i)), NCPoly::gen(static_cast<int>(j))));
            for (const auto& [w, c] : nf.terms()) {
                (void)w;
                if (!c.divisible_by_param_minus(at))
                    throw std::domain_error(
                        "quotient is not commutative at the requested point: [" +
                        sys.alphabet().names[i] + "," + sys.alphabet().names[j] +
                        "] has coefficient " + c.str());
            }
        }
    }
    NCPoly nf = normal_form(sys, commutator(u, v));
    NCPoly out;
    for (const auto& [w, c] : nf.terms()) {
        Scalar value = c.divided_by_param_minus(at).specialize(at);
        Word sorted = w;
        std::sort(sorted.begin(), sorted.end());
        out.add_term(sorted, value);
    }
    return out;
}

PointRepReport verify_point_representation(const ReductionSystem& sys,
                                           const std::vector<Scalar>& assignment) {
    if (assignment.size() != sys.alphabet().size())
        throw std::invalid_argument("assignment size does not match the alphabet");
    PointRepReport report;
    report.valid = true;
    for (size_t i = 0; i < sys.relations().size(); ++i) {
        Scalar value = eval_at_scalars(sys.relation_poly(i), assignment);
        if (!value.is_zero()) {
            report.valid = false;
            report.residuals.emplace_back(i, std::move(value));
        }
    }
    return report;
}

ScalingData scaling_isomorphism_data(const Scalar& a, const Scalar& b, const Scalar& c) {
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw std::invalid_argument("scaling data needs nonzero coefficients");
    auto widen = [](const Scalar& s) {
        if (s.mode() == ScalarMode::polynomial || s.mode() == ScalarMode::laurent)
            return s.convert(ScalarMode::ratfunc, s.parameter());
        return s;
    };
    Scalar wa = widen(a), wb = widen(b), wc = widen(c);
    ScalingData data;
    data.lambda1_sq = (wa * wc).inv();
    data.lambda2_sq = (wa * wb).inv();
    data.lambda3_sq = (wb * wc).inv();
    data.product = (wa * wb * wc).inv();
    data.consistent = (wa * wa * data.lambda1_sq * data.lambda2_sq == data.lambda3_sq) &&
                      (wb * wb * data.lambda2_sq * data.lambda3_sq == data.lambda1_sq) &&
                      (wc * wc * data.lambda3_sq * data.lambda1_sq == data.lambda2_sq);
    return data;
}

std::pair<NCPoly, NCPoly> askey_wilson_eliminate(const ReductionSystem& sys) {
    if (sys.alphabet().size() != 3)
        throw std::invalid_argument("elimination expects a three-generator cyclic system");
    auto find_rel = [&](const Word& lead) -> size_t {
        for (size_t i = 0; i < sys.relations().size(); ++i)
            if (sys.relations()[i].lead == lead) return i;
        throw std::invalid_argument("system does not have the cyclic leading words");
    };
    const size_t i12 = find_rel(make_word({0, 1}));
    const size_t i23 = find_rel(make_word({1, 2}));
    const size_t i13 = find_rel(make_word({0, 2}));

    const bool symbolic = sys.mode() != ScalarMode::rational;
    const ScalarMode work_mode = symbolic ? ScalarMode::ratfunc : ScalarMode::rational;
    auto lift = [&](const Scalar& s) { return s.convert(work_mode, sys.parameter()); };

    Scalar q = lift(sys.relations()[i12].replacement.coeff(make_word({1, 0})));
    Scalar a = lift(sys.relations()[i12].replacement.coeff(make_word({2})));
    if (q.is_zero()) throw std::invalid_argument("missing swap coefficient in the first relation");
    if (a.is_zero())
        throw std::domain_error("x3 cannot be eliminated: its coefficient vanishes (q^2 = 1)");

    // x3 := a^{-1} (x1 x2 - q x2 x1)
    NCPoly x1 = NCPoly::gen(0), x2 = NCPoly::gen(1);
    NCPoly x3_sub = (x1 * x2 - (x2 * x1).scaled(q)).scaled(a.inv());

    auto substituted = [&](const NCPoly& p) {
        NCPoly out;
        for (const auto& [w, c] : p.terms()) {
            NCPoly term = NCPoly::scalar(lift(c));
            for (char ch : w) {
                switch (ch) {
                    case 0: term = term * x1; break;
                    case 1: term = term * x2; break;
                    default: term = term * x3_sub; break;
                }
            }
            out += term;
        }
        return out;
    };

    // Second relation as displayed; third rescaled by -q so that x3 x1
    // carries coefficient one.
    NCPoly rel23 = poly_convert(sys.relation_poly(i23), work_mode, sys.parameter());
    NCPoly rel13 = poly_convert(sys.relation_poly(i13), work_mode, sys.parameter()).scaled(-q);

    NCPoly first = substituted(rel23).scaled(a);
    NCPoly second = substituted(rel13).scaled(a);
    if (symbolic) {
        // The cleared coefficients are Laurent again.
        try {
            first = poly_convert(first, sys.mode(), sys.parameter());
            second = poly_convert(second, sys.mode(), sys.parameter());
        } catch (const std::domain_error&) {
            // keep rational-function coefficients
        }
    }
    return {first, second};
}

}  // namespace ncalg
