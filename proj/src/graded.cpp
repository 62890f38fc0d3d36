#include "ncalg/graded.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ncalg {

bool is_compatible(const ReductionSystem& sys, const DegreeFunction& d) {
    for (const auto& rel : sys.relations()) {
        long lead_deg = d.word_degree(rel.lead);
        for (const auto& [w, c] : rel.replacement.terms()) {
            if (d.param_degree == 0) {
                if (d.word_degree(w) > lead_deg) return false;
            } else {
                for (const auto& [pexp, pc] : c.parts()) {
                    (void)pc;
                    if (d.word_degree(w) + d.param_degree * std::max(0L, pexp) > lead_deg)
                        return false;
                }
            }
        }
    }
    return true;
}

ReductionSystem associated_graded(const ReductionSystem& sys, const DegreeFunction& d) {
    if (!is_compatible(sys, d))
        throw std::invalid_argument("degree function is not compatible with the system");
    std::vector<Relation> rels;
    for (const auto& rel : sys.relations()) {
        long lead_deg = d.word_degree(rel.lead);
        NCPoly trunc;
        for (const auto& [w, c] : rel.replacement.terms()) {
            long wdeg = d.word_degree(w);
            if (d.param_degree == 0) {
                if (wdeg == lead_deg) trunc.add_term(w, c);
                continue;
            }
            // keep the parameter powers whose graded degree hits the top
            for (const auto& [pexp, pc] : c.parts()) {
                if (wdeg + d.param_degree * std::max(0L, pexp) != lead_deg) continue;
                Scalar piece = (c.mode() == ScalarMode::rational)
                                   ? Scalar(pc)
                                   : Scalar::param_power(c.mode(), c.parameter(), pexp, pc);
                trunc.add_term(w, piece);
            }
        }
        rels.push_back({rel.lead, std::move(trunc)});
    }
    std::optional<MonomialOrder> order;
    if (sys.has_declared_order()) order = sys.order();
    return ReductionSystem(sys.alphabet(), sys.mode(), sys.parameter(), std::move(rels),
                           sys.orientation(), order, sys.step_cap());
}

std::vector<long long> filtration_dimensions(const Filtration& filt, long N) {
    if (N < 0) throw std::invalid_argument("negative bound");
    std::vector<CountVar> all;
    if (filt.parameter) all.push_back(*filt.parameter);
    all.insert(all.end(), filt.vars.begin(), filt.vars.end());
    std::vector<long long> ways(static_cast<size_t>(N) + 1, 0);
    ways[0] = 1;
    for (const CountVar& v : all) {
        if (v.weight <= 0) throw std::invalid_argument("counting weights must be positive");
        std::vector<long long> next(ways.size(), 0);
        if (v.cap >= 0) {
            for (long d = 0; d <= N; ++d) {
                long long acc = 0;
                for (long k = 0; k <= v.cap; ++k) {
                    long rest = d - v.weight * k;
                    if (rest < 0) break;
                    acc += ways[static_cast<size_t>(rest)];
                    if (v.domain == ExpDomain::two_sided && k > 0)
                        acc += ways[static_cast<size_t>(rest)];
                }
                next[static_cast<size_t>(d)] = acc;
            }
        } else if (v.domain == ExpDomain::one_sided) {
            for (long d = 0; d <= N; ++d) {
                next[static_cast<size_t>(d)] = ways[static_cast<size_t>(d)];
                if (d >= v.weight) next[static_cast<size_t>(d)] += next[static_cast<size_t>(d - v.weight)];
            }
        } else {
            // generating function (1 + x^w) / (1 - x^w)
            for (long d = 0; d <= N; ++d) {
                long long acc = ways[static_cast<size_t>(d)];
                if (d >= v.weight) {
                    acc += ways[static_cast<size_t>(d - v.weight)];
                    acc += next[static_cast<size_t>(d - v.weight)];
                }
                next[static_cast<size_t>(d)] = acc;
            }
        }
        ways = std::move(next);
    }
    std::vector<long long> cum(ways.size(), 0);
    long long acc = 0;
    for (size_t i = 0; i < ways.size(); ++i) {
        acc += ways[i];
        cum[i] = acc;
    }
    return cum;
}

Filtration pbw_filtration(const ReductionSystem& sys, const std::vector<long>& weights,
                          std::optional<CountVar> parameter) {
    const size_t n = sys.alphabet().size();
    if (weights.size() != n) throw std::invalid_argument("one weight per generator expected");
    std::vector<long> caps(n, -1);
    std::vector<std::vector<bool>> pair_covered(n, std::vector<bool>(n, false));
    for (const auto& rel : sys.relations()) {
        const Word& w = rel.lead;
        bool constant_run = w.find_first_not_of(w[0]) == Word::npos;
        if (constant_run && w.size() >= 2) {
            size_t g = static_cast<unsigned char>(w[0]);
            caps[g] = static_cast<long>(w.size()) - 1;
            continue;
        }
        if (w.size() == 2 && w[0] < w[1]) {
            pair_covered[static_cast<unsigned char>(w[0])][static_cast<unsigned char>(w[1])] = true;
            continue;
        }
        throw std::invalid_argument("leading word " + word_str(w, sys.alphabet()) +
                                    " is not of PBW shape");
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (!pair_covered[i][j])
                throw std::invalid_argument("missing straightening relation for " +
                                            sys.alphabet().names[i] + "*" +
                                            sys.alphabet().names[j]);
    Filtration filt;
    filt.parameter = parameter;
    for (size_t i = 0; i < n; ++i)
        filt.vars.push_back({weights[i], ExpDomain::one_sided, caps[i]});
    return filt;
}

GkEstimate gk_estimate(const std::vector<long long>& c) {
    if (c.empty() || c[0] < 1)
        throw std::invalid_argument("dimension sequence must start at c(0) >= 1");
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] < c[i - 1]) throw std::invalid_argument("dimension sequence must be monotone");
    GkEstimate est;
    size_t n = c.size() - 1;
    if (n == 0 || c[n] == c[0]) {
        est.estimate = 0.0;
        return est;
    }
    while (n >= 2) {
        size_t half = n / 2;
        double slope = std::log2(static_cast<double>(c[n]) / static_cast<double>(c[half]));
        est.slopes.push_back(slope);
        n = half;
    }
    est.estimate = est.slopes.empty() ? 0.0 : est.slopes.front();
    return est;
}

}  // namespace ncalg
