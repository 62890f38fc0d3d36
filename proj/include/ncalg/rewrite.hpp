#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncalg/freealg.hpp"

namespace ncalg {

struct Relation {
    Word lead;          // stored monic
    NCPoly replacement;
};

enum class Orientation { by_order, explicit_orientation };

// Oriented reduction system over a free algebra. Leading words are pairwise
// factor-free; in by_order mode every replacement term lies strictly below its
// leading word.
class ReductionSystem {
public:
    static constexpr long kDefaultStepCap = 1'000'000;

    ReductionSystem(Alphabet alphabet, ScalarMode mode, std::string param,
                    std::vector<Relation> relations, Orientation orientation,
                    std::optional<MonomialOrder> order, long step_cap = kDefaultStepCap);

    const Alphabet& alphabet() const { return alphabet_; }
    ScalarMode mode() const { return mode_; }
    const std::string& parameter() const { return param_; }
    const std::vector<Relation>& relations() const { return relations_; }
    Orientation orientation() const { return orientation_; }
    const MonomialOrder& order() const { return order_; }
    bool has_declared_order() const { return has_declared_order_; }
    long step_cap() const { return step_cap_; }

    NCPoly relation_poly(size_t i) const;  // lead - replacement

private:
    Alphabet alphabet_;
    ScalarMode mode_;
    std::string param_;
    std::vector<Relation> relations_;
    Orientation orientation_;
    MonomialOrder order_;  // bookkeeping order (unit-degree dlex fallback)
    bool has_declared_order_ = false;
    long step_cap_;

    void validate() const;
};

enum class Strategy { leftmost_largest, leftmost_leftward, random_site };

struct StrategyChoice {
    Strategy kind = Strategy::leftmost_largest;
    std::uint64_t seed = 0;
};

struct ReduceResult {
    NCPoly poly;
    bool progressed = false;
};

// One rewriting step at a site chosen by the strategy.
ReduceResult reduce_once(const ReductionSystem& sys, const NCPoly& p,
                         StrategyChoice strategy = {});

// Fixed point of reduce_once. Explicit orientations run under the system's
// step cap and throw when it is exceeded.
NCPoly normal_form(const ReductionSystem& sys, const NCPoly& p, StrategyChoice strategy = {});

struct Ambiguity {
    enum class Kind { overlap, inclusion };
    Kind kind;
    Word site;          // overlap: a b c with lead_left = ab, lead_right = bc
    size_t rel_left;
    size_t rel_right;
    size_t offset;      // position of lead_right inside site
};

std::vector<Ambiguity> ambiguities(const ReductionSystem& sys);

struct AmbiguityResult {
    Ambiguity ambiguity;
    NCPoly left_nf;
    NCPoly right_nf;
    NCPoly difference;
    long steps = 0;  // rewriting steps spent on both parses
    bool resolved = false;
};

struct ResolutionReport {
    std::vector<AmbiguityResult> items;
    bool confluent = false;
};

ResolutionReport check_confluence(const ReductionSystem& sys);

// All factor-free words of d-degree <= bound, descending under dlex(d).
std::vector<Word> irreducible_words(const ReductionSystem& sys, const DegreeFunction& d,
                                    long bound);

struct CentralityReport {
    bool central = false;
    int witness_generator = -1;  // offending generator on failure
    NCPoly witness;              // nonzero normal form of the commutator
};

CentralityReport is_central(const ReductionSystem& sys, const NCPoly& c);

// Extend the system by the relation obtained by solving c = 0 for the chosen
// leading word; the result uses explicit orientation.
ReductionSystem adjoin_central_quotient(const ReductionSystem& sys, const NCPoly& c,
                                        const Word& leading_choice);

// Semiclassical bracket {u,v} = ((parameter - at)^{-1} [u,v]) specialized at
// the given value; the result is returned as a commutative polynomial whose
// words carry ascending generator indices and rational coefficients.
NCPoly induced_poisson_bracket(const ReductionSystem& sys, const NCPoly& u, const NCPoly& v,
                               const Rational& at);

struct PointRepReport {
    bool valid = false;
    std::vector<std::pair<size_t, Scalar>> residuals;  // relation index -> nonzero value
};

PointRepReport verify_point_representation(const ReductionSystem& sys,
                                           const std::vector<Scalar>& assignment);

struct ScalingData {
    Scalar lambda1_sq, lambda2_sq, lambda3_sq, product;
    bool consistent = false;
};

// Squared rescaling factors transporting unit cyclic relations onto
// coefficients (a, b, c), together with the forced triple product.
ScalingData scaling_isomorphism_data(const Scalar& a, const Scalar& b, const Scalar& c);

// Eliminate the third generator from the cyclic presentation and return the
// two induced relations in the first two generators.
std::pair<NCPoly, NCPoly> askey_wilson_eliminate(const ReductionSystem& sys);

}  // namespace ncalg
