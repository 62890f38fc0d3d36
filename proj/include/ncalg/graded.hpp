#pragma once

#include <optional>
#include <vector>

#include "ncalg/rewrite.hpp"

namespace ncalg {

// True iff every replacement term has degree at most its leading word's.
bool is_compatible(const ReductionSystem& sys, const DegreeFunction& d);

// Truncate each replacement to the terms of degree exactly d(lead). Parameter
// powers inside a coefficient are graded individually via d.param_degree.
ReductionSystem associated_graded(const ReductionSystem& sys, const DegreeFunction& d);

enum class ExpDomain { one_sided, two_sided };

struct CountVar {
    long weight = 1;
    ExpDomain domain = ExpDomain::one_sided;
    long cap = -1;  // cap >= 0 restricts the exponent to 0..cap
};

struct Filtration {
    std::optional<CountVar> parameter;
    std::vector<CountVar> vars;
};

// c(n) = number of exponent tuples of weighted degree <= n for n = 0..N;
// two-sided exponents range over Z and contribute |e| * weight.
std::vector<long long> filtration_dimensions(const Filtration& filt, long N);

// Derive the counting shape from a confluent system whose leading words are
// the ascending generator pairs (plus optional generator powers, which become
// exponent caps).
Filtration pbw_filtration(const ReductionSystem& sys, const std::vector<long>& weights,
                          std::optional<CountVar> parameter);

struct GkEstimate {
    double estimate = 0.0;
    std::vector<double> slopes;  // doubling slopes at N, N/2, N/4, ...
};

GkEstimate gk_estimate(const std::vector<long long>& c);

}  // namespace ncalg
