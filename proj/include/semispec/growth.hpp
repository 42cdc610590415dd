#pragma once

#include "semispec/semidistance.hpp"

namespace semispec {

// Order/type of the entire function lambda -> e^(lambda a) e^(-lambda b)
// from its coefficient norms ||C^n 1|| / n!. At exponential order the type
// equals varrho(a,b), giving an independent estimator.
struct GrowthEstimate {
    double order = 0.0;
    double type = 0.0;
    int n_used = 0;
    bool degenerate = false;        // coefficients vanish beyond n = 0
    bool type_applicable = true;    // false when order is not close to 1
};

double order_estimate(const CommutatorSequence& seq);
double type_estimate(const CommutatorSequence& seq, double order);
GrowthEstimate growth_estimate(const CommutatorSequence& seq);

} // namespace semispec
