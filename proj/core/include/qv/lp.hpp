// Dense primal simplex (Bland's rule) for the minimax weight problem
//   min t  s.t.  sum_i a_{ji} mu_i <= t  for every row j,
//                sum_i mu_i = 1,  mu >= 0.
// Solved in exact rational arithmetic when the int64 rationals hold up,
// with a double-precision fallback otherwise.

#pragma once

#include "qv/qarith.hpp"

namespace qv {

struct MinimaxSolution {
    std::vector<Rational> mu;  // meaningful when exact
    Rational beta;
    bool exact = false;
    std::vector<double> mu_float;
    double beta_float = 0.0;
};

// rows: coefficient vectors a_j of length tau. Duplicate rows are collapsed
// internally. Throws std::invalid_argument on shape errors.
MinimaxSolution minimize_max(const std::vector<std::vector<Rational>>& rows, int tau);

}  // namespace qv
