#ifndef ALCOVE_LP_HPP
#define ALCOVE_LP_HPP

// Exact rational simplex.

#include "alcove/exactq.hpp"

#include <vector>

namespace alcove::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct StandardFormResult {
    Status status = Status::Infeasible;
    Rational value;
    RationalVector solution;
    /// Basic column per kept row, and the kept (linearly independent) rows.
    std::vector<int> basis;
    std::vector<int> rows;
};

/// minimize cost . u  subject to  M u = rhs, u >= 0.
StandardFormResult solve_standard_form(const RationalMatrix& M, const RationalVector& rhs,
                                       const RationalVector& cost);

struct Result {
    Status status = Status::Infeasible;
    Rational value;
    RationalVector argmax;
    /// Constraints whose dual multipliers are basic at the optimum.
    std::vector<int> active;
};

/// maximize d . y  over  { y : A y <= c }, solved through its dual so that the
/// simplex tableau has one row per variable rather than per constraint.
Result maximize(const RationalMatrix& A, const RationalVector& c, const RationalVector& d);

/// Whether { y : A y <= c } is nonempty (Farkas certificate search).
bool feasible(const RationalMatrix& A, const RationalVector& c);

} // namespace alcove::lp

#endif // ALCOVE_LP_HPP
