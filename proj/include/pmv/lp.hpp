#pragma once

#include "pmv/linalg.hpp"
#include "pmv/rational.hpp"

namespace pmv::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
    Status status = Status::infeasible;
    Vec x;          // optimal point (valid when status == optimal)
    Rat objective;  // c . x at the optimum
};

/// Exact rational simplex for  min c.x  subject to  a x = b, x >= 0.
/// Two-phase with Bland's rule, so it terminates on degenerate problems.
/// Redundant and inconsistent rows are handled by phase one.
Result solve(const linalg::Mat& a, const Vec& b, const Vec& c);

/// Convenience: find any feasible x >= 0 with a x = b (zero objective).
Result feasible_point(const linalg::Mat& a, const Vec& b);

}  // namespace pmv::lp
