#pragma once

#include <cstdint>

namespace vecbal {

// Default absolute tolerance for the series/product evaluations below.
// Callers that stream vectors pass tighter per-step budgets downward.
inline constexpr double kDefaultTol = 1e-12;

// Scale and lattice shift of one walk family: sigma > 0, f in [-1/2, 1/2].
struct WalkParams {
  double sigma;
  double f;
};

// A transition probability together with a guaranteed bound on the absolute
// truncation error of its evaluation. `value` is clamped into [0, 1]; a raw
// result outside [-1e-9, 1 + 1e-9] raises InternalError instead of being
// silently clamped, to distinguish roundoff from logic bugs.
struct Probability {
  double value;
  double abs_error_bound;
};

// p_sigma(x) = sum_{j>=1} (-1)^{j-1} exp(-(j^2 + 2xj) / (2 sigma^2)).
//
// For x >= -1/2 the terms are strictly decreasing, so this is an alternating
// series and the tail after truncation is bounded by the first omitted term.
// Summation stops at the first term smaller than `tol`.
//
// Requires x >= -1/2 (finite), sigma > 0, tol in (0, 1).
Probability eval_p(double x, double sigma, double tol = kDefaultTol);

// r_sigma(f) = sum_{j=-inf}^{inf} (-1)^j exp(-(j^2 + 2fj) / (2 sigma^2)),
// evaluated by folding the two tails into one alternating series of combined
// terms, each side's tail bounded by its first omitted term.
//
// Requires |f| <= 1/2, sigma > 0, tol in (0, 1).
Probability eval_r_series(const WalkParams& params, double tol = kDefaultTol);

// The same quantity through the triple-product identity
//   r_sigma(f) = prod_{j>=1} (1 - e^{-j/sigma^2})
//                            (1 - e^{-(2j+2f-1)/(2 sigma^2)})
//                            (1 - e^{-(2j-2f-1)/(2 sigma^2)}),
// all factors in [0, 1]. Truncated once the remaining factors can differ
// from 1 by less than tol/2 in aggregate (geometric tail sums). Serves as an
// independent cross-check of eval_r_series; the two share no code path.
Probability eval_r_product(const WalkParams& params, double tol = kDefaultTol);

// Outcome of testing p_sigma(1+f) >= r_sigma(f) * exp((2f+1) / (2 sigma^2)),
// the condition that makes the +-1/+2 walk's n = 1 transition a probability.
struct InequalityResult {
  bool holds;          // margin >= -error_bound
  double margin;       // lhs - rhs
  double error_bound;  // combined evaluation error of the margin
};

// Requires sigma >= 1 and |f| <= 1/2. Failure is declared only when the
// margin is negative beyond the combined evaluation error.
InequalityResult check_balance_inequality(const WalkParams& params,
                                          double tol = kDefaultTol);

}  // namespace vecbal
