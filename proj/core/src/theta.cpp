#include "vecbal/theta.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "vecbal/errors.hpp"

namespace vecbal {
namespace {

// Raw values may leave [0,1] by more than this only through a logic bug,
// never through roundoff of the truncated sums.
constexpr double kClampSlack = 1e-9;

void require(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(msg);
}

void validate_tol(double tol) {
  require(tol > 0.0 && tol < 1.0, "theta: tol must lie in (0, 1)");
}

void validate_params(const WalkParams& p) {
  require(std::isfinite(p.sigma) && p.sigma > 0.0,
          "theta: sigma must be positive and finite");
  require(std::isfinite(p.f) && std::abs(p.f) <= 0.5,
          "theta: f must lie in [-1/2, 1/2]");
}

double clamp01(double v, const char* what) {
  if (v < -kClampSlack || v > 1.0 + kClampSlack) {
    throw InternalError(std::string(what) + ": value " + std::to_string(v) +
                        " outside [0,1] beyond roundoff slack");
  }
  return std::clamp(v, 0.0, 1.0);
}

// Neumaier-compensated accumulator. The alternating sums can run through
// thousands of near-unit terms when sigma is large; compensation keeps the
// roundoff independent of the term count.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + comp; }
};

}  // namespace

Probability eval_p(double x, double sigma, double tol) {
  require(std::isfinite(x) && x >= -0.5,
          "eval_p: x must be finite and >= -1/2");
  require(std::isfinite(sigma) && sigma > 0.0,
          "eval_p: sigma must be positive and finite");
  validate_tol(tol);

  const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
  CompensatedSum acc;
  double err = 0.0;
  double sign = 1.0;
  for (std::int64_t j = 1;; ++j, sign = -sign) {
    const double jd = static_cast<double>(j);
    const double term = std::exp(-(jd * jd + 2.0 * x * jd) * inv2s2);
    if (term < tol) {
      if (j == 1) {
        // Keep the leading term even when it is below tol: the tail after
        // it is strictly smaller, so the bound still holds and the result
        // stays strictly positive.
        acc.add(term);
      }
      err = term;
      break;
    }
    acc.add(sign * term);
  }
  return {clamp01(acc.value(), "eval_p"), err};
}

Probability eval_r_series(const WalkParams& params, double tol) {
  validate_params(params);
  validate_tol(tol);

  const double inv2s2 = 1.0 / (2.0 * params.sigma * params.sigma);
  const double f = params.f;
  // j = 0 contributes 1; terms j and -j are folded together. Both one-sided
  // term sequences decrease strictly for |f| <= 1/2, so the folded series is
  // alternating and its tail is bounded by the first omitted folded term.
  CompensatedSum acc;
  acc.add(1.0);
  double err = 0.0;
  double sign = -1.0;
  for (std::int64_t j = 1;; ++j, sign = -sign) {
    const double jd = static_cast<double>(j);
    const double jj = jd * jd;
    const double term = std::exp(-(jj + 2.0 * f * jd) * inv2s2) +
                        std::exp(-(jj - 2.0 * f * jd) * inv2s2);
    if (term < tol) {
      err = term;
      break;
    }
    acc.add(sign * term);
  }
  return {clamp01(acc.value(), "eval_r_series"), err};
}

Probability eval_r_product(const WalkParams& params, double tol) {
  validate_params(params);
  validate_tol(tol);

  const double s2 = params.sigma * params.sigma;
  const double inv2s2 = 1.0 / (2.0 * s2);
  // The three factor families are geometric in j with common ratio
  // q = e^{-1/sigma^2}:
  //   a_j = q^j,  b_j = q^j * e^{(1-2f)/(2s^2)},  c_j = q^j * e^{(1+2f)/(2s^2)}.
  const double q = std::exp(-1.0 / s2);
  const double bmul = std::exp((1.0 - 2.0 * params.f) * inv2s2);
  const double cmul = std::exp((1.0 + 2.0 * params.f) * inv2s2);

  double prod = 1.0;
  double qj = 1.0;
  for (std::int64_t j = 1;; ++j) {
    qj *= q;
    const double a = qj;
    const double b = qj * bmul;
    const double c = qj * cmul;
    // For f = +-1/2 one factor is exactly zero at j = 1 and so is r.
    prod *= (1.0 - a) * (1.0 - b) * (1.0 - c);
    if (prod == 0.0) return {0.0, 0.0};
    // Remaining factors (1-x_i) all have x_i in [0,1), and
    // prod(1-x_i) >= 1 - sum(x_i), so the relative loss from stopping here
    // is at most the geometric tail sum of a, b and c.
    const double tail = qj * q * (1.0 + bmul + cmul) / (1.0 - q);
    if (tail < 0.5 * tol) {
      return {clamp01(prod, "eval_r_product"), tail};
    }
  }
}

InequalityResult check_balance_inequality(const WalkParams& params,
                                          double tol) {
  validate_params(params);
  require(params.sigma >= 1.0, "check_balance_inequality: sigma must be >= 1");
  validate_tol(tol);

  const double s2 = params.sigma * params.sigma;
  const double expf = std::exp((2.0 * params.f + 1.0) / (2.0 * s2));
  const Probability lhs = eval_p(1.0 + params.f, params.sigma, tol);
  // The product form is used for r: its factors are positive so it keeps
  // full relative accuracy even when r is astronomically small.
  const Probability rhs = eval_r_product(params, tol);

  const double margin = lhs.value - rhs.value * expf;
  const double err = lhs.abs_error_bound + rhs.abs_error_bound * expf;
  return {margin >= -err, margin, err};
}

}  // namespace vecbal
