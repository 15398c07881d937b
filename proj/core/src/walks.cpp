#include "vecbal/walks.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "vecbal/errors.hpp"

namespace vecbal {
namespace {

// |sum(probs) - 1| beyond this is a logic bug, not roundoff of tol/4 calls.
constexpr double kSumSlack = 1e-9;

}  // namespace

LatticePosition decompose(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("decompose: input must be finite");
  }
  if (std::abs(x) >= 0x1p62) {
    throw std::domain_error("decompose: |x| too large for lattice indexing");
  }
  double nd = std::floor(x + 0.5);
  double f = x - nd;
  // floor(x + 0.5) can land one off when x + 0.5 rounds across an integer;
  // nudge so that f ends up in [-1/2, 1/2) exactly.
  if (f < -0.5) {
    nd -= 1.0;
    f = x - nd;
  } else if (f >= 0.5) {
    nd += 1.0;
    f = x - nd;
  }
  return {static_cast<std::int64_t>(nd), f};
}

const char* walk_name(WalkKind kind) {
  return kind == WalkKind::jacobi ? "jacobi" : "ramanujan";
}

StepProbabilities normalized(StepProbabilities dist) {
  double sum = 0.0;
  for (double p : dist.probs) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw InternalError("step probabilities: entry " + std::to_string(p) +
                          " outside [0,1]");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumSlack) {
    throw InternalError("step probabilities: sum " + std::to_string(sum) +
                        " deviates from 1 beyond 1e-9");
  }
  for (double& p : dist.probs) p /= sum;
  return dist;
}

StepProbabilities jacobi_distribution(double x, double sigma, double tol) {
  const LatticePosition pos = decompose(x);
  const double per_call = 0.25 * tol;
  StepProbabilities dist{{-1, 0, +1}, {0.0, 0.0, 0.0}};

  if (pos.n >= 1) {
    const double up = eval_p(pos.x(), sigma, per_call).value;
    dist.probs = {1.0 - up, 0.0, up};
  } else if (pos.n <= -1) {
    // State n + f with n <= -1 steps outward with p_sigma(|n| - f), and
    // |n| - f == -(n + f) == -x.
    const double down = eval_p(-pos.x(), sigma, per_call).value;
    dist.probs = {down, 0.0, 1.0 - down};
  } else {
    const double up = eval_p(pos.f, sigma, per_call).value;
    const double down = eval_p(-pos.f, sigma, per_call).value;
    const double stay = eval_r_series({sigma, pos.f}, per_call).value;
    dist.probs = {down, stay, up};
  }
  return normalized(dist);
}

StepProbabilities ramanujan_distribution(double x, double sigma, double tol) {
  if (!(sigma >= 1.0)) {
    throw std::domain_error("ramanujan_distribution: sigma must be >= 1");
  }
  const LatticePosition pos = decompose(x);
  const double per_call = 0.25 * tol;
  StepProbabilities dist{{-1, +1, +2}, {0.0, 0.0, 0.0}};

  if (pos.n >= 2) {
    const double up = eval_p(pos.x(), sigma, per_call).value;
    dist.probs = {1.0 - up, up, 0.0};
  } else if (pos.n <= -1) {
    const double down = eval_p(-pos.x(), sigma, per_call).value;
    dist.probs = {down, 1.0 - down, 0.0};
  } else if (pos.n == 1) {
    const Probability p1f = eval_p(pos.x(), sigma, per_call);
    const Probability r = eval_r_series({sigma, pos.f}, per_call);
    const double boost =
        std::exp((2.0 * pos.f + 1.0) / (2.0 * sigma * sigma));
    double up = p1f.value - r.value * boost;
    const double err = p1f.abs_error_bound + r.abs_error_bound * boost;
    if (up < -(err + kSumSlack)) {
      throw InternalError(
          "ramanujan_distribution: n=1 transition probability " +
          std::to_string(up) + " negative beyond evaluation error");
    }
    up = std::clamp(up, 0.0, 1.0);
    dist.probs = {1.0 - up, up, 0.0};
  } else {
    const double up = eval_p(pos.f, sigma, per_call).value;
    const double down = eval_p(-pos.f, sigma, per_call).value;
    const double jump2 = eval_r_series({sigma, pos.f}, per_call).value;
    dist.probs = {down, up, jump2};
  }
  return normalized(dist);
}

StepProbabilities step_distribution(WalkKind kind, double x, double sigma,
                                    double tol) {
  return kind == WalkKind::jacobi ? jacobi_distribution(x, sigma, tol)
                                  : ramanujan_distribution(x, sigma, tol);
}

int sample_step(const StepProbabilities& dist, Rng& rng) {
  const double u = rng.uniform01();
  double cum = 0.0;
  for (int i = 0; i < 3; ++i) {
    cum += dist.probs[i];
    if (u < cum) return dist.offsets[i];
  }
  // u can exceed the final cumulative only through roundoff in the sum.
  return dist.offsets[2];
}

}  // namespace vecbal
