#pragma once

#include <array>
#include <cstdint>

#include "vecbal/rng.hpp"
#include "vecbal/theta.hpp"

namespace vecbal {

// A real x split as x = n + f with integer n and fractional part
// f in [-1/2, 1/2). The boundary rule is half-open and deterministic:
// 2.5 decomposes to (3, -0.5). Both fields reconstruct x exactly.
struct LatticePosition {
  std::int64_t n;
  double f;

  double x() const { return static_cast<double>(n) + f; }
};

// Requires finite x (and |x| small enough to index the lattice in 64 bits).
LatticePosition decompose(double x);

// Which transition kernel a walk uses. The jacobi walk steps by {-1, 0, +1}
// and can stay put only at n = 0; the ramanujan walk steps by {-1, +1, +2}
// with the +2 jump available only from n = 0 and never stays.
enum class WalkKind { jacobi, ramanujan };

const char* walk_name(WalkKind kind);

// One walk transition: offsets with matching probabilities. Probabilities
// are validated to sum to 1 within 1e-9 and then renormalized exactly;
// zero-probability offsets are kept so the support set is fixed per walk
// ({-1, 0, +1} for jacobi, {-1, +1, +2} for ramanujan).
struct StepProbabilities {
  std::array<int, 3> offsets;
  std::array<double, 3> probs;
};

// Validates entries in [0,1] and sum within 1e-9 of 1 (InternalError
// otherwise), then rescales so the probabilities sum to 1.
StepProbabilities normalized(StepProbabilities dist);

// Transition distribution of the 0/+-1 walk at the point x:
//   n >= 1 : up with p_sigma(n+f), down otherwise;
//   n <= -1: down with p_sigma(|n|-f), up otherwise;
//   n == 0 : up p_sigma(f), down p_sigma(-f), stay r_sigma(f).
// `tol` is the whole-distribution budget; each kernel evaluation gets tol/4.
StepProbabilities jacobi_distribution(double x, double sigma,
                                      double tol = kDefaultTol);

// Transition distribution of the +-1/+2 walk at the point x (sigma >= 1):
// identical to the jacobi walk away from n in {0, 1};
//   n == 0: up p_sigma(f), down p_sigma(-f), jump to n = 2 with r_sigma(f);
//   n == 1: up with p_sigma(1+f) - r_sigma(f) exp((2f+1)/(2 sigma^2)),
//           down otherwise.
// The n == 1 probability is guaranteed nonnegative for sigma >= 1; a
// negative value beyond evaluation error raises InternalError.
StepProbabilities ramanujan_distribution(double x, double sigma,
                                         double tol = kDefaultTol);

StepProbabilities step_distribution(WalkKind kind, double x, double sigma,
                                    double tol = kDefaultTol);

// Samples an offset, consuming exactly one uniform draw.
int sample_step(const StepProbabilities& dist, Rng& rng);

}  // namespace vecbal
