#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ipd/payoffs.hpp"
#include "ipd/strategy.hpp"
#include "ipd/tournament.hpp"

namespace ipd::dynamics {

// Mean per-turn score matrix: S(i, j) is strategy i's average score against
// strategy j over all records of that ordered pair (self-play records feed the
// diagonal). Throws if any ordered pair has no record; `names`, when given,
// is only used for the error message.
Eigen::MatrixXd build_payoff_matrix(const std::vector<InteractionRecord>& records,
                                    const PayoffParams& payoffs, int n,
                                    const std::vector<std::string>* names = nullptr);

struct ReplicatorResult {
  Eigen::VectorXd x;
  bool converged = false;
  double t_end = 0.0;
  long steps = 0;
};

// Integrates dx_i/dt = x_i ((Sx)_i - x^T S x) with an adaptive embedded
// Runge-Kutta scheme until max_i |dx_i/dt| < tol or t reaches t_max (then
// flagged non-converged). After every accepted step negative components are
// clipped to zero and the vector is renormalized; faces of the simplex are
// invariant. The observer, when set, sees every accepted step.
ReplicatorResult replicator_stationary(
    const Eigen::MatrixXd& S, Eigen::VectorXd x0, double tol = 1e-10,
    double t_max = 1e5,
    const std::function<void(double, const Eigen::VectorXd&)>& observer = {});

struct FixationResult {
  int N = 0;
  double x1 = 0.0;             // fixation probability of a single mutant
  double standard_error = 0.0; // 0 for the analytic formula
  double normalized = 0.0;     // N * x1, comparable to the neutral benchmark 1
};

// Birth-death Moran chain with frequency-dependent fitness
//   f_j = (a(j-1) + b(N-j)) / (N-1),  g_j = (c j + d(N-j-1)) / (N-1),
//   x1  = 1 / (1 + sum_{k=1}^{N-1} prod_{j=1}^{k} g_j / f_j)
// for one invader A (payoffs a = AvA, b = AvB) in a resident population B
// (c = BvA, d = BvB). Payoffs must be nonnegative with positive f_j.
FixationResult moran_fixation_analytic(double a, double b, double c, double d,
                                       int N);

// Match-based Moran process: each trial starts with one A and N-1 B; every
// step plays all pairwise matches of `turns` turns, selects a reproducer
// proportional to average per-turn payoff and replaces a uniformly random
// individual, until one type fixes. Deterministic for a fixed seed and any
// thread count.
FixationResult moran_fixation_simulated(const StrategySpec& a,
                                        const StrategySpec& b, int N, int turns,
                                        int trials, std::uint64_t seed,
                                        const PayoffParams& payoffs = standard_payoffs(),
                                        int threads = 1);

}  // namespace ipd::dynamics
