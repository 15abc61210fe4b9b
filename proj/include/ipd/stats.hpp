#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <vector>

#include "ipd/payoffs.hpp"
#include "ipd/tournament.hpp"

namespace ipd::stats {

// Population moments. Skewness is the moment coefficient g1 = m3 / m2^{3/2},
// defined as 0 when the variance is 0. Median and quartiles use linear
// interpolation at positions q (n - 1) of the sorted sample, which reduces to
// the midpoint-of-two rule for even-count medians.
struct DistributionSummary {
  std::size_t count = 0;
  double mean = 0.0;
  double median = 0.0;
  double variance = 0.0;  // population variance
  double skewness = 0.0;
  double min = 0.0;
  double max = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
};

DistributionSummary summarize(std::vector<double> values);

struct StrategyStanding {
  std::string name;
  double mean_score_per_turn = 0.0;
  long wins = 0;
  long ties = 0;
  long losses = 0;
};

struct RankTables {
  std::vector<StrategyStanding> by_score;  // descending mean per-turn score
  std::vector<StrategyStanding> by_wins;   // descending match wins
};

// A win is a strictly greater total match score; ties are counted separately.
// Equal keys are broken lexicographically by name.
RankTables rank_strategies(const std::vector<InteractionRecord>& records,
                           const std::vector<std::string>& names,
                           const PayoffParams& payoffs);

struct RegressionResult {
  Eigen::VectorXd coefficients;  // one per feature column
  double intercept = 0.0;
  double r_squared = 0.0;
  double residual_variance = 0.0;  // SSR / (n - k - 1); 0 for a saturated fit
  Eigen::VectorXd coefficient_standard_errors;
  double intercept_standard_error = 0.0;
};

// Ordinary least squares with an intercept, solved through the normal
// equations. Requires rows >= columns + 1 and a full-column-rank design.
RegressionResult ols_fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y);

}  // namespace ipd::stats
