// Ordinary least-squares line fit with parameter standard errors.
#pragma once

#include <utility>
#include <vector>

namespace kzlz {

struct ScalingFitResult {
  double n0;       // intercept
  double beta;     // slope
  double se_n0;    // standard error of the intercept
  double se_beta;  // standard error of the slope
  double r_squared;
  int n_points;
};

// Unweighted OLS via closed-form normal equations; standard errors from the
// residual variance with n-2 degrees of freedom. Rejects < 3 points or zero
// x-variance.
ScalingFitResult linear_fit(const std::vector<std::pair<double, double>>& points);

// 1 / (2 sqrt(2) pi), the continuum defect-density slope.
double theory_slope();

}  // namespace kzlz
