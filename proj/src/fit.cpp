#include "kzlz/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kzlz {

ScalingFitResult linear_fit(const std::vector<std::pair<double, double>>& points_in) {
  const int n = static_cast<int>(points_in.size());
  if (n < 3) throw std::invalid_argument("linear_fit: need at least 3 points");

  // Fixed accumulation order makes the fit independent of input permutation.
  std::vector<std::pair<double, double>> points = points_in;
  std::sort(points.begin(), points.end());

  double sx = 0.0, sy = 0.0;
  for (const auto& [x, y] : points) {
    sx += x;
    sy += y;
  }
  const double mx = sx / n;
  const double my = sy / n;

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("linear_fit: zero variance in x");

  const double beta = sxy / sxx;
  const double n0 = my - beta * mx;

  double rss = 0.0;
  for (const auto& [x, y] : points) {
    const double r = y - (n0 + beta * x);
    rss += r * r;
  }
  const double sigma2 = rss / (n - 2);
  const double se_beta = std::sqrt(sigma2 / sxx);
  const double se_n0 = std::sqrt(sigma2 * (1.0 / n + mx * mx / sxx));
  const double r2 = syy > 0.0 ? 1.0 - rss / syy : 1.0;

  return {n0, beta, se_n0, se_beta, r2, n};
}

double theory_slope() { return 1.0 / (2.0 * std::sqrt(2.0) * M_PI); }

}  // namespace kzlz
