#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "zeckgap/core.hpp"

namespace zeckgap {

/// Ordinary least-squares line fit.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;     // 1 when the data is constant (zero total variance)
  double residual_max = 0.0;  // max |y_i - (slope*x_i + intercept)|
};

inline LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw NumericError("fit_line: need at least two points");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw NumericError("fit_line: degenerate abscissae");
  LinearFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  const double ymean = sy / n;
  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.slope * x[i] + fit.intercept);
    ss_res += r * r;
    ss_tot += (y[i] - ymean) * (y[i] - ymean);
    fit.residual_max = std::max(fit.residual_max, std::abs(r));
  }
  fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

}  // namespace zeckgap
