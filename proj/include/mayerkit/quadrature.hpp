#pragma once

#include <functional>
#include <span>
#include <vector>

namespace mayer {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // summed Gauss-Kronrod error estimate
  int evaluations = 0;
  int intervals = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-13;
  double rel_tol = 1e-10;
  int max_intervals = 20000;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration over the consecutive
/// intervals [breakpoints[i], breakpoints[i+1]]. The interval with the
/// largest error is bisected until the summed error falls below
/// max(abs_tol, rel_tol * |value|). Interval contributions are summed in
/// ascending position order. Throws NumericFailure with diagnostics when
/// max_intervals is exhausted.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, std::span<const double> breakpoints,
                                    const QuadratureOptions& options = {});

/// Evenly spaced breakpoints on [a, b] with spacing at most `width`.
std::vector<double> uniform_breakpoints(double a, double b, double width);

}  // namespace mayer
