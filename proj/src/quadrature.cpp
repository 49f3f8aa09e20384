#include "mayerkit/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>

#include "mayerkit/errors.hpp"

namespace mayer {

namespace {

// Kronrod 15-point abscissae (positive half) and weights, with the embedded
// 7-point Gauss weights on the odd-indexed abscissae (QUADPACK qk15).
constexpr std::array<double, 8> kXgk = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                        0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(centre - dx) + f(centre + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  const double value = kronrod * half;
  const double error = std::abs((kronrod - gauss) * half);
  return {a, b, value, error};
}

}  // namespace

std::vector<double> uniform_breakpoints(double a, double b, double width) {
  const int n = std::max(1, static_cast<int>(std::ceil((b - a) / width)));
  std::vector<double> points(n + 1);
  for (int i = 0; i <= n; ++i) points[i] = a + (b - a) * static_cast<double>(i) / n;
  points.back() = b;
  return points;
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, std::span<const double> breakpoints,
                                    const QuadratureOptions& options) {
  if (breakpoints.size() < 2) throw InvalidArgument("integrate_adaptive needs at least two breakpoints");
  std::priority_queue<Panel> queue;
  QuadratureResult result;
  double value = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (breakpoints[i + 1] <= breakpoints[i]) continue;
    Panel p = gauss_kronrod(f, breakpoints[i], breakpoints[i + 1]);
    result.evaluations += 15;
    value += p.value;
    error += p.error;
    queue.push(p);
  }
  auto converged = [&] { return error <= std::max(options.abs_tol, options.rel_tol * std::abs(value)); };

  while (!queue.empty() && !converged()) {
    if (static_cast<int>(queue.size()) >= options.max_intervals) {
      std::ostringstream os;
      os << "adaptive quadrature did not converge: value " << value << ", error estimate " << error << " after "
         << queue.size() << " intervals and " << result.evaluations << " evaluations (target abs "
         << options.abs_tol << ", rel " << options.rel_tol << "); worst interval [" << queue.top().a << ", "
         << queue.top().b << "]";
      throw NumericFailure(os.str());
    }
    const Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = gauss_kronrod(f, worst.a, mid);
    const Panel right = gauss_kronrod(f, mid, worst.b);
    result.evaluations += 30;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }

  // Re-sum in position order so the result does not depend on heap history.
  std::vector<Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  result.value = 0.0;
  result.error = 0.0;
  double compensation = 0.0;
  for (const auto& p : panels) {
    const double y = p.value - compensation;
    const double t = result.value + y;
    compensation = (t - result.value) - y;
    result.value = t;
    result.error += p.error;
  }
  result.intervals = static_cast<int>(panels.size());
  return result;
}

}  // namespace mayer
