#include "mayerkit/verify.hpp"

#include <cmath>
#include <numbers>

#include "mayerkit/clusters.hpp"
#include "mayerkit/config.hpp"
#include "mayerkit/errors.hpp"
#include "mayerkit/measures.hpp"
#include "mayerkit/montecarlo.hpp"
#include "mayerkit/spectral.hpp"

namespace mayer {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kVerifySeed = 0x5eed'2024;

CheckResult relative_check(std::string suite, std::string name, double value, double target, double limit) {
  const double deviation = std::abs(value - target) / std::max(std::abs(target), 1e-300);
  return {std::move(suite), std::move(name), value, target, deviation, limit, deviation <= limit};
}

CheckResult mc_check(std::string suite, std::string name, const MCEstimate& e, double target) {
  const double limit = std::max(tolerance::mc_sigmas * e.std_error, tolerance::mc_float_floor * std::abs(target));
  const double deviation = std::abs(e.mean - target);
  return {std::move(suite), std::move(name), e.mean, target, deviation, limit, deviation <= limit};
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> k(n);
  for (int i = 0; i < n; ++i) k[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  return k;
}

void decomposition(std::vector<CheckResult>& out) {
  const auto grid = log_grid(1e-3, 100.0, 512);
  for (const auto& [r1, r2] : {std::pair{0.5, 0.5}, {0.3, 0.7}, {1.0, 2.0}}) {
    const double scale = std::abs(f_fourier({r1 + r2, 3}, 0.0));
    double worst = f_decomposition_residual(r1, r2, 0.0) / scale;
    for (double k : grid) worst = std::max(worst, f_decomposition_residual(r1, r2, k) / scale);
    out.push_back({"decomposition", "max residual R1=" + std::to_string(r1) + " R2=" + std::to_string(r2), worst, 0.0,
                   worst, tolerance::decomposition, worst <= tolerance::decomposition});
  }
}

void gauss_bonnet(std::vector<CheckResult>& out) {
  std::vector<Shape> shapes;
  for (double r : {0.25, 0.5, 1.0}) {
    shapes.push_back(Shape::ball(r));
    for (double l : {0.0, 1.0, 3.0}) shapes.push_back(Shape::spherocylinder(r, l));
  }
  SamplerConfig cfg{kVerifySeed, 100'000, 1, 1000};
  for (const auto& s : shapes) {
    const std::string tag = format_shape(s);
    out.push_back(relative_check("gauss-bonnet", "closed form " + tag, curvature_measure(s, CurvaturePolynomial::gauss),
                                 4.0 * kPi, tolerance::closed_form));
    out.push_back(mc_check("gauss-bonnet", "surface sampling " + tag,
                           curvature_measure_mc(s, CurvaturePolynomial::gauss, cfg), 4.0 * kPi));
    const MinkowskiData m = minkowski_functionals(s);
    out.push_back(relative_check("gauss-bonnet", "unit = surface " + tag,
                                 curvature_measure(s, CurvaturePolynomial::unit), m.surface, 1e-12));
    out.push_back(relative_check("gauss-bonnet", "mean = mean curvature integral " + tag,
                                 curvature_measure(s, CurvaturePolynomial::mean), *m.mean_curvature_integral, 1e-12));
  }
}

void parseval(std::vector<CheckResult>& out) {
  for (double sigma : {0.5, 1.0, 2.0}) {
    out.push_back(relative_check("parseval", "ring(2) sigma=" + std::to_string(sigma),
                                 ring_integral(2, {sigma, 3}), 4.0 * kPi * sigma * sigma * sigma / 3.0,
                                 tolerance::ring_relative));
  }
  out.push_back(relative_check("parseval", "ring(3) = -5 pi^2 / 6", ring_integral(3, {1.0, 3}),
                               -5.0 * kPi * kPi / 6.0, tolerance::ring_relative));
  for (int m : {3, 4}) {
    const double unit = ring_integral(m, {1.0, 3});
    out.push_back(relative_check("parseval", "scaling ring(" + std::to_string(m) + ") sigma=2",
                                 ring_integral(m, {2.0, 3}), std::pow(2.0, 3 * (m - 1)) * unit,
                                 tolerance::ring_relative));
  }
  int conserved = 0;
  int total = 0;
  for (int order = 3; order <= 6; ++order) {
    for (const auto& star : enumerate_stars(order)) {
      ++total;
      conserved += assign_loop_momenta(star.graph).conserved() ? 1 : 0;
    }
  }
  out.push_back({"parseval", "loop conservation on all star cycle bases", static_cast<double>(conserved),
                 static_cast<double>(total), static_cast<double>(total - conserved), 0.0, conserved == total});
}

void boundary(std::vector<CheckResult>& out) {
  int mismatches = 0;
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= 6; ++k) {
      long expected = 0;
      long binom = 1;
      for (int j = 1; j <= std::min(k, n); ++j) {
        binom = binom * (k - j + 1) / j;
        expected += binom;
      }
      if (static_cast<long>(boundary_expand(k, n).size()) != expected) ++mismatches;
    }
  }
  out.push_back({"boundary", "term counts k<=6, n=2..5", static_cast<double>(mismatches), 0.0,
                 static_cast<double>(mismatches), 0.0, mismatches == 0});
  const bool formula = boundary_formula(boundary_expand(2, 3)) == "∂D1∩D2 + D1∩∂D2 + ∂D1∩∂D2";
  out.push_back({"boundary", "two-domain formula", formula ? 1.0 : 0.0, 1.0, formula ? 0.0 : 1.0, 0.0, formula});
  const auto four = static_cast<double>(boundary_expand(4, 3).size());
  out.push_back({"boundary", "k=4 n=3 drops the 4-surface term", four, 14.0, std::abs(four - 14.0), 0.0, four == 14.0});
}

void cross_route(std::vector<CheckResult>& out) {
  const Shape ball = Shape::ball(0.5);
  const double b2 = 2.0 * kPi / 3.0;
  out.push_back(relative_check("cross-route", "kinematic B2", kinematic_b2(ball, ball), b2, tolerance::closed_form));
  out.push_back(relative_check("cross-route", "-f~(0)/2", -0.5 * f_fourier({1.0, 3}, 0.0), b2, tolerance::closed_form));

  SamplerConfig cfg{kVerifySeed, 200'000, 1, 1000};
  out.push_back(mc_check("cross-route", "MC B2", virial_coefficient_mc(2, ball, cfg), b2));
  const auto box = cluster_integral_box_mc(ClusterGraph(2, {{0, 1}}), ball, cfg);
  out.push_back(mc_check("cross-route", "box-sampled bond integral", box, -2.0 * b2));

  cfg.samples = 1'000'000;
  const MCEstimate triangle = cluster_integral_mc(ClusterGraph::ring(3), ball, cfg);
  out.push_back(mc_check("cross-route", "triangle MC vs ring(3)", triangle, ring_integral(3, {1.0, 3})));
  const double ratio = -triangle.mean / 3.0 / (b2 * b2);
  out.push_back(relative_check("cross-route", "B3/B2^2 (MC)", ratio, 0.625, tolerance::b3_ratio_relative));
  out.push_back(relative_check("cross-route", "B3 spectral", -ring_integral(3, {1.0, 3}) / 3.0,
                               5.0 * kPi * kPi / 18.0, tolerance::ring_relative));
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites{"decomposition", "gauss-bonnet", "parseval", "boundary", "cross-route"};
  return suites;
}

std::vector<CheckResult> run_verify(const std::string& suite) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  bool known = all;
  auto run = [&](const std::string& name, void (*fn)(std::vector<CheckResult>&)) {
    if (all || suite == name) {
      known = true;
      fn(out);
    }
  };
  run("decomposition", decomposition);
  run("gauss-bonnet", gauss_bonnet);
  run("parseval", parseval);
  run("boundary", boundary);
  run("cross-route", cross_route);
  if (!known) throw InvalidArgument("unknown verify suite '" + suite + "'");
  return out;
}

}  // namespace mayer
