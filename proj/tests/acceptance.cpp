// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when all pass).
//
// Oracles are computed here, independently of the library code under test.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "mayerkit/clusters.hpp"
#include "mayerkit/config.hpp"
#include "mayerkit/measures.hpp"
#include "mayerkit/montecarlo.hpp"
#include "mayerkit/spectral.hpp"

namespace {

using namespace mayer;
using std::numbers::pi;

// Pinned thresholds (mirrors mayer::tolerance, restated so a change there
// cannot silently relax this file).
constexpr double kClosed = 1e-10;
constexpr double kSigmas = 3.0;
constexpr double kFloor = 1e-12;
constexpr double kB3Rel = 0.01;
constexpr double kB4Rel = 0.02;
constexpr double kDecomposition = 1e-10;
constexpr double kParseval = 1e-8;
static_assert(kClosed == tolerance::closed_form && kSigmas == tolerance::mc_sigmas &&
              kB3Rel == tolerance::b3_ratio_relative && kB4Rel == tolerance::b4_ratio_relative &&
              kDecomposition == tolerance::decomposition && kParseval == tolerance::ring_relative);

struct Outcome {
  bool passed = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) passed = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "!") + what;
  }
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Statistical agreement; zero-variance estimators fall back to a float floor.
bool within_sigmas(const MCEstimate& e, double target) {
  return std::abs(e.mean - target) <= std::max(kSigmas * e.std_error, kFloor * std::abs(target));
}

SamplerConfig sampler(std::int64_t samples, std::uint64_t seed) {
  SamplerConfig cfg;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.batch = 1000;
  return cfg;
}

// Volume common to two unit balls whose centres are r apart (r <= 2).
double lens(double r) { return pi * (4.0 + r) * (2.0 - r) * (2.0 - r) / 12.0; }

// Ring plus diagonal at sigma = 1: the diagonal pins r <= 1 and each of the
// two remaining nodes ranges over the lens, so the value is
// -int_0^1 4 pi r^2 L(r)^2 dr by composite Gauss-Legendre (polynomial
// integrand of degree 8, so 5 nodes per panel are exact).
double diamond_oracle() {
  const double x[5] = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831, 0.9061798459386640};
  const double w[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889, 0.4786286704993665,
                       0.2369268850561891};
  double sum = 0.0;
  for (int i = 0; i < 5; ++i) {
    const double r = 0.5 * (x[i] + 1.0);
    const double L = lens(r);
    sum += 0.5 * w[i] * 4.0 * pi * r * r * L * L;
  }
  return -sum;
}

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

Outcome criterion1() {
  Outcome o;
  const Shape s = Shape::ball(0.5);
  const double target = 2.0 * pi / 3.0;
  const double kin = kinematic_b2(s, s);
  o.require(std::abs(kin - target) <= kClosed, fmt("kinematic %.15g", kin));
  const double four = -0.5 * f_fourier({1.0, 3}, 0.0);
  o.require(std::abs(four - target) <= kClosed, fmt("-f~(0)/2 %.15g", four));
  // B2 = -1/2 x bond integral.
  MCEstimate tree = cluster_integral_mc(ClusterGraph(2, {{0, 1}}), s, sampler(1'000'000, 11));
  tree.mean *= -0.5;
  tree.std_error *= 0.5;
  o.require(within_sigmas(tree, target), fmt("tree MC %.9g +- %.2g", tree.mean, tree.std_error));
  MCEstimate box = cluster_integral_box_mc(ClusterGraph(2, {{0, 1}}), s, sampler(1'000'000, 12));
  box.mean *= -0.5;
  box.std_error *= 0.5;
  o.require(within_sigmas(box, target), fmt("box MC %.6f +- %.2g", box.mean, box.std_error));
  return o;
}

Outcome criterion2() {
  Outcome o;
  const Shape s = Shape::ball(0.5);
  const double b2 = 2.0 * pi / 3.0;
  const MCEstimate b3 = virial_coefficient_mc(3, s, sampler(10'000'000, 21));
  const double ratio = b3.mean / (b2 * b2);
  o.require(std::abs(ratio - 0.625) <= kB3Rel * 0.625, fmt("B3/B2^2 %.6f", ratio));
  const MCEstimate tri = cluster_integral_mc(ClusterGraph::ring(3), s, sampler(10'000'000, 22));
  const double ring3 = -5.0 * pi * pi / 6.0;
  const double spectral = ring_integral(3, {1.0, 3});
  o.require(std::abs(spectral - ring3) <= kParseval * std::abs(ring3), fmt("ring(3) %.12f", spectral));
  o.require(within_sigmas(tri, spectral), fmt("triangle MC %.6f +- %.2g", tri.mean, tri.std_error));
  return o;
}

Outcome criterion3() {
  Outcome o;
  const Shape s = Shape::ball(0.5);
  const double b2 = 2.0 * pi / 3.0;
  // Closed form for hard spheres.
  const double oracle = (2707.0 * pi + 438.0 * std::sqrt(2.0) - 4131.0 * std::acos(1.0 / 3.0)) / (4480.0 * pi);
  o.require(std::abs(oracle - 0.28695) < 5e-6, fmt("closed form %.10f", oracle));
  const MCEstimate b4 = virial_coefficient_mc(4, s, sampler(100'000'000, 31));
  const double ratio = b4.mean / (b2 * b2 * b2);
  o.require(std::abs(ratio - oracle) <= kB4Rel * oracle,
            fmt("B4/B2^3 %.6f +- %.2g", ratio, b4.std_error / (b2 * b2 * b2)));
  return o;
}

Outcome criterion4() {
  Outcome o;
  const Shape s = Shape::disk(0.5);
  const double b2 = pi / 2.0;  // half the excluded area pi sigma^2
  const double oracle = 4.0 / 3.0 - std::sqrt(3.0) / pi;
  const MCEstimate b3 = virial_coefficient_mc(3, s, sampler(10'000'000, 41));
  const double ratio = b3.mean / (b2 * b2);
  o.require(std::abs(ratio - oracle) <= kB3Rel * oracle, fmt("B3/B2^2 %.6f vs %.6f", ratio, oracle));
  return o;
}

Outcome criterion5() {
  Outcome o;
  const std::vector<std::pair<double, double>> radii{{0.5, 0.5}, {0.3, 0.7}, {1.0, 2.0}};
  for (const auto& [r1, r2] : radii) {
    const double sigma = r1 + r2;
    const double f0 = 4.0 * pi / 3.0 * sigma * sigma * sigma;
    double worst = 0.0;
    // 512 log-spaced wavenumbers on [1e-3, 100]
    for (int i = 0; i < 512; ++i) {
      const double k = 1e-3 * std::pow(1e5, i / 511.0);
      worst = std::max(worst, f_decomposition_residual(r1, r2, k));
    }
    o.require(worst <= kDecomposition * f0, fmt("(%g,%g) %.2g", r1, r2, worst / f0));
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  const std::vector<Shape> shapes{Shape::ball(0.5), Shape::spherocylinder(0.5, 1.0), Shape::spherocylinder(1.0, 3.0),
                                  Shape::spherocylinder(0.25, 2.0)};
  std::uint64_t seed = 61;
  for (const Shape& s : shapes) {
    const double closed = curvature_measure(s, CurvaturePolynomial::gauss);
    o.require(std::abs(closed - 4.0 * pi) <= kClosed, fmt("%s closed %.12f", format_shape(s).c_str(), closed));
    const MCEstimate mc = curvature_measure_mc(s, CurvaturePolynomial::gauss, sampler(1'000'000, seed++));
    o.require(within_sigmas(mc, 4.0 * pi), fmt("MC %.5f +- %.2g", mc.mean, mc.std_error));
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  int mismatches = 0;
  for (int k = 1; k <= 6; ++k) {
    for (int n = 2; n <= 5; ++n) {
      double expected = 0.0;
      for (int j = 1; j <= std::min(k, n); ++j) expected += binomial(k, j);
      if (static_cast<double>(boundary_expand(k, n).size()) != expected) ++mismatches;
    }
  }
  o.require(mismatches == 0, fmt("count mismatches %d", mismatches));
  const std::string two = boundary_formula(boundary_expand(2, 3));
  o.require(two == "∂D1∩D2 + D1∩∂D2 + ∂D1∩∂D2", "formula " + two);
  const auto four = boundary_expand(4, 3);
  bool dropped = true;
  for (const auto& t : four) dropped = dropped && t.surface_set.size() <= 3;
  o.require(four.size() == 14 && dropped, fmt("k=4,n=3 gives %zu terms", four.size()));
  return o;
}

Outcome criterion8() {
  Outcome o;
  const ClusterGraph diamond = ClusterGraph::parse("order:4;edges:1-2,2-3,3-4,4-1,2-4");
  const double oracle = diamond_oracle();
  const double spectral = loop_evaluate(diamond, {1.0, 3});
  o.require(std::abs(spectral - oracle) <= kParseval * std::abs(oracle), fmt("spectral %.12f", spectral));
  const MCEstimate mc = cluster_integral_mc(diamond, Shape::ball(0.5), sampler(10'000'000, 81));
  // The spectral value carries no sampling error, so the combined error is the MC one.
  o.require(within_sigmas(mc, spectral), fmt("MC %.5f +- %.2g", mc.mean, mc.std_error));
  return o;
}

Outcome criterion9() {
  Outcome o;
  for (double sigma : {0.5, 1.0, 2.0}) {
    const double target = 4.0 * pi / 3.0 * sigma * sigma * sigma;
    const double v = ring_integral(2, {sigma, 3});
    o.require(std::abs(v - target) <= kParseval * target, fmt("sigma=%g rel %.2g", sigma, std::abs(v / target - 1)));
  }
  int bases = 0;
  int violations = 0;
  for (int order = 3; order <= 6; ++order) {
    for (const auto& star : enumerate_stars(order)) {
      const LoopAssignment a = assign_loop_momenta(star.graph);
      ++bases;
      for (int node = 0; node < star.graph.order(); ++node) {
        for (int q : a.node_balance(node)) violations += q != 0;
      }
    }
  }
  o.require(violations == 0, fmt("%d cycle bases, %d nonzero balances", bases, violations));
  return o;
}

Outcome criterion10() {
  Outcome o;
  const Shape s = Shape::spherocylinder(0.5, 1.0);
  // V = pi r^2 l + 4/3 pi r^3, S = 2 pi r l + 4 pi r^2, M = pi l + 4 pi r;
  // B2 = V + S M / (4 pi).
  const double r = 0.5, l = 1.0;
  const double v = pi * r * r * l + 4.0 / 3.0 * pi * r * r * r;
  const double area = 2.0 * pi * r * l + 4.0 * pi * r * r;
  const double m = pi * l + 4.0 * pi * r;
  const double oracle = v + area * m / (4.0 * pi);
  o.require(std::abs(oracle - 6.02139) < 5e-6, fmt("closed form %.8f", oracle));
  o.require(std::abs(kinematic_b2(s, s) - oracle) <= kClosed, "kinematic_b2");
  MCEstimate mc = cluster_integral_mc(ClusterGraph(2, {{0, 1}}), s, sampler(10'000'000, 101));
  mc.mean *= -0.5;
  mc.std_error *= 0.5;
  o.require(within_sigmas(mc, oracle), fmt("MC %.5f +- %.2g", mc.mean, mc.std_error));
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "cross-route B2, hard spheres", 5.0, criterion1},
      {2, "B3/B2^2 hard spheres, triangle vs ring(3)", 60.0, criterion2},
      {3, "B4/B2^3 hard spheres", 600.0, criterion3},
      {4, "B3/B2^2 hard disks", 60.0, criterion4},
      {5, "weight-function deconvolution of f", 1.0, criterion5},
      {6, "Gauss-Bonnet invariance", 60.0, criterion6},
      {7, "boundary-expansion counts", 1.0, criterion7},
      {8, "spectral vs MC, two-loop diagram", 120.0, criterion8},
      {9, "Parseval scaling and loop conservation", 5.0, criterion9},
      {10, "anisotropic kinematic B2", 60.0, criterion10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs <= c.budget_s, fmt("%.2fs of %.0fs", secs, c.budget_s));
    failed += !o.passed;
    std::printf("%s criterion %d: %s [%s]\n", o.passed ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
