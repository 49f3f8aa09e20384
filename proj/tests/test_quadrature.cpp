#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <numbers>
#include <vector>

#include "mayerkit/errors.hpp"
#include "mayerkit/quadrature.hpp"
#include "mayerkit/special_functions.hpp"

using namespace mayer;
using std::numbers::pi;

TEST_CASE("adaptive Gauss-Kronrod") {
  const double bp[] = {0.0, pi};
  auto r = integrate_adaptive([](double x) { return std::sin(x); }, bp);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(r.error < 1e-10);
  CHECK(r.evaluations % 15 == 0);

  // kink at a breakpoint, integrable endpoint singularity
  const double kink[] = {-1.0, 0.3, 2.0};
  r = integrate_adaptive([](double x) { return std::abs(x - 0.3); }, kink);
  CHECK(r.value == doctest::Approx((1.3 * 1.3 + 1.7 * 1.7) / 2).epsilon(1e-13));
  const double unit[] = {0.0, 1.0};
  r = integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, unit);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-8));

  QuadratureOptions tight;
  tight.max_intervals = 3;
  tight.abs_tol = 1e-15;
  tight.rel_tol = 1e-15;
  CHECK_THROWS_AS(integrate_adaptive([](double x) { return std::sin(1.0 / (x + 1e-3)); }, unit, tight),
                  NumericFailure);

  const auto b = uniform_breakpoints(0.0, 1.0, 0.3);
  REQUIRE(b.size() == 5);
  CHECK(b.front() == 0.0);
  CHECK(b.back() == 1.0);
}

TEST_CASE("window functions are continuous across the series switch") {
  for (double x : {1e-8, 1e-4, 0.0999999, 0.1, 0.1000001, 0.5, 3.0, 30.0}) {
    const long double xl = x;
    const long double exact = 3.0L * (std::sin(xl) - xl * std::cos(xl)) / (xl * xl * xl);
    if (x > 1e-3) CHECK(ball_window(x) == doctest::Approx(static_cast<double>(exact)).epsilon(1e-11));
    CHECK(disk_window(x) == doctest::Approx(2 * boost::math::cyl_bessel_j(1, x) / x).epsilon(1e-12));
  }
  CHECK(ball_window(0.0) == 1.0);
  CHECK(disk_window(0.0) == 1.0);
  CHECK(sinc(0.0) == 1.0);
  // series vs long-double closed form just below the switch, where the
  // closed form is still reasonably conditioned in extended precision
  CHECK(ball_window(0.09) == doctest::Approx(static_cast<double>(
                                 3.0L * (std::sin(0.09L) - 0.09L * std::cos(0.09L)) / (0.09L * 0.09L * 0.09L)))
                                 .epsilon(1e-14));
  CHECK(bessel_j0(2.404825557695773) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(bessel_j1(5.0) == doctest::Approx(boost::math::cyl_bessel_j(1, 5.0)).epsilon(1e-14));
}

TEST_CASE("oscillatory tails") {
  boost::math::quadrature::exp_sinh<double> integrator;
  // Oracle: half-period panels summed, then Euler-averaged.
  const double k0 = 5.0;
  auto direct = [&](double power, double freq) {
    const double h = pi / freq;
    std::vector<double> partial;
    double sum = 0.0;
    double a = k0;
    for (int i = 0; i < 4000; ++i) {
      const double bp[] = {a, a + h};
      sum += integrate_adaptive([&](double k) { return std::pow(k, power) * std::cos(freq * k); }, bp).value;
      a += h;
      partial.push_back(sum);
    }
    // repeated averaging of consecutive partial sums (Euler transform)
    for (int level = 0; level < 12; ++level) {
      for (std::size_t i = 0; i + 1 < partial.size(); ++i) partial[i] = 0.5 * (partial[i] + partial[i + 1]);
      partial.pop_back();
    }
    return partial.back();
  };
  for (double power : {-2.0, -1.5, -3.0, -0.5}) {
    for (double freq : {1.0, 3.0, 20.0}) {
      CHECK_MESSAGE(oscillatory_tail(power, freq, k0).real() == doctest::Approx(direct(power, freq)).epsilon(1e-9),
                    power, " ", freq);
    }
  }
  const double pure = integrator.integrate([&](double t) { return std::pow(t + k0, -2.5); });
  CHECK(oscillatory_tail(-2.5, 0.0, k0).real() == doctest::Approx(pure).epsilon(1e-12));
  CHECK_THROWS_AS(oscillatory_tail(-1.0, 0.0, k0), NumericFailure);
}

TEST_CASE("oscillatory series reproduce the bond transforms") {
  const double sigma = 1.3;
  const auto sphere = OscSeries::sphere_bond(sigma);
  for (double k : {0.7, 10.0, 123.4}) {
    const double x = sigma * k;
    CHECK(sphere.evaluate(k) == doctest::Approx(-4 * pi * (std::sin(x) - x * std::cos(x)) / (k * k * k)).epsilon(1e-12));
  }
  const auto disk = OscSeries::disk_bond(sigma, 40.0);
  for (double k : {40.0, 100.0, 400.0}) {
    CHECK(disk.evaluate(k) ==
          doctest::Approx(-2 * pi * sigma * boost::math::cyl_bessel_j(1, sigma * k) / k).epsilon(1e-10));
  }
  const auto j0 = OscSeries::bessel(0, 2.0, 30.0);
  CHECK(j0.evaluate(31.0) == doctest::Approx(boost::math::cyl_bessel_j(0, 62.0)).epsilon(1e-10));
  const auto sq = sphere.pow(2);
  CHECK(sq.evaluate(50.0) == doctest::Approx(std::pow(sphere.evaluate(50.0), 2)).epsilon(1e-12));
}
