#include "mayerkit/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mayerkit/errors.hpp"
#include "mayerkit/quadrature.hpp"

namespace mayer {

namespace {

constexpr double kPi = std::numbers::pi;
const std::complex<double> kI(0.0, 1.0);

// Below this |freq| * k_min the asymptotic integration-by-parts series is
// not used directly; the range up to kAsymptoticPhase / |freq| is integrated
// numerically first.
constexpr double kAsymptoticPhase = 40.0;

std::complex<double> asymptotic_tail(double a, double p, double k0) {
  // E(a) = -exp(i p k0) / (i p) * S, S = sum_n t_n,
  // t_0 = k0^a, t_n = -t_{n-1} (a - n + 1) / (i p k0).
  std::complex<double> term = std::pow(k0, a);
  std::complex<double> sum = term;
  double previous = std::abs(term);
  for (int n = 1; n < 200; ++n) {
    term *= -(a - n + 1) / (kI * p * k0);
    const double size = std::abs(term);
    if (size > previous) break;  // asymptotic series started to diverge
    sum += term;
    if (size <= 1e-18 * std::abs(sum)) break;
    previous = size;
  }
  return -std::exp(kI * p * k0) / (kI * p) * sum;
}

}  // namespace

double ball_window(double x) {
  x = std::abs(x);
  if (x < 0.1) {
    // 3 * sum_j (-1)^j 2 (j + 1) x^(2j) / (2j + 3)!
    const double x2 = x * x;
    double term = 1.0;  // j = 0 coefficient times 3
    double sum = 1.0;
    for (int j = 1; j < 8; ++j) {
      term *= -x2 * static_cast<double>(j + 1) / (static_cast<double>(j) * (2 * j + 2) * (2 * j + 3));
      sum += term;
    }
    return sum;
  }
  return 3.0 * (std::sin(x) - x * std::cos(x)) / (x * x * x);
}

double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

double disk_window(double x) {
  x = std::abs(x);
  if (x < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 8.0 + x2 * x2 / 192.0;
  }
  return 2.0 * bessel_j1(x) / x;
}

double bessel_j0(double x) { return std::cyl_bessel_j(0.0, std::abs(x)); }

double bessel_j1(double x) {
  const double v = std::cyl_bessel_j(1.0, std::abs(x));
  return x < 0.0 ? -v : v;
}

OscSeries OscSeries::sphere_bond(double sigma) {
  // -4 pi [k^-3 sin(sigma k) - sigma k^-2 cos(sigma k)]
  const std::complex<double> s = -4.0 * kPi / (2.0 * kI);
  const double c = 2.0 * kPi * sigma;
  return OscSeries({{s, -3.0, sigma}, {-s, -3.0, -sigma}, {c, -2.0, sigma}, {c, -2.0, -sigma}});
}

OscSeries OscSeries::bessel(int nu, double r, double k_min) {
  // J_nu(x) ~ sqrt(2 / (pi x)) [P cos w - Q sin w], w = x - nu pi / 2 - pi / 4,
  // with a_k(nu) = prod_{i<=k} (4 nu^2 - (2i - 1)^2) / (k! 8^k);
  // P = sum (-1)^j a_{2j} x^{-2j}, Q = sum (-1)^j a_{2j+1} x^{-2j-1}.
  const double mu = 4.0 * nu * nu;
  const double x_min = r * k_min;
  if (!(x_min >= 25.0)) throw InvalidArgument("Hankel expansion needs r * k_min >= 25");
  const std::complex<double> phase = std::exp(-kI * (nu * kPi / 2.0 + kPi / 4.0));
  const double prefactor = std::sqrt(2.0 / kPi);
  std::vector<OscTerm> terms;
  double a = 1.0;
  for (int k = 0; k < 60; ++k) {
    if (k > 0) a *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (k * 8.0);
    if (a == 0.0) break;
    if (k > 2 && std::abs(a) * std::pow(x_min, -k) < 1e-22) break;
    // x^{-1/2-k} in terms of k-variable: r^{-1/2-k} k^{-1/2-k}
    const double scale = prefactor * a * std::pow(r, -0.5 - k);
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    std::complex<double> plus;   // coefficient of e^{i w}
    std::complex<double> minus;  // coefficient of e^{-i w}
    if (k % 2 == 0) {
      plus = minus = 0.5 * sign;  // P cos w
    } else {
      plus = -sign / (2.0 * kI);  // -Q sin w
      minus = sign / (2.0 * kI);
    }
    terms.push_back({scale * plus * phase, -0.5 - k, r});
    terms.push_back({scale * minus * std::conj(phase), -0.5 - k, -r});
  }
  return OscSeries(std::move(terms));
}

OscSeries OscSeries::disk_bond(double sigma, double k_min) {
  return (bessel(1, sigma, k_min) * power(-1.0)).scaled(-2.0 * kPi * sigma);
}

OscSeries OscSeries::spherical_j0(double r) {
  const std::complex<double> c = 1.0 / (2.0 * kI * r);
  return OscSeries({{c, -1.0, r}, {-c, -1.0, -r}});
}

OscSeries OscSeries::operator*(const OscSeries& other) const {
  std::vector<OscTerm> out;
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      const OscTerm t{a.coef * b.coef, a.power + b.power, a.freq + b.freq};
      auto it = std::find_if(out.begin(), out.end(), [&](const OscTerm& o) {
        return std::abs(o.power - t.power) < 1e-12 && std::abs(o.freq - t.freq) < 1e-12 * (1.0 + std::abs(t.freq));
      });
      if (it == out.end()) {
        out.push_back(t);
      } else {
        it->coef += t.coef;
      }
    }
  }
  return OscSeries(std::move(out));
}

OscSeries OscSeries::pow(int exponent) const {
  if (exponent < 0) throw InvalidArgument("OscSeries::pow needs a non-negative exponent");
  OscSeries result = constant(1.0);
  for (int i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

OscSeries OscSeries::scaled(double factor) const {
  OscSeries out = *this;
  for (auto& t : out.terms_) t.coef *= factor;
  return out;
}

OscSeries OscSeries::pruned(double k, double relative) const {
  double largest = 0.0;
  for (const auto& t : terms_) largest = std::max(largest, std::abs(t.coef) * std::pow(k, t.power));
  std::vector<OscTerm> kept;
  for (const auto& t : terms_) {
    if (std::abs(t.coef) * std::pow(k, t.power) >= relative * largest) kept.push_back(t);
  }
  return OscSeries(std::move(kept));
}

double OscSeries::evaluate(double k) const {
  std::complex<double> sum = 0.0;
  for (const auto& t : terms_) sum += t.coef * std::pow(k, t.power) * std::exp(kI * t.freq * k);
  return sum.real();
}

double OscSeries::integrate_tail(double k_min) const {
  std::complex<double> sum = 0.0;
  for (const auto& t : terms_) {
    if (t.coef == 0.0) continue;
    sum += t.coef * oscillatory_tail(t.power, t.freq, k_min);
  }
  return sum.real();
}

std::complex<double> oscillatory_tail(double a, double p, double k0) {
  if (!(k0 > 0.0)) throw InvalidArgument("oscillatory_tail needs k_min > 0");
  const double phase = std::abs(p) * k0;
  if (phase < 1e-14 * k0 || std::abs(p) < 1e-14) {
    if (a >= -1.0) throw NumericFailure("non-oscillating tail term k^" + std::to_string(a) + " diverges");
    return -std::pow(k0, a + 1.0) / (a + 1.0);
  }
  if (phase >= kAsymptoticPhase) return asymptotic_tail(a, p, k0);
  if (a >= 0.0) throw NumericFailure("slowly oscillating tail term k^" + std::to_string(a) + " diverges");

  // Integrate [k0, k1] numerically on geometric panels, then continue
  // asymptotically from k1 where the phase is large enough.
  const double k1 = kAsymptoticPhase / std::abs(p);
  std::vector<double> points{k0};
  while (points.back() < k1) points.push_back(std::min(k1, std::max(points.back() * 1.5, points.back() + 1.0 / std::abs(p))));
  QuadratureOptions opts;
  opts.rel_tol = 1e-13;
  opts.abs_tol = 1e-300;
  const double scale = std::pow(k0, a + 1.0);
  opts.abs_tol = 1e-15 * scale;
  const double re =
      integrate_adaptive([&](double k) { return std::pow(k, a) * std::cos(p * k); }, points, opts).value;
  const double im =
      integrate_adaptive([&](double k) { return std::pow(k, a) * std::sin(p * k); }, points, opts).value;
  return std::complex<double>(re, im) + asymptotic_tail(a, p, k1);
}

}  // namespace mayer
