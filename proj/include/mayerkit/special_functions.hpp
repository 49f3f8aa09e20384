#pragma once

#include <complex>
#include <vector>

namespace mayer {

/// 3 (sin x - x cos x) / x^3, the normalised transform of a ball indicator.
/// Taylor series below x = 0.1.
double ball_window(double x);

/// sin(x) / x with the x -> 0 limit.
double sinc(double x);

/// 2 J1(x) / x, the normalised transform of a disk indicator.
double disk_window(double x);

/// Cylindrical Bessel functions of the first kind, orders 0 and 1.
double bessel_j0(double x);
double bessel_j1(double x);

/// Sum of terms coef * k^power * exp(i * freq * k), valid for k >= some
/// cutoff. Used to integrate oscillatory radial integrands from a finite
/// cutoff to infinity term by term.
struct OscTerm {
  std::complex<double> coef;
  double power = 0.0;
  double freq = 0.0;
};

class OscSeries {
 public:
  OscSeries() = default;
  explicit OscSeries(std::vector<OscTerm> terms) : terms_(std::move(terms)) {}

  static OscSeries constant(double value) { return OscSeries({{value, 0.0, 0.0}}); }
  static OscSeries power(double exponent) { return OscSeries({{1.0, exponent, 0.0}}); }

  /// Exact expansion of the hard-sphere f-bond transform
  /// -4 pi (sin(sigma k) - sigma k cos(sigma k)) / k^3.
  static OscSeries sphere_bond(double sigma);
  /// Hankel asymptotic expansion of the hard-disk f-bond transform
  /// -2 pi sigma J1(sigma k) / k, accurate for sigma k >= k_min * sigma.
  static OscSeries disk_bond(double sigma, double k_min);
  /// sin(r k) / (r k), exact.
  static OscSeries spherical_j0(double r);
  /// Hankel asymptotic expansion of J_nu(r k) for nu in {0, 1}, r k >= r k_min.
  static OscSeries bessel(int nu, double r, double k_min);

  OscSeries operator*(const OscSeries& other) const;
  OscSeries pow(int exponent) const;
  OscSeries scaled(double factor) const;

  /// Value at k (sum of the real parts).
  double evaluate(double k) const;

  /// Real part of the integral from k_min to infinity. Throws NumericFailure
  /// if a non-oscillating term does not decay fast enough to converge.
  double integrate_tail(double k_min) const;

  const std::vector<OscTerm>& terms() const { return terms_; }

  /// Drops terms smaller than `relative` times the largest term at k.
  OscSeries pruned(double k, double relative) const;

 private:
  std::vector<OscTerm> terms_;
};

/// Integral from k_min to infinity of k^power exp(i freq k).
std::complex<double> oscillatory_tail(double power, double freq, double k_min);

}  // namespace mayer
