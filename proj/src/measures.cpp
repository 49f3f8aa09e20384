#include "mayerkit/measures.hpp"

#include <cmath>
#include <numbers>

#include "mayerkit/errors.hpp"
#include "mayerkit/spectral.hpp"
#include "mayerkit/special_functions.hpp"

namespace mayer {

namespace {

constexpr double kPi = std::numbers::pi;

double polynomial_value(CurvaturePolynomial p, const std::vector<double>& kappa) {
  switch (p) {
    case CurvaturePolynomial::unit:
      return 1.0;
    case CurvaturePolynomial::mean:
      return 0.5 * (kappa[0] + kappa[1]);
    case CurvaturePolynomial::gauss:
      return kappa.size() == 1 ? kappa[0] : kappa[0] * kappa[1];
  }
  return 0.0;
}

void require_supported(const Shape& shape, CurvaturePolynomial p) {
  shape.validate();
  if (shape.dim == 2 && p == CurvaturePolynomial::mean) {
    throw InvalidArgument("mean curvature integral is not defined for 2D shapes");
  }
}

}  // namespace

std::string to_string(WeightLabel label) {
  switch (label) {
    case WeightLabel::w0:
      return "w0";
    case WeightLabel::w1:
      return "w1";
    case WeightLabel::w2:
      return "w2";
    case WeightLabel::w3:
      return "w3";
    case WeightLabel::wv1:
      return "wv1";
    case WeightLabel::wv2:
      return "wv2";
  }
  return "?";
}

std::string to_string(CurvaturePolynomial p) {
  switch (p) {
    case CurvaturePolynomial::unit:
      return "unit";
    case CurvaturePolynomial::mean:
      return "mean";
    case CurvaturePolynomial::gauss:
      return "gauss";
  }
  return "?";
}

double weight_fourier(const WeightFunction& w, double k) {
  if (k < 0.0) throw InvalidArgument("wavenumber must be non-negative");
  if (!(w.radius > 0.0)) throw InvalidArgument("weight radius must be positive");
  const double r = w.radius;
  const double x = k * r;
  const double w3 = 4.0 * kPi * r * r * r / 3.0 * ball_window(x);
  const double w2 = 4.0 * kPi * r * r * sinc(x);
  switch (w.label) {
    case WeightLabel::w3:
      return w3;
    case WeightLabel::w2:
      return w2;
    case WeightLabel::w1:
      return w2 / (4.0 * kPi * r);
    case WeightLabel::w0:
      return w2 / (4.0 * kPi * r * r);
    case WeightLabel::wv2:
      return k * w3;
    case WeightLabel::wv1:
      return k * w3 / (4.0 * kPi * r);
  }
  return 0.0;
}

double f_decomposition_residual(double r1, double r2, double k) {
  if (!(r1 > 0.0) || !(r2 > 0.0)) throw InvalidArgument("radii must be positive");
  auto w = [k](WeightLabel label, double r) { return weight_fourier({label, r}, k); };
  using enum WeightLabel;
  const double rhs = w(w0, r1) * w(w3, r2) + w(w3, r1) * w(w0, r2) + w(w1, r1) * w(w2, r2) + w(w2, r1) * w(w1, r2) -
                     w(wv1, r1) * w(wv2, r2) - w(wv2, r1) * w(wv1, r2);
  const double lhs = -f_fourier({r1 + r2, 3}, k);
  return std::abs(lhs - rhs);
}

double curvature_measure(const Shape& shape, CurvaturePolynomial p) {
  require_supported(shape, p);
  const MinkowskiData m = minkowski_functionals(shape);
  switch (p) {
    case CurvaturePolynomial::unit:
      return m.surface;
    case CurvaturePolynomial::mean:
      return *m.mean_curvature_integral;
    case CurvaturePolynomial::gauss:
      return m.euler_integral;
  }
  return 0.0;
}

MCEstimate curvature_measure_mc(const Shape& shape, CurvaturePolynomial p, const SamplerConfig& cfg) {
  require_supported(shape, p);
  return sample_mean(cfg, [&shape, p](int) {
    return [&shape, p](Philox4x32& rng) {
      const SurfaceSample s = surface_sample(shape, rng);
      return s.total_measure * polynomial_value(p, principal_curvatures(shape, s.point));
    };
  });
}

double excluded_volume(const Shape& a, const Shape& b) {
  a.validate();
  b.validate();
  if (a.dim != b.dim) throw InvalidArgument("shape dimensions differ");
  const MinkowskiData ma = minkowski_functionals(a);
  const MinkowskiData mb = minkowski_functionals(b);
  if (a.dim == 2) return ma.volume + mb.volume + ma.surface * mb.surface / (2.0 * kPi);
  return ma.volume + mb.volume +
         (ma.surface * *mb.mean_curvature_integral + mb.surface * *ma.mean_curvature_integral) / (4.0 * kPi);
}

double kinematic_b2(const Shape& a, const Shape& b) { return 0.5 * excluded_volume(a, b); }

}  // namespace mayer
