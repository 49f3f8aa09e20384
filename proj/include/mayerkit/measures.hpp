#pragma once

#include <string>

#include "mayerkit/geometry.hpp"
#include "mayerkit/montecarlo.hpp"

namespace mayer {

/// Rosenfeld weight functions of a sphere of radius R: w3 is the volume
/// indicator, w2 the surface delta, w1 = w2 / (4 pi R), w0 = w2 / (4 pi R^2),
/// and the vector weights wv2 = w2 * rhat, wv1 = wv2 / (4 pi R).
enum class WeightLabel { w0, w1, w2, w3, wv1, wv2 };

std::string to_string(WeightLabel label);

struct WeightFunction {
  WeightLabel label = WeightLabel::w3;
  double radius = 0.5;

  int rank() const { return label == WeightLabel::wv1 || label == WeightLabel::wv2 ? 1 : 0; }
};

/// Fourier transform of a weight function. Scalar weights are real. For the
/// vector weights the transform is -i khat times the returned axial
/// component, k * w3~ for wv2 (and divided by 4 pi R for wv1).
double weight_fourier(const WeightFunction& w, double k);

/// |-f~(k) - sum of weight products| for spheres R1, R2 with contact
/// distance R1 + R2:
///   -f~ = w0 w3 + w3 w0 + w1 w2 + w2 w1 - wv1 wv2 - wv2 wv1
/// (first factor on sphere 1, second on sphere 2).
double f_decomposition_residual(double r1, double r2, double k);

/// Surface integrand selector: 1, (k1 + k2) / 2 or k1 k2. In 2D only unit
/// (perimeter) and gauss (integral of the curvature) exist.
enum class CurvaturePolynomial { unit, mean, gauss };

std::string to_string(CurvaturePolynomial p);

/// Closed-form surface integral of the curvature polynomial.
double curvature_measure(const Shape& shape, CurvaturePolynomial p);

/// Same integral estimated by uniform surface sampling.
MCEstimate curvature_measure_mc(const Shape& shape, CurvaturePolynomial p, const SamplerConfig& cfg);

/// Orientation-averaged excluded volume from the kinematic formula:
/// V_a + V_b + (S_a M_b + S_b M_a) / (4 pi) in 3D, A_a + A_b + P_a P_b / (2 pi) in 2D.
double excluded_volume(const Shape& a, const Shape& b);

/// Second virial coefficient, half the excluded volume.
double kinematic_b2(const Shape& a, const Shape& b);

}  // namespace mayer
