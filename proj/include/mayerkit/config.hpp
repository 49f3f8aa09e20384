#pragma once

#include <string>

#include "mayerkit/geometry.hpp"

namespace mayer {

/// Parses `ball:r=<f>`, `disk:r=<f>` or `spherocylinder:r=<f>,l=<f>`.
/// Decimal floats, no whitespace, unknown or repeated keys rejected.
/// Throws ParseError naming the offending token and its position.
Shape parse_shape(const std::string& spec);

/// Inverse of parse_shape (shortest round-trip float formatting).
std::string format_shape(const Shape& shape);

/// Pass/fail thresholds shared by the verify suite and the acceptance tests.
namespace tolerance {
inline constexpr double closed_form = 1e-10;       // analytic identities
inline constexpr double decomposition = 1e-10;     // weight-product residual / |f~(0)|
inline constexpr double ring_relative = 1e-8;      // ring / Parseval quadrature
inline constexpr double mc_sigmas = 3.0;           // stochastic agreement, in standard errors
inline constexpr double mc_float_floor = 1e-12;    // relative floor for zero-variance estimators
inline constexpr double b3_ratio_relative = 0.01;  // B3 / B2^2
inline constexpr double b4_ratio_relative = 0.02;  // B4 / B2^3
}  // namespace tolerance

}  // namespace mayer
