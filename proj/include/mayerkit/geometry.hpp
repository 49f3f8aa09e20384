#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "mayerkit/rng.hpp"

namespace mayer {

enum class ShapeKind { ball, disk, spherocylinder };

std::string to_string(ShapeKind kind);

/// Convex hard body in its body frame: centred at the origin, spherocylinder
/// axis along +z. Disks live in the z = 0 plane.
struct Shape {
  ShapeKind kind = ShapeKind::ball;
  double radius = 0.5;
  double length = 0.0;  // cylinder length, spherocylinders only
  int dim = 3;

  static Shape ball(double radius);
  static Shape disk(double radius);
  static Shape spherocylinder(double radius, double length);

  /// Throws InvalidArgument if the field invariants are violated.
  void validate() const;

  bool anisotropic() const { return kind == ShapeKind::spherocylinder && length > 0.0; }

  /// Radius of the smallest centred ball containing the body.
  double bounding_radius() const { return radius + 0.5 * length; }

  Shape scaled(double factor) const;

  bool operator==(const Shape&) const = default;
};

/// Rigid placement. 2D poses keep z = 0 and rotate about the z axis.
struct Pose {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Eigen::Quaterniond orientation = Eigen::Quaterniond::Identity();

  static Pose at(const Eigen::Vector3d& position);
  static Pose planar(double x, double y, double angle);
  static Pose spatial(const Eigen::Vector3d& position, const Eigen::Quaterniond& orientation);

  /// Body-frame point to world frame.
  Eigen::Vector3d to_world(const Eigen::Vector3d& body_point) const {
    return position + orientation * body_point;
  }
};

/// Uniform (Haar) random orientation: normalised 4-Gaussian quaternion in 3D,
/// uniform angle in [0, 2pi) about z in 2D.
Eigen::Quaterniond random_orientation(int dim, Philox4x32& rng);

/// Intrinsic-volume data. `mean_curvature_integral` is the integral of
/// H = (k1 + k2) / 2 over the surface and only exists in 3D.
struct MinkowskiData {
  double volume = 0.0;
  double surface = 0.0;
  std::optional<double> mean_curvature_integral;
  double euler_integral = 0.0;
};

Eigen::Vector3d support_point(const Shape& shape, const Pose& pose, const Eigen::Vector3d& direction);

/// True iff the interiors intersect. Tangent bodies do not overlap.
bool overlap(const Shape& a, const Pose& pa, const Shape& b, const Pose& pb);

/// Closest distance between the core segments minus the radii; negative on
/// overlap. Computed with GJK on the support mappings of the cores, so it is
/// independent of the closed-form segment tests used by `overlap`.
double separation_gjk(const Shape& a, const Pose& pa, const Shape& b, const Pose& pb);

/// True if `direction` separates the support projections of the two bodies.
bool separates(const Shape& a, const Pose& pa, const Shape& b, const Pose& pb, const Eigen::Vector3d& direction);

MinkowskiData minkowski_functionals(const Shape& shape);

/// Principal curvatures at a body-frame surface point, outward-normal
/// convention (sphere of radius R gives 1/R). Returns dim - 1 values, largest
/// first.
std::vector<double> principal_curvatures(const Shape& shape, const Eigen::Vector3d& surface_point);

struct SurfaceSample {
  Eigen::Vector3d point;
  Eigen::Vector3d normal;
  double total_measure = 0.0;  // exact surface area (perimeter in 2D)
};

/// Body-frame point drawn uniformly with respect to surface measure.
SurfaceSample surface_sample(const Shape& shape, Philox4x32& rng);

/// Angle between outward normals on the intersection circle of two sphere
/// surfaces. Both shapes must be balls (or both disks).
double intersection_angle(const Shape& a, const Pose& pa, const Shape& b, const Pose& pb);

/// Squared distance between segments [p0, p1] and [q0, q1]; degenerate
/// segments are allowed.
double segment_distance_squared(const Eigen::Vector3d& p0, const Eigen::Vector3d& p1, const Eigen::Vector3d& q0,
                                const Eigen::Vector3d& q1);

}  // namespace mayer
