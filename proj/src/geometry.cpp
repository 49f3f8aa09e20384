#include "mayerkit/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "mayerkit/errors.hpp"

namespace mayer {

namespace {

constexpr double kPi = std::numbers::pi;

// Surface points are accepted within this many shape radii of the surface.
constexpr double kSurfaceTolerance = 1e-9;

struct Core {
  Eigen::Vector3d p0;
  Eigen::Vector3d p1;
};

// Core segment of a posed body in world coordinates (a point for balls/disks).
Core world_core(const Shape& shape, const Pose& pose) {
  const Eigen::Vector3d half(0.0, 0.0, 0.5 * shape.length);
  return {pose.to_world(-half), pose.to_world(half)};
}

Eigen::Vector3d core_support(const Core& core, const Eigen::Vector3d& d) {
  const double a = core.p0.dot(d);
  const double b = core.p1.dot(d);
  if (a > b) return core.p0;
  if (b > a) return core.p1;
  return 0.5 * (core.p0 + core.p1);
}

void require_same_dim(const Shape& a, const Shape& b) {
  if (a.dim != b.dim) {
    throw InvalidArgument("shape dimensions differ: " + std::to_string(a.dim) + " vs " + std::to_string(b.dim));
  }
}

// Closest point to the origin in the convex hull of `simplex` (1..4 points).
// Every face whose affine minimiser has non-negative barycentric coordinates
// is a candidate; the shortest candidate is the hull's closest point. On
// return `simplex` holds the vertices of the supporting face.
Eigen::Vector3d closest_in_hull(std::vector<Eigen::Vector3d>& simplex) {
  const int m = static_cast<int>(simplex.size());
  Eigen::Vector3d best = simplex.front();
  double best_norm = std::numeric_limits<double>::infinity();
  unsigned best_mask = 1;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) idx.push_back(i);
    }
    const int s = static_cast<int>(idx.size());
    const Eigen::Vector3d& base = simplex[idx[0]];
    Eigen::Vector3d candidate = base;
    if (s > 1) {
      Eigen::MatrixXd edges(3, s - 1);
      for (int j = 1; j < s; ++j) edges.col(j - 1) = simplex[idx[j]] - base;
      const Eigen::MatrixXd gram = edges.transpose() * edges;
      Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
      if (!lu.isInvertible()) continue;
      const Eigen::VectorXd mu = lu.solve(-edges.transpose() * base);
      if ((mu.array() < -1e-12).any() || mu.sum() > 1.0 + 1e-12) continue;
      candidate = base + edges * mu;
    }
    const double norm = candidate.squaredNorm();
    if (norm < best_norm) {
      best_norm = norm;
      best = candidate;
      best_mask = mask;
    }
  }
  std::vector<Eigen::Vector3d> kept;
  for (int i = 0; i < m; ++i) {
    if (best_mask & (1u << i)) kept.push_back(simplex[i]);
  }
  simplex = std::move(kept);
  return best;
}

}  // namespace

std::string to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::ball:
      return "ball";
    case ShapeKind::disk:
      return "disk";
    case ShapeKind::spherocylinder:
      return "spherocylinder";
  }
  return "unknown";
}

Shape Shape::ball(double radius) {
  Shape s{ShapeKind::ball, radius, 0.0, 3};
  s.validate();
  return s;
}

Shape Shape::disk(double radius) {
  Shape s{ShapeKind::disk, radius, 0.0, 2};
  s.validate();
  return s;
}

Shape Shape::spherocylinder(double radius, double length) {
  Shape s{ShapeKind::spherocylinder, radius, length, 3};
  s.validate();
  return s;
}

void Shape::validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidArgument("radius must be a positive finite number");
  if (!(length >= 0.0) || !std::isfinite(length)) throw InvalidArgument("length must be a non-negative finite number");
  if (kind != ShapeKind::spherocylinder && length != 0.0) {
    throw InvalidArgument("length is only defined for spherocylinders");
  }
  const int expected = kind == ShapeKind::disk ? 2 : 3;
  if (dim != expected) throw InvalidArgument(to_string(kind) + " requires dim = " + std::to_string(expected));
}

Shape Shape::scaled(double factor) const {
  Shape s = *this;
  s.radius *= factor;
  s.length *= factor;
  s.validate();
  return s;
}

Pose Pose::at(const Eigen::Vector3d& position) { return Pose{position, Eigen::Quaterniond::Identity()}; }

Pose Pose::planar(double x, double y, double angle) {
  return Pose{Eigen::Vector3d(x, y, 0.0), Eigen::Quaterniond(Eigen::AngleAxisd(angle, Eigen::Vector3d::UnitZ()))};
}

Pose Pose::spatial(const Eigen::Vector3d& position, const Eigen::Quaterniond& orientation) {
  if (std::abs(orientation.norm() - 1.0) > 1e-12) throw InvalidArgument("orientation quaternion is not unit");
  return Pose{position, orientation};
}

Eigen::Quaterniond random_orientation(int dim, Philox4x32& rng) {
  if (dim == 2) {
    return Eigen::Quaterniond(Eigen::AngleAxisd(rng.uniform(0.0, 2.0 * kPi), Eigen::Vector3d::UnitZ()));
  }
  std::normal_distribution<double> gauss;
  Eigen::Quaterniond q;
  double norm = 0.0;
  do {
    q = Eigen::Quaterniond(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
    norm = q.norm();
  } while (norm < 1e-12);
  q.coeffs() /= norm;
  return q;
}

Eigen::Vector3d support_point(const Shape& shape, const Pose& pose, const Eigen::Vector3d& direction) {
  Eigen::Vector3d d = direction;
  if (shape.dim == 2) d.z() = 0.0;
  const double norm = d.norm();
  if (!(norm > 0.0)) throw InvalidArgument("support direction must be non-zero");
  d /= norm;
  return core_support(world_core(shape, pose), d) + shape.radius * d;
}

double segment_distance_squared(const Eigen::Vector3d& p0, const Eigen::Vector3d& p1, const Eigen::Vector3d& q0,
                                const Eigen::Vector3d& q1) {
  // Ericson, Real-Time Collision Detection, 5.1.9.
  const Eigen::Vector3d d1 = p1 - p0;
  const Eigen::Vector3d d2 = q1 - q0;
  const Eigen::Vector3d r = p0 - q0;
  const double a = d1.squaredNorm();
  const double e = d2.squaredNorm();
  const double f = d2.dot(r);
  constexpr double eps = 1e-300;
  double s = 0.0;
  double t = 0.0;
  if (a <= eps && e <= eps) return r.squaredNorm();
  if (a <= eps) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    const double c = d1.dot(r);
    if (e <= eps) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      const double b = d1.dot(d2);
      const double denom = a * e - b * b;
      s = denom > 0.0 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  return (p0 + d1 * s - (q0 + d2 * t)).squaredNorm();
}

bool overlap(const Shape& a, const Pose& pa, const Shape& b, const Pose& pb) {
  require_same_dim(a, b);
  const double contact = a.radius + b.radius;
  if (a.length == 0.0 && b.length == 0.0) {
    return (pa.position - pb.position).squaredNorm() < contact * contact;
  }
  const Core ca = world_core(a, pa);
  const Core cb = world_core(b, pb);
  return segment_distance_squared(ca.p0, ca.p1, cb.p0, cb.p1) < contact * contact;
}

double separation_gjk(const Shape& a, const Pose& pa, const Shape& b, const Pose& pb) {
  require_same_dim(a, b);
  const Core ca = world_core(a, pa);
  const Core cb = world_core(b, pb);
  auto support = [&](const Eigen::Vector3d& d) -> Eigen::Vector3d {
    return core_support(ca, d) - core_support(cb, -d);
  };

  std::vector<Eigen::Vector3d> simplex{support(Eigen::Vector3d::UnitX())};
  Eigen::Vector3d v = simplex.front();
  for (int iter = 0; iter < 64; ++iter) {
    const double vv = v.squaredNorm();
    if (vv < 1e-28) break;
    const Eigen::Vector3d w = support(-v);
    if (vv - v.dot(w) <= 1e-12 * vv) break;
    simplex.push_back(w);
    v = closest_in_hull(simplex);
    if (simplex.size() == 4) break;  // origin enclosed
  }
  return v.norm() - (a.radius + b.radius);
}

bool separates(const Shape& a, const Pose& pa, const Shape& b, const Pose& pb, const Eigen::Vector3d& direction) {
  require_same_dim(a, b);
  const double upper_a = support_point(a, pa, direction).dot(direction);
  const double lower_b = support_point(b, pb, -direction).dot(direction);
  return upper_a < lower_b;
}

MinkowskiData minkowski_functionals(const Shape& shape) {
  shape.validate();
  const double r = shape.radius;
  const double l = shape.length;
  MinkowskiData m;
  switch (shape.kind) {
    case ShapeKind::ball:
      m.volume = 4.0 * kPi * r * r * r / 3.0;
      m.surface = 4.0 * kPi * r * r;
      m.mean_curvature_integral = 4.0 * kPi * r;
      m.euler_integral = 4.0 * kPi;
      break;
    case ShapeKind::disk:
      m.volume = kPi * r * r;
      m.surface = 2.0 * kPi * r;
      m.euler_integral = 2.0 * kPi;
      break;
    case ShapeKind::spherocylinder:
      m.volume = kPi * r * r * l + 4.0 * kPi * r * r * r / 3.0;
      m.surface = 2.0 * kPi * r * l + 4.0 * kPi * r * r;
      m.mean_curvature_integral = kPi * l + 4.0 * kPi * r;
      m.euler_integral = 4.0 * kPi;
      break;
  }
  return m;
}

std::vector<double> principal_curvatures(const Shape& shape, const Eigen::Vector3d& p) {
  shape.validate();
  const double r = shape.radius;
  const double tol = kSurfaceTolerance * r;
  auto require_on = [&](double residual) {
    if (std::abs(residual) > tol) throw InvalidArgument("point is not on the body surface");
  };
  switch (shape.kind) {
    case ShapeKind::ball:
      require_on(p.norm() - r);
      return {1.0 / r, 1.0 / r};
    case ShapeKind::disk:
      require_on(std::abs(p.z()) > tol ? 2.0 * tol : p.head<2>().norm() - r);
      return {1.0 / r};
    case ShapeKind::spherocylinder: {
      const double h = 0.5 * shape.length;
      if (std::abs(p.z()) <= h) {
        require_on(p.head<2>().norm() - r);
        return {1.0 / r, 0.0};
      }
      const Eigen::Vector3d centre(0.0, 0.0, std::copysign(h, p.z()));
      require_on((p - centre).norm() - r);
      return {1.0 / r, 1.0 / r};
    }
  }
  return {};
}

SurfaceSample surface_sample(const Shape& shape, Philox4x32& rng) {
  const double r = shape.radius;
  const double area = minkowski_functionals(shape).surface;
  auto unit_sphere = [&rng]() {
    const double z = rng.uniform(-1.0, 1.0);
    const double phi = rng.uniform(0.0, 2.0 * kPi);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    return Eigen::Vector3d(rho * std::cos(phi), rho * std::sin(phi), z);
  };
  switch (shape.kind) {
    case ShapeKind::ball: {
      const Eigen::Vector3d n = unit_sphere();
      return {r * n, n, area};
    }
    case ShapeKind::disk: {
      const double phi = rng.uniform(0.0, 2.0 * kPi);
      const Eigen::Vector3d n(std::cos(phi), std::sin(phi), 0.0);
      return {r * n, n, area};
    }
    case ShapeKind::spherocylinder: {
      const double h = 0.5 * shape.length;
      const double mantle = 2.0 * kPi * r * shape.length;
      if (rng.uniform() * area < mantle) {
        const double z = rng.uniform(-h, h);
        const double phi = rng.uniform(0.0, 2.0 * kPi);
        const Eigen::Vector3d n(std::cos(phi), std::sin(phi), 0.0);
        return {r * n + Eigen::Vector3d(0.0, 0.0, z), n, area};
      }
      const Eigen::Vector3d n = unit_sphere();
      const Eigen::Vector3d centre(0.0, 0.0, n.z() >= 0.0 ? h : -h);
      return {centre + r * n, n, area};
    }
  }
  return {};
}

double intersection_angle(const Shape& a, const Pose& pa, const Shape& b, const Pose& pb) {
  require_same_dim(a, b);
  if (a.kind == ShapeKind::spherocylinder || b.kind == ShapeKind::spherocylinder) {
    throw InvalidArgument("intersection_angle is defined for balls and disks only");
  }
  const double ra = a.radius;
  const double rb = b.radius;
  const double d = (pa.position - pb.position).norm();
  if (!(d > 0.0) || d > ra + rb || d < std::abs(ra - rb)) {
    throw NoIntersection("sphere surfaces do not intersect (d = " + std::to_string(d) + ")");
  }
  const double c = (ra * ra + rb * rb - d * d) / (2.0 * ra * rb);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace mayer
