#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mayerkit/errors.hpp"
#include "mayerkit/geometry.hpp"
#include "mayerkit/rng.hpp"

using namespace mayer;
using Eigen::Quaterniond;
using Eigen::Vector3d;
using std::numbers::pi;

namespace {

// Membership from the definition: within r of the core segment.
bool inside(const Shape& s, const Pose& p, const Vector3d& x) {
  const Vector3d local = p.orientation.conjugate() * (x - p.position);
  const double h = 0.5 * s.length;
  const double z = std::clamp(local.z(), -h, h);
  return (local - Vector3d(0, 0, z)).norm() < s.radius;
}

bool close(const Vector3d& a, const Vector3d& b, double tol = 1e-12) { return (a - b).norm() <= tol; }

Pose random_pose(int dim, double box, Philox4x32& rng) {
  Vector3d x(rng.uniform(-box, box), rng.uniform(-box, box), dim == 3 ? rng.uniform(-box, box) : 0.0);
  return Pose::spatial(x, random_orientation(dim, rng));
}

}  // namespace

TEST_CASE("support points") {
  CHECK(close(support_point(Shape::ball(1), Pose{}, {1, 0, 0}), {1, 0, 0}));
  CHECK(close(support_point(Shape::ball(2), Pose{}, {0, 1, 0}), {0, 2, 0}));
  CHECK(close(support_point(Shape::spherocylinder(0.5, 2), Pose{}, {0, 0, 1}), {0, 0, 1.5}));
  // unnormalised direction, translated body
  CHECK(close(support_point(Shape::ball(1), Pose::at({1, 2, 3}), {0, 0, 5}), {1, 2, 4}));
  CHECK_THROWS_AS(support_point(Shape::ball(1), Pose{}, Vector3d::Zero()), InvalidArgument);
}

TEST_CASE("closed-form overlap") {
  const Shape a = Shape::ball(0.3);
  CHECK(overlap(a, Pose{}, a, Pose::at({0.5, 0, 0})));
  CHECK_FALSE(overlap(a, Pose{}, a, Pose::at({1.0, 0, 0})));
  CHECK_FALSE(overlap(a, Pose{}, a, Pose::at({0.6, 0, 0})));  // tangency
  CHECK_THROWS_AS(overlap(Shape::ball(1), Pose{}, Shape::disk(1), Pose{}), InvalidArgument);
}

TEST_CASE("parallel spherocylinders at offset 0.9 overlap (point-sampling oracle)") {
  const Shape s = Shape::spherocylinder(0.5, 1.0);
  const Pose pa{}, pb = Pose::at({0.9, 0, 0});
  CHECK(overlap(s, pa, s, pb));
  // Dense grid over the bounding box of A; any grid point inside both bodies
  // witnesses the overlap.
  int common = 0;
  const int n = 40;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k) {
        const Vector3d x(-0.5 + 1.0 * i / n, -0.5 + 1.0 * j / n, -1.0 + 2.0 * k / n);
        common += inside(s, pa, x) && inside(s, pb, x);
      }
  CHECK(common > 0);
  // and at offset 1.1 the same grid finds nothing
  int none = 0;
  const Pose pc = Pose::at({1.1, 0, 0});
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k) {
        const Vector3d x(-0.5 + 1.0 * i / n, -0.5 + 1.0 * j / n, -1.0 + 2.0 * k / n);
        none += inside(s, pa, x) && inside(s, pc, x);
      }
  CHECK(none == 0);
  CHECK_FALSE(overlap(s, pa, s, pc));
}

TEST_CASE("overlap agrees with GJK and is symmetric for random poses") {
  Philox4x32 rng(5, 0);
  const Shape shapes[] = {Shape::ball(0.4), Shape::spherocylinder(0.3, 1.2), Shape::spherocylinder(0.5, 0.0)};
  int hits = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const Shape& a = shapes[trial % 3];
    const Shape& b = shapes[(trial / 3) % 3];
    const Pose pa = random_pose(3, 0.5, rng), pb = random_pose(3, 1.0, rng);
    const bool ab = overlap(a, pa, b, pb);
    REQUIRE(ab == overlap(b, pb, a, pa));
    const double gap = separation_gjk(a, pa, b, pb);
    if (std::abs(gap) > 1e-9) REQUIRE(ab == (gap < 0));
    hits += ab;
  }
  CHECK(hits > 500);
  CHECK(hits < 3500);
}

TEST_CASE("planar overlap") {
  Philox4x32 rng(6, 0);
  const Shape d = Shape::disk(0.5);
  for (int trial = 0; trial < 1000; ++trial) {
    const Pose pa = random_pose(2, 1.0, rng), pb = random_pose(2, 1.0, rng);
    REQUIRE(overlap(d, pa, d, pb) == ((pa.position - pb.position).norm() < 1.0));
    REQUIRE(pa.position.z() == 0.0);
  }
}

TEST_CASE("support separation") {
  Philox4x32 rng(8, 0);
  const Shape rod = Shape::spherocylinder(0.3, 1.0);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Pose pa = random_pose(3, 1.0, rng), pb = random_pose(3, 1.0, rng);
    if (overlap(rod, pa, rod, pb)) continue;
    ++checked;
    // The closest-point direction between the cores separates; look for it
    // among many sampled directions plus the centre line.
    bool found = separates(rod, pa, rod, pb, pb.position - pa.position);
    for (int i = 0; i < 4000 && !found; ++i) {
      found = separates(rod, pa, rod, pb, random_orientation(3, rng) * Vector3d::UnitX());
    }
    CHECK(found);
  }
  CHECK(checked > 50);
  // Overlapping balls: the projections along any direction overlap.
  const Shape ball = Shape::ball(1);
  for (int i = 0; i < 200; ++i) {
    const Vector3d dir = random_orientation(3, rng) * Vector3d::UnitX();
    REQUIRE_FALSE(separates(ball, Pose{}, ball, Pose::at({1.5, 0.2, 0}), dir));
  }
}

TEST_CASE("Minkowski functionals") {
  const auto b = minkowski_functionals(Shape::ball(1));
  CHECK(b.volume == doctest::Approx(4 * pi / 3).epsilon(1e-14));
  CHECK(b.surface == doctest::Approx(4 * pi).epsilon(1e-14));
  CHECK(*b.mean_curvature_integral == doctest::Approx(4 * pi).epsilon(1e-14));
  CHECK(b.euler_integral == doctest::Approx(4 * pi).epsilon(1e-14));
  const auto d = minkowski_functionals(Shape::disk(1));
  CHECK(d.volume == doctest::Approx(pi).epsilon(1e-14));
  CHECK(d.surface == doctest::Approx(2 * pi).epsilon(1e-14));
  CHECK_FALSE(d.mean_curvature_integral.has_value());
  CHECK(d.euler_integral == doctest::Approx(2 * pi).epsilon(1e-14));
  const auto s = minkowski_functionals(Shape::spherocylinder(0.5, 1));
  CHECK(s.volume == doctest::Approx(pi / 4 + pi / 6).epsilon(1e-14));
  CHECK(s.surface == doctest::Approx(2 * pi).epsilon(1e-14));
  CHECK(*s.mean_curvature_integral == doctest::Approx(3 * pi).epsilon(1e-14));
  CHECK(s.euler_integral == doctest::Approx(4 * pi).epsilon(1e-14));
}

TEST_CASE("scaling homogeneity") {
  for (const Shape& s : {Shape::ball(0.7), Shape::disk(0.7), Shape::spherocylinder(0.4, 1.3)}) {
    const auto m = minkowski_functionals(s);
    for (double lambda : {0.5, 2.0}) {
      const auto ms = minkowski_functionals(s.scaled(lambda));
      CHECK(std::abs(ms.volume - std::pow(lambda, s.dim) * m.volume) <= 1e-12 * ms.volume);
      CHECK(std::abs(ms.surface - std::pow(lambda, s.dim - 1) * m.surface) <= 1e-12 * ms.surface);
      if (s.dim == 3) {
        CHECK(std::abs(*ms.mean_curvature_integral - lambda * *m.mean_curvature_integral) <=
              1e-12 * *ms.mean_curvature_integral);
      }
      CHECK(std::abs(ms.euler_integral - m.euler_integral) <= 1e-12 * m.euler_integral);
    }
  }
}

TEST_CASE("principal curvatures") {
  auto k = principal_curvatures(Shape::ball(2), Vector3d(0, 2, 0));
  REQUIRE(k.size() == 2);
  CHECK(k[0] == doctest::Approx(0.5));
  CHECK(k[1] == doctest::Approx(0.5));
  const Shape rod = Shape::spherocylinder(0.5, 1);
  k = principal_curvatures(rod, Vector3d(0.5, 0, 0.2));
  CHECK(k[0] == doctest::Approx(2.0));
  CHECK(k[1] == doctest::Approx(0.0));
  k = principal_curvatures(rod, Vector3d(0, 0, 1.0));
  CHECK(k[0] == doctest::Approx(2.0));
  CHECK(k[1] == doctest::Approx(2.0));
  CHECK(principal_curvatures(Shape::disk(4), Vector3d(0, 4, 0)) == std::vector<double>{0.25});
  CHECK_THROWS_AS(principal_curvatures(rod, Vector3d(0.4, 0, 0)), InvalidArgument);
  CHECK_THROWS_AS(principal_curvatures(Shape::ball(1), Vector3d(1.001, 0, 0)), InvalidArgument);
}

TEST_CASE("surface sampling") {
  Philox4x32 rng(9, 0);
  const int n = 100000;
  double zsum = 0, z2 = 0;
  for (int i = 0; i < n; ++i) {
    const auto s = surface_sample(Shape::ball(1), rng);
    REQUIRE(s.total_measure == 4 * pi);
    REQUIRE(std::abs(s.point.norm() - 1.0) < 1e-12);
    REQUIRE(close(s.normal, s.point, 1e-12));
    zsum += s.point.z();
    z2 += s.point.z() * s.point.z();
  }
  CHECK(std::abs(zsum / n) < 3 * std::sqrt(z2 / n / n));
  const Shape rod = Shape::spherocylinder(0.5, 1);
  int caps = 0;
  for (int i = 0; i < n; ++i) {
    const auto s = surface_sample(rod, rng);
    REQUIRE(s.total_measure == doctest::Approx(2 * pi));
    caps += std::abs(s.point.z()) > 0.5;
  }
  // area(caps)/area(total) = pi / (2 pi)
  CHECK(std::abs(double(caps) / n - 0.5) < 3 * std::sqrt(0.25 / n));
}

TEST_CASE("intersection angle") {
  const Shape b = Shape::ball(1);
  CHECK(intersection_angle(b, Pose{}, b, Pose::at({std::sqrt(2.0), 0, 0})) == doctest::Approx(pi / 2));
  CHECK(intersection_angle(b, Pose{}, b, Pose::at({2, 0, 0})) == doctest::Approx(pi));
  CHECK_THROWS_AS(intersection_angle(b, Pose{}, b, Pose::at({2.5, 0, 0})), NoIntersection);
  CHECK_THROWS_AS(intersection_angle(Shape::ball(2), Pose{}, Shape::ball(0.5), Pose::at({0.2, 0, 0})), NoIntersection);
  // Normal-vector oracle: on the intersection circle the outward normals make
  // the returned angle.
  const double ra = 1.0, rb = 0.7, d = 1.2;
  const double x = (d * d + ra * ra - rb * rb) / (2 * d);
  const Vector3d p(x, std::sqrt(ra * ra - x * x), 0);
  const Vector3d na = p.normalized(), nb = (p - Vector3d(d, 0, 0)).normalized();
  CHECK(intersection_angle(Shape::ball(ra), Pose{}, Shape::ball(rb), Pose::at({d, 0, 0})) ==
        doctest::Approx(std::acos(na.dot(nb))).epsilon(1e-12));
}

TEST_CASE("shape and pose validation") {
  CHECK_THROWS_AS(Shape::ball(-1), InvalidArgument);
  CHECK_THROWS_AS(Shape::spherocylinder(0.5, -1), InvalidArgument);
  Shape bad = Shape::disk(1);
  bad.dim = 3;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  CHECK_THROWS_AS(Pose::spatial(Vector3d::Zero(), Quaterniond(1, 1, 0, 0)), InvalidArgument);
  Philox4x32 rng(1, 0);
  for (int i = 0; i < 100; ++i) REQUIRE(std::abs(random_orientation(3, rng).norm() - 1) < 1e-12);
}
