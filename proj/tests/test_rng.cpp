#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "mayerkit/rng.hpp"

using mayer::Philox4x32;

// Known-answer vectors of the reference Philox4x32-10 implementation.
TEST_CASE("philox known answers") {
  using A4 = std::array<std::uint32_t, 4>;
  using A2 = std::array<std::uint32_t, 2>;
  CHECK(Philox4x32::generate(A4{0, 0, 0, 0}, A2{0, 0}) == A4{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(Philox4x32::generate(A4{~0u, ~0u, ~0u, ~0u}, A2{~0u, ~0u}) ==
        A4{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(Philox4x32::generate(A4{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, A2{0xa4093822, 0x299f31d0}) ==
        A4{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are reproducible and distinct") {
  Philox4x32 a(42, 0), b(42, 0), c(42, 1), d(43, 0);
  std::set<std::uint32_t> first;
  for (int i = 0; i < 64; ++i) {
    const auto x = a();
    CHECK(x == b());
    first.insert(x);
  }
  int same_c = 0, same_d = 0;
  Philox4x32 a2(42, 0);
  for (int i = 0; i < 64; ++i) {
    const auto x = a2();
    same_c += c() == x;
    same_d += d() == x;
  }
  CHECK(same_c < 2);
  CHECK(same_d < 2);
  CHECK(first.size() > 60);
}

TEST_CASE("uniform doubles") {
  Philox4x32 rng(7, 3);
  double sum = 0.0, sum2 = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
    sum2 += u * u;
  }
  // mean 1/2 and variance 1/12, five standard errors
  CHECK(std::abs(sum / n - 0.5) < 5.0 * std::sqrt(1.0 / 12.0 / n));
  CHECK(std::abs(sum2 / n - 1.0 / 3.0) < 5.0 * std::sqrt(4.0 / 45.0 / n));
  const double v = rng.uniform(-2.0, 3.0);
  CHECK(v >= -2.0);
  CHECK(v < 3.0);
}
