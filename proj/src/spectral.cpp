#include "mayerkit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mayerkit/errors.hpp"
#include "mayerkit/quadrature.hpp"
#include "mayerkit/special_functions.hpp"

namespace mayer {

namespace {

constexpr double kPi = std::numbers::pi;

// Below this argument the 2D kernel J0(k r) is not expanded in the tail; the
// tail then uses J0 ~ 1, which only affects r < 25 / k_cut where the radial
// weight r^(d-1) is negligible.
constexpr double kHankelMinArgument = 25.0;

double unit_sphere_area(int dim) { return dim == 2 ? 2.0 * kPi : 4.0 * kPi; }

}  // namespace

void SpectralKernel::validate() const {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InvalidArgument("kernel sigma must be positive");
  if (dim != 2 && dim != 3) throw InvalidArgument("kernel dimension must be 2 or 3");
}

double f_fourier(const SpectralKernel& kernel, double k) {
  kernel.validate();
  if (k < 0.0) throw InvalidArgument("wavenumber must be non-negative");
  const double s = kernel.sigma;
  if (kernel.dim == 3) return -4.0 * kPi * s * s * s / 3.0 * ball_window(k * s);
  return -kPi * s * s * disk_window(k * s);
}

double f_real(const SpectralKernel& kernel, double r) { return std::abs(r) < kernel.sigma ? -1.0 : 0.0; }

double radon_profile(const SpectralKernel& kernel, double p) {
  kernel.validate();
  if (kernel.dim != 3) throw InvalidArgument("radon_profile is defined for 3D kernels");
  const double s = kernel.sigma;
  return std::abs(p) <= s ? -kPi * (s * s - p * p) : 0.0;
}

double chain_propagator(int n, const SpectralKernel& kernel, double r, const SpectralOptions& options) {
  kernel.validate();
  if (n < 1) throw InvalidArgument("chain length must be at least 1");
  if (r < 0.0) throw InvalidArgument("distance must be non-negative");
  if (n == 1) return f_real(kernel, r);
  const double s = kernel.sigma;
  if (r >= n * s) return 0.0;  // n bonds cannot span further

  const int dim = kernel.dim;
  const double k_base = options.k_max_sigma / s;
  double k_cut = k_base;
  bool expand_kernel = r > 0.0;
  if (dim == 2 && r > 0.0) {
    k_cut = std::min(std::max(k_base, kHankelMinArgument / r), 50.0 * k_base);
    expand_kernel = r * k_cut >= kHankelMinArgument;
  }

  auto kernel_value = [&](double k) {
    if (r == 0.0) return 1.0;
    return dim == 3 ? sinc(k * r) : bessel_j0(k * r);
  };
  auto integrand = [&](double k) {
    const double fk = f_fourier(kernel, k);
    double v = dim == 3 ? k * k : k;
    for (int i = 0; i < n; ++i) v *= fk;
    return v * kernel_value(k);
  };

  const auto breaks = uniform_breakpoints(0.0, k_cut, kPi / (n * s + r));
  QuadratureOptions q;
  q.rel_tol = options.rel_tol;
  q.abs_tol = 1e-3 * options.rel_tol * std::pow(s, dim * (n - 1)) * std::pow(kPi, dim - 1);
  q.max_intervals = 200000;
  const double body = integrate_adaptive(integrand, breaks, q).value;

  const OscSeries bond = dim == 3 ? OscSeries::sphere_bond(s) : OscSeries::disk_bond(s, k_cut);
  OscSeries tail = OscSeries::power(dim - 1.0);
  for (int i = 0; i < n; ++i) tail = (tail * bond).pruned(k_cut, 1e-22);
  if (expand_kernel) {
    const OscSeries radial = dim == 3 ? OscSeries::spherical_j0(r) : OscSeries::bessel(0, r, k_cut);
    tail = (tail * radial).pruned(k_cut, 1e-22);
  }
  const double prefactor = unit_sphere_area(dim) / std::pow(2.0 * kPi, dim);
  return prefactor * (body + tail.integrate_tail(k_cut));
}

double ring_integral(int m, const SpectralKernel& kernel, const SpectralOptions& options) {
  if (m < 2) throw InvalidArgument("ring_integral needs m >= 2");
  return chain_propagator(m, kernel, 0.0, options);
}

std::vector<int> LoopAssignment::node_balance(int node) const {
  std::vector<int> balance(loop_count(), 0);
  for (int e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edges()[e];
    if (edge.u != node && edge.v != node) continue;
    const int sign = edge.u == node ? 1 : -1;
    for (int l = 0; l < loop_count(); ++l) balance[l] += sign * edge_map[e][l];
  }
  return balance;
}

bool LoopAssignment::conserved() const {
  for (int node = 0; node < graph.order(); ++node) {
    for (int b : node_balance(node)) {
      if (b != 0) return false;
    }
  }
  return true;
}

LoopAssignment assign_loop_momenta(const ClusterGraph& g) {
  LoopAssignment out{g, cycle_basis(g), {}};
  out.edge_map.assign(g.edge_count(), std::vector<int>(out.loop_count(), 0));
  for (int l = 0; l < out.loop_count(); ++l) {
    const Loop& loop = out.basis.loops[l];
    const int size = static_cast<int>(loop.nodes.size());
    for (int i = 0; i < size; ++i) {
      const int e = loop.edges[i];
      out.edge_map[e][l] += g.edges()[e].u == loop.nodes[i] ? 1 : -1;
    }
  }
  return out;
}

double loop_evaluate(const ClusterGraph& g, const SpectralKernel& kernel, const SpectralOptions& options) {
  kernel.validate();
  if (!g.connected()) throw InvalidArgument("loop_evaluate needs a connected graph");
  const int loops = g.cyclomatic_number();
  if (loops == 0) throw UnsupportedGraph("graph has no loop; its value factors into single-bond integrals");
  if (loops > 2) {
    throw UnsupportedGraph("loop_evaluate supports at most two independent loops, graph has " + std::to_string(loops));
  }

  const LoopAssignment assignment = assign_loop_momenta(g);
  int bridges = 0;
  int first = 0;   // edges carrying only loop 1
  int second = 0;  // edges carrying only loop 2
  int shared = 0;  // edges carrying both
  int shared_sign = 0;
  for (const auto& coeffs : assignment.edge_map) {
    const bool on_first = coeffs[0] != 0;
    const bool on_second = loops == 2 && coeffs[1] != 0;
    if (on_first && on_second) {
      const int sign = coeffs[0] * coeffs[1];
      if (shared_sign != 0 && sign != shared_sign) throw UnsupportedGraph("inconsistent shared-edge orientation");
      shared_sign = sign;
      ++shared;
    } else if (on_first) {
      ++first;
    } else if (on_second) {
      ++second;
    } else {
      ++bridges;
    }
  }

  const double bridge_factor = std::pow(f_fourier(kernel, 0.0), bridges);
  if (loops == 1) return bridge_factor * ring_integral(first, kernel, options);
  if (shared == 0) return bridge_factor * ring_integral(first, kernel, options) * ring_integral(second, kernel, options);

  // int dk1 dk2 f~(k1)^a f~(k2)^b f~(|k1 +- k2|)^c / (2 pi)^(2d)
  //   = int d^d r h_a(r) h_b(r) h_c(r)
  const int dim = kernel.dim;
  const int reach = std::min({first, second, shared});
  std::vector<double> breaks;
  for (int j = 0; j <= reach; ++j) breaks.push_back(j * kernel.sigma);
  auto integrand = [&](double r) {
    const double radial = unit_sphere_area(dim) * (dim == 3 ? r * r : r);
    return radial * chain_propagator(first, kernel, r, options) * chain_propagator(second, kernel, r, options) *
           chain_propagator(shared, kernel, r, options);
  };
  QuadratureOptions q;
  q.rel_tol = 10.0 * options.rel_tol;
  q.abs_tol = 1e-15;
  return bridge_factor * integrate_adaptive(integrand, breaks, q).value;
}

}  // namespace mayer
