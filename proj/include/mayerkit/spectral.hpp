#pragma once

#include <vector>

#include "mayerkit/clusters.hpp"

namespace mayer {

/// Hard-pair f-bond of contact distance sigma in 2 or 3 dimensions.
struct SpectralKernel {
  double sigma = 1.0;
  int dim = 3;

  void validate() const;
};

/// Fourier transform of the f-bond. 3D: -4 pi (sin ks - ks cos ks) / k^3;
/// 2D: -2 pi s J1(ks) / k. Continuous at k = 0.
double f_fourier(const SpectralKernel& kernel, double k);

/// Real-space f-bond: -1 inside the contact distance, 0 outside.
double f_real(const SpectralKernel& kernel, double r);

/// Integral of the 3D f-bond over the plane at signed offset p:
/// -pi (sigma^2 - p^2) inside the support.
double radon_profile(const SpectralKernel& kernel, double p);

struct SpectralOptions {
  double rel_tol = 1e-11;
  /// Numerical quadrature runs on [0, k_max_sigma / sigma]; beyond that the
  /// integrand is expanded in oscillatory terms and integrated exactly.
  double k_max_sigma = 400.0;
};

/// Chain propagator: inverse Fourier transform of f~(k)^n at distance r, the
/// n-fold convolution of the f-bond with itself. n = 1 returns the bond.
double chain_propagator(int n, const SpectralKernel& kernel, double r, const SpectralOptions& options = {});

/// m-ring diagram value (2 pi)^-d S_d int_0^inf k^(d-1) f~(k)^m dk, m >= 2.
double ring_integral(int m, const SpectralKernel& kernel, const SpectralOptions& options = {});

/// Per-loop wavevector bookkeeping. edge_map[e][l] is the signed multiple
/// (+1, -1 or 0) of loop wavevector l carried by edge e, oriented from
/// edges()[e].u to edges()[e].v.
struct LoopAssignment {
  ClusterGraph graph;
  CycleBasis basis;
  std::vector<std::vector<int>> edge_map;

  int loop_count() const { return static_cast<int>(basis.loops.size()); }

  /// Signed wavevector sum at `node` in units of the loop wavevectors.
  std::vector<int> node_balance(int node) const;
  /// True iff every node balance is exactly zero.
  bool conserved() const;
};

LoopAssignment assign_loop_momenta(const ClusterGraph& g);

/// Value of a connected diagram with one or two independent loops from the
/// per-loop wavevector integral. Edges sharing a wavevector combination
/// collapse into chain propagators; bridges factor out as f~(0). Two-loop
/// diagrams with shared edges reduce to a radial integral of the three
/// chain propagators between the two branch points.
double loop_evaluate(const ClusterGraph& g, const SpectralKernel& kernel, const SpectralOptions& options = {});

}  // namespace mayer
