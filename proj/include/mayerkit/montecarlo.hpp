#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "mayerkit/clusters.hpp"
#include "mayerkit/geometry.hpp"
#include "mayerkit/rng.hpp"

namespace mayer {

struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  int workers = 1;
};

struct SamplerConfig {
  std::uint64_t seed = 20240917;
  std::int64_t samples = 1'000'000;
  int workers = 1;
  std::int64_t batch = 1000;  // samples per variance block

  /// Throws InvalidArgument unless samples >= batch >= 1 and workers >= 1.
  void validate() const;
};

/// Sample-count weighted mean; standard errors combined in quadrature with
/// weights n_i / N.
MCEstimate merge_estimates(std::span<const MCEstimate> parts);

/// Integrand sampler for one worker: returns one sample per call.
using SampleDraw = std::function<double(Philox4x32&)>;

/// Plain Monte Carlo mean of a real integrand. `make_draw(worker)` is called
/// once per worker; worker w draws from Philox stream (cfg.seed, w). The
/// standard error comes from batch-block means.
MCEstimate sample_mean(const SamplerConfig& cfg, const std::function<SampleDraw(int)>& make_draw);

/// Spanning-tree importance sampler for one cluster diagram. Node 0 sits at
/// the origin; every other node is drawn uniformly in the exclusion ball of
/// its BFS-tree parent (radius = sum of bounding radii). Orientations are
/// drawn only for anisotropic species.
class TreeSampler {
 public:
  TreeSampler(const ClusterGraph& g, std::vector<Shape> species);

  /// Draws one configuration into `poses` and returns true iff every bond
  /// overlaps, i.e. the integrand is non-zero.
  bool draw(Philox4x32& rng, std::vector<Pose>& poses) const;

  /// Integrand value of a configuration for which draw() returned true:
  /// (-1)^|edges| times the product of the tree exclusion-ball volumes.
  double hit_weight() const { return hit_weight_; }

  const ClusterGraph& graph() const { return graph_; }

 private:
  ClusterGraph graph_;
  std::vector<Shape> species_;
  std::vector<TreeEdge> tree_;
  std::vector<double> tree_radius_;
  bool any_anisotropic_ = false;
  double hit_weight_ = 0.0;
};

/// Cluster integral of a connected diagram, one species per node:
/// integral over nodes 2..n of the product of hard f-bonds (f = -1 on
/// overlap), orientation averaged.
MCEstimate cluster_integral_mc(const ClusterGraph& g, std::span<const Shape> species, const SamplerConfig& cfg);
MCEstimate cluster_integral_mc(const ClusterGraph& g, const Shape& shape, const SamplerConfig& cfg);

/// Hit-or-miss estimator with every non-root node uniform in a box of half
/// width (tree eccentricity of node 0) x (largest contact distance).
/// Cross-check oracle for cluster_integral_mc.
MCEstimate cluster_integral_box_mc(const ClusterGraph& g, const Shape& shape, const SamplerConfig& cfg);

struct StarContribution {
  StarGraph star;
  double coefficient = 0.0;  // weight of the integral in B_m, incl. labeled count
  MCEstimate integral;
};

/// Per-star integrals entering B_order. The sample budget is split in
/// proportion to the labeled counts.
std::vector<StarContribution> virial_contributions_mc(int order, const Shape& shape, const SamplerConfig& cfg);

/// B_m = -(m - 1) / m! * sum over labeled star integrals. Orders 2..5.
MCEstimate virial_coefficient_mc(int order, const Shape& shape, const SamplerConfig& cfg);

}  // namespace mayer
