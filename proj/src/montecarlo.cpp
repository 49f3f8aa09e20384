#include "mayerkit/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "mayerkit/errors.hpp"

namespace mayer {

namespace {

constexpr double kPi = std::numbers::pi;

double ball_volume(int dim, double radius) {
  return dim == 2 ? kPi * radius * radius : 4.0 * kPi * radius * radius * radius / 3.0;
}

Eigen::Vector3d uniform_in_ball(int dim, double radius, Philox4x32& rng) {
  Eigen::Vector3d p = Eigen::Vector3d::Zero();
  double r2 = 0.0;
  do {
    p.x() = rng.uniform(-1.0, 1.0);
    p.y() = rng.uniform(-1.0, 1.0);
    if (dim == 3) p.z() = rng.uniform(-1.0, 1.0);
    r2 = p.squaredNorm();
  } while (r2 >= 1.0);
  return radius * p;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

bool all_bonds_overlap(const ClusterGraph& g, std::span<const Shape> species, const std::vector<Pose>& poses) {
  for (const auto& e : g.edges()) {
    if (!overlap(species[e.u], poses[e.u], species[e.v], poses[e.v])) return false;
  }
  return true;
}

struct Block {
  std::int64_t size;
  double mean;
};

// Standard error of the overall mean from batch-block means; falls back to
// the per-sample variance when there is a single block.
double block_std_error(const std::vector<Block>& blocks, double mean, double per_sample_var, std::int64_t n) {
  const double nd = static_cast<double>(n);
  if (blocks.size() >= 2) {
    double var_mean = 0.0;
    for (const auto& b : blocks) {
      const double w = static_cast<double>(b.size) / nd;
      var_mean += w * w * (b.mean - mean) * (b.mean - mean);
    }
    const auto count = static_cast<double>(blocks.size());
    return std::sqrt(var_mean * count / (count - 1.0));
  }
  return n >= 2 ? std::sqrt(per_sample_var / nd) : 0.0;
}

std::int64_t worker_share(const SamplerConfig& cfg, int w) {
  return cfg.samples / cfg.workers + (w < cfg.samples % cfg.workers ? 1 : 0);
}

// Runs `work(w, out)` for every worker and merges the per-worker estimates
// in worker order.
template <class Work>
MCEstimate run_workers(const SamplerConfig& cfg, Work work) {
  cfg.validate();
  std::vector<MCEstimate> parts(cfg.workers);
  if (cfg.workers == 1) {
    work(0, parts[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(cfg.workers);
    for (int w = 0; w < cfg.workers; ++w) threads.emplace_back([&, w] { work(w, parts[w]); });
    for (auto& t : threads) t.join();
  }
  std::vector<MCEstimate> nonempty;
  std::copy_if(parts.begin(), parts.end(), std::back_inserter(nonempty),
               [](const MCEstimate& e) { return e.samples > 0; });
  MCEstimate merged = merge_estimates(nonempty);
  merged.seed = cfg.seed;
  merged.workers = cfg.workers;
  return merged;
}

// Hit-or-miss estimator: the integrand is `hit_value` on hits and 0
// otherwise. Hits are counted exactly, so an estimator that always hits
// returns hit_value with zero error.
template <class MakeDraw>
MCEstimate run_hit_estimator(const SamplerConfig& cfg, double hit_value, MakeDraw make_draw) {
  return run_workers(cfg, [&](int w, MCEstimate& out) {
    const std::int64_t n = worker_share(cfg, w);
    out.samples = n;
    out.seed = cfg.seed;
    if (n == 0) return;
    Philox4x32 rng(cfg.seed, static_cast<std::uint32_t>(w));
    auto draw = make_draw(w);
    std::vector<Block> blocks;
    std::int64_t hits = 0;
    for (std::int64_t done = 0; done < n;) {
      const std::int64_t size = std::min(cfg.batch, n - done);
      std::int64_t block_hits = 0;
      for (std::int64_t i = 0; i < size; ++i) block_hits += draw(rng) ? 1 : 0;
      blocks.push_back({size, hit_value * static_cast<double>(block_hits) / static_cast<double>(size)});
      hits += block_hits;
      done += size;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(n);
    out.mean = hit_value * p;
    const double var = n >= 2 ? hit_value * hit_value * p * (1.0 - p) * n / (n - 1.0) : 0.0;
    out.std_error = block_std_error(blocks, out.mean, var, n);
  });
}

}  // namespace

void SamplerConfig::validate() const {
  if (samples <= 0) throw InvalidArgument("sample count must be positive");
  if (batch < 1 || batch > samples) throw InvalidArgument("batch must satisfy 1 <= batch <= samples");
  if (workers < 1) throw InvalidArgument("workers must be at least 1");
}

MCEstimate sample_mean(const SamplerConfig& cfg, const std::function<SampleDraw(int)>& make_draw) {
  return run_workers(cfg, [&](int w, MCEstimate& out) {
    const std::int64_t n = worker_share(cfg, w);
    out.samples = n;
    out.seed = cfg.seed;
    if (n == 0) return;
    Philox4x32 rng(cfg.seed, static_cast<std::uint32_t>(w));
    SampleDraw draw = make_draw(w);
    std::vector<Block> blocks;
    double total = 0.0;
    double total_sq = 0.0;
    for (std::int64_t done = 0; done < n;) {
      const std::int64_t size = std::min(cfg.batch, n - done);
      double sum = 0.0;
      for (std::int64_t i = 0; i < size; ++i) {
        const double v = draw(rng);
        sum += v;
        total_sq += v * v;
      }
      blocks.push_back({size, sum / static_cast<double>(size)});
      total += sum;
      done += size;
    }
    const double nd = static_cast<double>(n);
    out.mean = total / nd;
    const double var = n >= 2 ? std::max(0.0, (total_sq - nd * out.mean * out.mean) / (nd - 1.0)) : 0.0;
    out.std_error = block_std_error(blocks, out.mean, var, n);
  });
}

MCEstimate merge_estimates(std::span<const MCEstimate> parts) {
  if (parts.empty()) throw InvalidArgument("merge_estimates needs at least one estimate");
  if (parts.size() == 1) return parts.front();
  std::int64_t total = 0;
  int workers = 0;
  for (const auto& p : parts) {
    total += p.samples;
    workers += p.workers;
  }
  if (total <= 0) throw InvalidArgument("merged estimates carry no samples");
  const double n = static_cast<double>(total);
  double mean = 0.0;
  double var = 0.0;
  for (const auto& p : parts) {
    const double w = static_cast<double>(p.samples) / n;
    mean += w * p.mean;
    var += w * w * p.std_error * p.std_error;
  }
  return {mean, std::sqrt(var), total, parts.front().seed, workers};
}

TreeSampler::TreeSampler(const ClusterGraph& g, std::vector<Shape> species)
    : graph_(g), species_(std::move(species)), tree_(spanning_tree(g)) {
  if (static_cast<int>(species_.size()) != g.order()) throw InvalidArgument("one shape per node is required");
  for (const auto& s : species_) {
    s.validate();
    if (s.dim != species_.front().dim) throw InvalidArgument("all species must share a dimension");
    any_anisotropic_ = any_anisotropic_ || s.anisotropic();
  }
  const int dim = species_.front().dim;
  hit_weight_ = g.edge_count() % 2 == 0 ? 1.0 : -1.0;
  for (const auto& t : tree_) {
    const double radius = species_[t.parent].bounding_radius() + species_[t.child].bounding_radius();
    tree_radius_.push_back(radius);
    hit_weight_ *= ball_volume(dim, radius);
  }
}

bool TreeSampler::draw(Philox4x32& rng, std::vector<Pose>& poses) const {
  const int dim = species_.front().dim;
  poses.assign(graph_.order(), Pose{});
  if (any_anisotropic_) {
    for (int i = 0; i < graph_.order(); ++i) {
      if (species_[i].anisotropic()) poses[i].orientation = random_orientation(dim, rng);
    }
  }
  for (std::size_t k = 0; k < tree_.size(); ++k) {
    poses[tree_[k].child].position = poses[tree_[k].parent].position + uniform_in_ball(dim, tree_radius_[k], rng);
  }
  return all_bonds_overlap(graph_, species_, poses);
}

MCEstimate cluster_integral_mc(const ClusterGraph& g, std::span<const Shape> species, const SamplerConfig& cfg) {
  if (!g.connected()) throw InvalidArgument("cluster_integral_mc needs a connected graph");
  cfg.validate();
  const TreeSampler sampler(g, std::vector<Shape>(species.begin(), species.end()));
  return run_hit_estimator(cfg, sampler.hit_weight(), [&sampler](int) {
    return [&sampler, poses = std::vector<Pose>()](Philox4x32& rng) mutable { return sampler.draw(rng, poses); };
  });
}

MCEstimate cluster_integral_mc(const ClusterGraph& g, const Shape& shape, const SamplerConfig& cfg) {
  const std::vector<Shape> species(g.order(), shape);
  return cluster_integral_mc(g, species, cfg);
}

MCEstimate cluster_integral_box_mc(const ClusterGraph& g, const Shape& shape, const SamplerConfig& cfg) {
  if (!g.connected()) throw InvalidArgument("cluster_integral_box_mc needs a connected graph");
  cfg.validate();
  shape.validate();
  std::vector<int> depth(g.order(), 0);
  int eccentricity = 0;
  for (const auto& t : spanning_tree(g)) {
    depth[t.child] = depth[t.parent] + 1;
    eccentricity = std::max(eccentricity, depth[t.child]);
  }
  const double half_width = eccentricity * 2.0 * shape.bounding_radius();
  const int dim = shape.dim;
  const double box = std::pow(2.0 * half_width, dim * (g.order() - 1));
  const double hit_value = (g.edge_count() % 2 == 0 ? 1.0 : -1.0) * box;
  const std::vector<Shape> species(g.order(), shape);

  return run_hit_estimator(cfg, hit_value, [&](int) {
    return [&, poses = std::vector<Pose>(g.order())](Philox4x32& rng) mutable {
      for (int i = 0; i < g.order(); ++i) {
        if (shape.anisotropic()) poses[i].orientation = random_orientation(dim, rng);
        if (i == 0) continue;
        poses[i].position = Eigen::Vector3d(rng.uniform(-half_width, half_width), rng.uniform(-half_width, half_width),
                                            dim == 3 ? rng.uniform(-half_width, half_width) : 0.0);
      }
      return all_bonds_overlap(g, species, poses);
    };
  });
}

std::vector<StarContribution> virial_contributions_mc(int order, const Shape& shape, const SamplerConfig& cfg) {
  if (order < 2 || order > 5) {
    throw UnsupportedOrder("virial_coefficient_mc supports orders 2..5, got " + std::to_string(order));
  }
  cfg.validate();
  const auto stars = enumerate_stars(order);
  double factorial = 1.0;
  for (int i = 2; i <= order; ++i) factorial *= i;
  const double prefactor = -(order - 1) / factorial;

  std::int64_t labeled_total = 0;
  for (const auto& s : stars) labeled_total += s.labeled_count;

  std::vector<StarContribution> out;
  std::int64_t assigned = 0;
  for (std::size_t i = 0; i < stars.size(); ++i) {
    SamplerConfig sub = cfg;
    sub.seed = splitmix64(cfg.seed + i);
    if (i + 1 == stars.size()) {
      sub.samples = cfg.samples - assigned;
    } else {
      sub.samples = cfg.samples * stars[i].labeled_count / labeled_total;
    }
    sub.samples = std::max<std::int64_t>(sub.samples, 1);
    sub.batch = std::min(cfg.batch, sub.samples);
    assigned += sub.samples;
    StarContribution c{stars[i], prefactor * static_cast<double>(stars[i].labeled_count), {}};
    c.integral = cluster_integral_mc(stars[i].graph, shape, sub);
    out.push_back(std::move(c));
  }
  return out;
}

MCEstimate virial_coefficient_mc(int order, const Shape& shape, const SamplerConfig& cfg) {
  const auto parts = virial_contributions_mc(order, shape, cfg);
  MCEstimate total{0.0, 0.0, 0, cfg.seed, cfg.workers};
  double var = 0.0;
  for (const auto& p : parts) {
    total.mean += p.coefficient * p.integral.mean;
    var += p.coefficient * p.coefficient * p.integral.std_error * p.integral.std_error;
    total.samples += p.integral.samples;
  }
  total.std_error = std::sqrt(var);
  return total;
}

}  // namespace mayer
