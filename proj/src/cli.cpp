#include "mayerkit/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mayerkit/clusters.hpp"
#include "mayerkit/config.hpp"
#include "mayerkit/errors.hpp"
#include "mayerkit/measures.hpp"
#include "mayerkit/montecarlo.hpp"
#include "mayerkit/spectral.hpp"
#include "mayerkit/verify.hpp"

namespace mayer::cli {

namespace {

using json = nlohmann::ordered_json;

// Flag values as given on the command line; unset fields may be filled from
// --config and then from defaults.
struct Flags {
  std::optional<std::string> shape;
  std::optional<std::string> shape2;
  std::optional<std::string> graph;
  std::optional<int> order;
  std::optional<int> m;
  std::optional<std::string> method;
  std::optional<std::int64_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  std::optional<std::int64_t> batch;
  std::optional<std::string> out;
  std::optional<double> tol;
  std::optional<std::string> suite;
  std::string config;
  bool no_runtime = false;
};

struct RunConfig {
  std::string command;
  std::string shape = "ball:r=0.5";
  std::string shape2;
  std::string graph;
  int order = 2;
  int m = 3;
  std::string method;
  SamplerConfig sampler;
  std::string out = "json";
  std::optional<double> tol;
  std::string suite = "all";
  bool no_runtime = false;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class T>
void fill(std::optional<T>& target, const json& file, const char* key) {
  if (target || !file.contains(key)) return;
  try {
    target = file.at(key).get<T>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("config key '") + key + "': " + e.what());
  }
}

RunConfig resolve(const std::string& command, Flags flags) {
  if (!flags.config.empty()) {
    std::ifstream in(flags.config);
    if (!in) throw UsageError("cannot open config file '" + flags.config + "'");
    json file;
    try {
      file = json::parse(in);
    } catch (const json::parse_error& e) {
      throw UsageError("config file is not valid JSON: " + std::string(e.what()));
    }
    static const std::vector<std::string> known{"shape", "shape2", "graph",   "order", "m",   "method", "samples",
                                                "seed",  "workers", "batch", "out",   "tol", "suite"};
    for (const auto& [key, _] : file.items()) {
      if (std::find(known.begin(), known.end(), key) == known.end()) {
        throw UsageError("unknown config key '" + key + "'");
      }
    }
    fill(flags.shape, file, "shape");
    fill(flags.shape2, file, "shape2");
    fill(flags.graph, file, "graph");
    fill(flags.order, file, "order");
    fill(flags.m, file, "m");
    fill(flags.method, file, "method");
    fill(flags.samples, file, "samples");
    fill(flags.seed, file, "seed");
    fill(flags.workers, file, "workers");
    fill(flags.batch, file, "batch");
    fill(flags.out, file, "out");
    fill(flags.tol, file, "tol");
    fill(flags.suite, file, "suite");
  }

  RunConfig cfg;
  cfg.command = command;
  cfg.shape = flags.shape.value_or(cfg.shape);
  cfg.shape2 = flags.shape2.value_or("");
  cfg.graph = flags.graph.value_or("");
  cfg.order = flags.order.value_or(cfg.order);
  cfg.m = flags.m.value_or(cfg.m);
  cfg.out = flags.out.value_or(cfg.out);
  cfg.tol = flags.tol;
  cfg.suite = flags.suite.value_or(cfg.suite);
  cfg.no_runtime = flags.no_runtime;
  cfg.sampler.samples = flags.samples.value_or(1'000'000);
  cfg.sampler.seed = flags.seed.value_or(cfg.sampler.seed);
  cfg.sampler.workers = flags.workers.value_or(1);
  cfg.sampler.batch = std::min<std::int64_t>(flags.batch.value_or(1000), std::max<std::int64_t>(cfg.sampler.samples, 1));

  const std::string default_method = command == "b2" ? "kinematic" : command == "ring" ? "fourier" : "mc";
  cfg.method = flags.method.value_or(default_method);
  if (cfg.method != "mc" && cfg.method != "kinematic" && cfg.method != "fourier") {
    throw UsageError("unknown method '" + cfg.method + "' (expected mc, kinematic or fourier)");
  }
  if (cfg.out != "json" && cfg.out != "csv" && cfg.out != "text") {
    throw UsageError("unknown output format '" + cfg.out + "' (expected json, csv or text)");
  }
  if (cfg.method == "mc") {
    if (cfg.sampler.samples <= 0) throw UsageError("--samples must be positive");
    if (cfg.sampler.workers < 1) throw UsageError("--workers must be at least 1");
  }
  if (cfg.tol && !(*cfg.tol > 0.0)) throw UsageError("--tol must be positive");
  return cfg;
}

SpectralOptions spectral_options(const RunConfig& cfg) {
  SpectralOptions o;
  if (cfg.tol) o.rel_tol = *cfg.tol;
  return o;
}

SpectralKernel kernel_for(const Shape& a, const Shape& b) {
  if (a.kind == ShapeKind::spherocylinder || b.kind == ShapeKind::spherocylinder) {
    throw UsageError("the fourier route supports balls and disks only");
  }
  if (a.dim != b.dim) throw UsageError("shape dimensions differ");
  return {a.radius + b.radius, a.dim};
}

void require_method(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* m : allowed) {
    if (cfg.method == m) return;
  }
  throw UsageError("method '" + cfg.method + "' is not available for '" + cfg.command + "'");
}

void put_estimate(json& report, const MCEstimate& e, double scale = 1.0) {
  report["value"] = scale * e.mean;
  report["stderr"] = std::abs(scale) * e.std_error;
  report["samples"] = e.samples;
  report["seed"] = e.seed;
  report["workers"] = e.workers;
}

json run_b2(const RunConfig& cfg) {
  const Shape a = parse_shape(cfg.shape);
  const Shape b = cfg.shape2.empty() ? a : parse_shape(cfg.shape2);
  if (a.dim != b.dim) throw UsageError("--shape and --shape2 must have the same dimension");
  json report;
  if (cfg.method == "kinematic") {
    report["value"] = kinematic_b2(a, b);
  } else if (cfg.method == "fourier") {
    report["value"] = -0.5 * f_fourier(kernel_for(a, b), 0.0);
  } else {
    const std::vector<Shape> species{a, b};
    put_estimate(report, cluster_integral_mc(ClusterGraph(2, {{0, 1}}), species, cfg.sampler), -0.5);
  }
  return report;
}

json run_virial(const RunConfig& cfg) {
  const Shape s = parse_shape(cfg.shape);
  json report;
  if (cfg.method == "mc") {
    put_estimate(report, virial_coefficient_mc(cfg.order, s, cfg.sampler));
  } else if (cfg.method == "kinematic") {
    if (cfg.order != 2) throw UsageError("the kinematic route gives B2 only");
    report["value"] = kinematic_b2(s, s);
  } else {
    const SpectralKernel kernel = kernel_for(s, s);
    if (cfg.order == 2) {
      report["value"] = -0.5 * f_fourier(kernel, 0.0);
    } else if (cfg.order == 3) {
      report["value"] = -ring_integral(3, kernel, spectral_options(cfg)) / 3.0;
    } else {
      throw UsageError("the fourier route gives B2 and B3 only (B4 contains the three-loop K4 diagram)");
    }
  }
  return report;
}

json run_cluster(const RunConfig& cfg) {
  require_method(cfg, {"mc", "fourier"});
  if (cfg.graph.empty()) throw UsageError("cluster needs --graph");
  const ClusterGraph g = ClusterGraph::parse(cfg.graph);
  const Shape s = parse_shape(cfg.shape);
  json report;
  if (cfg.method == "mc") {
    put_estimate(report, cluster_integral_mc(g, s, cfg.sampler));
  } else {
    report["value"] = loop_evaluate(g, kernel_for(s, s), spectral_options(cfg));
  }
  return report;
}

json run_ring(const RunConfig& cfg) {
  require_method(cfg, {"mc", "fourier"});
  if (cfg.m < 2) throw UsageError("--m must be at least 2");
  const Shape s = parse_shape(cfg.shape);
  json report;
  if (cfg.method == "fourier") {
    report["value"] = ring_integral(cfg.m, kernel_for(s, s), spectral_options(cfg));
  } else if (cfg.m == 2) {
    // Two bonds between one pair: f^2 is the overlap indicator.
    put_estimate(report, cluster_integral_mc(ClusterGraph(2, {{0, 1}}), s, cfg.sampler), -1.0);
  } else {
    put_estimate(report, cluster_integral_mc(ClusterGraph::ring(cfg.m), s, cfg.sampler));
  }
  return report;
}

json run_graphs(const RunConfig& cfg) {
  const auto stars = enumerate_stars(cfg.order);
  json list = json::array();
  std::int64_t labeled = 0;
  for (const auto& star : stars) {
    labeled += star.labeled_count;
    list.push_back({{"graph", star.graph.to_string()},
                    {"edges", star.graph.edge_count()},
                    {"labeled_count", star.labeled_count},
                    {"automorphisms", automorphism_order(star.graph)},
                    {"vertex_orders", vertex_split(star.graph)},
                    {"loops", cycle_basis(star.graph).loops.size()}});
  }
  json report;
  report["value"] = stars.size();
  report["labeled_total"] = labeled;
  report["graphs"] = list;
  return report;
}

json run_verify_command(const RunConfig& cfg, bool& failed) {
  const auto checks = run_verify(cfg.suite);
  json list = json::array();
  int failures = 0;
  for (const auto& c : checks) {
    failures += c.passed ? 0 : 1;
    list.push_back({{"suite", c.suite},
                    {"name", c.name},
                    {"value", c.value},
                    {"target", c.target},
                    {"deviation", c.deviation},
                    {"limit", c.limit},
                    {"passed", c.passed}});
  }
  failed = failures > 0;
  json report;
  report["value"] = failures;
  report["checks"] = list;
  return report;
}

std::string text_number(double v) {
  std::ostringstream os;
  if (v == 0.0 || (std::abs(v) >= 1e-3 && std::abs(v) < 1e7)) {
    os << std::fixed << std::setprecision(6) << v;
  } else {
    os << std::scientific << std::setprecision(6) << v;
  }
  return os.str();
}

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
  }
  return s;
}

void flatten(const json& node, const std::string& prefix, std::vector<std::pair<std::string, json>>& cells) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, cells);
  } else {
    cells.emplace_back(prefix, node);
  }
}

void emit(const json& report, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << report.dump(2) << '\n';
    return;
  }
  std::vector<std::pair<std::string, json>> cells;
  flatten(report, "", cells);
  if (format == "csv") {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(json(cells[i].first));
    out << '\n';
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i].second);
    out << '\n';
    return;
  }
  for (const auto& [key, value] : cells) {
    if (value.is_array()) {
      out << key << ":\n";
      for (const auto& item : value) out << "  " << (item.is_object() ? item.dump() : item.dump()) << '\n';
    } else if (value.is_number_float()) {
      out << key << ": " << text_number(value.get<double>()) << '\n';
    } else {
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
}

json inputs_of(const RunConfig& cfg) {
  json inputs = json::object();
  const std::string& c = cfg.command;
  if (c != "graphs" && c != "verify") inputs["shape"] = cfg.shape;
  if (c == "b2" && !cfg.shape2.empty()) inputs["shape2"] = cfg.shape2;
  if (c == "cluster") inputs["graph"] = cfg.graph;
  if (c == "virial" || c == "graphs") inputs["order"] = cfg.order;
  if (c == "ring") inputs["m"] = cfg.m;
  if (c == "verify") inputs["suite"] = cfg.suite;
  if (cfg.tol && c != "verify") inputs["tol"] = *cfg.tol;
  return inputs;
}

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "JSON file mirroring the flags; flags override it");
  sub->add_option("--out", f.out, "Report format: json, csv or text");
  sub->add_option("--tol", f.tol, "Relative quadrature tolerance for exploratory runs (ignored by verify)");
  sub->add_flag("--no-runtime", f.no_runtime, "Omit runtime_ms so reports compare byte for byte");
}

void add_sampling(CLI::App* sub, Flags& f) {
  sub->add_option("--method", f.method, "Computation route: mc, kinematic or fourier");
  sub->add_option("--samples", f.samples, "Monte Carlo sample budget");
  sub->add_option("--seed", f.seed, "64-bit RNG seed");
  sub->add_option("--workers", f.workers, "Parallel Monte Carlo workers");
  sub->add_option("--batch", f.batch, "Samples per variance block");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mayer cluster integrals and virial coefficients of hard convex bodies"};
  app.require_subcommand(1);
  Flags flags;

  auto* b2 = app.add_subcommand("b2", "Second virial coefficient");
  b2->add_option("--shape", flags.shape, "Shape spec, e.g. ball:r=0.5");
  b2->add_option("--shape2", flags.shape2, "Second species (defaults to --shape)");
  auto* virial = app.add_subcommand("virial", "Virial coefficient B_N");
  virial->add_option("--shape", flags.shape, "Shape spec");
  virial->add_option("--order", flags.order, "Virial order N (2..5 for mc)");
  auto* cluster = app.add_subcommand("cluster", "Cluster integral of one diagram");
  cluster->add_option("--graph", flags.graph, "Graph literal, e.g. order:4;edges:1-2,2-3,3-4,4-1,2-4");
  cluster->add_option("--shape", flags.shape, "Shape spec");
  auto* ring = app.add_subcommand("ring", "m-ring diagram value");
  ring->add_option("--m", flags.m, "Ring size");
  ring->add_option("--shape", flags.shape, "Shape spec (contact distance = 2r)");
  auto* graphs = app.add_subcommand("graphs", "Enumerate star diagrams");
  graphs->add_option("--order", flags.order, "Number of nodes (2..6)");
  auto* verify = app.add_subcommand("verify", "Run the identity suite");
  verify->add_option("--suite", flags.suite, "all, decomposition, gauss-bonnet, parseval, boundary or cross-route");

  for (auto* sub : {b2, virial, cluster, ring}) add_sampling(sub, flags);
  for (auto* sub : {b2, virial, cluster, ring, graphs, verify}) add_common(sub, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    const RunConfig cfg = resolve(command, flags);
    bool failed = false;
    json body;
    if (command == "b2") {
      body = run_b2(cfg);
    } else if (command == "virial") {
      body = run_virial(cfg);
    } else if (command == "cluster") {
      body = run_cluster(cfg);
    } else if (command == "ring") {
      body = run_ring(cfg);
    } else if (command == "graphs") {
      body = run_graphs(cfg);
    } else {
      body = run_verify_command(cfg, failed);
    }

    json report;
    report["command"] = command;
    report["inputs"] = inputs_of(cfg);
    if (command != "graphs" && command != "verify") report["method"] = cfg.method;
    for (const auto& [key, value] : body.items()) report[key] = value;
    if (!cfg.no_runtime) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      report["runtime_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    }
    emit(report, cfg.out, out);
    return failed ? verification_failed : ok;
  } catch (const NumericFailure& e) {
    err << "numeric failure: " << e.what() << '\n';
    return numeric_failure;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::exception& e) {
    // InvalidArgument, UnsupportedOrder, UnsupportedGraph, NoIntersection, UsageError
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"mayerkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mayer::cli
