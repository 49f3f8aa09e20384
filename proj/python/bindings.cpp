#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mayerkit/cli.hpp"
#include "mayerkit/clusters.hpp"
#include "mayerkit/config.hpp"
#include "mayerkit/errors.hpp"
#include "mayerkit/measures.hpp"
#include "mayerkit/montecarlo.hpp"
#include "mayerkit/spectral.hpp"
#include "mayerkit/verify.hpp"

namespace py = pybind11;
using namespace mayer;

namespace {

SamplerConfig sampler(std::int64_t samples, std::uint64_t seed, int workers, std::int64_t batch) {
  SamplerConfig cfg;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.workers = workers;
  cfg.batch = std::min(batch, samples);
  return cfg;
}

Shape as_shape(const py::object& o) {
  if (py::isinstance<py::str>(o)) return parse_shape(o.cast<std::string>());
  return o.cast<Shape>();
}

ClusterGraph as_graph(const py::object& o) {
  if (py::isinstance<py::str>(o)) return ClusterGraph::parse(o.cast<std::string>());
  return o.cast<ClusterGraph>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mayer cluster integrals and virial coefficients of hard convex bodies";

  // std::invalid_argument and std::out_of_range already map to ValueError /
  // IndexError; give the rest distinct Python types.
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NumericFailure>(m, "NumericFailure", PyExc_ArithmeticError);
  py::register_exception<UnsupportedGraph>(m, "UnsupportedGraph", PyExc_ValueError);
  py::register_exception<NoIntersection>(m, "NoIntersection", PyExc_ValueError);

  py::enum_<ShapeKind>(m, "ShapeKind")
      .value("ball", ShapeKind::ball)
      .value("disk", ShapeKind::disk)
      .value("spherocylinder", ShapeKind::spherocylinder);

  py::class_<Shape>(m, "Shape")
      .def_static("ball", &Shape::ball, py::arg("radius"))
      .def_static("disk", &Shape::disk, py::arg("radius"))
      .def_static("spherocylinder", &Shape::spherocylinder, py::arg("radius"), py::arg("length"))
      .def_static("parse", &parse_shape)
      .def_readonly("kind", &Shape::kind)
      .def_readonly("radius", &Shape::radius)
      .def_readonly("length", &Shape::length)
      .def_readonly("dim", &Shape::dim)
      .def("__eq__", [](const Shape& a, const Shape& b) { return a == b; })
      .def("__str__", &format_shape)
      .def("__repr__", [](const Shape& s) { return "Shape('" + format_shape(s) + "')"; });

  py::class_<MinkowskiData>(m, "MinkowskiData")
      .def_readonly("volume", &MinkowskiData::volume)
      .def_readonly("surface", &MinkowskiData::surface)
      .def_readonly("mean_curvature_integral", &MinkowskiData::mean_curvature_integral)
      .def_readonly("euler_integral", &MinkowskiData::euler_integral);
  m.def("minkowski_functionals", [](const py::object& s) { return minkowski_functionals(as_shape(s)); });

  py::class_<MCEstimate>(m, "MCEstimate")
      .def_readonly("mean", &MCEstimate::mean)
      .def_readonly("stderr", &MCEstimate::std_error)
      .def_readonly("samples", &MCEstimate::samples)
      .def_readonly("seed", &MCEstimate::seed)
      .def_readonly("workers", &MCEstimate::workers)
      .def("__repr__", [](const MCEstimate& e) {
        std::ostringstream os;
        os.precision(10);
        os << "MCEstimate(mean=" << e.mean << ", stderr=" << e.std_error << ", samples=" << e.samples << ")";
        return os.str();
      });

  py::class_<ClusterGraph>(m, "ClusterGraph")
      .def(py::init([](int order, const std::vector<std::pair<int, int>>& edges) {
             std::vector<Edge> e;
             for (auto [u, v] : edges) e.push_back({std::min(u, v), std::max(u, v)});
             return ClusterGraph(order, e);
           }),
           py::arg("order"), py::arg("edges"), "0-based node pairs")
      .def_static("parse", &ClusterGraph::parse)
      .def_static("ring", &ClusterGraph::ring)
      .def_static("complete", &ClusterGraph::complete)
      .def_property_readonly("order", &ClusterGraph::order)
      .def_property_readonly("edges",
                             [](const ClusterGraph& g) {
                               std::vector<std::pair<int, int>> e;
                               for (const Edge& x : g.edges()) e.emplace_back(x.u, x.v);
                               return e;
                             })
      .def("biconnected", &ClusterGraph::biconnected)
      .def("cyclomatic_number", &ClusterGraph::cyclomatic_number)
      .def("__eq__", [](const ClusterGraph& a, const ClusterGraph& b) { return a == b; })
      .def("__str__", &ClusterGraph::to_string)
      .def("__repr__", [](const ClusterGraph& g) { return "ClusterGraph('" + g.to_string() + "')"; });

  py::class_<StarGraph>(m, "StarGraph")
      .def_readonly("graph", &StarGraph::graph)
      .def_readonly("labeled_count", &StarGraph::labeled_count);
  m.def("enumerate_stars", &enumerate_stars, py::arg("order"));
  m.def("automorphism_order", [](const py::object& g) { return automorphism_order(as_graph(g)); });
  m.def("vertex_split", [](const py::object& g) { return vertex_split(as_graph(g)); });
  m.def(
      "boundary_expand",
      [](int k, int n) {
        std::vector<std::string> out;
        for (const auto& t : boundary_expand(k, n)) out.push_back(t.to_string());
        return out;
      },
      py::arg("k"), py::arg("n"), "Terms of the boundary of D1 ∩ ... ∩ Dk in n dimensions, rendered as text");
  m.def(
      "boundary_formula", [](int k, int n) { return boundary_formula(boundary_expand(k, n)); }, py::arg("k"),
      py::arg("n"));

  m.def(
      "cluster_integral_mc",
      [](const py::object& g, const py::object& shape, std::int64_t samples, std::uint64_t seed, int workers,
         std::int64_t batch) {
        const ClusterGraph graph = as_graph(g);
        const Shape s = as_shape(shape);
        py::gil_scoped_release release;
        return cluster_integral_mc(graph, s, sampler(samples, seed, workers, batch));
      },
      py::arg("graph"), py::arg("shape"), py::arg("samples") = 1'000'000, py::arg("seed") = 20240917,
      py::arg("workers") = 1, py::arg("batch") = 1000);
  m.def(
      "virial_coefficient_mc",
      [](int order, const py::object& shape, std::int64_t samples, std::uint64_t seed, int workers,
         std::int64_t batch) {
        const Shape s = as_shape(shape);
        py::gil_scoped_release release;
        return virial_coefficient_mc(order, s, sampler(samples, seed, workers, batch));
      },
      py::arg("order"), py::arg("shape"), py::arg("samples") = 1'000'000, py::arg("seed") = 20240917,
      py::arg("workers") = 1, py::arg("batch") = 1000);

  m.def(
      "kinematic_b2",
      [](const py::object& a, const py::object& b) {
        const Shape sa = as_shape(a);
        return kinematic_b2(sa, b.is_none() ? sa : as_shape(b));
      },
      py::arg("shape"), py::arg("shape2") = py::none());
  m.def(
      "excluded_volume", [](const py::object& a, const py::object& b) { return excluded_volume(as_shape(a), as_shape(b)); },
      py::arg("shape"), py::arg("shape2"));
  m.def(
      "curvature_measure",
      [](const py::object& s, const std::string& p) {
        const CurvaturePolynomial poly = p == "unit"   ? CurvaturePolynomial::unit
                                         : p == "mean" ? CurvaturePolynomial::mean
                                         : p == "gauss"
                                             ? CurvaturePolynomial::gauss
                                             : throw InvalidArgument("polynomial must be unit, mean or gauss");
        return curvature_measure(as_shape(s), poly);
      },
      py::arg("shape"), py::arg("polynomial"));
  m.def("f_decomposition_residual", &f_decomposition_residual, py::arg("r1"), py::arg("r2"), py::arg("k"));

  m.def(
      "f_fourier", [](double k, double sigma, int dim) { return f_fourier({sigma, dim}, k); }, py::arg("k"),
      py::arg("sigma") = 1.0, py::arg("dim") = 3);
  m.def(
      "ring_integral",
      [](int mm, double sigma, int dim, double rel_tol) {
        SpectralOptions o;
        o.rel_tol = rel_tol;
        return ring_integral(mm, {sigma, dim}, o);
      },
      py::arg("m"), py::arg("sigma") = 1.0, py::arg("dim") = 3, py::arg("rel_tol") = SpectralOptions{}.rel_tol);
  m.def(
      "loop_evaluate",
      [](const py::object& g, double sigma, int dim) { return loop_evaluate(as_graph(g), {sigma, dim}); },
      py::arg("graph"), py::arg("sigma") = 1.0, py::arg("dim") = 3);

  m.def(
      "verify",
      [](const std::string& suite) {
        py::list out;
        for (const auto& c : run_verify(suite)) {
          py::dict d;
          d["suite"] = c.suite;
          d["name"] = c.name;
          d["value"] = c.value;
          d["target"] = c.target;
          d["deviation"] = c.deviation;
          d["limit"] = c.limit;
          d["passed"] = c.passed;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "all");

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line front end; returns (exit_code, stdout, stderr).");
}
