#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cycleflow/dominance.hpp"
#include "cycleflow/errors.hpp"
#include "cycleflow/explorer.hpp"
#include "cycleflow/model.hpp"
#include "cycleflow/sampling.hpp"

namespace py = pybind11;

namespace {

using namespace cycleflow;

// Rationals cross the boundary as "p" / "p/q" strings to stay exact.
CycleInstance make_instance(int vertex_count,
                            const std::vector<std::tuple<int, int, std::string>>& commodities) {
  std::vector<Commodity> list;
  list.reserve(commodities.size());
  for (const auto& [source, target, demand] : commodities) {
    list.push_back({source, target, parse_rational(demand)});
  }
  return CycleInstance(vertex_count, std::move(list));
}

FlowAssignment make_flow(const CycleInstance& instance, const std::vector<std::string>& amounts) {
  std::vector<Rational> x;
  x.reserve(amounts.size());
  for (const std::string& a : amounts) x.push_back(parse_rational(a));
  return FlowAssignment(instance, std::move(x));
}

std::vector<std::string> format_profile(const EdgeFlowProfile& profile) {
  std::vector<std::string> out;
  out.reserve(profile.size());
  for (const Rational& v : profile) out.push_back(format_rational(v));
  return out;
}

py::object violation_or_none(const CycleInstance& instance, const FlowAssignment& flow,
                             const FlowAssignment& flow_prime) {
  const auto certificate = check_violation(instance, flow, flow_prime);
  if (!certificate) return py::none();
  py::list entries;
  for (const ViolationEntry& e : certificate->entries) {
    entries.append(py::make_tuple(e.commodity, e.path.start(), e.path.end(), e.edge,
                                  format_rational(e.flow_on_edge),
                                  format_rational(e.flow_prime_on_edge)));
  }
  return entries;
}

py::tuple report_tuple(const SearchReport& report) {
  return py::make_tuple(report.examined, report.violations.size(), serialize_report(report));
}

}  // namespace

PYBIND11_MODULE(_cycleflow, m) {
  m.doc() = "exact two-path flows on an undirected cycle";
  m.attr("__version__") = "0.1.0";

  py::register_exception<Error>(m, "CycleFlowError");

  py::class_<Commodity>(m, "Commodity")
      .def(py::init([](int source, int target, const std::string& demand) {
             return Commodity{source, target, parse_rational(demand)};
           }),
           py::arg("source"), py::arg("target"), py::arg("demand"))
      .def_readonly("source", &Commodity::source)
      .def_readonly("target", &Commodity::target)
      .def_property_readonly("demand",
                             [](const Commodity& c) { return format_rational(c.demand); })
      .def(py::self == py::self);

  py::class_<CycleInstance>(m, "CycleInstance")
      .def(py::init(&make_instance), py::arg("vertex_count"), py::arg("commodities"))
      .def_property_readonly("vertex_count", &CycleInstance::vertex_count)
      .def_property_readonly("edge_count", &CycleInstance::edge_count)
      .def_property_readonly("commodity_count", &CycleInstance::commodity_count)
      .def("commodity", &CycleInstance::commodity, py::arg("i"))
      .def(py::self == py::self);

  py::class_<ArcPath>(m, "ArcPath")
      .def(py::init<int, int, int>(), py::arg("cycle_size"), py::arg("start"), py::arg("end"))
      .def_property_readonly("cycle_size", &ArcPath::cycle_size)
      .def_property_readonly("start", &ArcPath::start)
      .def_property_readonly("end", &ArcPath::end)
      .def_property_readonly("length", &ArcPath::length)
      .def("edges", &ArcPath::edges)
      .def("contains_edge", &ArcPath::contains_edge, py::arg("edge"))
      .def("complement", &ArcPath::complement)
      .def(py::self == py::self)
      .def("__repr__", [](const ArcPath& p) {
        return "ArcPath(" + std::to_string(p.cycle_size()) + ", " + std::to_string(p.start()) +
               ", " + std::to_string(p.end()) + ")";
      });

  py::class_<FlowAssignment>(m, "FlowAssignment")
      .def(py::init(&make_flow), py::arg("instance"), py::arg("clockwise"))
      .def_property_readonly("clockwise",
                             [](const FlowAssignment& f) {
                               std::vector<std::string> out;
                               out.reserve(static_cast<std::size_t>(f.size()));
                               for (const Rational& x : f.clockwise()) {
                                 out.push_back(format_rational(x));
                               }
                               return out;
                             })
      .def(py::self == py::self);

  py::class_<DominanceWitness>(m, "DominanceWitness")
      .def_readonly("commodity", &DominanceWitness::commodity)
      .def_readonly("path", &DominanceWitness::path)
      .def(py::self == py::self)
      .def("__repr__", [](const DominanceWitness& w) {
        return "DominanceWitness(" + std::to_string(w.commodity) + ", ArcPath(" +
               std::to_string(w.path.cycle_size()) + ", " + std::to_string(w.path.start()) +
               ", " + std::to_string(w.path.end()) + "))";
      });

  m.def("parse_instance", [](const std::string& text) { return parse_instance(text); },
        py::arg("text"));
  m.def("serialize_instance", &serialize_instance, py::arg("instance"));
  m.def("parse_flow",
        [](const std::string& text, const CycleInstance& instance) {
          return parse_flow(text, instance);
        },
        py::arg("text"), py::arg("instance"));
  m.def("serialize_flow", &serialize_flow, py::arg("flow"));

  m.def("clockwise_path", &clockwise_path, py::arg("instance"), py::arg("source"),
        py::arg("target"));
  m.def("paths_of", &paths_of, py::arg("instance"), py::arg("commodity"));
  m.def("path_flow",
        [](const CycleInstance& instance, const FlowAssignment& flow, int commodity,
           const ArcPath& path) {
          return format_rational(path_flow(instance, flow, commodity, path));
        },
        py::arg("instance"), py::arg("flow"), py::arg("commodity"), py::arg("path"));
  m.def("edge_flows",
        [](const CycleInstance& instance, const FlowAssignment& flow) {
          return format_profile(edge_flows(instance, flow));
        },
        py::arg("instance"), py::arg("flow"));

  m.def("path_dominates", &path_dominates, py::arg("instance"), py::arg("flow"),
        py::arg("flow_prime"), py::arg("path"));
  m.def("witnesses_bruteforce", &witnesses_bruteforce, py::arg("instance"), py::arg("flow"),
        py::arg("flow_prime"));
  m.def("witness_constructive", &witness_constructive, py::arg("instance"), py::arg("flow"),
        py::arg("flow_prime"));
  m.def("configuration",
        [](const CycleInstance& instance) {
          return std::string(to_string(classify_configuration(instance)));
        },
        py::arg("instance"));
  m.def("check_violation", &violation_or_none, py::arg("instance"), py::arg("flow"),
        py::arg("flow_prime"));

  m.def("counterexample_k3", []() {
    const CounterexampleK3 c = counterexample_k3();
    return py::make_tuple(c.instance, c.flow, c.flow_prime);
  });

  m.def("search_grid",
        [](const CycleInstance& instance, const std::string& step, int threads) {
          return report_tuple(search_grid(instance, parse_rational(step), threads));
        },
        py::arg("instance"), py::arg("step"), py::arg("threads") = 1,
        "Returns (examined, violation_count, report_text).");
  m.def("search_random",
        [](const CycleInstance& instance, std::uint64_t trials, std::uint64_t seed,
           int denominator_bound, int threads) {
          return report_tuple(search_random(instance, trials, seed, denominator_bound, threads));
        },
        py::arg("instance"), py::arg("trials"), py::arg("seed"),
        py::arg("denominator_bound") = kDefaultDenominatorBound, py::arg("threads") = 1,
        "Returns (examined, violation_count, report_text).");
  m.def("verify_random",
        [](int k, std::uint64_t trials, std::uint64_t seed, int max_n) -> py::object {
          const auto failure = verification_campaign(k, trials, seed, max_n);
          if (!failure) return py::none();
          return py::make_tuple(failure->trial, serialize_instance(failure->instance),
                                serialize_flow(failure->flow),
                                serialize_flow(failure->flow_prime), failure->reason);
        },
        py::arg("k"), py::arg("trials"), py::arg("seed"), py::arg("max_n") = 12,
        "None on success, else (trial, instance, flow, flow_prime, reason).");
}
