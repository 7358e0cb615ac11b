// Thin pybind11 layer. Documents cross the boundary as JSON text; the
// Python package turns exact "num/den" strings into Fractions.

#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "ambipref/analysis.hpp"
#include "ambipref/axioms.hpp"
#include "ambipref/battery.hpp"
#include "ambipref/generator.hpp"
#include "ambipref/instance_json.hpp"
#include "ambipref/report_json.hpp"
#include "ambipref/slices.hpp"
#include "ambipref/verify.hpp"

namespace py = pybind11;
using namespace ambipref;

namespace {

std::string dump(const nlohmann::json& doc) { return doc.dump(); }

std::string evaluate(const std::string& instance, const std::string& model, const std::string& left,
                     const std::string& right) {
  return dump(evaluate_pair(parse_instance(instance), parse_model(model), left, right));
}

std::string audit_json(const std::string& instance, const std::string& model, const std::vector<std::string>& axioms,
                       int resolution, const std::string& radius, std::size_t max_witnesses) {
  const Instance inst = parse_instance(instance);
  std::vector<AxiomKind> selected;
  for (const auto& a : axioms) selected.push_back(parse_axiom(a));
  AuditOptions options;
  options.max_witnesses = max_witnesses;
  const Battery battery = generate_act_grid(inst, resolution, parse_rational(radius));
  return dump(audit_document(inst, parse_model(model), selected, battery, options));
}

std::string analyze_json(const std::string& instance) {
  const Instance inst = parse_instance(instance);
  return dump(to_json(analyze(inst), inst));
}

std::string slice_json(const std::string& instance, const std::vector<std::string>& direction, std::size_t samples,
                       const std::optional<std::string>& alpha, const std::string& format) {
  const Instance inst = parse_instance(instance);
  std::vector<Rational> d;
  for (const auto& x : direction) d.push_back(parse_rational(x));
  std::optional<Rational> weight;
  if (alpha) weight = parse_rational(*alpha);
  return export_slice(slice_profile(inst.collection, UtilityVector(std::move(d)), samples, weight), format);
}

std::string generate_json(std::uint64_t seed, std::size_t states, std::size_t sets, std::size_t vertices,
                          std::int64_t denominator) {
  return dump(to_json(generate_instance(seed, {states, sets, vertices, denominator})));
}

std::string verify_json(const std::string& suites, std::uint64_t first, std::uint64_t last, std::size_t states,
                        std::size_t sets, std::size_t vertices, std::int64_t denominator, int resolution,
                        const std::string& radius, bool hand_built, std::size_t threads) {
  VerifyOptions o;
  o.suites = parse_suites(suites);
  o.first_seed = first;
  o.last_seed = last;
  o.params = {states, sets, vertices, denominator};
  o.resolution = resolution;
  o.radius = parse_rational(radius);
  o.hand_built = hand_built;
  o.threads = threads;
  VerificationReport report;
  {
    py::gil_scoped_release release;
    report = verify(o);
  }
  return dump(to_json(report));
}

std::string validate_json(const std::string& instance) { return dump(to_json(parse_instance(instance))); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact generalized Bewley preference toolkit (JSON in, JSON out)";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result(
      [&m]() { return py::object(py::exception<Error>(m, "AmbiprefError", PyExc_ValueError)); });
  py::register_exception_translator([](std::exception_ptr p) {
    const py::object& error = error_type.get_stored();
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError& e) {
      std::string text;
      for (const auto& issue : e.issues()) {
        if (!text.empty()) text += "; ";
        text += std::string(to_string(issue.code)) + " at " + issue.path + ": " + issue.message;
      }
      py::set_error(error, text.c_str());
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("validate", &validate_json, py::arg("instance"));
  m.def("evaluate", &evaluate, py::arg("instance"), py::arg("model"), py::arg("left"), py::arg("right"));
  m.def("audit", &audit_json, py::arg("instance"), py::arg("model"), py::arg("axioms"), py::arg("resolution"),
        py::arg("radius"), py::arg("max_witnesses"));
  m.def("analyze", &analyze_json, py::arg("instance"));
  m.def("slice", &slice_json, py::arg("instance"), py::arg("direction"), py::arg("samples"), py::arg("alpha"),
        py::arg("format"));
  m.def("generate", &generate_json, py::arg("seed"), py::arg("states"), py::arg("sets"), py::arg("vertices"),
        py::arg("denominator"));
  m.def("verify", &verify_json, py::arg("suites"), py::arg("first_seed"), py::arg("last_seed"), py::arg("states"),
        py::arg("sets"), py::arg("vertices"), py::arg("denominator"), py::arg("resolution"), py::arg("radius"),
        py::arg("hand_built"), py::arg("threads"));
}
