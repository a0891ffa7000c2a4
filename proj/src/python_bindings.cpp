#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pictam/document.hpp"
#include "pictam/generators.hpp"
#include "pictam/pipelines.hpp"
#include "pictam/shapes.hpp"
#include "pictam/suite.hpp"

namespace py = pybind11;
using namespace pictam;

namespace {

PicPtr picard_of(const std::string& text) {
  auto d = parse_document(text);
  if (d.kind != "picard") throw InputError("expected a picard document, got '" + d.kind + "'");
  return picard_from_payload(d.payload);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Documents in, documents out: every argument and result is serialized JSON text.";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_RuntimeError);

  m.attr("DOCUMENT_VERSION") = kDocumentVersion;

  m.def("corpus_names", &corpus_names);
  m.def("corpus_document", [](const std::string& name) { return serialize_document(corpus_document(name)); });
  m.def("suite_groups", &suite_groups);

  m.def("canonicalize", [](const std::string& text) { return serialize_document(parse_document(text)); });
  m.def("validate", [](const std::string& text) {
    return serialize_document(validate_document(parse_document(text)));
  });
  m.def("invariants", [](const std::string& text) {
    return serialize_document(invariants_document(*picard_of(text)));
  });
  m.def(
      "k_theory",
      [](const std::string& text, int level, double bound, int samples, std::uint64_t seed) {
        EnumerationOptions o;
        o.bound = bound;
        o.sampled = samples > 0;
        o.samples = samples;
        o.seed = seed;
        py::gil_scoped_release release;
        return serialize_document(k_theory_document(picard_of(text), level, o));
      },
      py::arg("document"), py::arg("level"), py::arg("bound") = 1e6, py::arg("samples") = 0, py::arg("seed") = 0);

  m.def(
      "run_suite",
      [](const std::string& config, const std::string& base_dir) {
        auto cfg = suite_config_from_json(Json::parse(config), base_dir);
        SuiteResult r;
        {
          py::gil_scoped_release release;
          r = run_suite(cfg);
        }
        return py::make_tuple(serialize_document(r.verdict), r.exit_code);
      },
      py::arg("config"), py::arg("base_dir") = ".");

  m.def("corruption_sweep", [](const std::string& text) {
    auto o = corruption_sweep(*picard_of(text));
    return Json{{"components", o.components},
                {"same_endpoint", o.same_endpoint},
                {"wrong_endpoint", o.wrong_endpoint},
                {"missed", o.missed},
                {"first_miss", o.first_miss},
                {"valid_alternatives", o.valid_alternatives}}
        .dump();
  });

  m.def("phi", [](const std::vector<int>& values, int n) {
    DeltaMap a{static_cast<int>(values.size()) - 1, n, values};
    if (values.empty() || !a.valid()) throw InputError("not a monotone map [m] -> [n]");
    return phi(a).values;
  });
}
