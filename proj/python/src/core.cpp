#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "valrank/api.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "JSON-level bindings to the valrank operations";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> storage;
  storage.call_once_and_store_result([&]() { return py::exception<valrank::Error>(m, "CoreError", PyExc_ValueError); });
  // args = (code name, message) so the Python layer can rebuild a typed error.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const valrank::Error& e) {
      py::set_error(storage.get_stored(), py::make_tuple(std::string(valrank::error_code_name(e.code())), e.message()));
    }
  });

  m.def(
      "run",
      [](const std::string& op, const std::string& request) {
        const auto req = valrank::json::parse(request, nullptr, false);
        if (req.is_discarded()) valrank::fail(valrank::ErrorCode::ParseError, "request is not valid JSON");
        valrank::api::Response r;
        {
          py::gil_scoped_release release;
          r = valrank::api::run(op, req);
        }
        return py::make_tuple(r.payload.dump(), r.warnings);
      },
      py::arg("op"), py::arg("request"), "Run an operation on a JSON request; returns (payload_json, warnings).");
  m.def("operations", &valrank::api::operation_names, "Names of all operations.");
  m.def("schema", &valrank::api::request_schema, py::arg("op"), "Request fields an operation expects.");
}
