#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gcmwb/dispatch.hpp"
#include "gcmwb/invariants.hpp"
#include "gcmwb/parse.hpp"

namespace py = pybind11;
using namespace gcmwb;

namespace {

LocalRing make_ring(const std::vector<std::string>& vars, const std::vector<std::string>& relations,
                    std::uint32_t characteristic) {
  return make_local_ring(make_presentation("A", characteristic, vars, relations));
}

ParameterSystem make_sop(const LocalRing& a, const std::vector<std::string>& xs) {
  std::vector<Polynomial> el;
  for (const auto& s : xs) el.push_back(parse_polynomial(a.ring(), s));
  return validate_parameter_system(a, el);
}

}  // namespace

PYBIND11_MODULE(_gcmwb, m) {
  m.doc() = "Bounds for Hilbert coefficients and regularity of parameter ideals";
  m.attr("REPORT_VERSION") = kReportVersion;

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<CapExceeded> cap_error(m, "CapExceeded", PyExc_RuntimeError);
  static py::exception<Error> engine_error(m, "EngineError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::object err = py::reinterpret_borrow<py::object>(parse_error.ptr())(e.what());
      err.attr("line") = e.line();
      err.attr("column") = e.column();
      err.attr("expected") = e.expected();
      PyErr_SetObject(parse_error.ptr(), err.ptr());
    } catch (const CapExceeded& e) {
      py::set_error(cap_error, e.what());
    } catch (const Error& e) {
      py::set_error(engine_error, e.what());
    }
  });

  m.def(
      "run_job",
      [](const std::string& text, const std::string& format, std::optional<std::uint64_t> seed,
         std::optional<unsigned> cap_trunc, std::optional<unsigned> cap_fit, std::optional<unsigned> horizon) {
        Overrides ov{seed, cap_trunc, cap_fit, horizon, std::nullopt};
        DispatchResult r;
        {
          py::gil_scoped_release release;
          r = run_text(text, ov, report_format_from_string(format));
        }
        return py::make_tuple(r.exit_code, r.output);
      },
      py::arg("text"), py::arg("format") = "json", py::arg("seed") = py::none(), py::arg("cap_trunc") = py::none(),
      py::arg("cap_fit") = py::none(), py::arg("horizon") = py::none(),
      "Parse and run a job; returns (exit_code, report).");

  m.def(
      "normalize_job", [](const std::string& text) { return serialize_job(parse_job(text)); }, py::arg("text"),
      "Canonical text of a job; raises ParseError with line and column.");

  m.def(
      "colength",
      [](const std::vector<std::string>& vars, const std::vector<std::string>& relations,
         const std::vector<std::string>& generators, std::uint32_t characteristic) -> std::optional<std::uint64_t> {
        auto a = make_ring(vars, relations, characteristic);
        std::vector<Polynomial> g;
        for (const auto& s : generators) g.push_back(parse_polynomial(a.ring(), s));
        return a.colength(a.ideal(g));
      },
      py::arg("variables"), py::arg("relations"), py::arg("generators"), py::arg("characteristic") = 101,
      "Length of A/J at the origin, or None when infinite.");

  m.def(
      "invariants",
      [](const std::vector<std::string>& vars, const std::vector<std::string>& relations,
         const std::vector<std::string>& q, std::uint32_t characteristic) {
        auto a = make_ring(vars, relations, characteristic);
        auto sys = make_sop(a, q);
        auto rec = invariant_iq(a, sys);
        auto ia = invariant_ia(a, sys, a.config().n_max_ia);
        py::dict d;
        d["dimension"] = a.dimension();
        d["colength"] = rec.colength;
        d["multiplicity"] = rec.multiplicity;
        d["iq"] = rec.iq;
        d["ia"] = ia.value;
        d["ia_status"] = to_string(ia.status);
        d["ia_trace"] = ia.trace;
        return d;
      },
      py::arg("variables"), py::arg("relations"), py::arg("q"), py::arg("characteristic") = 101,
      "Colength, multiplicity, I(Q,A) and the I(A) trace for a parameter ideal.");
}
