// Python bindings: JSON strings cross the boundary, the package wrapper decodes them.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "axial/analysis.hpp"
#include "axial/error.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

axial::Field field_from(const std::string& text) {
  return text == "Q" ? axial::Field::rationals() : axial::Field::prime(static_cast<std::uint32_t>(std::stoul(text)));
}

axial::AxialAlgebra load(const std::string& text) {
  axial::AlgebraFile file = axial::parse_algebra_text(text);
  return axial::AxialAlgebra(file.table, file.law, file.axes, file.axis_names);
}

std::string construct(const std::string& name, const std::string& eta, const std::string& group,
                      const std::string& field) {
  json block;
  if (name == "matsuo")
    block = {{"matsuo", {{"group", group}, {"eta", eta}}}};
  else if (name == "inflated-form")
    block = {{"inflated_form", json::object()}};
  else
    block = {{"named", {{"name", name}, {"eta", eta}}}};
  axial::AlgebraWithForm built = axial::build_construction(block, field_from(field));
  std::optional<axial::FrobeniusForm> form;
  if (!built.form.is_zero())
    form = built.form;
  return axial::render(axial::algebra_to_json(built.algebra, form));
}

std::pair<int, std::string> analyze(const std::string& text, const std::string& policy, std::uint64_t oracle_bound) {
  axial::AnalyzeOptions options;
  options.policy = axial::parse_form_policy(policy);
  options.oracle_bound = oracle_bound;
  axial::AnalysisReport report = axial::analyze_text(text, options);
  return {report.exit_code, axial::render(report.document)};
}

std::pair<int, std::string> oracle(const std::string& text, std::uint64_t bound) {
  axial::OracleComparison cmp = axial::oracle_compare(load(text), bound);
  return {cmp.exit_code, axial::render(cmp.document)};
}

std::vector<std::string> corpus_names(const std::string& field) {
  std::vector<std::string> names;
  for (const auto& m : axial::corpus(field_from(field)))
    names.push_back(m.name);
  return names;
}

std::string corpus_member(const std::string& field, const std::string& name) {
  for (const auto& m : axial::corpus(field_from(field)))
    if (m.name == name)
      return axial::render(axial::algebra_to_json(m.algebra, m.form));
  throw axial::InvalidParameter("no corpus member named \"" + name + "\"");
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact radicals and structure of primitive axial algebras";

  auto base = py::register_exception<axial::Error>(m, "AxialError", PyExc_ValueError);
  py::register_exception<axial::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<axial::BoundExceeded>(m, "BoundExceeded", base.ptr());

  m.def("construct", &construct, py::arg("name"), py::arg("eta") = "1/2", py::arg("group") = "s3",
        py::arg("field") = "Q", "Algebra file (JSON text) for 1A, 2B, 3C, matsuo or inflated-form.");
  m.def("analyze", &analyze, py::arg("text"), py::arg("form_policy") = "solve", py::arg("oracle_bound") = 0,
        "Run the analysis pipeline on algebra-file text; returns (exit code, report JSON).");
  m.def("oracle", &oracle, py::arg("text"), py::arg("bound") = 1'000'000,
        "Brute-force ideal lattice against the structural radicals; returns (exit code, report JSON).");
  m.def("corpus_names", &corpus_names, py::arg("field") = "Q");
  m.def("corpus_member", &corpus_member, py::arg("field"), py::arg("name"));
}
