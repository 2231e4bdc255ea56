// Command-line front end: analyze, construct and oracle subcommands.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "axial/analysis.hpp"
#include "axial/error.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void write_file(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path())
    fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw axial::Error("cannot write " + path.string());
  out << contents;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

axial::Field field_from_option(const std::string& text) {
  if (text == "Q")
    return axial::Field::rationals();
  try {
    std::size_t used = 0;
    unsigned long p = std::stoul(text, &used);
    if (used == text.size())
      return axial::Field::prime(static_cast<std::uint32_t>(p));
  } catch (const std::logic_error&) {
  }
  throw axial::InvalidParameter("--field expects Q or a prime, got \"" + text + "\"");
}

int run_analyze(const std::string& input, const std::string& policy, const std::string& report_path,
                const std::string& dot_dir, std::uint64_t oracle_bound) {
  axial::AnalyzeOptions options;
  options.policy = axial::parse_form_policy(policy);
  options.oracle_bound = oracle_bound;
  axial::AnalysisReport report = axial::analyze_file(input, options);
  emit(axial::render(report.document), report_path);
  if (!dot_dir.empty())
    for (const auto& [name, dot] : report.graphs)
      write_file(fs::path(dot_dir) / (name + ".dot"), dot);
  if (report.exit_code == axial::kExitInputError)
    std::cerr << "input error: " << report.document.value("error", std::string("invalid input")) << "\n";
  for (const auto& f : report.findings)
    std::cerr << "finding: " << f << "\n";
  return report.exit_code;
}

int run_construct(const std::string& name, const std::string& eta, const std::string& group,
                  const std::string& field_text, const std::string& out_path) {
  axial::Field field = field_from_option(field_text);
  json block;
  if (name == "matsuo")
    block = {{"matsuo", {{"group", group}, {"eta", eta}}}};
  else if (name == "inflated-form")
    block = {{"inflated_form", json::object()}};
  else
    block = {{"named", {{"name", name}, {"eta", eta}}}};
  axial::AlgebraWithForm built = axial::build_construction(block, field);
  std::optional<axial::FrobeniusForm> form;
  if (name == "inflated-form")
    form = built.form;
  emit(axial::render(axial::algebra_to_json(built.algebra, form)), out_path);
  return axial::kExitOk;
}

int run_oracle(const std::string& input, std::uint64_t bound) {
  axial::OracleComparison cmp = axial::oracle_compare_file(input, bound);
  std::cout << axial::render(cmp.document);
  return cmp.exit_code;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radicals and structure of primitive axial algebras over Q and GF(p)"};
  app.require_subcommand(1);

  std::string input, policy = "solve", report_path, dot_dir;
  std::uint64_t analyze_oracle_bound = 0;
  auto* analyze = app.add_subcommand("analyze", "Verify the axes and run every radical and structure check");
  analyze->add_option("file", input, "Algebra file (JSON)")->required();
  analyze->add_option("--form-policy", policy, "solve, given or zero")
      ->check(CLI::IsMember({"solve", "given", "zero"}));
  analyze->add_option("--report", report_path, "Write the JSON report here instead of stdout");
  analyze->add_option("--dot", dot_dir, "Directory for one DOT file per graph");
  analyze->add_option("--oracle-bound", analyze_oracle_bound,
                      "Also test ideals from the brute-force oracle when p^dim is at most this");

  std::string name, eta = "1/2", group = "s3", field_text = "Q", out_path;
  auto* construct = app.add_subcommand("construct", "Write a named algebra as an explicit algebra file");
  construct->add_option("name", name, "1A, 2B, 3C, matsuo or inflated-form")->required();
  construct->add_option("--eta", eta, "Jordan parameter as p/q");
  construct->add_option("--group", group, "s3 or s4 (matsuo only)")->check(CLI::IsMember({"s3", "s4"}));
  construct->add_option("--field", field_text, "Q or a prime p");
  construct->add_option("--out", out_path, "Output file (default stdout)");

  std::string oracle_input;
  std::uint64_t bound = 1'000'000;
  auto* oracle = app.add_subcommand("oracle", "Compare structural results with brute-force ideal enumeration");
  oracle->add_option("file", oracle_input, "Algebra file over GF(p)")->required();
  oracle->add_option("--bound", bound, "Refuse when the enumeration work exceeds this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : axial::kExitInputError;
  }

  try {
    if (*analyze)
      return run_analyze(input, policy, report_path, dot_dir, analyze_oracle_bound);
    if (*construct)
      return run_construct(name, eta, group, field_text, out_path);
    return run_oracle(oracle_input, bound);
  } catch (const axial::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return axial::kExitInputError;
  }
}
