#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "axial/io.hpp"
#include "axial/structure.hpp"

namespace axial {

/// Which Frobenius form the radical comparisons use: the solved form
/// normalized on the axes, the form supplied with the input, or zero.
enum class FormPolicy { Solve, Given, Zero };

FormPolicy parse_form_policy(const std::string& text);
std::string to_string(FormPolicy policy);

struct AnalyzeOptions {
  FormPolicy policy = FormPolicy::Solve;
  /// When nonzero and the algebra is over GF(p) with p^n at most this, the
  /// ideals found by the brute-force oracle join the decomposition check.
  std::uint64_t oracle_bound = 0;
};

enum class Verdict { Pass, Fail, Skipped };

std::string to_string(Verdict verdict);

struct TheoremCheck {
  std::string name;
  Verdict verdict = Verdict::Skipped;
  std::string detail;
};

/// Exit codes shared by the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitFinding = 2;

struct AnalysisReport {
  nlohmann::json document;
  std::vector<TheoremCheck> checks;
  /// Verdict failures and open-question evidence.
  std::vector<std::string> findings;
  /// Name and DOT source of each graph.
  std::vector<std::pair<std::string, std::string>> graphs;
  int exit_code = kExitOk;

  const TheoremCheck* check(const std::string& name) const;
};

/// Runs form solving, radicals, structure and the theorem checks on a
/// verified algebra. `given` is required for FormPolicy::Given.
AnalysisReport analyze(const AxialAlgebra& algebra, const std::optional<FrobeniusForm>& given,
                       const AnalyzeOptions& options = {});

/// Loads, verifies and analyzes a file. Input problems (parse errors,
/// failed axis verification, invalid forms) give exit code 1 and a document
/// listing the errors.
AnalysisReport analyze_file(const std::filesystem::path& path, const AnalyzeOptions& options = {});
AnalysisReport analyze_text(const std::string& text, const AnalyzeOptions& options = {});

struct OracleComparison {
  nlohmann::json document;
  bool agree = false;
  int exit_code = kExitOk;
};

/// Brute-force ideal lattice against the structural maximal ideals, axial
/// radical and Jacobson radical. Throws BoundExceeded above the bound.
OracleComparison oracle_compare(const AxialAlgebra& algebra, std::uint64_t bound = 1'000'000);
OracleComparison oracle_compare_file(const std::filesystem::path& path, std::uint64_t bound = 1'000'000);

/// Serialized report, two-space indentation, sorted keys.
std::string render(const nlohmann::json& document);

} // namespace axial
