#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "axial/constructions.hpp"

namespace axial {

/// Contents of an algebra file before axis verification. Either explicit
/// structure constants or a construction block produce the table.
struct AlgebraFile {
  AlgebraTable table;
  FusionLaw law = jordan_law(Scalar::rational(mpq_class(1, 2)));
  Matrix axes;
  std::vector<std::string> axis_names;
  std::optional<Matrix> form;
};

Field parse_field(const nlohmann::json& descriptor);
nlohmann::json field_to_json(Field field);

FusionLaw parse_fusion_law(const nlohmann::json& descriptor, Field field);
nlohmann::json fusion_law_to_json(const FusionLaw& law);

nlohmann::json vector_to_json(const Vector& v);
nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json subspace_to_json(const Subspace& s);

/// Throws ParseError naming the JSON path of the offending entry.
AlgebraFile parse_algebra_file(const nlohmann::json& document);
/// Throws ParseError with line and column for malformed JSON.
AlgebraFile load_algebra_file(const std::filesystem::path& path);
AlgebraFile parse_algebra_text(const std::string& text);

/// Builds the algebra from a construction block such as
/// {"matsuo": {"group": "s4", "eta": "1/2"}}; also returns any form it carries.
AlgebraWithForm build_construction(const nlohmann::json& construction, Field field);

/// Explicit-products serialization; `form` is written when present.
nlohmann::json algebra_to_json(const AxialAlgebra& algebra, const std::optional<FrobeniusForm>& form = std::nullopt);

} // namespace axial
