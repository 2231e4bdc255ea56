#include "axial/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "axial/error.hpp"

namespace axial {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError((path.empty() ? std::string("/") : path) + ": " + message);
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key))
    fail(path, "missing \"" + key + "\"");
  return obj.at(key);
}

Scalar parse_scalar(const json& j, Field field, const std::string& path) {
  if (!j.is_string())
    fail(path, "scalars are written as strings");
  try {
    return field.parse(j.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

Vector parse_vector(const json& j, Field field, std::size_t n, const std::string& path) {
  if (!j.is_array())
    fail(path, "expected a list of scalars");
  if (j.size() != n)
    fail(path, "expected " + std::to_string(n) + " coefficients, got " + std::to_string(j.size()));
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(parse_scalar(j[i], field, path + "/" + std::to_string(i)));
  return v;
}

std::size_t parse_index(const json& j, std::size_t n, const std::string& path) {
  if (!j.is_number_unsigned() || j.get<std::size_t>() >= n)
    fail(path, "expected a basis index below " + std::to_string(n));
  return j.get<std::size_t>();
}

TranspositionGroup parse_group(const json& g, const std::string& path) {
  if (g.is_string()) {
    const auto name = g.get<std::string>();
    if (name == "s3")
      return TranspositionGroup::symmetric(3);
    if (name == "s4")
      return TranspositionGroup::symmetric(4);
    if (name.size() > 1 && name[0] == 's') {
      try {
        return TranspositionGroup::symmetric(std::stoul(name.substr(1)));
      } catch (const std::logic_error&) {
      }
    }
    fail(path, "unknown group \"" + name + "\"");
  }
  const std::size_t degree = member(g, "degree", path).get<std::size_t>();
  auto perms = [&](const char* key) {
    std::vector<Permutation> out;
    const json& list = member(g, key, path);
    for (std::size_t k = 0; k < list.size(); ++k) {
      try {
        out.push_back(Permutation::from_cycles(degree, list[k].get<std::vector<std::vector<std::size_t>>>()));
      } catch (const std::exception& e) {
        fail(path + "/" + key + "/" + std::to_string(k), e.what());
      }
    }
    return out;
  };
  try {
    return TranspositionGroup(perms("generators"), perms("involutions"));
  } catch (const InvalidParameter& e) {
    fail(path, e.what());
  }
}

Matrix parse_form(const json& rows, Field field, std::size_t n) {
  if (!rows.is_array() || rows.size() != n)
    fail("/form", "expected " + std::to_string(n) + " Gram rows");
  Matrix g;
  for (std::size_t i = 0; i < n; ++i)
    g.push_back(parse_vector(rows[i], field, n, "/form/" + std::to_string(i)));
  return g;
}

} // namespace

Field parse_field(const json& d) {
  if (d.is_string() && d.get<std::string>() == "Q")
    return Field::rationals();
  if (d.is_object() && d.contains("prime") && d["prime"].is_number_unsigned()) {
    try {
      return Field::prime(d["prime"].get<std::uint32_t>());
    } catch (const InvalidParameter& e) {
      fail("/field", e.what());
    }
  }
  fail("/field", "expected \"Q\" or {\"prime\": p}");
}

json field_to_json(Field field) {
  if (field.is_rational())
    return "Q";
  return json{{"prime", field.characteristic()}};
}

FusionLaw parse_fusion_law(const json& descriptor, Field field) {
  const std::string path = "/fusion_law";
  try {
    if (descriptor.contains("jordan"))
      return jordan_law(parse_scalar(descriptor["jordan"], field, path + "/jordan"));
    if (descriptor.contains("monster")) {
      const json& p = descriptor["monster"];
      if (!p.is_array() || p.size() != 2)
        fail(path + "/monster", "expected [alpha, beta]");
      return monster_law(parse_scalar(p[0], field, path + "/monster/0"),
                         parse_scalar(p[1], field, path + "/monster/1"));
    }
    if (descriptor.contains("explicit")) {
      const json& e = descriptor["explicit"];
      std::vector<Scalar> values;
      const json& vals = member(e, "values", path + "/explicit");
      for (std::size_t k = 0; k < vals.size(); ++k)
        values.push_back(parse_scalar(vals[k], field, path + "/explicit/values/" + std::to_string(k)));
      auto index = [&](const json& j, const std::string& where) {
        Scalar s = parse_scalar(j, field, where);
        for (std::size_t k = 0; k < values.size(); ++k)
          if (values[k] == s)
            return k;
        fail(where, "value " + s.to_string() + " is not in the law");
      };
      std::map<std::pair<std::size_t, std::size_t>, FusionLaw::ValueSet> table;
      const json& rows = member(e, "table", path + "/explicit");
      for (std::size_t k = 0; k < rows.size(); ++k) {
        const std::string where = path + "/explicit/table/" + std::to_string(k);
        const json& pair = member(rows[k], "pair", where);
        if (!pair.is_array() || pair.size() != 2)
          fail(where + "/pair", "expected two values");
        FusionLaw::ValueSet result;
        const json& res = member(rows[k], "result", where);
        for (std::size_t r = 0; r < res.size(); ++r)
          result.insert(index(res[r], where + "/result/" + std::to_string(r)));
        std::size_t a = index(pair[0], where + "/pair/0"), b = index(pair[1], where + "/pair/1");
        table[{std::min(a, b), std::max(a, b)}] = result;
      }
      return FusionLaw(std::move(values), std::move(table));
    }
  } catch (const InvalidParameter& e) {
    fail(path, e.what());
  }
  fail(path, "expected {\"jordan\": eta}, {\"monster\": [alpha, beta]} or {\"explicit\": {...}}");
}

json fusion_law_to_json(const FusionLaw& law) {
  if (law.name() == "jordan")
    return json{{"jordan", law.parameters().at(0).to_string()}};
  if (law.name() == "monster")
    return json{{"monster", {law.parameters().at(0).to_string(), law.parameters().at(1).to_string()}}};
  json values = json::array();
  for (const auto& v : law.values())
    values.push_back(v.to_string());
  json table = json::array();
  for (std::size_t i = 0; i < law.size(); ++i)
    for (std::size_t j = i; j < law.size(); ++j) {
      json result = json::array();
      for (auto k : law(i, j))
        result.push_back(law.values()[k].to_string());
      table.push_back({{"pair", {law.values()[i].to_string(), law.values()[j].to_string()}}, {"result", result}});
    }
  return json{{"explicit", {{"values", values}, {"table", table}}}};
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v)
    out.push_back(x.to_string());
  return out;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (const auto& row : m)
    out.push_back(vector_to_json(row));
  return out;
}

json subspace_to_json(const Subspace& s) {
  return json{{"dimension", s.dimension()}, {"basis", matrix_to_json(s.basis())}};
}

AlgebraWithForm build_construction(const json& c, Field field) {
  const std::string path = "/construction";
  auto eta_of = [&](const json& block, const std::string& where) {
    return block.contains("eta") ? parse_scalar(block["eta"], field, where + "/eta") : field.from_rational(mpq_class(1, 2));
  };
  try {
    if (c.contains("matsuo")) {
      const json& m = c["matsuo"];
      AxialAlgebra a = matsuo_algebra(parse_group(member(m, "group", path + "/matsuo"), path + "/matsuo/group"),
                                      eta_of(m, path + "/matsuo"));
      FrobeniusForm zero = FrobeniusForm::zero(a.table());
      return {std::move(a), std::move(zero)};
    }
    if (c.contains("named")) {
      const json& m = c["named"];
      AxialAlgebra a = named_algebra(member(m, "name", path + "/named").get<std::string>(), eta_of(m, path + "/named"));
      FrobeniusForm zero = FrobeniusForm::zero(a.table());
      return {std::move(a), std::move(zero)};
    }
    if (c.contains("inflated_form"))
      return inflated_form_example(field);
    if (c.contains("direct_sum")) {
      std::vector<AxialAlgebra> parts;
      for (const auto& part : c["direct_sum"])
        parts.push_back(build_construction(part, field).algebra);
      AxialAlgebra a = direct_sum(parts);
      FrobeniusForm zero = FrobeniusForm::zero(a.table());
      return {std::move(a), std::move(zero)};
    }
  } catch (const InvalidParameter& e) {
    fail(path, e.what());
  } catch (const AxisVerificationError& e) {
    fail(path, e.what());
  }
  fail(path, "expected one of matsuo, named, inflated_form, direct_sum");
}

AlgebraFile parse_algebra_file(const json& doc) {
  if (!doc.is_object())
    fail("", "expected a JSON object");
  Field field = parse_field(member(doc, "field", ""));
  const bool has_products = doc.contains("products");
  const bool has_construction = doc.contains("construction");
  if (has_products == has_construction)
    fail("", "exactly one of \"products\" and \"construction\" must be present");

  if (has_construction) {
    AlgebraWithForm built = build_construction(doc["construction"], field);
    AlgebraFile file{built.algebra.table(), built.algebra.law(), built.algebra.axis_vectors(),
                     built.algebra.axis_names(), std::nullopt};
    if (doc.contains("form"))
      file.form = parse_form(doc["form"], field, file.table.dimension());
    else if (!built.form.is_zero())
      file.form = built.form.gram();
    return file;
  }

  const json& dim = member(doc, "dimension", "");
  if (!dim.is_number_unsigned())
    fail("/dimension", "expected a non-negative integer");
  const std::size_t n = dim.get<std::size_t>();
  std::vector<std::string> names;
  if (doc.contains("basis_names")) {
    names = doc["basis_names"].get<std::vector<std::string>>();
    if (names.size() != n)
      fail("/basis_names", "expected " + std::to_string(n) + " names");
  } else {
    for (std::size_t i = 0; i < n; ++i)
      names.push_back("e" + std::to_string(i));
  }
  AlgebraFile file{AlgebraTable(field, names), parse_fusion_law(member(doc, "fusion_law", ""), field), {}, {}, {}};
  const json& products = doc["products"];
  if (!products.is_array())
    fail("/products", "expected a list");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < products.size(); ++k) {
    const std::string where = "/products/" + std::to_string(k);
    std::size_t i = parse_index(member(products[k], "i", where), n, where + "/i");
    std::size_t j = parse_index(member(products[k], "j", where), n, where + "/j");
    if (i > j)
      fail(where, "entries are keyed by i <= j");
    if (!seen.insert({i, j}).second)
      fail(where, "duplicate entry for (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    file.table.set_product(i, j, parse_vector(member(products[k], "coefficients", where), field, n,
                                              where + "/coefficients"));
  }
  const json& axes = member(doc, "axes", "");
  if (!axes.is_array())
    fail("/axes", "expected a list of coefficient vectors");
  for (std::size_t k = 0; k < axes.size(); ++k)
    file.axes.push_back(parse_vector(axes[k], field, n, "/axes/" + std::to_string(k)));
  if (doc.contains("axis_names")) {
    file.axis_names = doc["axis_names"].get<std::vector<std::string>>();
    if (file.axis_names.size() != file.axes.size())
      fail("/axis_names", "expected one name per axis");
  }
  if (doc.contains("form"))
    file.form = parse_form(doc["form"], field, n);
  return file;
}

AlgebraFile parse_algebra_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what());
  }
  try {
    return parse_algebra_file(doc);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed algebra file: ") + e.what());
  }
}

AlgebraFile load_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_algebra_text(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

json algebra_to_json(const AxialAlgebra& algebra, const std::optional<FrobeniusForm>& form) {
  const AlgebraTable& t = algebra.table();
  json products = json::array();
  for (std::size_t i = 0; i < t.dimension(); ++i)
    for (std::size_t j = i; j < t.dimension(); ++j)
      if (!is_zero(t.product(i, j)))
        products.push_back({{"i", i}, {"j", j}, {"coefficients", vector_to_json(t.product(i, j))}});
  json doc{{"field", field_to_json(algebra.field())},
           {"dimension", t.dimension()},
           {"basis_names", t.basis_names()},
           {"products", products},
           {"axes", matrix_to_json(algebra.axis_vectors())},
           {"axis_names", algebra.axis_names()},
           {"fusion_law", fusion_law_to_json(algebra.law())}};
  if (form)
    doc["form"] = matrix_to_json(form->gram());
  return doc;
}

} // namespace axial
