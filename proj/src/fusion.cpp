#include "axial/fusion.hpp"

#include <algorithm>

#include "axial/error.hpp"

namespace axial {

namespace {

std::string describe(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + v[i].to_string();
  return s + ")";
}

std::string describe(const FusionLaw& law, const FusionLaw::ValueSet& set) {
  std::string s = "{";
  bool first = true;
  for (auto i : set) {
    s += (first ? "" : ",") + law.values()[i].to_string();
    first = false;
  }
  return s + "}";
}

std::string value_list(const FusionLaw& law) {
  FusionLaw::ValueSet all;
  for (std::size_t i = 0; i < law.size(); ++i)
    all.insert(i);
  return describe(law, all);
}

} // namespace

FusionLaw::FusionLaw(std::vector<Scalar> values, std::map<std::pair<std::size_t, std::size_t>, ValueSet> table,
                     std::string name, std::vector<Scalar> parameters)
    : values_(std::move(values)), name_(std::move(name)), parameters_(std::move(parameters)) {
  if (values_.empty())
    throw InvalidParameter("fusion law with no values");
  const Field f = values_.front().field();
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].field() != f)
      throw FieldMismatch("fusion law values from different fields");
    for (std::size_t j = 0; j < i; ++j)
      if (values_[i] == values_[j])
        throw InvalidParameter("fusion law value " + values_[i].to_string() + " listed twice");
  }
  if (!index_of(f.one()))
    throw InvalidParameter("fusion law must contain 1");
  for (auto& [key, set] : table) {
    auto [i, j] = key;
    if (i >= values_.size() || j >= values_.size())
      throw InvalidParameter("fusion table entry refers to a missing value");
    for (auto v : set)
      if (v >= values_.size())
        throw InvalidParameter("fusion table result refers to a missing value");
    auto canonical = std::pair{std::min(i, j), std::max(i, j)};
    auto [it, inserted] = table_.emplace(canonical, set);
    if (!inserted && it->second != set)
      throw InvalidParameter("fusion table is not symmetric at (" + values_[i].to_string() + ", " +
                             values_[j].to_string() + ")");
  }
  for (std::size_t i = 0; i < values_.size(); ++i)
    for (std::size_t j = i; j < values_.size(); ++j)
      if (!table_.count({i, j}))
        throw InvalidParameter("fusion table has no entry for (" + values_[i].to_string() + ", " +
                               values_[j].to_string() + ")");
}

const FusionLaw::ValueSet& FusionLaw::operator()(std::size_t i, std::size_t j) const {
  return table_.at({std::min(i, j), std::max(i, j)});
}

std::optional<std::size_t> FusionLaw::index_of(const Scalar& value) const {
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] == value)
      return i;
  return std::nullopt;
}

FusionLaw FusionLaw::reduced_to(Field target) const {
  if (field() == target)
    return *this;
  if (!field().is_rational())
    throw FieldMismatch("cannot move a fusion law from " + field().name() + " to " + target.name());
  auto map = [&](const Scalar& s) { return target.from_rational(s.as_rational()); };
  if (name_ == "jordan")
    return jordan_law(map(parameters_.at(0)));
  if (name_ == "monster")
    return monster_law(map(parameters_.at(0)), map(parameters_.at(1)));
  std::vector<Scalar> values;
  for (const auto& v : values_)
    values.push_back(map(v));
  std::vector<Scalar> params;
  for (const auto& v : parameters_)
    params.push_back(map(v));
  return FusionLaw(std::move(values), table_, name_, std::move(params));
}

FusionLaw jordan_law(const Scalar& eta) {
  const Field f = eta.field();
  if (eta.is_zero() || eta.is_one())
    throw InvalidParameter("Jordan parameter eta must differ from 0 and 1, got " + eta.to_string());
  // indices: 0 -> 1, 1 -> 0, 2 -> eta
  std::map<std::pair<std::size_t, std::size_t>, FusionLaw::ValueSet> t{
      {{0, 0}, {0}}, {{0, 1}, {}}, {{0, 2}, {2}}, {{1, 1}, {1}}, {{1, 2}, {2}}, {{2, 2}, {0, 1}},
  };
  return FusionLaw({f.one(), f.zero(), eta}, std::move(t), "jordan", {eta});
}

FusionLaw monster_law(const Scalar& alpha, const Scalar& beta) {
  const Field f = alpha.field();
  std::vector<Scalar> values{f.one(), f.zero(), alpha, beta};
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (values[i] == values[j])
        throw InvalidParameter("Monster parameters must make 1, 0, alpha, beta pairwise distinct, got alpha=" +
                               alpha.to_string() + " beta=" + beta.to_string());
  // indices: 0 -> 1, 1 -> 0, 2 -> alpha, 3 -> beta
  std::map<std::pair<std::size_t, std::size_t>, FusionLaw::ValueSet> t{
      {{0, 0}, {0}}, {{0, 1}, {}},  {{0, 2}, {2}},    {{0, 3}, {3}},       {{1, 1}, {1}},
      {{1, 2}, {2}}, {{1, 3}, {3}}, {{2, 2}, {0, 1}}, {{2, 3}, {3}}, {{3, 3}, {0, 1, 2}},
  };
  return FusionLaw(std::move(values), std::move(t), "monster", {alpha, beta});
}

bool admits_direct_sums(const FusionLaw& law) {
  auto zero = law.index_of(law.field().zero());
  return zero && law(*zero, *zero).count(*zero) > 0;
}

std::string to_string(AxisCondition condition) {
  switch (condition) {
  case AxisCondition::NonzeroIdempotent:
    return "nonzero-idempotent";
  case AxisCondition::Semisimplicity:
    return "semisimplicity";
  case AxisCondition::Fusion:
    return "fusion";
  case AxisCondition::Primitivity:
    return "primitivity";
  }
  return "unknown";
}

Subspace eigenspace(const AlgebraTable& algebra, const Vector& a, const Scalar& lambda) {
  Matrix m = algebra.adjoint_matrix(a);
  for (std::size_t i = 0; i < m.size(); ++i)
    m[i][i] -= lambda;
  return nullspace(algebra.field(), algebra.dimension(), m);
}

std::vector<Vector> components(const AlgebraTable& algebra, const Axis& axis, const Vector& u) {
  const std::size_t n = algebra.dimension();
  Matrix columns;
  std::vector<std::size_t> owner;
  for (std::size_t k = 0; k < axis.eigenspaces.size(); ++k)
    for (const auto& b : axis.eigenspaces[k].basis()) {
      columns.push_back(b);
      owner.push_back(k);
    }
  auto solution = solve_linear(algebra.field(), columns.size(), transpose(columns, n), u);
  if (!solution || !solution->homogeneous.is_zero())
    throw PreconditionError("eigenspaces of the axis do not decompose the algebra; not a valid axis");
  std::vector<Vector> parts(axis.eigenspaces.size(), algebra.zero());
  for (std::size_t c = 0; c < columns.size(); ++c)
    add_scaled(parts[owner[c]], solution->particular[c], columns[c]);
  return parts;
}

AxisCheck verify_axis(const AlgebraTable& algebra, const FusionLaw& law, const Vector& a) {
  if (law.field() != algebra.field())
    throw FieldMismatch("fusion law over " + law.field().name() + " for algebra over " + algebra.field().name());
  AxisCheck check;
  const std::size_t n = algebra.dimension();
  if (a.size() != n)
    throw DimensionMismatch("axis of length " + std::to_string(a.size()) + " in dimension " + std::to_string(n));
  if (is_zero(a)) {
    check.violations.push_back({AxisCondition::NonzeroIdempotent, "not a nonzero idempotent: the vector is zero"});
    return check;
  }
  Vector square = algebra.multiply(a, a);
  if (square != a) {
    check.violations.push_back({AxisCondition::NonzeroIdempotent,
                                "not a nonzero idempotent: a*a = " + describe(square) + " != " + describe(a)});
    return check;
  }

  Axis axis{a, {}};
  std::size_t total = 0;
  for (const auto& lambda : law.values()) {
    axis.eigenspaces.push_back(eigenspace(algebra, a, lambda));
    total += axis.eigenspaces.back().dimension();
  }
  if (total != n)
    check.violations.push_back({AxisCondition::Semisimplicity,
                                "eigenspaces for " + value_list(law) + " span " + std::to_string(total) + " of " +
                                    std::to_string(n) + " dimensions; ad_a has eigenvalues outside the law or is "
                                                        "not semisimple"});

  for (std::size_t i = 0; i < law.size(); ++i)
    for (std::size_t j = i; j < law.size(); ++j) {
      Subspace target(algebra.field(), n);
      for (auto k : law(i, j))
        target = subspace_sum(target, axis.eigenspaces[k]);
      bool reported = false;
      for (const auto& v : axis.eigenspaces[i].basis()) {
        for (const auto& w : axis.eigenspaces[j].basis()) {
          Vector p = algebra.multiply(v, w);
          if (target.contains(p))
            continue;
          check.violations.push_back(
              {AxisCondition::Fusion, "A_" + law.values()[i].to_string() + " * A_" + law.values()[j].to_string() +
                                          " not inside A_" + describe(law, law(i, j)) + ": " + describe(v) + " * " +
                                          describe(w) + " = " + describe(p)});
          reported = true;
          break;
        }
        if (reported)
          break;
      }
    }

  const auto& one_space = axis.eigenspaces[law.one_index()];
  if (one_space.dimension() != 1)
    check.violations.push_back({AxisCondition::Primitivity,
                                "not primitive: dim A_1(a) = " + std::to_string(one_space.dimension())});

  if (check.violations.empty())
    check.axis = std::move(axis);
  return check;
}

namespace {

std::string verification_message(std::size_t index, const std::string& name,
                                 const std::vector<AxisViolation>& violations) {
  std::string s = "axis " + std::to_string(index) + " (" + name + ") failed verification:";
  for (std::size_t k = 0; k < violations.size(); ++k)
    s += (k ? "; [" : " [") + to_string(violations[k].condition) + "] " + violations[k].detail;
  return s;
}

} // namespace

AxisVerificationError::AxisVerificationError(std::size_t index_, std::string name_,
                                             std::vector<AxisViolation> violations_)
    : std::runtime_error(verification_message(index_, name_, violations_)), index(index_), name(std::move(name_)),
      violations(std::move(violations_)) {}

AxialAlgebra::AxialAlgebra(AlgebraTable table, FusionLaw law, const Matrix& axis_vectors,
                           std::vector<std::string> axis_names)
    : table_(std::move(table)), law_(std::move(law)), axis_names_(std::move(axis_names)) {
  if (table_.dimension() == 0)
    throw PreconditionError("a zero-dimensional algebra has no axes");
  if (axis_vectors.empty())
    throw PreconditionError("an axial algebra needs at least one axis");
  if (axis_names_.empty()) {
    for (std::size_t k = 0; k < axis_vectors.size(); ++k) {
      std::string name = "x" + std::to_string(k);
      for (std::size_t i = 0; i < table_.dimension(); ++i)
        if (axis_vectors[k] == table_.basis_vector(i))
          name = table_.basis_names()[i];
      axis_names_.push_back(name);
    }
  }
  if (axis_names_.size() != axis_vectors.size())
    throw DimensionMismatch("axis name list does not match the axis list");
  for (std::size_t k = 0; k < axis_vectors.size(); ++k) {
    AxisCheck check = verify_axis(table_, law_, axis_vectors[k]);
    if (!check.ok())
      throw AxisVerificationError(k, axis_names_[k], std::move(check.violations));
    axes_.push_back(std::move(*check.axis));
  }
  Subspace generated = subalgebra_closure(table_, axis_vectors);
  if (!generated.is_full())
    throw PreconditionError("the axes generate a subalgebra of dimension " + std::to_string(generated.dimension()) +
                            ", not the whole algebra of dimension " + std::to_string(table_.dimension()));
}

Matrix AxialAlgebra::axis_vectors() const {
  Matrix m;
  for (const auto& a : axes_)
    m.push_back(a.vector);
  return m;
}

AxialAlgebra direct_sum(const std::vector<AxialAlgebra>& summands) {
  if (summands.empty())
    throw InvalidParameter("direct_sum of an empty list");
  const FusionLaw& law = summands.front().law();
  for (const auto& s : summands)
    if (!(s.law() == law))
      throw InvalidParameter("direct_sum of axial algebras with different fusion laws");
  if (summands.size() > 1 && !admits_direct_sums(law))
    throw InvalidParameter("the fusion law does not admit direct sums (needs 0 in F and 0 in 0*0)");
  std::vector<AlgebraTable> tables;
  for (const auto& s : summands)
    tables.push_back(s.table());
  AlgebraTable sum = direct_sum(tables);
  std::multiset<std::string> seen;
  for (const auto& s : summands)
    seen.insert(s.axis_names().begin(), s.axis_names().end());
  bool clash = std::any_of(seen.begin(), seen.end(), [&](const std::string& x) { return seen.count(x) > 1; });
  Matrix axes;
  std::vector<std::string> names;
  std::size_t offset = 0;
  for (std::size_t k = 0; k < summands.size(); ++k) {
    const auto& s = summands[k];
    for (std::size_t a = 0; a < s.axes().size(); ++a) {
      Vector v = sum.zero();
      for (std::size_t i = 0; i < s.dimension(); ++i)
        v[offset + i] = s.axes()[a].vector[i];
      axes.push_back(std::move(v));
      names.push_back(clash && summands.size() > 1 ? s.axis_names()[a] + "." + std::to_string(k + 1)
                                                   : s.axis_names()[a]);
    }
    offset += s.dimension();
  }
  return AxialAlgebra(std::move(sum), law, axes, std::move(names));
}

AxialQuotient axial_quotient(const AxialAlgebra& algebra, const Ideal& ideal) {
  Quotient q = quotient(algebra.table(), ideal);
  Matrix images;
  std::vector<std::string> names;
  std::vector<std::size_t> sources;
  for (std::size_t k = 0; k < algebra.axes().size(); ++k) {
    Vector image = q.project(algebra.axes()[k].vector);
    if (is_zero(image))
      continue;
    images.push_back(std::move(image));
    names.push_back(algebra.axis_names()[k]);
    sources.push_back(k);
  }
  if (images.empty())
    throw PreconditionError("every axis lies in the ideal; the quotient has no axes");
  AxialAlgebra reduced(q.algebra, algebra.law(), images, std::move(names));
  return AxialQuotient{std::move(reduced), std::move(q), std::move(sources)};
}

} // namespace axial
