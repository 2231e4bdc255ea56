#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "axial/algebra.hpp"

namespace axial {

/// A finite set of eigenvalues with a symmetric set-valued product. Values
/// are addressed by their position in `values()`.
class FusionLaw {
public:
  using ValueSet = std::set<std::size_t>;

  /// `table` maps unordered index pairs (i <= j) to index sets; every pair must be present.
  FusionLaw(std::vector<Scalar> values, std::map<std::pair<std::size_t, std::size_t>, ValueSet> table,
            std::string name = "explicit", std::vector<Scalar> parameters = {});

  const std::vector<Scalar>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  Field field() const { return values_.front().field(); }
  const ValueSet& operator()(std::size_t i, std::size_t j) const;
  std::optional<std::size_t> index_of(const Scalar& value) const;
  std::size_t one_index() const { return *index_of(field().one()); }

  /// "jordan", "monster" or "explicit".
  const std::string& name() const { return name_; }
  const std::vector<Scalar>& parameters() const { return parameters_; }

  /// The same law with values and parameters mapped into another field.
  /// Throws InvalidParameter when values collide or become undefined.
  FusionLaw reduced_to(Field field) const;

  bool operator==(const FusionLaw&) const = default;

private:
  std::vector<Scalar> values_;
  std::map<std::pair<std::size_t, std::size_t>, ValueSet> table_;
  std::string name_;
  std::vector<Scalar> parameters_;
};

/// {1, 0, eta}: 1*1 = {1}, 1*0 = {}, 1*eta = {eta}, 0*0 = {0}, 0*eta = {eta}, eta*eta = {1, 0}.
FusionLaw jordan_law(const Scalar& eta);
/// {1, 0, alpha, beta} with alpha*alpha = {1, 0}, alpha*beta = {beta}, beta*beta = {1, 0, alpha}.
FusionLaw monster_law(const Scalar& alpha, const Scalar& beta);
/// True iff 0 is a value and 0 belongs to 0*0.
bool admits_direct_sums(const FusionLaw& law);

/// A verified primitive axis with its eigenspace decomposition.
struct Axis {
  Vector vector;
  /// Indexed like the values of the fusion law.
  std::vector<Subspace> eigenspaces;
};

enum class AxisCondition {
  NonzeroIdempotent,
  Semisimplicity,
  Fusion,
  Primitivity,
};

std::string to_string(AxisCondition condition);

struct AxisViolation {
  AxisCondition condition;
  std::string detail;
};

struct AxisCheck {
  std::optional<Axis> axis;
  std::vector<AxisViolation> violations;

  bool ok() const { return axis.has_value(); }
};

/// A_lambda(a): nullspace of ad_a - lambda.
Subspace eigenspace(const AlgebraTable& algebra, const Vector& a, const Scalar& lambda);

/// Unique u = sum of u_lambda with u_lambda in A_lambda(a); indexed like the
/// law's values. Throws PreconditionError when the eigenspaces do not span.
std::vector<Vector> components(const AlgebraTable& algebra, const Axis& axis, const Vector& u);

/// Checks, in order: nonzero idempotent, A = sum of eigenspaces, fusion
/// containments on all eigenbasis pairs, dim A_1(a) = 1.
AxisCheck verify_axis(const AlgebraTable& algebra, const FusionLaw& law, const Vector& a);

class AxisVerificationError : public std::runtime_error {
public:
  AxisVerificationError(std::size_t index, std::string name, std::vector<AxisViolation> violations);
  std::size_t index;
  std::string name;
  std::vector<AxisViolation> violations;
};

/// A commutative algebra together with a generating set of verified
/// primitive axes for a fusion law.
class AxialAlgebra {
public:
  /// Verifies every axis and that the axes generate the algebra.
  /// Throws AxisVerificationError or PreconditionError (generation).
  AxialAlgebra(AlgebraTable table, FusionLaw law, const Matrix& axis_vectors, std::vector<std::string> axis_names = {});

  const AlgebraTable& table() const { return table_; }
  const FusionLaw& law() const { return law_; }
  const std::vector<Axis>& axes() const { return axes_; }
  const std::vector<std::string>& axis_names() const { return axis_names_; }
  Field field() const { return table_.field(); }
  std::size_t dimension() const { return table_.dimension(); }
  Matrix axis_vectors() const;

private:
  AlgebraTable table_;
  FusionLaw law_;
  std::vector<Axis> axes_;
  std::vector<std::string> axis_names_;
};

/// Direct sum of axial algebras for a common fusion law, with the union of
/// the embedded axes. Requires admits_direct_sums when there are two or more summands.
AxialAlgebra direct_sum(const std::vector<AxialAlgebra>& summands);

/// The quotient by an ideal with the nonzero images of the axes re-verified.
struct AxialQuotient {
  AxialAlgebra algebra;
  Quotient map;
  /// For each axis of the quotient, the index of the original axis.
  std::vector<std::size_t> source_axes;
};

/// Throws PreconditionError when every axis maps to zero.
AxialQuotient axial_quotient(const AxialAlgebra& algebra, const Ideal& ideal);

} // namespace axial
