#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axial/fusion.hpp"

namespace axial {

/// A bilinear form given by its Gram matrix on the algebra basis.
class FrobeniusForm {
public:
  /// Validates symmetry and (b_i b_j, b_k) = (b_i, b_j b_k) on all basis
  /// triples; throws InvalidParameter describing the first failure.
  FrobeniusForm(const AlgebraTable& algebra, Matrix gram);

  /// Skips validation. For negative controls and for forms already known valid.
  static FrobeniusForm unchecked(Matrix gram);
  static FrobeniusForm zero(const AlgebraTable& algebra);

  const Matrix& gram() const { return gram_; }
  std::size_t dimension() const { return gram_.size(); }
  Scalar operator()(const Vector& u, const Vector& v) const;
  bool is_zero() const;

  bool operator==(const FrobeniusForm&) const = default;

private:
  FrobeniusForm() = default;
  Matrix gram_;
};

/// Empty when the Gram matrix is a valid Frobenius form for the algebra,
/// otherwise a description of the first failure.
std::optional<std::string> form_violation(const AlgebraTable& algebra, const Matrix& gram);

/// The linear space of all Frobenius forms of an algebra, in coordinates
/// g_ij (i <= j) ordered row by row over the upper triangle.
class FormSpace {
public:
  FormSpace(std::size_t dimension, Subspace coordinates) : n_(dimension), coords_(std::move(coordinates)) {}

  std::size_t algebra_dimension() const { return n_; }
  std::size_t dimension() const { return coords_.dimension(); }
  const Subspace& coordinates() const { return coords_; }
  /// The k-th basis form.
  Matrix basis_form(std::size_t k) const;
  Matrix combine(const std::vector<Scalar>& coefficients) const;

  /// Spans the forms supplied; each must be symmetric of the right size.
  static FormSpace spanned_by(Field field, std::size_t dimension, const std::vector<Matrix>& forms);

private:
  std::size_t n_;
  Subspace coords_;
};

FormSpace solve_frobenius_space(const AlgebraTable& algebra);

enum class NormalizationStatus { Unique, Ambiguous, Unsatisfiable };

std::string to_string(NormalizationStatus status);

struct Normalization {
  NormalizationStatus status;
  /// The chosen representative. For an unsatisfiable system this satisfies
  /// (a,a) = 1 on a maximal prefix-greedy subset of the axes.
  FrobeniusForm form;
  /// Dimension of the family of forms meeting the same constraints.
  std::size_t ambiguity_dimension = 0;
  /// Indices of axes whose constraint (a,a) = 1 could not be met.
  std::vector<std::size_t> unsatisfied_axes;
  std::string message;
};

/// Picks a form from the space with (a,a) = 1 on every axis when possible.
Normalization normalize_on_axes(const AlgebraTable& algebra, const FormSpace& space, const Matrix& axes);

/// A-perp, the radical of the form. Throws InvalidParameter when the result
/// is not an ideal (the form was not associative).
Ideal form_radical(const AlgebraTable& algebra, const FrobeniusForm& form);

struct OrthogonalityCheck {
  bool ok = true;
  /// (value index, basis vector), (value index, basis vector) with nonzero pairing.
  std::optional<std::pair<std::pair<std::size_t, Vector>, std::pair<std::size_t, Vector>>> witness;
};

/// Eigenspaces of distinct eigenvalues of the axis are orthogonal for the form.
OrthogonalityCheck check_eigenspace_orthogonality(const FrobeniusForm& form, const Axis& axis);

/// (a,a); zero means the axis is singular for the form.
Scalar axis_singularity(const FrobeniusForm& form, const Axis& axis);

} // namespace axial
