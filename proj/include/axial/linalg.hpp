#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "axial/scalar.hpp"

namespace axial {

using Vector = std::vector<Scalar>;
/// Row-major; every row has the same length.
using Matrix = std::vector<Vector>;

Vector zero_vector(Field field, std::size_t n);
Vector unit_vector(Field field, std::size_t n, std::size_t index);
bool is_zero(const Vector& v);

Vector add(const Vector& u, const Vector& v);
Vector subtract(const Vector& u, const Vector& v);
Vector scale(const Scalar& c, const Vector& v);
/// u += c * v
void add_scaled(Vector& u, const Scalar& c, const Vector& v);
Scalar dot(const Vector& u, const Vector& v);

Matrix zero_matrix(Field field, std::size_t rows, std::size_t cols);
Matrix identity_matrix(Field field, std::size_t n);
Matrix transpose(const Matrix& m, std::size_t cols);
Vector apply(const Matrix& m, const Vector& v);
Matrix multiply(const Matrix& lhs, const Matrix& rhs, std::size_t rhs_cols);

/// A linear subspace of F^n held in canonical reduced row-echelon form.
/// Two subspaces are equal as sets iff their stored bases are identical.
class Subspace {
public:
  Subspace() = default;
  Subspace(Field field, std::size_t ambient) : field_(field), ambient_(ambient) {}

  static Subspace full(Field field, std::size_t ambient);

  Field field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dimension() const { return basis_.size(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_; }

  /// v minus its projection along the basis onto the pivot columns; zero iff v lies in the span.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the stored basis. Only meaningful when contains(v).
  std::vector<Scalar> coordinates(const Vector& v) const;

  bool operator==(const Subspace& rhs) const;
  /// Orders by dimension, then lexicographically by basis entries.
  std::strong_ordering operator<=>(const Subspace& rhs) const;

private:
  friend Subspace rref(Field field, std::size_t n, Matrix rows);

  Field field_;
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical basis of the row space. Throws DimensionMismatch on ragged rows.
Subspace rref(Field field, std::size_t n, Matrix rows);

/// {v in F^n : M v = 0}, where every row of M has length n.
Subspace nullspace(Field field, std::size_t n, const Matrix& m);

struct LinearSolution {
  Vector particular;
  Subspace homogeneous;
};

/// Solves M x = rhs with x in F^n. Empty when the system is inconsistent.
std::optional<LinearSolution> solve_linear(Field field, std::size_t n, const Matrix& m, const Vector& rhs);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
bool contains(const Subspace& u, const Vector& v);

/// {y : y . u = 0 for all u in U}; x lies in U iff it is orthogonal to this.
Subspace annihilator(const Subspace& u);

/// Span of M applied to the basis of U; M is n x n on column vectors.
Subspace image(const Matrix& m, const Subspace& u);

} // namespace axial
