#pragma once

#include <string>
#include <vector>

#include "axial/linalg.hpp"

namespace axial {

/// Commutative algebra given by structure constants on a basis. Products
/// are stored once per unordered pair {i, j}, so commutativity holds by
/// construction. Associativity is never assumed.
class AlgebraTable {
public:
  AlgebraTable() = default;
  /// The zero product on the named basis.
  AlgebraTable(Field field, std::vector<std::string> basis_names);

  Field field() const { return field_; }
  std::size_t dimension() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }

  /// b_i * b_j in coordinates.
  const Vector& product(std::size_t i, std::size_t j) const;
  void set_product(std::size_t i, std::size_t j, Vector value);

  Vector basis_vector(std::size_t i) const { return unit_vector(field_, dimension(), i); }
  Vector zero() const { return zero_vector(field_, dimension()); }

  Vector multiply(const Vector& u, const Vector& v) const;
  /// Column j is u * b_j.
  Matrix adjoint_matrix(const Vector& u) const;

  bool operator==(const AlgebraTable&) const = default;

private:
  std::size_t slot(std::size_t i, std::size_t j) const;
  void check_vector(const Vector& v, const char* what) const;

  Field field_;
  std::vector<std::string> names_;
  std::vector<Vector> constants_;
};

/// A subspace closed under multiplication by every element of the algebra.
/// Instances are only produced by closure operations or by `verify`.
class Ideal {
public:
  const Subspace& space() const { return space_; }
  std::size_t dimension() const { return space_.dimension(); }
  bool is_zero() const { return space_.is_zero(); }

  /// Throws ClosureViolation naming the first basis pair (v, b_i) with v b_i outside the space.
  static Ideal verify(const AlgebraTable& algebra, const Subspace& space);
  /// Returns the first violating (basis row, algebra basis index), or nothing when closed.
  static std::optional<std::pair<std::size_t, std::size_t>> find_violation(const AlgebraTable& algebra,
                                                                          const Subspace& space);

  bool operator==(const Ideal& rhs) const { return space_ == rhs.space_; }
  auto operator<=>(const Ideal& rhs) const { return space_ <=> rhs.space_; }

private:
  explicit Ideal(Subspace space) : space_(std::move(space)) {}
  friend Ideal ideal_closure(const AlgebraTable&, const Matrix&);
  friend Ideal largest_ideal_within(const AlgebraTable&, const Subspace&);
  friend Ideal ideal_intersection(const std::vector<Ideal>&, const AlgebraTable&);

  Subspace space_;
};

Subspace subalgebra_closure(const AlgebraTable& algebra, const Matrix& generators);
Ideal ideal_closure(const AlgebraTable& algebra, const Matrix& generators);
/// The unique largest ideal contained in V.
Ideal largest_ideal_within(const AlgebraTable& algebra, const Subspace& v);
/// Intersection of ideals; the whole algebra when the list is empty.
Ideal ideal_intersection(const std::vector<Ideal>& ideals, const AlgebraTable& algebra);

/// A/I on the basis of non-pivot coordinates of I, with the projection map.
struct Quotient {
  AlgebraTable algebra;
  /// Indices (in A) of the basis vectors kept as the quotient basis.
  std::vector<std::size_t> kept;
  /// dim(A/I) x dim(A); projection of column vectors.
  Matrix projection;

  Vector project(const Vector& u) const { return apply(projection, u); }
};

Quotient quotient(const AlgebraTable& algebra, const Ideal& ideal);

/// Block-diagonal structure constants; products across summands vanish.
/// Clashing basis names get a ".k" summand suffix.
AlgebraTable direct_sum(const std::vector<AlgebraTable>& summands);

} // namespace axial
