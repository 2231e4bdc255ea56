#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axial/frobenius.hpp"

namespace axial {

/// Permutation of {0, ..., m-1} by images.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);
  /// 1-based cycles, e.g. {{1, 2}, {3, 4}} on `degree` points.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::size_t operator()(std::size_t point) const { return images_.at(point); }
  const std::vector<std::size_t>& images() const { return images_; }

  /// (this * rhs)(x) = this(rhs(x)).
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  std::size_t order() const;
  /// Cycle notation with 1-based points, "()" for the identity.
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<std::size_t> images_;
};

/// A conjugacy-closed class D of involutions in which every product de has
/// order 1, 2 or 3.
class TranspositionGroup {
public:
  static constexpr std::size_t kMaxClassSize = 64;

  /// D is the closure of `involutions` under conjugation by `generators`.
  /// Throws InvalidParameter when an element is not an involution, when
  /// some product has order above 3, or when D outgrows kMaxClassSize.
  TranspositionGroup(std::vector<Permutation> generators, std::vector<Permutation> involutions);

  const std::vector<Permutation>& generators() const { return generators_; }
  /// Sorted.
  const std::vector<Permutation>& transpositions() const { return class_; }

  static TranspositionGroup symmetric(std::size_t m);

private:
  std::vector<Permutation> generators_;
  std::vector<Permutation> class_;
};

/// Basis D; d d = d; d e = 0 when de has order 2; d e = eta/2 (d + e - ded)
/// when de has order 3. All basis vectors are axes for the Jordan law J(eta).
AxialAlgebra matsuo_algebra(const TranspositionGroup& group, const Scalar& eta);

/// "1A" (a a = a), "2B" (a b = 0) and "3C" (Matsuo algebra of S3 on a, b, c),
/// all for the Jordan law J(eta).
AxialAlgebra named_algebra(const std::string& name, const Scalar& eta);

struct AlgebraWithForm {
  AxialAlgebra algebra;
  FrobeniusForm form;
};

/// 3C(1/2) + 3C(1/2) with the form that is the normalized one on the first
/// summand and zero on the second.
AlgebraWithForm inflated_form_example(Field field = Field::rationals());

struct CorpusMember {
  std::string name;
  AxialAlgebra algebra;
  /// A prescribed form, when the member comes with one.
  std::optional<FrobeniusForm> form;
  /// Matsuo algebras and their direct sums (Jordan-type equality applies).
  bool matsuo = false;
  /// Number of indecomposable summands; 2B counts as 1A + 1A.
  std::size_t blocks = 1;
};

/// The desk-scale corpus over a field: 1A, 2B, 3C(eta) for eta in
/// {1/2, 1/3, -1, 2}, Matsuo(S4, 1/2), all pairwise direct sums with a common
/// law, and the inflated-form example. Over GF(p), members whose eta is
/// undefined or degenerate are skipped.
std::vector<CorpusMember> corpus(Field field = Field::rationals());

} // namespace axial
