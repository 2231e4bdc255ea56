#pragma once

#include <random>

#include "axial/analysis.hpp"

namespace axial::test {

inline Scalar q(const char* text) { return Field::rationals().parse(text); }

inline Vector qv(std::initializer_list<const char*> entries) {
  Vector v;
  for (const char* e : entries)
    v.push_back(q(e));
  return v;
}

inline Vector gfv(std::uint32_t p, std::initializer_list<long long> entries) {
  Vector v;
  for (long long e : entries)
    v.push_back(Field::prime(p).from_int(e));
  return v;
}

/// Entries drawn from a small range so that rank deficiencies occur often.
inline Matrix random_matrix(Field field, std::size_t rows, std::size_t cols, std::mt19937& rng) {
  std::uniform_int_distribution<int> entry(-2, 2);
  Matrix m(rows, Vector(cols));
  for (auto& row : m)
    for (auto& x : row)
      x = field.from_int(entry(rng));
  return m;
}

inline AxialAlgebra three_c(const char* eta, Field field = Field::rationals()) {
  return named_algebra("3C", field.from_rational(mpq_class(eta)));
}

inline FrobeniusForm solved_form(const AxialAlgebra& x) {
  return normalize_on_axes(x.table(), solve_frobenius_space(x.table()), x.axis_vectors()).form;
}

} // namespace axial::test
