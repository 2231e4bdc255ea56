#include "axial/frobenius.hpp"

#include "axial/error.hpp"

namespace axial {

namespace {

std::size_t upper_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j)
    std::swap(i, j);
  return i * n - i * (i - 1) / 2 + (j - i);
}

Matrix from_coordinates(std::size_t n, const Vector& coords) {
  Field f = coords.empty() ? Field::rationals() : coords.front().field();
  Matrix g = zero_matrix(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      g[i][j] = g[j][i] = coords[upper_index(n, i, j)];
  return g;
}

} // namespace

std::optional<std::string> form_violation(const AlgebraTable& algebra, const Matrix& gram) {
  const std::size_t n = algebra.dimension();
  if (gram.size() != n)
    return "Gram matrix has " + std::to_string(gram.size()) + " rows for an algebra of dimension " + std::to_string(n);
  for (const auto& row : gram) {
    if (row.size() != n)
      return std::string("Gram matrix is not square");
    for (const auto& x : row)
      if (x.field() != algebra.field())
        return "Gram entry from " + x.field().name() + " for algebra over " + algebra.field().name();
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram[i][j] != gram[j][i])
        return "not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
  FrobeniusForm form = FrobeniusForm::unchecked(gram);
  const auto& names = algebra.basis_names();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar lhs = form(algebra.product(i, j), algebra.basis_vector(k));
        Scalar rhs = form(algebra.basis_vector(i), algebra.product(j, k));
        if (lhs != rhs)
          return "not associative: (" + names[i] + "*" + names[j] + ", " + names[k] + ") = " + lhs.to_string() +
                 " but (" + names[i] + ", " + names[j] + "*" + names[k] + ") = " + rhs.to_string();
      }
  return std::nullopt;
}

FrobeniusForm::FrobeniusForm(const AlgebraTable& algebra, Matrix gram) : gram_(std::move(gram)) {
  if (auto bad = form_violation(algebra, gram_))
    throw InvalidParameter("invalid Frobenius form: " + *bad);
}

FrobeniusForm FrobeniusForm::unchecked(Matrix gram) {
  FrobeniusForm f;
  f.gram_ = std::move(gram);
  return f;
}

FrobeniusForm FrobeniusForm::zero(const AlgebraTable& algebra) {
  return unchecked(zero_matrix(algebra.field(), algebra.dimension(), algebra.dimension()));
}

Scalar FrobeniusForm::operator()(const Vector& u, const Vector& v) const { return dot(u, apply(gram_, v)); }

bool FrobeniusForm::is_zero() const {
  for (const auto& row : gram_)
    if (!axial::is_zero(row))
      return false;
  return true;
}

Matrix FormSpace::basis_form(std::size_t k) const { return from_coordinates(n_, coords_.basis().at(k)); }

Matrix FormSpace::combine(const std::vector<Scalar>& coefficients) const {
  if (coefficients.size() != dimension())
    throw DimensionMismatch("form combination needs " + std::to_string(dimension()) + " coefficients");
  Vector c = zero_vector(coords_.field(), coords_.ambient());
  for (std::size_t k = 0; k < coefficients.size(); ++k)
    add_scaled(c, coefficients[k], coords_.basis()[k]);
  return from_coordinates(n_, c);
}

FormSpace FormSpace::spanned_by(Field field, std::size_t n, const std::vector<Matrix>& forms) {
  Matrix rows;
  for (const auto& g : forms) {
    if (g.size() != n)
      throw DimensionMismatch("form of the wrong size");
    Vector c(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        if (g[i][j] != g.at(j).at(i))
          throw InvalidParameter("form is not symmetric");
        c[upper_index(n, i, j)] = g[i][j];
      }
    rows.push_back(std::move(c));
  }
  return FormSpace(n, rref(field, n * (n + 1) / 2, std::move(rows)));
}

FormSpace solve_frobenius_space(const AlgebraTable& algebra) {
  const std::size_t n = algebra.dimension();
  const std::size_t unknowns = n * (n + 1) / 2;
  const Field f = algebra.field();
  // (b_i b_j, b_k) - (b_i, b_j b_k) = sum_l c_ij^l g_lk - sum_l c_jk^l g_il = 0
  Matrix system;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector row = zero_vector(f, unknowns);
        const Vector& ij = algebra.product(i, j);
        const Vector& jk = algebra.product(j, k);
        for (std::size_t l = 0; l < n; ++l) {
          if (!ij[l].is_zero())
            row[upper_index(n, l, k)] += ij[l];
          if (!jk[l].is_zero())
            row[upper_index(n, i, l)] -= jk[l];
        }
        if (!is_zero(row))
          system.push_back(std::move(row));
      }
  return FormSpace(n, nullspace(f, unknowns, system));
}

std::string to_string(NormalizationStatus status) {
  switch (status) {
  case NormalizationStatus::Unique:
    return "unique";
  case NormalizationStatus::Ambiguous:
    return "ambiguous";
  case NormalizationStatus::Unsatisfiable:
    return "unsatisfiable";
  }
  return "unknown";
}

Normalization normalize_on_axes(const AlgebraTable& algebra, const FormSpace& space, const Matrix& axes) {
  const Field f = algebra.field();
  const std::size_t d = space.dimension();
  // Row k: (a_k, a_k) evaluated on each basis form.
  Matrix rows;
  for (const auto& a : axes) {
    Vector row;
    for (std::size_t s = 0; s < d; ++s)
      row.push_back(FrobeniusForm::unchecked(space.basis_form(s))(a, a));
    rows.push_back(std::move(row));
  }
  auto solve_subset = [&](const std::vector<std::size_t>& keep) {
    Matrix m;
    for (auto k : keep)
      m.push_back(rows[k]);
    return solve_linear(f, d, m, Vector(keep.size(), f.one()));
  };

  std::vector<std::size_t> all;
  for (std::size_t k = 0; k < axes.size(); ++k)
    all.push_back(k);
  if (auto sol = solve_subset(all)) {
    std::size_t amb = sol->homogeneous.dimension();
    Normalization out{amb == 0 ? NormalizationStatus::Unique : NormalizationStatus::Ambiguous,
                      FrobeniusForm::unchecked(space.combine(sol->particular)), amb, {}, {}};
    out.message = amb == 0 ? "unique form with (a,a) = 1 on every axis"
                           : "forms with (a,a) = 1 on every axis form a family of dimension " + std::to_string(amb) +
                                 "; one representative chosen";
    return out;
  }

  std::vector<std::size_t> kept, dropped;
  for (std::size_t k = 0; k < axes.size(); ++k) {
    kept.push_back(k);
    if (!solve_subset(kept)) {
      kept.pop_back();
      dropped.push_back(k);
    }
  }
  auto sol = solve_subset(kept);
  Normalization out{NormalizationStatus::Unsatisfiable, FrobeniusForm::unchecked(space.combine(sol->particular)),
                    sol->homogeneous.dimension(), dropped, {}};
  out.message = "constraint (a,a) = 1 unsatisfiable on " + std::to_string(dropped.size()) + " axis(es)";
  return out;
}

Ideal form_radical(const AlgebraTable& algebra, const FrobeniusForm& form) {
  Subspace radical = nullspace(algebra.field(), algebra.dimension(), form.gram());
  try {
    return Ideal::verify(algebra, radical);
  } catch (const ClosureViolation& e) {
    throw InvalidParameter(std::string("form radical is not an ideal; the form is not associative: ") + e.what());
  }
}

OrthogonalityCheck check_eigenspace_orthogonality(const FrobeniusForm& form, const Axis& axis) {
  OrthogonalityCheck out;
  for (std::size_t i = 0; i < axis.eigenspaces.size(); ++i)
    for (std::size_t j = i + 1; j < axis.eigenspaces.size(); ++j)
      for (const auto& v : axis.eigenspaces[i].basis())
        for (const auto& w : axis.eigenspaces[j].basis())
          if (!form(v, w).is_zero()) {
            out.ok = false;
            out.witness = {{i, v}, {j, w}};
            return out;
          }
  return out;
}

Scalar axis_singularity(const FrobeniusForm& form, const Axis& axis) { return form(axis.vector, axis.vector); }

} // namespace axial
