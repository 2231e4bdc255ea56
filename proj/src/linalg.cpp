#include "axial/linalg.hpp"

#include <algorithm>
#include <string>

#include "axial/error.hpp"

namespace axial {

namespace {

void check_length(const Vector& v, std::size_t n, const char* what) {
  if (v.size() != n)
    throw DimensionMismatch(std::string(what) + ": expected length " + std::to_string(n) + ", got " +
                            std::to_string(v.size()));
}

void check_ambient(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient())
    throw DimensionMismatch("subspaces of different ambient dimension " + std::to_string(u.ambient()) + " and " +
                            std::to_string(v.ambient()));
  if (u.field() != v.field())
    throw FieldMismatch("subspaces over " + u.field().name() + " and " + v.field().name());
}

} // namespace

Vector zero_vector(Field field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(Field field, std::size_t n, std::size_t index) {
  Vector v = zero_vector(field, n);
  v.at(index) = field.one();
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector add(const Vector& u, const Vector& v) {
  check_length(v, u.size(), "add");
  Vector out = u;
  for (std::size_t i = 0; i < u.size(); ++i)
    out[i] += v[i];
  return out;
}

Vector subtract(const Vector& u, const Vector& v) {
  check_length(v, u.size(), "subtract");
  Vector out = u;
  for (std::size_t i = 0; i < u.size(); ++i)
    out[i] -= v[i];
  return out;
}

Vector scale(const Scalar& c, const Vector& v) {
  Vector out = v;
  for (auto& x : out)
    x *= c;
  return out;
}

void add_scaled(Vector& u, const Scalar& c, const Vector& v) {
  check_length(v, u.size(), "add_scaled");
  if (c.is_zero())
    return;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!v[i].is_zero())
      u[i] += c * v[i];
}

Scalar dot(const Vector& u, const Vector& v) {
  check_length(v, u.size(), "dot");
  if (u.empty())
    return Scalar{};
  Scalar s = u[0].field().zero();
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!u[i].is_zero() && !v[i].is_zero())
      s += u[i] * v[i];
  return s;
}

Matrix zero_matrix(Field field, std::size_t rows, std::size_t cols) {
  return Matrix(rows, zero_vector(field, cols));
}

Matrix identity_matrix(Field field, std::size_t n) {
  Matrix m = zero_matrix(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = field.one();
  return m;
}

Matrix transpose(const Matrix& m, std::size_t cols) {
  if (m.empty())
    return Matrix(cols);
  Matrix t(cols, Vector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    check_length(m[i], cols, "transpose");
    for (std::size_t j = 0; j < cols; ++j)
      t[j][i] = m[i][j];
  }
  return t;
}

Vector apply(const Matrix& m, const Vector& v) {
  Vector out;
  out.reserve(m.size());
  for (const auto& row : m)
    out.push_back(dot(row, v));
  return out;
}

Matrix multiply(const Matrix& lhs, const Matrix& rhs, std::size_t rhs_cols) {
  Matrix rt = transpose(rhs, rhs_cols);
  Matrix out;
  out.reserve(lhs.size());
  for (const auto& row : lhs) {
    Vector r;
    r.reserve(rhs_cols);
    for (const auto& col : rt)
      r.push_back(dot(row, col));
    out.push_back(std::move(r));
  }
  return out;
}

Subspace Subspace::full(Field field, std::size_t ambient) {
  return rref(field, ambient, identity_matrix(field, ambient));
}

Vector Subspace::reduce(Vector v) const {
  check_length(v, ambient_, "reduce");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    Scalar c = v[pivots_[k]];
    if (!c.is_zero())
      add_scaled(v, -c, basis_[k]);
  }
  return v;
}

bool Subspace::contains(const Vector& v) const { return axial::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  check_ambient(*this, other);
  if (other.dimension() > dimension())
    return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& v) { return contains(v); });
}

std::vector<Scalar> Subspace::coordinates(const Vector& v) const {
  check_length(v, ambient_, "coordinates");
  std::vector<Scalar> c;
  c.reserve(pivots_.size());
  for (auto p : pivots_)
    c.push_back(v[p]);
  return c;
}

bool Subspace::operator==(const Subspace& rhs) const {
  return field_ == rhs.field_ && ambient_ == rhs.ambient_ && basis_ == rhs.basis_;
}

std::strong_ordering Subspace::operator<=>(const Subspace& rhs) const {
  if (auto c = ambient_ <=> rhs.ambient_; c != 0)
    return c;
  if (auto c = basis_.size() <=> rhs.basis_.size(); c != 0)
    return c;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    // Earlier pivots sort first so that e.g. span{e0} < span{e1}.
    if (auto c = rhs.pivots_[k] <=> pivots_[k]; c != 0)
      return c;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (auto c = basis_[k][j] <=> rhs.basis_[k][j]; c != 0)
        return c;
  }
  return std::strong_ordering::equal;
}

Subspace rref(Field field, std::size_t n, Matrix rows) {
  for (const auto& r : rows) {
    check_length(r, n, "rref");
    for (const auto& x : r)
      if (x.field() != field)
        throw FieldMismatch("rref over " + field.name() + " given an entry from " + x.field().name());
  }
  Subspace s(field, n);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero())
      ++pivot;
    if (pivot == rows.size())
      continue;
    std::swap(rows[rank], rows[pivot]);
    Scalar inv = rows[rank][col].inverse();
    for (auto& x : rows[rank])
      x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero())
        continue;
      Scalar c = rows[r][col];
      add_scaled(rows[r], -c, rows[rank]);
    }
    s.pivots_.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  s.basis_ = std::move(rows);
  return s;
}

Subspace nullspace(Field field, std::size_t n, const Matrix& m) {
  Subspace r = rref(field, n, m);
  const auto& pivots = r.pivots();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots)
    is_pivot[p] = true;
  Matrix kernel;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free])
      continue;
    Vector v = unit_vector(field, n, free);
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -r.basis()[k][free];
    kernel.push_back(std::move(v));
  }
  return rref(field, n, std::move(kernel));
}

std::optional<LinearSolution> solve_linear(Field field, std::size_t n, const Matrix& m, const Vector& rhs) {
  if (rhs.size() != m.size())
    throw DimensionMismatch("solve_linear: " + std::to_string(m.size()) + " equations but right-hand side of length " +
                            std::to_string(rhs.size()));
  Matrix augmented;
  augmented.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    check_length(m[i], n, "solve_linear");
    Vector row = m[i];
    row.push_back(rhs[i]);
    augmented.push_back(std::move(row));
  }
  Subspace r = rref(field, n + 1, std::move(augmented));
  Vector particular = zero_vector(field, n);
  for (std::size_t k = 0; k < r.pivots().size(); ++k) {
    if (r.pivots()[k] == n)
      return std::nullopt;
    particular[r.pivots()[k]] = r.basis()[k][n];
  }
  return LinearSolution{std::move(particular), nullspace(field, n, m)};
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  check_ambient(u, v);
  Matrix rows = u.basis();
  rows.insert(rows.end(), v.basis().begin(), v.basis().end());
  return rref(u.field(), u.ambient(), std::move(rows));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  check_ambient(u, v);
  // Zassenhaus: rows (x | x) for x in U and (y | 0) for y in V; the echelon
  // rows with vanishing left half carry a basis of U ∩ V on the right.
  const std::size_t n = u.ambient();
  const Field f = u.field();
  Matrix rows;
  for (const auto& x : u.basis()) {
    Vector r = x;
    r.insert(r.end(), x.begin(), x.end());
    rows.push_back(std::move(r));
  }
  for (const auto& y : v.basis()) {
    Vector r = y;
    r.resize(2 * n, f.zero());
    rows.push_back(std::move(r));
  }
  Subspace z = rref(f, 2 * n, std::move(rows));
  Matrix meet;
  for (std::size_t k = 0; k < z.dimension(); ++k)
    if (z.pivots()[k] >= n)
      meet.emplace_back(z.basis()[k].begin() + static_cast<std::ptrdiff_t>(n), z.basis()[k].end());
  return rref(f, n, std::move(meet));
}

bool contains(const Subspace& u, const Vector& v) { return u.contains(v); }

Subspace annihilator(const Subspace& u) { return nullspace(u.field(), u.ambient(), u.basis()); }

Subspace image(const Matrix& m, const Subspace& u) {
  Matrix rows;
  rows.reserve(u.dimension());
  for (const auto& b : u.basis())
    rows.push_back(apply(m, b));
  return rref(u.field(), m.size(), std::move(rows));
}

} // namespace axial
