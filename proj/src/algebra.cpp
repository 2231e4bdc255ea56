#include "axial/algebra.hpp"

#include <algorithm>
#include <set>

#include "axial/error.hpp"

namespace axial {

AlgebraTable::AlgebraTable(Field field, std::vector<std::string> basis_names)
    : field_(field), names_(std::move(basis_names)) {
  const std::size_t n = names_.size();
  constants_.assign(n * (n + 1) / 2, zero_vector(field_, n));
}

std::size_t AlgebraTable::slot(std::size_t i, std::size_t j) const {
  const std::size_t n = dimension();
  if (i >= n || j >= n)
    throw DimensionMismatch("basis index out of range: (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") in dimension " + std::to_string(n));
  if (i > j)
    std::swap(i, j);
  return i * n - i * (i - 1) / 2 + (j - i);
}

void AlgebraTable::check_vector(const Vector& v, const char* what) const {
  if (v.size() != dimension())
    throw DimensionMismatch(std::string(what) + ": vector of length " + std::to_string(v.size()) +
                            " in algebra of dimension " + std::to_string(dimension()));
  for (const auto& x : v)
    if (x.field() != field_)
      throw FieldMismatch(std::string(what) + ": entry from " + x.field().name() + " in algebra over " + field_.name());
}

const Vector& AlgebraTable::product(std::size_t i, std::size_t j) const { return constants_[slot(i, j)]; }

void AlgebraTable::set_product(std::size_t i, std::size_t j, Vector value) {
  check_vector(value, "set_product");
  constants_[slot(i, j)] = std::move(value);
}

Vector AlgebraTable::multiply(const Vector& u, const Vector& v) const {
  check_vector(u, "multiply");
  check_vector(v, "multiply");
  const std::size_t n = dimension();
  Vector out = zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero())
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero())
        continue;
      add_scaled(out, u[i] * v[j], product(i, j));
    }
  }
  return out;
}

Matrix AlgebraTable::adjoint_matrix(const Vector& u) const {
  check_vector(u, "adjoint_matrix");
  const std::size_t n = dimension();
  Matrix cols;
  cols.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector col = zero();
    for (std::size_t i = 0; i < n; ++i)
      if (!u[i].is_zero())
        add_scaled(col, u[i], product(i, j));
    cols.push_back(std::move(col));
  }
  return transpose(cols, n);
}

std::optional<std::pair<std::size_t, std::size_t>> Ideal::find_violation(const AlgebraTable& algebra,
                                                                        const Subspace& space) {
  if (space.ambient() != algebra.dimension())
    throw DimensionMismatch("ideal candidate of ambient dimension " + std::to_string(space.ambient()) +
                            " in algebra of dimension " + std::to_string(algebra.dimension()));
  for (std::size_t k = 0; k < space.dimension(); ++k)
    for (std::size_t i = 0; i < algebra.dimension(); ++i)
      if (!space.contains(algebra.multiply(space.basis()[k], algebra.basis_vector(i))))
        return std::pair{k, i};
  return std::nullopt;
}

Ideal Ideal::verify(const AlgebraTable& algebra, const Subspace& space) {
  if (auto bad = find_violation(algebra, space)) {
    std::string row;
    for (const auto& x : space.basis()[bad->first])
      row += (row.empty() ? "" : ",") + x.to_string();
    throw ClosureViolation("subspace is not an ideal: (" + row + ") * " + algebra.basis_names()[bad->second] +
                           " leaves the subspace");
  }
  return Ideal(space);
}

Subspace subalgebra_closure(const AlgebraTable& algebra, const Matrix& generators) {
  Subspace w = rref(algebra.field(), algebra.dimension(), generators);
  while (true) {
    Matrix rows = w.basis();
    const auto& b = w.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i; j < b.size(); ++j)
        rows.push_back(algebra.multiply(b[i], b[j]));
    Subspace next = rref(algebra.field(), algebra.dimension(), std::move(rows));
    if (next == w)
      return w;
    w = std::move(next);
  }
}

Ideal ideal_closure(const AlgebraTable& algebra, const Matrix& generators) {
  Subspace w = rref(algebra.field(), algebra.dimension(), generators);
  while (true) {
    Matrix rows = w.basis();
    for (const auto& v : w.basis()) {
      Matrix ad = algebra.adjoint_matrix(v);
      for (auto& col : transpose(ad, algebra.dimension()))
        rows.push_back(std::move(col));
    }
    Subspace next = rref(algebra.field(), algebra.dimension(), std::move(rows));
    if (next == w)
      return Ideal(std::move(w));
    w = std::move(next);
  }
}

Ideal largest_ideal_within(const AlgebraTable& algebra, const Subspace& v) {
  const std::size_t n = algebra.dimension();
  const Field f = algebra.field();
  if (v.ambient() != n)
    throw DimensionMismatch("largest_ideal_within: subspace of ambient dimension " + std::to_string(v.ambient()));
  std::vector<Matrix> adjoints;
  for (std::size_t i = 0; i < n; ++i)
    adjoints.push_back(algebra.adjoint_matrix(algebra.basis_vector(i)));
  Subspace w = v;
  while (!w.is_zero()) {
    // w = t B lies in the next iterate iff Q ad_i B^T t = 0 for all i, where
    // the rows of Q cut out W.
    Subspace cut = annihilator(w);
    const std::size_t k = w.dimension();
    Matrix bt = transpose(w.basis(), n);
    Matrix system;
    for (const auto& ad : adjoints) {
      Matrix ad_b = multiply(ad, bt, k);
      for (const auto& q : cut.basis()) {
        Vector row = zero_vector(f, k);
        for (std::size_t r = 0; r < n; ++r)
          if (!q[r].is_zero())
            add_scaled(row, q[r], ad_b[r]);
        system.push_back(std::move(row));
      }
    }
    Subspace t = nullspace(f, k, system);
    Matrix rows;
    for (const auto& coeffs : t.basis()) {
      Vector x = zero_vector(f, n);
      for (std::size_t j = 0; j < k; ++j)
        add_scaled(x, coeffs[j], w.basis()[j]);
      rows.push_back(std::move(x));
    }
    Subspace next = rref(f, n, std::move(rows));
    if (next == w)
      break;
    w = std::move(next);
  }
  return Ideal(std::move(w));
}

Ideal ideal_intersection(const std::vector<Ideal>& ideals, const AlgebraTable& algebra) {
  Subspace meet = Subspace::full(algebra.field(), algebra.dimension());
  for (const auto& i : ideals)
    meet = subspace_intersect(meet, i.space());
  return Ideal(std::move(meet));
}

Quotient quotient(const AlgebraTable& algebra, const Ideal& ideal) {
  const Subspace& s = ideal.space();
  // Re-check: an Ideal built for a different table would otherwise slip through.
  Ideal::verify(algebra, s);
  const std::size_t n = algebra.dimension();
  std::vector<bool> pivot(n, false);
  for (auto p : s.pivots())
    pivot[p] = true;
  Quotient q;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) {
      q.kept.push_back(i);
      names.push_back(algebra.basis_names()[i]);
    }
  const std::size_t m = q.kept.size();
  // Column j of the projection is the reduced image of b_j read off at the kept coordinates.
  Matrix cols;
  for (std::size_t j = 0; j < n; ++j) {
    Vector r = s.reduce(algebra.basis_vector(j));
    Vector c;
    for (auto k : q.kept)
      c.push_back(r[k]);
    cols.push_back(std::move(c));
  }
  q.projection = transpose(cols, m);
  q.algebra = AlgebraTable(algebra.field(), std::move(names));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b)
      q.algebra.set_product(a, b, q.project(algebra.product(q.kept[a], q.kept[b])));
  return q;
}

AlgebraTable direct_sum(const std::vector<AlgebraTable>& summands) {
  if (summands.empty())
    throw InvalidParameter("direct_sum of an empty list");
  const Field f = summands.front().field();
  std::vector<std::string> names;
  std::multiset<std::string> seen;
  for (const auto& s : summands) {
    if (s.field() != f)
      throw FieldMismatch("direct_sum of algebras over " + f.name() + " and " + s.field().name());
    seen.insert(s.basis_names().begin(), s.basis_names().end());
  }
  bool clash = std::any_of(seen.begin(), seen.end(), [&](const std::string& x) { return seen.count(x) > 1; });
  for (std::size_t k = 0; k < summands.size(); ++k)
    for (const auto& name : summands[k].basis_names())
      names.push_back(clash && summands.size() > 1 ? name + "." + std::to_string(k + 1) : name);
  AlgebraTable sum(f, std::move(names));
  const std::size_t n = sum.dimension();
  std::size_t offset = 0;
  for (const auto& s : summands) {
    for (std::size_t i = 0; i < s.dimension(); ++i)
      for (std::size_t j = i; j < s.dimension(); ++j) {
        Vector v = zero_vector(f, n);
        const Vector& p = s.product(i, j);
        for (std::size_t k = 0; k < p.size(); ++k)
          v[offset + k] = p[k];
        sum.set_product(offset + i, offset + j, std::move(v));
      }
    offset += s.dimension();
  }
  return sum;
}

} // namespace axial
