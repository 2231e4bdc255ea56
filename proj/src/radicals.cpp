#include "axial/radicals.hpp"

#include <algorithm>

#include "axial/error.hpp"

namespace axial {

namespace {

Subspace non_unit_part(const AxialAlgebra& algebra, const Axis& axis) {
  const std::size_t one = algebra.law().one_index();
  Subspace s(algebra.field(), algebra.dimension());
  for (std::size_t k = 0; k < axis.eigenspaces.size(); ++k)
    if (k != one)
      s = subspace_sum(s, axis.eigenspaces[k]);
  return s;
}

} // namespace

Ideal axial_radical(const AxialAlgebra& algebra) {
  Subspace v = Subspace::full(algebra.field(), algebra.dimension());
  for (const auto& axis : algebra.axes())
    v = subspace_intersect(v, non_unit_part(algebra, axis));
  return largest_ideal_within(algebra.table(), v);
}

Ideal largest_ideal_avoiding_axis(const AxialAlgebra& algebra, std::size_t axis_index) {
  return largest_ideal_within(algebra.table(), non_unit_part(algebra, algebra.axes().at(axis_index)));
}

std::vector<Ideal> maximal_ideals(const AxialAlgebra& algebra) {
  std::vector<Ideal> candidates;
  for (std::size_t b = 0; b < algebra.axes().size(); ++b) {
    Ideal p = largest_ideal_avoiding_axis(algebra, b);
    if (std::find(candidates.begin(), candidates.end(), p) == candidates.end())
      candidates.push_back(std::move(p));
  }
  std::vector<Ideal> maximal;
  for (auto& p : candidates) {
    AxialQuotient q = axial_quotient(algebra, p);
    if (is_simple(q.algebra))
      maximal.push_back(std::move(p));
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

Ideal jacobson_radical(const AxialAlgebra& algebra) {
  return ideal_intersection(maximal_ideals(algebra), algebra.table());
}

bool is_simple(const AxialAlgebra& algebra) {
  if (algebra.dimension() == 0)
    return false;
  if (!axial_radical(algebra).is_zero())
    return false;
  return std::all_of(algebra.axes().begin(), algebra.axes().end(), [&](const Axis& a) {
    return ideal_closure(algebra.table(), {a.vector}).space().is_full();
  });
}

RadicalReport radical_report(const AxialAlgebra& algebra, const FrobeniusForm& form) {
  std::vector<Ideal> maximal = maximal_ideals(algebra);
  Ideal jacobson = ideal_intersection(maximal, algebra.table());
  RadicalReport r{axial_radical(algebra), std::move(jacobson), form_radical(algebra.table(), form),
                  std::move(maximal), false};
  r.chain_ok = r.jacobson_radical.space().contains(r.axial_radical.space()) &&
               r.form_radical.space().contains(r.jacobson_radical.space());
  return r;
}

} // namespace axial
