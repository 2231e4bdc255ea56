#include <doctest.h>

#include "axial/error.hpp"
#include "helpers.hpp"

using namespace axial;
using namespace axial::test;

namespace {

Scalar det3(const Matrix& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

} // namespace

TEST_CASE("solved forms of 3C(eta) match the oracle") {
  AxialAlgebra half = three_c("1/2");
  FormSpace space = solve_frobenius_space(half.table());
  CHECK(space.dimension() == 1);
  FrobeniusForm f = solved_form(half);
  CHECK(f(qv({"1", "0", "0"}), qv({"1", "0", "0"})) == q("1"));
  CHECK(f(qv({"1", "0", "0"}), qv({"0", "1", "0"})) == q("1/4"));
  CHECK(det3(f.gram()) == q("27/32"));
  CHECK(det3(solved_form(three_c("1/3")).gram()) == q("25/27"));

  Ideal minus_one = form_radical(three_c("-1").table(), solved_form(three_c("-1")));
  CHECK(minus_one.space() == rref(Field::rationals(), 3, {qv({"1", "1", "1"})}));
  Ideal two = form_radical(three_c("2").table(), solved_form(three_c("2")));
  CHECK(two.space() == rref(Field::rationals(), 3, {qv({"-1", "1", "0"}), qv({"-1", "0", "1"})}));
}

TEST_CASE("form validation rejects non-associative and asymmetric Gram matrices") {
  AxialAlgebra x = three_c("1/2");
  Matrix identity = identity_matrix(x.field(), 3);
  CHECK(form_violation(x.table(), identity).has_value());
  CHECK_THROWS_AS(FrobeniusForm(x.table(), identity), InvalidParameter);
  Matrix asym = solved_form(x).gram();
  asym[0][1] = q("1");
  CHECK(form_violation(x.table(), asym).has_value());
  CHECK_FALSE(form_violation(x.table(), solved_form(x).gram()).has_value());
  CHECK(FrobeniusForm::zero(x.table()).is_zero());
}

TEST_CASE("normalization reports unique, ambiguous and unsatisfiable systems") {
  AxialAlgebra x = three_c("1/2");
  Normalization unique = normalize_on_axes(x.table(), solve_frobenius_space(x.table()), x.axis_vectors());
  CHECK(unique.status == NormalizationStatus::Unique);

  // Normalizing on the first axis only leaves the second summand free.
  AxialAlgebra sum = direct_sum(std::vector<AxialAlgebra>{x, x});
  Normalization partial = normalize_on_axes(sum.table(), solve_frobenius_space(sum.table()), {sum.axis_vectors()[0]});
  CHECK(partial.status == NormalizationStatus::Ambiguous);
  CHECK(partial.ambiguity_dimension == 1);

  // Asking for (a, a) = 1 on the zero space is impossible.
  FormSpace empty(3, Subspace(x.field(), 6));
  Normalization none = normalize_on_axes(x.table(), empty, x.axis_vectors());
  CHECK(none.status == NormalizationStatus::Unsatisfiable);
  CHECK(none.unsatisfied_axes.size() == 3);
  CHECK(none.form.is_zero());
}

TEST_CASE("property: solved forms are associative, symmetric and make eigenspaces orthogonal") {
  for (Field f : {Field::rationals(), Field::prime(5)})
    for (const auto& m : corpus(f)) {
      FormSpace space = solve_frobenius_space(m.algebra.table());
      CHECK(space.dimension() == m.blocks);
      for (std::size_t k = 0; k < space.dimension(); ++k)
        CHECK_FALSE(form_violation(m.algebra.table(), space.basis_form(k)).has_value());
      FrobeniusForm form = solved_form(m.algebra);
      for (const auto& axis : m.algebra.axes())
        CHECK(check_eigenspace_orthogonality(form, axis).ok);
      Ideal perp = form_radical(m.algebra.table(), form);
      CHECK_NOTHROW(Ideal::verify(m.algebra.table(), perp.space()));
    }
}

TEST_CASE("GF(3) reduction of 3C(1/2) has a 2-dimensional form radical") {
  AxialAlgebra x = three_c("1/2", Field::prime(3));
  FrobeniusForm f = solved_form(x);
  CHECK(form_radical(x.table(), f).dimension() == 2);
}
