#include <doctest.h>

#include "axial/error.hpp"
#include "axial/oracle.hpp"
#include "helpers.hpp"

using namespace axial;
using namespace axial::test;

TEST_CASE("radicals of the 3C family") {
  for (const char* eta : {"1/2", "1/3"}) {
    AxialAlgebra x = three_c(eta);
    CHECK(is_simple(x));
    // In a simple algebra the zero ideal is the only maximal ideal.
    auto maximal = maximal_ideals(x);
    REQUIRE(maximal.size() == 1);
    CHECK(maximal[0].is_zero());
    CHECK(jacobson_radical(x).is_zero());
  }
  AxialAlgebra x = three_c("-1");
  auto maximal = maximal_ideals(x);
  REQUIRE(maximal.size() == 1);
  CHECK(maximal[0] == axial_radical(x));
  CHECK_FALSE(is_simple(x));
  for (std::size_t b = 0; b < 3; ++b)
    CHECK(largest_ideal_avoiding_axis(x, b) == axial_radical(x));
}

TEST_CASE("2B has two maximal ideals and zero radicals") {
  AxialAlgebra x = named_algebra("2B", q("1/2"));
  auto maximal = maximal_ideals(x);
  REQUIRE(maximal.size() == 2);
  CHECK(jacobson_radical(x).is_zero());
  CHECK_FALSE(is_simple(x));
  RadicalReport r = radical_report(x, solved_form(x));
  CHECK(r.chain_ok);
  CHECK(r.maximal_ideals == maximal);
}

TEST_CASE("the inflated form separates J(A) from the form radical") {
  AlgebraWithForm x = inflated_form_example();
  RadicalReport r = radical_report(x.algebra, x.form);
  CHECK(r.chain_ok);
  CHECK(r.jacobson_radical.is_zero());
  CHECK(r.form_radical.dimension() == 3);
}

TEST_CASE("property: R, J and the form radical are nested for every corpus form") {
  for (Field f : {Field::rationals(), Field::prime(3), Field::prime(5)})
    for (const auto& m : corpus(f)) {
      CHECK(radical_report(m.algebra, solved_form(m.algebra)).chain_ok);
      CHECK(radical_report(m.algebra, FrobeniusForm::zero(m.algebra.table())).chain_ok);
      if (m.form)
        CHECK(radical_report(m.algebra, *m.form).chain_ok);
    }
}

TEST_CASE("oracle: 2B over GF(3) has a four-ideal lattice") {
  AxialAlgebra x = named_algebra("2B", Field::prime(3).parse("1/2"));
  IdealLattice lattice = brute_force_ideal_lattice(x.table(), x.axis_vectors());
  CHECK(lattice.ideals.size() == 4);
  CHECK(lattice.maximal.size() == 2);
  REQUIRE(lattice.largest_axis_free.has_value());
  CHECK(lattice.largest_axis_free->is_zero());
  CHECK(oracle_compare(x).agree);
}

TEST_CASE("oracle: Matsuo(S3, 2) over GF(5) agrees with the structural results") {
  Field f = Field::prime(5);
  AxialAlgebra x = matsuo_algebra(TranspositionGroup::symmetric(3), f.from_int(2));
  OracleComparison cmp = oracle_compare(x);
  CHECK(cmp.agree);
  CHECK(cmp.exit_code == kExitOk);
}

TEST_CASE("oracle: both enumeration methods give the same lattice") {
  for (std::uint32_t p : {3u, 5u})
    for (const auto& m : corpus(Field::prime(p))) {
      if (oracle_work_estimate(p, m.algebra.dimension(), OracleMethod::SubspaceEnumeration) > 20'000)
        continue;
      IdealLattice a = brute_force_ideal_lattice(m.algebra.table(), m.algebra.axis_vectors(),
                                                 {1'000'000, OracleMethod::PrincipalIdeals});
      IdealLattice b = brute_force_ideal_lattice(m.algebra.table(), m.algebra.axis_vectors(),
                                                 {1'000'000, OracleMethod::SubspaceEnumeration});
      CHECK(a.ideals == b.ideals);
      CHECK(a.maximal == b.maximal);
      CHECK(a.largest_axis_free == b.largest_axis_free);
    }
}

TEST_CASE("oracle refuses work above the bound and algebras over Q") {
  AxialAlgebra big = matsuo_algebra(TranspositionGroup::symmetric(4), Field::prime(5).parse("1/2"));
  CHECK(oracle_work_estimate(5, 6, OracleMethod::PrincipalIdeals) == 15625u);
  CHECK_THROWS_AS(brute_force_ideal_lattice(big.table(), {}, {1000}), BoundExceeded);
  try {
    brute_force_ideal_lattice(big.table(), {}, {1000});
  } catch (const BoundExceeded& e) {
    CHECK(std::string(e.what()).find("15625") != std::string::npos);
  }
  CHECK_THROWS_AS(brute_force_ideal_lattice(three_c("1/2").table()), InvalidParameter);
}

TEST_CASE("property: largest_ideal_within is the largest enumerated ideal inside V") {
  std::mt19937 rng(17);
  for (const auto& m : corpus(Field::prime(3))) {
    const AlgebraTable& t = m.algebra.table();
    if (t.dimension() > 6)
      continue;
    IdealLattice lattice = brute_force_ideal_lattice(t);
    for (int trial = 0; trial < 8; ++trial) {
      Subspace v = rref(t.field(), t.dimension(), random_matrix(t.field(), 1 + rng() % t.dimension(), t.dimension(), rng));
      Subspace expected(t.field(), t.dimension());
      for (const auto& i : lattice.ideals)
        if (v.contains(i))
          expected = subspace_sum(expected, i);
      CHECK(largest_ideal_within(t, v).space() == expected);
    }
  }
}
