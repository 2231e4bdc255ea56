#include <doctest.h>

#include "axial/error.hpp"
#include "helpers.hpp"

using namespace axial;
using namespace axial::test;

TEST_CASE("rational and residue arithmetic") {
  CHECK((q("1/2") + q("1/3")).to_string() == "5/6");
  CHECK((q("-3/4") * q("2/3")).to_string() == "-1/2");
  CHECK(q("4/6") == q("2/3"));
  CHECK_THROWS_AS(q("1/0"), ParseError);
  CHECK_THROWS_AS(q("0").inverse(), InvalidParameter);

  Field f5 = Field::prime(5);
  CHECK(f5.parse("1/2") == f5.from_int(3));
  CHECK(f5.from_int(-1).as_residue() == 4u);
  CHECK((f5.from_int(2) * f5.from_int(3)).as_residue() == 1u);
  CHECK_THROWS_AS(Field::prime(3).parse("1/3"), InvalidParameter);
  CHECK_THROWS_AS(Field::prime(9), InvalidParameter);
  CHECK_THROWS_AS(q("1") + f5.one(), FieldMismatch);
}

TEST_CASE("rref over GF(3) matches the oracle value") {
  Field f = Field::prime(3);
  Subspace s = rref(f, 3, {gfv(3, {1, 1, 0}), gfv(3, {2, 0, 2}), gfv(3, {0, 1, 2})});
  REQUIRE(s.dimension() == 2);
  CHECK(s.basis()[0] == gfv(3, {1, 0, 1}));
  CHECK(s.basis()[1] == gfv(3, {0, 1, 2}));
}

TEST_CASE("nullspace and solve over Q") {
  Field f = Field::rationals();
  Matrix m{qv({"1", "2", "3"}), qv({"2", "4", "6"})};
  Subspace n = nullspace(f, 3, m);
  CHECK(n.dimension() == 2);
  for (const auto& v : n.basis())
    CHECK(is_zero(axial::apply(m, v)));
  auto sol = solve_linear(f, 3, m, qv({"1", "2"}));
  REQUIRE(sol.has_value());
  CHECK(axial::apply(m, sol->particular) == qv({"1", "2"}));
  CHECK_FALSE(solve_linear(f, 3, m, qv({"1", "3"})).has_value());
}

TEST_CASE("dimension mismatches are reported") {
  CHECK_THROWS_AS(add(qv({"1"}), qv({"1", "2"})), DimensionMismatch);
  Field f = Field::rationals();
  CHECK_THROWS_AS(subspace_sum(Subspace(f, 2), Subspace(f, 3)), DimensionMismatch);
}

TEST_CASE("property: rref is canonical, idempotent and satisfies rank-nullity") {
  std::mt19937 rng(20261018);
  for (Field f : {Field::rationals(), Field::prime(3), Field::prime(7)}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t n = 1 + rng() % 6, rows = rng() % 7;
      Matrix m = random_matrix(f, rows, n, rng);
      Subspace s = rref(f, n, m);
      CHECK(rref(f, n, s.basis()) == s);
      CHECK(s.basis() == rref(f, n, s.basis()).basis());
      CHECK(s.dimension() + nullspace(f, n, m).dimension() == n);

      // Any other spanning set of the same row space gives the same basis.
      Matrix mixed = m;
      std::shuffle(mixed.begin(), mixed.end(), rng);
      for (std::size_t i = 1; i < mixed.size(); ++i)
        add_scaled(mixed[i], f.from_int(2), mixed[0]);
      if (!mixed.empty())
        mixed.push_back(add(mixed[0], mixed.back()));
      CHECK(rref(f, n, mixed).basis() == s.basis());
      for (const auto& row : m)
        CHECK(s.contains(row));
    }
  }
}

TEST_CASE("property: sum, intersection and annihilator dimensions") {
  std::mt19937 rng(7);
  for (Field f : {Field::rationals(), Field::prime(5)}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t n = 1 + rng() % 6;
      Subspace u = rref(f, n, random_matrix(f, rng() % 5, n, rng));
      Subspace v = rref(f, n, random_matrix(f, rng() % 5, n, rng));
      Subspace w = rref(f, n, random_matrix(f, rng() % 5, n, rng));
      Subspace s = subspace_sum(u, v), i = subspace_intersect(u, v);
      CHECK(s.dimension() + i.dimension() == u.dimension() + v.dimension());
      CHECK(s.contains(u));
      CHECK(u.contains(i));
      CHECK(v.contains(i));
      CHECK(subspace_intersect(u, v) == subspace_intersect(v, u));
      CHECK(annihilator(u).dimension() == n - u.dimension());
      CHECK(annihilator(annihilator(u)) == u);
      // Modular law: if u is contained in w then u + (v ∩ w) = (u + v) ∩ w.
      Subspace uw = subspace_intersect(u, w);
      CHECK(subspace_sum(uw, subspace_intersect(v, w)) == subspace_intersect(subspace_sum(uw, v), w));
    }
  }
}

TEST_CASE("coordinates reconstruct vectors in the subspace") {
  std::mt19937 rng(11);
  Field f = Field::rationals();
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + rng() % 4;
    Subspace s = rref(f, n, random_matrix(f, 3, n, rng));
    Vector v = zero_vector(f, n);
    for (const auto& b : s.basis())
      add_scaled(v, f.from_int(static_cast<int>(rng() % 5) - 2), b);
    auto c = s.coordinates(v);
    Vector back = zero_vector(f, n);
    for (std::size_t k = 0; k < c.size(); ++k)
      add_scaled(back, c[k], s.basis()[k]);
    CHECK(back == v);
  }
}

TEST_CASE("intersection example in Q^3") {
  Field f = Field::rationals();
  Subspace u = rref(f, 3, {qv({"1", "1", "0"}), qv({"0", "0", "1"})});
  Subspace v = rref(f, 3, {qv({"1", "1", "1"})});
  CHECK(subspace_intersect(u, v) == v);
}
